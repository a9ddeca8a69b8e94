"""Gauss sums, the trivializing phase, and the shifted cocycle."""

import cmath

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from thetacover import (IntegerSymplectic, Mu8, beta_tilde, coset_split,
                        f_shift, lambda_bar, lambda_multiplier,
                        make_generator, modified_cocycle,
                        random_word_element, rao_cocycle, residues_mod_cT,
                        snap_mu8, subgroup_membership, symplectic_gauss_sum)
from thetacover.cocycle import CoverElement

seeds = st.integers(min_value=0, max_value=2 ** 32 - 1)


def gword(m, seed, length=6):
    return random_word_element(m, "Gamma1_2", length=length, seed=seed)[0]


def test_residue_system_sizes():
    assert len(residues_mod_cT([[2]])) == 2
    assert len(residues_mod_cT([[2, 0], [0, 3]])) == 6
    assert len(residues_mod_cT([[2, 1], [0, 2]])) == 4
    with pytest.raises(ValueError):
        residues_mod_cT([[0]])


def test_classical_rank_one_sums():
    # G(1, c) = sqrt(c) e^{i pi/4} for even c > 0
    for c in (2, 4, 6, 8, 10):
        want = c ** 0.5 * cmath.exp(1j * cmath.pi / 4)
        assert abs(symplectic_gauss_sum([[1]], [[c]]) - want) < 1e-12


def test_snap_rejects_generic_values():
    with pytest.raises(ArithmeticError):
        snap_mu8(0.9 + 0.1j)
    root = snap_mu8(cmath.exp(1j * cmath.pi / 4) * (1 + 1e-13))
    assert root.value == Mu8(1) and root.residual < 1e-9


def test_beta_degenerate_anchors():
    # c singular: identity-like elements through the lattice-quotient path
    for m in (1, 2):
        assert beta_tilde(IntegerSymplectic.identity(m)).value == Mu8(0)
        assert beta_tilde(make_generator("omega_S", m, S={1})).value == Mu8(0)
        u2 = make_generator("u_ij", m, i=1, j=1, t=2)
        assert beta_tilde(u2).value == Mu8(0)
    off = make_generator("u_minus_ij", 2, i=1, j=2, t=4)   # even off-diagonal
    assert beta_tilde(off).value == Mu8(0)
    minus = make_generator("h", 2, a=[[-1, 0], [0, -1]])
    assert beta_tilde(minus).value == Mu8(0)


def test_beta_rejects_outside_subgroup():
    u1 = make_generator("u_ij", 1, i=1, j=1, t=1)
    with pytest.raises(ValueError):
        beta_tilde(u1)


@given(seeds)
@settings(max_examples=30, deadline=None)
def test_trivialization_identity(seed):
    # beta(r1) beta(r2) c~(r1, r2) = beta(r1 r2), exact after snapping
    m = 1 + seed % 2
    r1, r2 = gword(m, seed), gword(m, seed + 1)
    lhs = beta_tilde(r1).value * beta_tilde(r2).value * rao_cocycle(r1, r2)
    assert lhs == beta_tilde(r1 @ r2).value


@given(seeds)
@settings(max_examples=30, deadline=None)
def test_multiplier_is_a_character(seed):
    # lambda(r1 r2) = lambda(r1) lambda(r2) cbar(r1, r2)
    m = 1 + seed % 2
    r1, r2 = gword(m, seed), gword(m, seed + 1)
    from thetacover import cbar_cocycle
    sign = Mu8(0) if cbar_cocycle(r1, r2) == 1 else Mu8(4)
    assert lambda_multiplier(r1 @ r2) == \
        lambda_multiplier(r1) * lambda_multiplier(r2) * sign


def test_lambda_bar_respects_the_sign():
    r = gword(2, 3)
    plus = lambda_bar(CoverElement(r, 1))
    minus = lambda_bar(CoverElement(r, -1))
    assert minus == plus * Mu8(4)


@given(seeds)
@settings(max_examples=30, deadline=None)
def test_coset_split_factors(seed):
    m = 1 + seed % 2
    g = random_word_element(m, "Sp", length=6, seed=seed)[0]
    r, rec = coset_split(g)
    assert subgroup_membership(r, "Gamma1_2")
    assert r @ rec.M == g


@given(seeds)
@settings(max_examples=25, deadline=None)
def test_shifted_cocycle_trivial_on_subgroup_left(seed):
    m = 1 + seed % 2
    r = gword(m, seed)
    g = random_word_element(m, "Sp", length=6, seed=seed + 1)[0]
    assert modified_cocycle(r, g) == Mu8(0)


def test_shift_extends_trivializing_phase():
    r = gword(2, 9)
    assert f_shift(r) == beta_tilde(r).value
