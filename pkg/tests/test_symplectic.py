"""Group algebra, generators, membership predicates, half-space action."""

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from thetacover import (IntegerSymplectic, SiegelPoint, is_symplectic,
                        iwasawa_decompose, j_matrix, make_generator,
                        mobius_act, random_word_element, subgroup_membership)

seeds = st.integers(min_value=0, max_value=2 ** 32 - 1)


def word(m, sub, seed, length=6):
    return random_word_element(m, sub, length=length, seed=seed)[0]


def test_generators_are_symplectic():
    for m in (1, 2, 3):
        gens = [make_generator("omega", m),
                make_generator("u_ij", m, i=1, j=1, t=3),
                make_generator("u_minus_ij", m, i=1, j=1, t=-2)]
        if m >= 2:
            gens += [make_generator("u_ij", m, i=1, j=2, t=1),
                     make_generator("v_ij", m, i=1, j=2, t=2),
                     make_generator("omega_S", m, S={2}),
                     make_generator("iota", m, i=2, g=((1, 1), (0, 1))),
                     make_generator("h", m, a=[[1 if i == j else (i == 0 and j == 1)
                                               for j in range(m)] for i in range(m)])]
        for g in gens:
            assert is_symplectic(g)


def test_generator_validation():
    with pytest.raises(ValueError):
        make_generator("u", 2, b=[[0, 1], [2, 0]])       # not symmetric
    with pytest.raises(ValueError):
        make_generator("h", 2, a=[[2, 0], [0, 1]])       # not unimodular
    with pytest.raises(ValueError):
        make_generator("v_ij", 2, i=1, j=1)
    with pytest.raises(ValueError):
        make_generator("nope", 1)


def test_non_symplectic_rejected():
    with pytest.raises(AssertionError):
        IntegerSymplectic(((1, 1), (1, 1)))


@given(seeds)
@settings(max_examples=50, deadline=None)
def test_inverse_and_products(seed):
    g = word(2, "Sp", seed)
    assert g @ g.inverse() == IntegerSymplectic.identity(2)
    assert g.inverse().inverse() == g


@given(seeds)
@settings(max_examples=50, deadline=None)
def test_h_conjugate_is_involutive_homomorphism(seed):
    g1 = word(2, "Sp", seed)
    g2 = word(2, "Sp", seed + 1)
    assert g1.h_conjugate().h_conjugate() == g1
    assert (g1 @ g2).h_conjugate() == g1.h_conjugate() @ g2.h_conjugate()


@given(seeds)
@settings(max_examples=40, deadline=None)
def test_theta_group_closure(seed):
    r1 = word(2, "Gamma1_2", seed)
    r2 = word(2, "Gamma1_2", seed + 1)
    assert subgroup_membership(r1, "Gamma1_2")
    assert subgroup_membership(r1 @ r2, "Gamma1_2")
    assert subgroup_membership(r1.inverse(), "Gamma1_2")


@given(seeds)
@settings(max_examples=40, deadline=None)
def test_level_two_words_are_members(seed):
    g = word(2, "Gamma2", seed)
    assert subgroup_membership(g, "Gamma2")
    assert subgroup_membership(g, "Gamma1_2")   # level 2 sits inside


def test_membership_name_forms():
    g = make_generator("u_minus_ij", 1, i=1, j=1, t=4)   # c = -4
    assert subgroup_membership(g, "Gamma(1,2)")
    assert subgroup_membership(g, "Gamma1_2")
    assert subgroup_membership(g, "Gamma4")              # 1 mod 4
    # congruent 1 mod 4 but (g-1)/4 has an odd corner entry
    assert not subgroup_membership(g, "Gamma4_8")
    g8 = make_generator("u_minus_ij", 1, i=1, j=1, t=8)
    assert subgroup_membership(g8, "Gamma4_8")
    with pytest.raises(ValueError):
        subgroup_membership(g, "Gamma4_9")


def test_mobius_cocycle_property():
    rng = np.random.default_rng(5)
    for m in (1, 2):
        z = SiegelPoint.z0(m)
        for t in range(10):
            g1 = word(m, "Sp", int(rng.integers(2 ** 31)))
            g2 = word(m, "Sp", int(rng.integers(2 ** 31)))
            lhs = j_matrix(g1 @ g2, z)
            rhs = j_matrix(g1, mobius_act(g2, z)) @ j_matrix(g2, z)
            assert np.max(np.abs(lhs - rhs)) < 1e-9
            w1 = mobius_act(g1, mobius_act(g2, z))
            w2 = mobius_act(g1 @ g2, z)
            assert np.max(np.abs(w1.z - w2.z)) < 1e-9


def test_iwasawa_factors():
    g = word(2, "Sp", 77)
    pair = iwasawa_decompose(g)
    assert np.max(np.abs(pair.p @ pair.k - g.to_float())) < 1e-9
    # k fixes the base point, p is block upper triangular
    zk = mobius_act(pair.k, SiegelPoint.z0(2))
    assert np.max(np.abs(zk.z - 1j * np.eye(2))) < 1e-9
    assert np.max(np.abs(pair.p[2:, :2])) < 1e-12


def test_point_validation():
    with pytest.raises(ValueError):
        SiegelPoint([[0.0]], [[-1.0]])
    with pytest.raises(AssertionError):
        SiegelPoint([[0.0, 1.0], [0.0, 0.0]], np.eye(2))


def test_word_sampler_deterministic():
    g1, w1 = random_word_element(2, "Sp", length=5, seed=123)
    g2, w2 = random_word_element(2, "Sp", length=5, seed=123)
    assert g1 == g2 and w1 == w2
    with pytest.raises(ValueError):
        random_word_element(1, "Borel", length=3, seed=0)
