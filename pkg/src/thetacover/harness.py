"""Randomized end-to-end verification of the theta transformation laws.

The induced monomial representation gamma_bar is built with the fixed
lifts of the coset representatives: entry (i, j) of gamma_bar(rbar) is
lambda_bar(Mbar_i rbar Mbar_j^{-1})^{-1} in the unique column
j = index(label_i . r).  The transformation law multiplies the row
vector of components on the right by gamma_bar(rbar^{-1}).  This
left/right bookkeeping was calibrated against the one-component case,
which must reproduce the scalar law, and is frozen; the three sign/arg
variants fail at order one.

Error convention: every comparison is reported as
|lhs - rhs| / max(1, |lhs|, |rhs|), so laws whose two sides vanish
identically (the weight-3/2 components on even labels) are compared in
absolute terms instead of dividing noise by noise.  Reports carry the
magnitudes so a trivially satisfied law is visible as such.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .cocycle import CoverElement, Mu8, cover_inv, cover_mul
from .f2cosets import coset_profile, coset_table
from .gauss import lambda_bar, lambda_multiplier
from .symplectic import (IntegerSymplectic, SiegelPoint, j_matrix, mobius_act,
                         random_word_element, subgroup_membership)
from .theta import (CapacityError, ThetaParams, sqrt_det, theta_component,
                    theta_series, truncation_radius)

__all__ = [
    "MonomialMatrix",
    "VerificationReport",
    "induced_rep_matrix",
    "sample_point",
    "sample_gamma48",
    "verify_scalar_law",
    "verify_vector_law",
]


@dataclass(frozen=True)
class MonomialMatrix:
    """Square matrix with exactly one eighth-root-of-unity entry per row.

    Row i carries coeffs[i] in column perm[i]; perm is a permutation, so
    columns are covered exactly once as well.  Products and inverses stay
    exact (permutation composition plus Mu8 arithmetic).
    """

    n: int
    perm: tuple
    coeffs: tuple

    def __post_init__(self):
        assert sorted(self.perm) == list(range(self.n)), "perm must be a permutation"
        assert len(self.coeffs) == self.n
        assert all(isinstance(c, Mu8) for c in self.coeffs)

    @classmethod
    def identity(cls, n: int) -> "MonomialMatrix":
        return cls(n, tuple(range(n)), tuple(Mu8(0) for _ in range(n)))

    def __matmul__(self, other: "MonomialMatrix") -> "MonomialMatrix":
        assert self.n == other.n
        perm = tuple(other.perm[self.perm[i]] for i in range(self.n))
        coeffs = tuple(self.coeffs[i] * other.coeffs[self.perm[i]]
                       for i in range(self.n))
        return MonomialMatrix(self.n, perm, coeffs)

    def inv(self) -> "MonomialMatrix":
        perm = [0] * self.n
        coeffs = [Mu8(0)] * self.n
        for i in range(self.n):
            perm[self.perm[i]] = i
            coeffs[self.perm[i]] = self.coeffs[i].inv()
        return MonomialMatrix(self.n, tuple(perm), tuple(coeffs))

    def to_array(self) -> np.ndarray:
        out = np.zeros((self.n, self.n), dtype=complex)
        for i in range(self.n):
            out[i, self.perm[i]] = self.coeffs[i].value
        return out

    def __eq__(self, other):
        return (isinstance(other, MonomialMatrix) and self.n == other.n
                and self.perm == other.perm and self.coeffs == other.coeffs)


@lru_cache(maxsize=None)
def _inv_lift(m: int, k: int) -> CoverElement:
    rec = coset_table(m)[k]
    return cover_inv(CoverElement(rec.M, rec.kappa))


def induced_rep_matrix(rbar: CoverElement) -> MonomialMatrix:
    """Monomial matrix of the induced representation at a cover element.

    Entry (i, j) = lambda_bar(Mbar_i rbar Mbar_j^{-1})^{-1} where
    j = index(label_i . r) and Mbar is the fixed lift (M, kappa) of each
    coset representative; the conjugated element lands in the theta group
    (asserted).  Exact in Mu8.
    """
    m = rbar.g.m
    table = coset_table(m)
    index = {rec.q: k for k, rec in enumerate(table)}
    n = len(table)
    perm = [0] * n
    coeffs = [Mu8(0)] * n
    for i, rec in enumerate(table):
        j = index[coset_profile(rec.M @ rbar.g)]
        mi = CoverElement(rec.M, rec.kappa)
        sbar = cover_mul(cover_mul(mi, rbar), _inv_lift(m, j))
        assert subgroup_membership(sbar.g, "Gamma1_2"), "coset bookkeeping broke"
        perm[i] = j
        coeffs[i] = lambda_bar(sbar).inv()
    return MonomialMatrix(n, tuple(perm), tuple(coeffs))


@dataclass(frozen=True)
class VerificationReport:
    """Summary of one randomized law verification run."""

    theorem: str
    m: int
    trials: int
    max_abs_error: float
    max_rel_error: float
    worst_case: dict
    tol: float
    passed: bool
    elapsed: float

    def as_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "m": self.m,
            "trials": self.trials,
            "max_abs_error": self.max_abs_error,
            "max_rel_error": self.max_rel_error,
            "worst_case": self.worst_case,
            "tol": self.tol,
            "passed": self.passed,
            "elapsed_seconds": self.elapsed,
        }


def _rel_err(lhs, rhs) -> tuple:
    lhs = np.atleast_1d(np.asarray(lhs))
    rhs = np.atleast_1d(np.asarray(rhs))
    abs_err = float(np.max(np.abs(lhs - rhs)))
    scale = max(1.0, float(np.max(np.abs(lhs))), float(np.max(np.abs(rhs))))
    return abs_err, abs_err / scale


def sample_point(m: int, rng, cond_cap: float = 1e4) -> SiegelPoint:
    """Random z = p(g(z0)): integer word then a generic real parabolic.

    Resamples until cond(Y) <= cond_cap; flat Y makes the truncation
    radius explode.
    """
    z0 = SiegelPoint.z0(m)
    while True:
        g, _ = random_word_element(m, "Sp", length=int(rng.integers(1, 9)),
                                   seed=int(rng.integers(2**63)))
        z = mobius_act(g, z0)
        a = np.eye(m) + 0.2 * rng.uniform(-1, 1, (m, m))
        if abs(np.linalg.det(a)) < 0.3:
            continue
        b = rng.uniform(-1, 1, (m, m))
        b = np.round((b + b.T) / 2, 6)
        z = SiegelPoint(a @ z.X @ a.T + b, a @ z.Y @ a.T)
        if np.linalg.cond(z.Y) <= cond_cap:
            return z


def _workable(z: SiegelPoint, rz: SiegelPoint, params: ThetaParams,
              cap: int = 32) -> bool:
    # both sides of the law must stay within a modest lattice radius,
    # else a single skewed image point dominates the whole run's budget
    try:
        return (truncation_radius(z.Y, params) <= cap
                and truncation_radius(rz.Y, params) <= cap)
    except CapacityError:
        return False


def _random_gamma12(m: int, rng) -> IntegerSymplectic:
    r, _ = random_word_element(m, "Gamma12", length=int(rng.integers(1, 9)),
                               seed=int(rng.integers(2**63)))
    return r


def _label_action(rec, g: IntegerSymplectic):
    return coset_profile(rec.M @ g)


def _stabilized_shifted(table, r: IntegerSymplectic):
    return [rec for rec in table
            if any(rec.eps_q) and _label_action(rec, r) == rec.q]


def verify_scalar_law(m: int, trials: int = 200, tol: float = 1e-8,
                      seed: int = 0, params: ThetaParams | None = None) -> VerificationReport:
    """Scalar transformation law over the theta group, both weights.

    Weight 1/2: theta(rz) = lambda(r) sqrt_det(r, z) theta(z) on the plain
    sum.  Weight 3/2: the single-component law on a shifted component
    whose label r fixes,
    theta_q(rz) = sqrt_det(r,z) (cz+d) theta_q(z) lambda_bar(Mbar_q rbar Mbar_q^{-1})
    (these components vanish identically, so this comparison is absolute;
    the report's worst_case records the magnitudes).
    """
    params = params or ThetaParams()
    table = coset_table(m)
    t_start = time.time()
    max_abs = 0.0
    max_rel = -1.0
    worst = {}
    for t in range(trials):
        rng = np.random.default_rng((seed, t))
        r = _random_gamma12(m, rng)
        stab = _stabilized_shifted(table, r)
        attempts = 0
        while not stab and attempts < 50:
            r = _random_gamma12(m, rng)
            stab = _stabilized_shifted(table, r)
            attempts += 1
        z = sample_point(m, rng)
        rz = mobius_act(r, z)
        while not _workable(z, rz, params):
            z = sample_point(m, rng)
            rz = mobius_act(r, z)
        sd = sqrt_det(r, z)

        lhs = theta_series(rz, "half", params)
        rhs = lambda_multiplier(r).value * sd * theta_series(z, "half", params)
        abs12, rel12 = _rel_err(lhs, rhs)

        rel32 = 0.0
        abs32 = 0.0
        mag32 = 0.0
        if stab:
            rec = stab[int(rng.integers(len(stab)))]
            mbar = CoverElement(rec.M, rec.kappa)
            rbar = CoverElement(r, 1)
            lam = lambda_bar(cover_mul(cover_mul(mbar, rbar), cover_inv(mbar)))
            v_z = theta_component(rec, 1, z, "three_half", params).value
            v_rz = theta_component(rec, 1, rz, "three_half", params).value
            rhs_v = sd * (j_matrix(r, z) @ v_z) * lam.value
            abs32, rel32 = _rel_err(v_rz, rhs_v)
            mag32 = float(np.max(np.abs(v_rz)))

        rel = max(rel12, rel32)
        max_abs = max(max_abs, abs12, abs32)
        if rel > max_rel:
            max_rel = rel
            worst = {
                "trial": t,
                "element": [list(row) for row in r.rows],
                "z_X": z.X.tolist(),
                "z_Y": z.Y.tolist(),
                "rel_error_half": rel12,
                "rel_error_three_half": rel32,
                "three_half_magnitude": mag32,
            }
    return VerificationReport(
        theorem="scalar-law", m=m, trials=trials,
        max_abs_error=max_abs, max_rel_error=max_rel, worst_case=worst,
        tol=tol, passed=bool(max_rel < tol), elapsed=time.time() - t_start)


def verify_vector_law(m: int, trials: int = 100, tol: float = 1e-8,
                      seed: int = 0, params: ThetaParams | None = None) -> VerificationReport:
    """Vector transformation law over the full integer symplectic group.

    Weight 1/2: Theta(rbar z) = eps sqrt_det(r,z) Theta(z) gamma_bar(rbar^{-1})
    as row vectors of components.  Weight 3/2: the same with the extra
    (cz+d) acting on the coordinate index (identically vanishing
    components, compared absolutely).
    """
    params = params or ThetaParams()
    table = coset_table(m)
    n = len(table)
    t_start = time.time()
    max_abs = 0.0
    max_rel = -1.0
    worst = {}
    for t in range(trials):
        rng = np.random.default_rng((seed, 1_000_000 + t))
        r, _ = random_word_element(m, "Sp", length=int(rng.integers(1, 9)),
                                   seed=int(rng.integers(2**63)))
        eps = 1 if rng.integers(2) == 0 else -1
        rbar = CoverElement(r, eps)
        z = sample_point(m, rng)
        rz = mobius_act(r, z)
        while not _workable(z, rz, params):
            z = sample_point(m, rng)
            rz = mobius_act(r, z)
        sd = sqrt_det(r, z)
        G = induced_rep_matrix(cover_inv(rbar)).to_array()

        th_z = np.array([theta_component(rec, 1, z, "half", params).value
                         for rec in table])
        th_rz = np.array([theta_component(rec, 1, rz, "half", params).value
                          for rec in table])
        rhs = eps * sd * (th_z @ G)
        abs12, rel12 = _rel_err(th_rz, rhs)

        v_z = np.stack([theta_component(rec, 1, z, "three_half", params).value
                        for rec in table])
        v_rz = np.stack([theta_component(rec, 1, rz, "three_half", params).value
                         for rec in table])
        J = j_matrix(r, z)
        rhs_v = eps * sd * np.einsum("ab,jb,ji->ia", J, v_z, G)
        abs32, rel32 = _rel_err(v_rz, rhs_v)

        rel = max(rel12, rel32)
        max_abs = max(max_abs, abs12, abs32)
        if rel > max_rel:
            max_rel = rel
            worst = {
                "trial": t,
                "element": [list(row) for row in r.rows],
                "lift": eps,
                "z_X": z.X.tolist(),
                "z_Y": z.Y.tolist(),
                "rel_error_half": rel12,
                "rel_error_three_half": rel32,
                "three_half_magnitude": float(np.max(np.abs(v_rz))),
            }
    return VerificationReport(
        theorem="vector-law", m=m, trials=trials,
        max_abs_error=max_abs, max_rel_error=max_rel, worst_case=worst,
        tol=tol, passed=bool(max_rel < tol), elapsed=time.time() - t_start)


def sample_gamma48(m: int, rng, factors: int = 2) -> IntegerSymplectic:
    """Random element of the level-(4,8) group as a product of commutators.

    Commutators of level-2 elements land in the level-(4,8) group; the
    membership predicate is asserted as a cross-check of both the sampler
    and the predicate.
    """
    out = None
    for _ in range(factors):
        x, _ = random_word_element(m, "Gamma2", length=int(rng.integers(1, 5)),
                                   seed=int(rng.integers(2**63)))
        y, _ = random_word_element(m, "Gamma2", length=int(rng.integers(1, 5)),
                                   seed=int(rng.integers(2**63)))
        comm = x @ y @ x.inverse() @ y.inverse()
        out = comm if out is None else out @ comm
    assert subgroup_membership(out, "Gamma4_8"), "commutator left the subgroup"
    return out
