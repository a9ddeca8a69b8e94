"""Gauss sums and the trivializing phase on the even-diagonal subgroup.

On the subgroup of integer symplectic matrices with diag(a b^T) and
diag(c d^T) even, the eighth-root pairing cocycle is a coboundary: there
is a phase beta_tilde(g), itself an eighth root of unity, with
c~(h1, h2) = beta_tilde(h1)^{-1} beta_tilde(h2)^{-1} beta_tilde(h1 h2).
It is computed as a finite exponential sum attached to the pair of row
Lagrangians (0 | 1) and (c | d): a normalized conjugate Gauss sum when c
is invertible, and a lattice-quotient sum in general.  The multiplier
lambda = m_xstar * beta_tilde^{-1} is what the holomorphic transformation
law of the theta series picks up on this subgroup.

f_shift and modified_cocycle push beta_tilde from the subgroup to the
whole group along the coset representatives: f(g) = beta_tilde(r) c~(r, M)
for the factorization g = r M, and c~'(g1,g2) = c~(g1,g2) f(g1) f(g2)
f(g1 g2)^{-1}.  The shifted cocycle is trivial whenever the first argument
lies in the subgroup, but is not identically one.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction

from . import exactla as xla
from .cocycle import CoverElement, Mu8, m_xstar, rao_cocycle
from .f2cosets import coset_index_of, coset_table
from .symplectic import IntegerSymplectic, subgroup_membership

SNAP_TOL = 1e-9


def _int_rows(mat) -> list[list[int]]:
    if isinstance(mat, IntegerSymplectic):
        raise TypeError("pass a plain block matrix, not a symplectic matrix")
    if not hasattr(mat, "__len__"):
        return [[int(mat)]]
    return [[int(x) for x in row] for row in mat]


@dataclass(frozen=True)
class ResidueSystem:
    """Complete residue system of integer row vectors modulo rows of c.

    Two rows are congruent when their difference is an integer combination
    of the rows of c; the box of the Hermite form enumerates each class
    exactly once, so |reps| = |det c|.
    """
    c: tuple
    reps: tuple

    def __len__(self):
        return len(self.reps)


def residues_mod_cT(c) -> ResidueSystem:
    rows = _int_rows(c)
    if xla.det(rows) == 0:
        raise ValueError("singular matrix has no finite residue system")
    reps = xla.box_representatives(rows)
    return ResidueSystem(c=tuple(tuple(r) for r in rows),
                         reps=tuple(tuple(r) for r in reps))


def _phase_mod2(frac: Fraction) -> complex:
    # exact rational reduction mod 2 before any floating exponentiation
    frac = frac % 2
    return cmath.exp(1j * cmath.pi * float(frac))


def symplectic_gauss_sum(d, c) -> complex:
    """G(d, c) = sum of e^{i pi x c^{-1} d x^T} over x in Z^m mod rows of c.

    Well defined when (a b; c d) is symplectic with diag(c d^T) even:
    c^{-1} d is then symmetric and the phase is constant on classes mod 2.
    """
    c_rows = _int_rows(c)
    d_rows = _int_rows(d)
    if xla.det(c_rows) == 0:
        raise ValueError("Gauss sum needs an invertible lower-left block")
    q = xla.mat_mul(xla.inv(c_rows), d_rows)
    total = 0j
    for x in residues_mod_cT(c_rows).reps:
        ph = Fraction(0)
        for i, xi in enumerate(x):
            if xi:
                for j, xj in enumerate(x):
                    if xj:
                        ph += q[i][j] * xi * xj
        total += _phase_mod2(ph)
    return total


@dataclass(frozen=True)
class SnappedRoot:
    """An eighth root of unity recovered from a floating computation."""
    value: Mu8
    raw: complex
    residual: float


def snap_mu8(raw: complex) -> SnappedRoot:
    best = min(range(8), key=lambda k: abs(raw - Mu8(k).value))
    residual = abs(raw - Mu8(best).value)
    if residual >= SNAP_TOL:
        raise ArithmeticError(
            f"value {raw!r} is not an eighth root of unity "
            f"(residual {residual:.3e} >= {SNAP_TOL})")
    return SnappedRoot(value=Mu8(best), raw=raw, residual=residual)


def _xstar_rows(m: int) -> list[list[int]]:
    return [[0] * m + [1 if j == i else 0 for j in range(m)] for i in range(m)]


def _beta_degenerate(g: IntegerSymplectic) -> complex:
    """Quotient sum over [L cap (X*+Y*)] / [(X* cap L) + (Y* cap L)].

    Y* = X* g has rows (c | d).  Each class l splits as x_l + x*_l along
    the standard frame, giving the parity sign, and as x* + y* along
    X* + Y*, giving the solved phase; both phases are class functions.
    """
    m = g.m
    c_rows, d_rows = g.c, g.d
    xstar = _xstar_rows(m)
    ystar = [list(c_rows[i]) + list(d_rows[i]) for i in range(m)]

    numerator = xla.saturation(xstar + ystar)
    denominator = xla.lattice_basis(xstar + xla.saturation(ystar))
    coords = xla.lattice_coordinates(numerator, denominator)
    index = abs(int(xla.det(coords)))
    assert index >= 1

    total = 0j
    for xi in xla.box_representatives(coords):
        l = [sum(xi[k] * numerator[k][j] for k in range(len(xi)))
             for j in range(2 * m)]
        lx, lxs = l[:m], l[m:]
        parity = sum(a * b for a, b in zip(lx, lxs)) % 2
        t = xla.solve_left(c_rows, lx)
        assert t is not None, "class outside the x-image of the second row space"
        s = [Fraction(lxs[j]) - sum(t[k] * d_rows[k][j] for k in range(m))
             for j in range(m)]
        ph = sum((sj * xj for sj, xj in zip(s, lx)), Fraction(0))
        total += (-1) ** parity * _phase_mod2(ph)
    return index ** -0.5 * total


def beta_tilde(g: IntegerSymplectic) -> SnappedRoot:
    """Trivializing phase of the pairing cocycle on the even-diagonal subgroup.

    Invertible c: |det c|^{-1/2} conj(G(d, c)).  Degenerate c: the general
    lattice-quotient sum, which specializes to the former.  The value is an
    exact eighth root of unity; the float computation is snapped and the
    residual reported.
    """
    if not subgroup_membership(g, "Gamma(1,2)"):
        raise ValueError("beta_tilde needs diag(a b^T) and diag(c d^T) even")
    detc = xla.det(g.c)
    if detc != 0:
        raw = abs(int(detc)) ** -0.5 * symplectic_gauss_sum(g.d, g.c).conjugate()
    else:
        raw = _beta_degenerate(g)
    return snap_mu8(raw)


def lambda_multiplier(r: IntegerSymplectic) -> Mu8:
    """Theta multiplier on the even-diagonal subgroup: m_xstar * beta_tilde^{-1}."""
    return m_xstar(r) * beta_tilde(r).value.inv()


def lambda_bar(rbar: CoverElement) -> Mu8:
    """Multiplier of a sign-cover element: lambda(r) scaled by the sign."""
    lam = lambda_multiplier(rbar.g)
    return lam if rbar.eps == 1 else lam * Mu8(4)


def coset_split(g: IntegerSymplectic):
    """Factor g = r M with M the tabulated representative of g's coset.

    r lands in the even-diagonal subgroup because the coset label is a
    left-invariant of that subgroup.
    """
    rec = coset_table(g.m)[coset_index_of(g)]
    r = g @ rec.M.inverse()
    assert subgroup_membership(r, "Gamma(1,2)")
    return r, rec


def f_shift(g: IntegerSymplectic) -> Mu8:
    """Extension of beta_tilde along coset representatives.

    f(g) = beta_tilde(r) c~(r, M) for g = r M; restricted to the
    even-diagonal subgroup (M = 1) this is beta_tilde itself.
    """
    r, rec = coset_split(g)
    return beta_tilde(r).value * rao_cocycle(r, rec.M)


def modified_cocycle(g1: IntegerSymplectic, g2: IntegerSymplectic) -> Mu8:
    """The pairing cocycle shifted by f: c~(g1,g2) f(g1) f(g2) f(g1 g2)^{-1}.

    Trivial whenever g1 lies in the even-diagonal subgroup; on general
    pairs it measures the failure of f to extend the trivialization.
    """
    return (rao_cocycle(g1, g2) * f_shift(g1) * f_shift(g2)
            * f_shift(g1 @ g2).inv())
