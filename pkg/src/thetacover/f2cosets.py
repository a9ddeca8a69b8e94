"""Coset geometry of the theta subgroup over F2.

Reduction mod 2 sends the integer symplectic group onto Sp(2m, F2), and the
theta subgroup onto the orthogonal group of Q0(v) = sum x_i x*_i.  Cosets
therefore correspond to the isotropic vectors q of Q0: the coset of g is
detected by Q0(v g^{-1}) = Q0(v) + <v, q>, which is constant on each coset
(theta subgroup on the left) and is represented by the integer transvection
v -> v + <v, q> q.  For the theta components a second, better adapted
representative is used in which every anisotropic pair of coordinates is
replaced by a unipotent block; the record below carries both
representatives plus the index shift data the component series needs.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from . import exactla as xla
from .cocycle import CoverElement, Mu8, cover_mul, m_xstar
from .symplectic import IntegerSymplectic, make_generator

MAX_RANK = 8


def reduce_mod2(g: IntegerSymplectic) -> tuple:
    return tuple(tuple(x % 2 for x in row) for row in g.rows)


def q0_eval(v) -> int:
    v = tuple(int(x) % 2 for x in v)
    assert len(v) % 2 == 0
    m = len(v) // 2
    return sum(v[i] * v[m + i] for i in range(m)) % 2


@lru_cache(maxsize=None)
def enumerate_isotropic(m: int) -> tuple:
    """All v in F2^{2m} with Q0(v) = 0, in lexicographic order."""
    if not 1 <= m <= MAX_RANK:
        raise ValueError(f"supported ranks are 1..{MAX_RANK}")
    vs = tuple(v for v in product((0, 1), repeat=2 * m) if q0_eval(v) == 0)
    assert len(vs) == 2 ** (2 * m - 1) + 2 ** (m - 1)
    return vs


def transvection_rep(q) -> IntegerSymplectic:
    """Integer matrix of v -> v + <v, q> q, for isotropic q = (x | x*)."""
    q = tuple(int(x) % 2 for x in q)
    m = len(q) // 2
    assert q0_eval(q) == 0, "q must be isotropic"
    u = [q[m + i] for i in range(m)] + [-q[i] for i in range(m)]
    rows = [[(i == j) + u[i] * q[j] for j in range(2 * m)] for i in range(2 * m)]
    return IntegerSymplectic(rows)


def coset_profile(g: IntegerSymplectic) -> tuple:
    """The isotropic q with Q0(v g^{-1}) = Q0(v) + <v, q> mod 2.

    Componentwise, q_i = diag(a^T c)_i and q*_i = diag(b^T d)_i mod 2.
    This label is unchanged by left multiplication with the theta
    subgroup, so it indexes the cosets that carry the theta components;
    right multiplication by r moves it by the mod-2 row action q -> q r.
    """
    m = g.m
    gm = reduce_mod2(g)
    q = tuple(sum(gm[j][i] * gm[m + j][i] for j in range(m)) % 2
              for i in range(m)) \
        + tuple(sum(gm[j][m + i] * gm[m + j][m + i] for j in range(m)) % 2
                for i in range(m))
    assert q0_eval(q) == 0, "profile of a symplectic matrix must be isotropic"
    return q


def coset_index_of(g: IntegerSymplectic) -> int:
    return enumerate_isotropic(g.m).index(coset_profile(g))


# --- the anisotropic 4x4 block and its unipotent replacement ---

def pair_block_matrices():
    """The rank-2 transvection block and its factorization.

    Returns (full, theta_part, upper, lower) with full = theta_part upper
    lower, theta_part in the theta subgroup, upper = u(-1) and lower the
    lower unipotent with c = all-ones.  The coset representative keeps only
    upper @ lower.
    """
    full = transvection_rep((1, 1, 1, 1))
    upper = make_generator("u", 2, b=[[-1, 0], [0, -1]])
    lower = make_generator("u_minus", 2, c=[[1, 1], [1, 1]])
    theta_part = (full @ (upper @ lower).inverse())
    return full, theta_part, upper, lower


@dataclass(frozen=True)
class CosetRecord:
    """One coset: its profile q, both representatives, and shift data.

    S0 lists coordinates carrying a single nonzero component, S1 the
    ascending consecutive pairs of anisotropic coordinates.  m_q and eps_q
    are the sign-shift and half-shift vectors of the component series, and
    m_xstar_q is the product of the factor normalizing constants.  kappa is
    the sign accumulated by multiplying the plus-lifts of the factors in the
    sign cover; the normalizing constant of the product matrix M itself is
    kappa * m_xstar_q, which can differ from m_xstar_q even though the
    factors live in disjoint coordinate blocks.
    """
    q: tuple
    M_prime: IntegerSymplectic
    M: IntegerSymplectic
    S0: tuple
    S1: tuple
    m_q: tuple
    eps_q: tuple
    m_xstar_q: Mu8
    kappa: int


def refine_rep(q) -> CosetRecord:
    q = tuple(int(x) % 2 for x in q)
    m = len(q) // 2
    assert q0_eval(q) == 0, "q must be isotropic"
    m_prime = transvection_rep(q)

    singles, aniso = [], []
    for i in range(1, m + 1):
        xi, xsi = q[i - 1], q[m + i - 1]
        if xi and xsi:
            aniso.append(i)
        elif xi or xsi:
            singles.append(i)
    assert len(aniso) % 2 == 0, "anisotropic support of isotropic q is even"
    pairs = [(aniso[2 * t], aniso[2 * t + 1]) for t in range(len(aniso) // 2)]

    factors = []
    m_q = [0] * m
    eps_q = [0] * m
    exp = 0
    for i in singles:
        if q[m + i - 1]:                         # component e_i*: upper block
            factors.append(make_generator("iota", m, i=i, g=[[1, 1], [0, 1]]))
            m_q[i - 1] = 1
        else:                                    # component e_i: lower block
            factors.append(make_generator("iota", m, i=i, g=[[1, 0], [-1, 1]]))
            eps_q[i - 1] = 1
            exp += 1
    _, _, upper, lower = pair_block_matrices()
    block = upper @ lower
    for (j, k) in pairs:
        factors.append(make_generator("iota_pair", m, jk=(j, k), g=block.rows))
        m_q[j - 1] = m_q[k - 1] = -1
        eps_q[j - 1] = eps_q[k - 1] = -1
        exp -= 1

    lift = CoverElement(IntegerSymplectic.identity(m), 1)
    for f in factors:
        lift = cover_mul(lift, CoverElement(f, 1))
    mat, kappa = lift.g, lift.eps

    mm = Mu8(exp)
    assert m_xstar(mat) == (mm if kappa == 1 else mm * Mu8(4)), \
        "factor product and direct constant must agree up to the lift sign"
    idx = enumerate_isotropic(m).index(q)
    assert coset_index_of(m_prime) == idx == coset_index_of(mat), \
        "representatives landed in the wrong coset"
    return CosetRecord(q=q, M_prime=m_prime, M=mat, S0=tuple(singles),
                       S1=tuple(pairs), m_q=tuple(m_q), eps_q=tuple(eps_q),
                       m_xstar_q=mm, kappa=kappa)


@lru_cache(maxsize=None)
def coset_table(m: int) -> tuple:
    """One CosetRecord per coset, ordered by the isotropic enumeration."""
    return tuple(refine_rep(q) for q in enumerate_isotropic(m))
