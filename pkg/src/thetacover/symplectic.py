"""Integer and floating-point symplectic matrix algebra.

Conventions: the group acts on row vectors w = (x | x*) by w -> w.g, matrices
are written in m x m blocks (a b; c d), and membership is the exact identity
g^T J g = J with J = (0 -1; 1 0).  The Siegel half space carries the action
g(z) = (az + b)(cz + d)^{-1} with base point z0 = i.1_m.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

import numpy as np

from . import exactla as xla


def _j_blocks(m: int) -> list[list[int]]:
    j = xla.zeros(2 * m, 2 * m)
    for i in range(m):
        j[i][m + i] = -1
        j[m + i][i] = 1
    return j


class IntegerSymplectic:
    """Immutable 2m x 2m integer matrix with g^T J g = J exactly."""

    __slots__ = ("m", "rows")

    def __init__(self, rows):
        rows = tuple(tuple(int(x) for x in row) for row in rows)
        n = len(rows)
        assert n and n % 2 == 0, "need even dimension"
        assert all(len(r) == n for r in rows), "need a square matrix"
        m = n // 2
        gt = xla.transpose(rows)
        assert xla.mat_eq(xla.mat_mul(xla.mat_mul(gt, _j_blocks(m)), rows),
                          _j_blocks(m)), "matrix is not symplectic"
        object.__setattr__(self, "m", m)
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, *a):
        raise AttributeError("IntegerSymplectic is immutable")

    # -- block access --
    def block(self, which: str) -> list[list[int]]:
        m = self.m
        r0 = 0 if which in ("a", "b") else m
        c0 = 0 if which in ("a", "c") else m
        return [[self.rows[r0 + i][c0 + j] for j in range(m)] for i in range(m)]

    @property
    def a(self):
        return self.block("a")

    @property
    def b(self):
        return self.block("b")

    @property
    def c(self):
        return self.block("c")

    @property
    def d(self):
        return self.block("d")

    def __matmul__(self, other: "IntegerSymplectic") -> "IntegerSymplectic":
        assert self.m == other.m
        return IntegerSymplectic(xla.mat_mul(self.rows, other.rows))

    def inverse(self) -> "IntegerSymplectic":
        # g^{-1} = (d^T -b^T; -c^T a^T), an exact consequence of g^T J g = J
        m = self.m
        a, b, c, d = self.a, self.b, self.c, self.d
        at, bt, ct, dt = map(xla.transpose, (a, b, c, d))
        rows = [list(dt[i]) + [-x for x in bt[i]] for i in range(m)]
        rows += [[-x for x in ct[i]] + list(at[i]) for i in range(m)]
        return IntegerSymplectic(rows)

    def h_conjugate(self) -> "IntegerSymplectic":
        """Conjugate by diag(1, -1): flips the signs of the b and c blocks."""
        m = self.m
        a, b, c, d = self.a, self.b, self.c, self.d
        rows = [list(a[i]) + [-x for x in b[i]] for i in range(m)]
        rows += [[-x for x in c[i]] + list(d[i]) for i in range(m)]
        return IntegerSymplectic(rows)

    def to_float(self) -> np.ndarray:
        return np.array(self.rows, dtype=float)

    def __eq__(self, other):
        return isinstance(other, IntegerSymplectic) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"IntegerSymplectic({[list(r) for r in self.rows]})"

    @classmethod
    def identity(cls, m: int) -> "IntegerSymplectic":
        return cls(xla.identity(2 * m))


def is_symplectic(g, tol: float = 1e-10) -> bool:
    """g^T J g = J, exact for integer input, within tol for float input."""
    arr = np.asarray(g.rows if isinstance(g, IntegerSymplectic) else g)
    n = arr.shape[0]
    if arr.ndim != 2 or arr.shape[1] != n or n % 2:
        raise ValueError("need an even-dimensional square matrix")
    m = n // 2
    j = np.array(_j_blocks(m), dtype=float)
    if arr.dtype.kind in "iu" or (arr.dtype == object):
        gt = xla.transpose(arr.tolist())
        return xla.mat_eq(xla.mat_mul(xla.mat_mul(gt, _j_blocks(m)), arr.tolist()),
                          _j_blocks(m))
    return bool(np.max(np.abs(arr.T @ j @ arr - j)) < tol)


# --- generators ---

def _eps(m, i, j, t=1):
    e = xla.zeros(m, m)
    e[i][j] = t
    return e


def make_generator(kind: str, m: int, **params) -> IntegerSymplectic:
    """Standard generators and embeddings, all exactly integral.

    Kinds: u (b symmetric), u_minus (c symmetric), h (a in GL_m(Z)),
    omega, omega_S (S subset of 1..m), u_ij / u_minus_ij (t, i=j allowed),
    v_ij (i != j), iota (2x2 block at index i), iota_pair (4x4 block at
    indices (j, k)).  Indices are 1-based as in the classical notation.
    """
    one = xla.identity(m)
    zero = xla.zeros(m, m)

    def assemble(a, b, c, d):
        rows = [list(a[i]) + list(b[i]) for i in range(m)]
        rows += [list(c[i]) + list(d[i]) for i in range(m)]
        return IntegerSymplectic(rows)

    if kind == "u":
        b = [[int(x) for x in row] for row in params["b"]]
        if not xla.is_symmetric(b):
            raise ValueError("u(b) needs symmetric b")
        return assemble(one, b, zero, one)
    if kind == "u_minus":
        c = [[int(x) for x in row] for row in params["c"]]
        if not xla.is_symmetric(c):
            raise ValueError("u_minus(c) needs symmetric c")
        return assemble(one, zero, c, one)
    if kind == "h":
        a = [[int(x) for x in row] for row in params["a"]]
        if abs(xla.det(a)) != 1:
            raise ValueError("h(a) needs unimodular a")
        d = [[int(x) for x in row] for row in xla.transpose(xla.inv(a))]
        return assemble(a, zero, zero, d)
    if kind == "omega":
        return make_generator("omega_S", m, S=set(range(1, m + 1)))
    if kind == "omega_S":
        s = set(params["S"])
        if not s <= set(range(1, m + 1)):
            raise ValueError("S out of range")
        rows = xla.zeros(2 * m, 2 * m)
        for i in range(1, m + 1):
            if i in s:                       # e_i -> -e_i*, e_i* -> e_i
                rows[i - 1][m + i - 1] = -1
                rows[m + i - 1][i - 1] = 1
            else:
                rows[i - 1][i - 1] = 1
                rows[m + i - 1][m + i - 1] = 1
        return IntegerSymplectic(rows)
    if kind in ("u_ij", "u_minus_ij"):
        i, j, t = params["i"], params["j"], int(params.get("t", 1))
        b = _eps(m, i - 1, j - 1, t)
        if i != j:
            b = xla.mat_add(b, _eps(m, j - 1, i - 1, t))
        if kind == "u_ij":
            return assemble(one, b, zero, one)
        return assemble(one, zero, xla.mat_neg(b), one)
    if kind == "v_ij":
        i, j, t = params["i"], params["j"], int(params.get("t", 1))
        if i == j:
            raise ValueError("v_ij needs i != j")
        a = xla.mat_add(one, _eps(m, i - 1, j - 1, t))
        d = xla.mat_add(one, _eps(m, j - 1, i - 1, -t))
        return assemble(a, zero, zero, d)
    if kind == "iota":
        i = params["i"]
        g2 = [[int(x) for x in row] for row in params["g"]]
        rows = xla.identity(2 * m)
        idx = [i - 1, m + i - 1]
        for r in range(2):
            for s_ in range(2):
                rows[idx[r]][idx[s_]] = g2[r][s_]
        return IntegerSymplectic(rows)
    if kind == "iota_pair":
        j, k = params["jk"]
        if j == k:
            raise ValueError("iota_pair needs distinct indices")
        g4 = [[int(x) for x in row] for row in params["g"]]
        rows = xla.identity(2 * m)
        idx = [j - 1, k - 1, m + j - 1, m + k - 1]
        for r in range(4):
            for s_ in range(4):
                rows[idx[r]][idx[s_]] = g4[r][s_]
        return IntegerSymplectic(rows)
    raise ValueError(f"unknown generator kind {kind!r}")


# --- congruence subgroups ---

def _diag_even(m1, m2) -> bool:
    prod = xla.mat_mul(m1, xla.transpose(m2))
    return all(prod[i][i] % 2 == 0 for i in range(len(prod)))


def subgroup_membership(g: IntegerSymplectic, which: str, d: int | None = None) -> bool:
    """Membership predicates for Gamma(2), Gamma(1,2), Gamma(d), Gamma(d,2d).

    Gamma(1,2) is diag(a b^T) and diag(c d^T) even: exactly the elements whose
    mod-2 reduction preserves the quadratic form sum(x_i x*_i) under the row
    action.  (The diag(a c^T)/diag(b d^T) variant is not closed under
    products; u_12(1) h(1 + e_12) is a counterexample at m = 2.)
    Gamma(d) is g = 1 mod d; Gamma(d,2d) additionally has the (i, m+i) and
    (m+i, i) entries of (g - 1)/d even.
    """
    name = which.replace("(", "").replace(")", "").replace(",", "_").replace(" ", "")
    # numeric forms: Gamma4 -> Gamma(d) with d=4, Gamma4_8 -> Gamma(d,2d) with d=4
    if name not in ("Gamma1_2", "Gamma2", "Gammad", "Gammad_2d") \
            and name.startswith("Gamma"):
        parts = name[len("Gamma"):].split("_")
        if all(p.isdigit() for p in parts):
            if len(parts) == 1 and parts[0] != "2":
                name, d = "Gammad", int(parts[0])
            elif len(parts) == 2:
                if int(parts[1]) != 2 * int(parts[0]):
                    raise ValueError(f"unknown subgroup {which!r}")
                name, d = "Gammad_2d", int(parts[0])
    n = 2 * g.m
    if name == "Gamma1_2":
        return _diag_even(g.a, g.b) and _diag_even(g.c, g.d)
    if name == "Gamma2":
        return all((g.rows[i][j] - (i == j)) % 2 == 0
                   for i in range(n) for j in range(n))
    if name in ("Gammad", "Gammad_2d"):
        assert d is not None and d > 0, "these predicates need d"
        diff = [[g.rows[i][j] - (i == j) for j in range(n)] for i in range(n)]
        if any(x % d for row in diff for x in row):
            return False
        if name == "Gammad":
            return True
        if d % 2:
            raise ValueError("Gamma(d,2d) is defined for even d")
        gp = [[x // d for x in row] for row in diff]
        m = g.m
        return all(gp[m + i][i] % 2 == 0 and gp[i][m + i] % 2 == 0
                   for i in range(m))
    raise ValueError(f"unknown subgroup {which!r}")


# --- Siegel upper half space ---

class SiegelPoint:
    """z = X + iY with X, Y real symmetric and Y positive definite."""

    __slots__ = ("m", "X", "Y")

    def __init__(self, X, Y):
        X = np.array(X, dtype=float)
        Y = np.array(Y, dtype=float)
        assert X.shape == Y.shape and X.ndim == 2 and X.shape[0] == X.shape[1]
        assert np.max(np.abs(X - X.T)) < 1e-12, "X must be symmetric"
        assert np.max(np.abs(Y - Y.T)) < 1e-12, "Y must be symmetric"
        try:
            np.linalg.cholesky(Y)
        except np.linalg.LinAlgError:
            raise ValueError("Y must be positive definite") from None
        X.setflags(write=False)
        Y.setflags(write=False)
        object.__setattr__(self, "m", X.shape[0])
        object.__setattr__(self, "X", X)
        object.__setattr__(self, "Y", Y)

    def __setattr__(self, *a):
        raise AttributeError("SiegelPoint is immutable")

    @property
    def z(self) -> np.ndarray:
        return self.X + 1j * self.Y

    @classmethod
    def z0(cls, m: int) -> "SiegelPoint":
        return cls(np.zeros((m, m)), np.eye(m))

    @classmethod
    def from_complex(cls, z) -> "SiegelPoint":
        z = np.asarray(z, dtype=complex)
        return cls(z.real, z.imag)

    def __repr__(self):
        return f"SiegelPoint(X={self.X.tolist()}, Y={self.Y.tolist()})"


def _as_float(g) -> np.ndarray:
    return g.to_float() if isinstance(g, IntegerSymplectic) else np.asarray(g, dtype=float)


def j_matrix(g, z: SiegelPoint) -> np.ndarray:
    """The automorphy cofactor J(g, z) = cz + d."""
    arr = _as_float(g)
    m = z.m
    c, d = arr[m:, :m], arr[m:, m:]
    return c @ z.z + d


def mobius_act(g, z: SiegelPoint) -> SiegelPoint:
    """g(z) = (az + b)(cz + d)^{-1}; stays in the Siegel half space."""
    arr = _as_float(g)
    m = z.m
    a, b = arr[:m, :m], arr[:m, m:]
    jm = j_matrix(g, z)
    if abs(np.linalg.det(jm)) < 1e-12:
        raise ValueError("cz + d numerically singular")
    w = (a @ z.z + b) @ np.linalg.inv(jm)
    w = (w + w.T) / 2                      # symmetrize away roundoff
    return SiegelPoint(w.real, w.imag)


def sqrt_pd(y: np.ndarray) -> np.ndarray:
    """Positive-definite symmetric square root via eigendecomposition."""
    w, v = np.linalg.eigh((y + y.T) / 2)
    w = np.clip(w, 1e-14, None)            # guard against tiny negatives
    return (v * np.sqrt(w)) @ v.T


@dataclass(frozen=True)
class IwasawaPair:
    """g = p k with p upper block triangular (positive a-block), k fixing z0."""
    p: np.ndarray
    k: np.ndarray
    sqrt_y: np.ndarray
    z: SiegelPoint


def iwasawa_decompose(g) -> IwasawaPair:
    arr = _as_float(g)
    m = arr.shape[0] // 2
    zg = mobius_act(arr, SiegelPoint.z0(m))
    sy = sqrt_pd(zg.Y)
    sy_inv = np.linalg.inv(sy)
    p = np.block([[sy, zg.X @ sy_inv], [np.zeros((m, m)), sy_inv]])
    k = np.linalg.inv(p) @ arr
    return IwasawaPair(p=p, k=k, sqrt_y=sy, z=zg)


# --- random words ---

def _alphabet(m: int, subgroup: str):
    pairs = [(i, j) for i in range(1, m + 1) for j in range(1, m + 1) if i < j]
    out = []
    if subgroup in ("Sp", "Gamma12"):
        out.append(("omega", {"S": frozenset(range(1, m + 1))}))
        step = 2 if subgroup == "Gamma12" else 1
        for i in range(1, m + 1):          # u with even diagonal inside Gamma(1,2)
            out.append(("u_ij", {"i": i, "j": i, "t": step}))
            out.append(("u_ij", {"i": i, "j": i, "t": -step}))
        for i, j in pairs:
            out.append(("u_ij", {"i": i, "j": j, "t": 1}))
            out.append(("u_ij", {"i": i, "j": j, "t": -1}))
        for i, j in pairs:
            out.append(("h_elem", {"i": i, "j": j, "t": 1}))
            out.append(("h_elem", {"i": i, "j": j, "t": -1}))
        return out
    if subgroup == "Gamma2":
        out.append(("minus_one", {}))
        for i in range(1, m + 1):
            for kind in ("u_ij", "u_minus_ij"):
                out.append((kind, {"i": i, "j": i, "t": 2}))
                out.append((kind, {"i": i, "j": i, "t": -2}))
        for i, j in pairs:
            for kind in ("u_ij", "u_minus_ij"):
                out.append((kind, {"i": i, "j": j, "t": 2}))
            out.append(("v_ij", {"i": i, "j": j, "t": 2}))
        return out
    raise ValueError(f"unknown subgroup {subgroup!r}")


def _letter(kind: str, m: int, params: dict) -> IntegerSymplectic:
    if kind == "h_elem":
        a = xla.identity(m)
        a[params["i"] - 1][params["j"] - 1] = params["t"]
        return make_generator("h", m, a=a)
    if kind == "minus_one":
        return make_generator("h", m, a=[[-(i == j) for j in range(m)] for i in range(m)])
    if kind == "omega":
        return make_generator("omega_S", m, S=set(params["S"]))
    return make_generator(kind, m, **params)


def random_word_element(m: int, subgroup: str, length: int, seed: int):
    """Seeded random product of generators of the requested subgroup.

    Returns (element, word) where word is the list of (kind, params) letters.
    Membership is by construction; the caller can re-check via
    subgroup_membership since the predicates are independent of the sampler.
    """
    name = subgroup.replace("(", "").replace(")", "").replace(",", "").replace(" ", "")
    table = {"SpZ": "Sp", "Sp": "Sp", "Gamma12": "Gamma12",
             "Gamma1_2": "Gamma12", "Gamma2": "Gamma2"}
    if name not in table:
        raise ValueError(f"no word sampler for subgroup {subgroup!r}")
    name = table[name]
    rng = random.Random(seed)
    letters = _alphabet(m, name)
    g = IntegerSymplectic.identity(m)
    word = []
    for _ in range(length):
        kind, params = rng.choice(letters)
        word.append((kind, dict(params)))
        g = g @ _letter(kind, m, params)
    return g, word
