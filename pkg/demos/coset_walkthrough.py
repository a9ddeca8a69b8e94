#!/usr/bin/env python3
# Walk the label geometry: isotropic vectors of the doubled quadratic
# form, the coset count identity, and the genus-2 representative table.

import numpy as np

from thetacover import coset_table, enumerate_isotropic, transvection_rep

print("counts of Q0^{-1}(0) against the closed formulas")
for m in (1, 2, 3, 4):
    n = len(enumerate_isotropic(m))
    print(f"  m={m}: {n:4d}   (2^m+1)2^(m-1) = {(2**m + 1) * 2**(m - 1):4d}"
          f"   2^(2m-1)+2^(m-1) = {2**(2*m - 1) + 2**(m - 1):4d}")

print()
print("genus-2 table: label q, transvection product, refined representative")
for rec in coset_table(2):
    same = "same" if rec.M_prime.rows == rec.M.rows else "refined"
    print(f"  q={rec.q}  m_q={rec.m_q}  eps_q={rec.eps_q}  "
          f"kappa={rec.kappa:+d}  [{same}]")
    for row in rec.M_prime.rows:
        print(f"      {list(row)}")

# the last label has the only dense representative; its displayed
# factorization into two parabolic pieces and a lower unipotent
full = transvection_rep((1, 1, 1, 1))
p1 = np.array([[0, -1, 1, 0], [-1, 0, 0, 1], [0, 0, 0, -1], [0, 0, -1, 0]])
p2 = np.array([[1, 0, -1, 0], [0, 1, 0, -1], [0, 0, 1, 0], [0, 0, 0, 1]])
low = np.array([[1, 0, 0, 0], [0, 1, 0, 0], [1, 1, 1, 0], [1, 1, 0, 1]])
lhs = p1 @ p2 @ low
print()
print("dense representative as a parabolic pair times a lower unipotent:")
print(f"  product equals table entry: {np.array_equal(lhs, np.array([list(r) for r in full.rows]))}")
