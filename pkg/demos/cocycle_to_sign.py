#!/usr/bin/env python3
# The eighth-root cocycle, its normalization to a sign, and the exact
# chain of values on a rank-two pair of unipotents.

import numpy as np

from thetacover import (Mu8, cbar_cocycle, m_xstar, make_generator,
                        random_word_element, rao_cocycle)

rng = np.random.default_rng(7)


def word(m, seed):
    length = int(rng.integers(1, 9))
    return random_word_element(m, "Sp", length=length, seed=seed)[0]


print("two-cocycle identity on random triples, exact in mu8")
bad = 0
for s in range(200):
    m = 1 + s % 2
    g1, g2, g3 = word(m, 3 * s), word(m, 3 * s + 1), word(m, 3 * s + 2)
    lhs = rao_cocycle(g1, g2) * rao_cocycle(g1 @ g2, g3)
    rhs = rao_cocycle(g2, g3) * rao_cocycle(g1, g2 @ g3)
    bad += lhs != rhs
print(f"  failures: {bad} / 200")

print()
print("normalizing each factor by the reference constant leaves a sign")
for s in range(5):
    g1, g2 = word(2, 1000 + 2 * s), word(2, 1001 + 2 * s)
    c8 = rao_cocycle(g1, g2)
    sign = cbar_cocycle(g1, g2)
    rebuilt = Mu8(0 if sign == 1 else 4) * m_xstar(g1 @ g2) \
        * (m_xstar(g1) * m_xstar(g2)).inv()
    print(f"  c8 exponent {c8.exponent}  sign {sign:+d}  "
          f"rebuilt exponent {rebuilt.exponent}  match {c8 == rebuilt}")

# a pair of commuting unipotent blocks against the full inversion:
# four quantities collapse to the same primitive eighth root
u1 = make_generator("u", 2, b=[[-1, 0], [0, -1]])
u2 = make_generator("u_minus", 2, c=[[1, 1], [1, 1]])
om = make_generator("omega", 2)
chain = [
    ("c8(u1 u2, omega)^-1", rao_cocycle(u1 @ u2, om).inv()),
    ("c8(u2, omega)^-1   ", rao_cocycle(u2, om).inv()),
    ("m(u2)              ", m_xstar(u2)),
    ("m(u1 u2)           ", m_xstar(u1 @ u2)),
]
print()
print("rank-two chain, all equal to exp(-i pi/4):")
for name, val in chain:
    print(f"  {name} = exponent {val.exponent}  value {val.value:.6f}")
