#!/usr/bin/env python3
# End to end: the scalar law over the theta group and the ten-component
# vector law over the full integer group, verified at random points.

import json

from thetacover import verify_scalar_law, verify_vector_law

print("scalar law, both weights, genus 1 and 2")
for m in (1, 2):
    rep = verify_scalar_law(m, trials=40, tol=1e-8, seed=17)
    print(f"  m={m}: passed={rep.passed}  max rel error {rep.max_rel_error:.2e}"
          f"  in {rep.elapsed:.1f}s")

print()
print("vector law, ten components at genus 2, random lifts")
rep = verify_vector_law(2, trials=20, tol=1e-8, seed=17)
print(f"  passed={rep.passed}  max rel error {rep.max_rel_error:.2e}"
      f"  in {rep.elapsed:.1f}s")

print()
print("full report of the vector run:")
print(json.dumps(rep.as_dict(), indent=2, sort_keys=True))
