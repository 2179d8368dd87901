#!/usr/bin/env python3
"""The expansion route: multiply out the edge differences and look at
which exponent vectors survive.

The product over edges (u,v), u < v, of (x_u - x_v) is expanded exactly
over the integers.  A monomial surviving with nonzero coefficient whose
largest exponent is t certifies colorability from any lists of size t+1,
which is where the +1 below comes from.
"""

from atnlab import (Budget, BudgetExceededError, atn_via_polynomial,
                    coefficient, complete, cycle, format_polynomial,
                    graph_polynomial, min_max_exponent, path)


print("P for the path on 3 vertices, (x0-x1)(x1-x2):")
p = graph_polynomial(path(3))
for t in p.terms:
    print(f"  coef {t.coef:+d} at exponents {t.exps}")
print()

print("Full expansion for the triangle (a 3x3 permanent-like spread):")
tri = graph_polynomial(complete(3))
print(format_polynomial(tri), end="")
print(f"smallest max-exponent over surviving monomials: "
      f"{min_max_exponent(tri)}")
print(f"so lists of size {min_max_exponent(tri) + 1} always suffice -> "
      f"value {atn_via_polynomial(complete(3))}")
print()

# Single coefficients without a full expansion...
c4 = cycle(4)
print("C_4, coefficient at (1,1,1,1):", coefficient(c4, (1, 1, 1, 1)))
print("C_4, coefficient at (2,2,0,0):", coefficient(c4, (2, 2, 0, 0)))
print("degree mismatch short-circuits:", coefficient(c4, (4, 0, 0, 1)))
print()

# Capped expansion prunes as it multiplies: exponents never shrink, so a
# vertex passing its cap can be dropped immediately.
print("values by ascending cap:")
for g, name in [(cycle(5), "C_5"), (complete(5), "K_5")]:
    print(f"  {name}: {atn_via_polynomial(g)}")
print()

# Work limits fail loudly, carrying the best lower bound proven so far...
try:
    atn_via_polynomial(complete(8), Budget(max_term_ops=2000, max_ms=None))
except BudgetExceededError as e:
    print(f"K_8 under a tiny budget: {e.limit_kind} exhausted, "
          f"value is at least {e.atn_lower_bound}")
