#!/usr/bin/env python3
"""1-factorizations and the orientations they induce on line graphs."""

from atnlab import (complete, complete_bipartite, eulerian_parity_diff,
                    factor_index_orientation, format_factorization,
                    max_outdegree, one_factorize_complete,
                    one_factorize_regular_bipartite,
                    pairwise_eulerian_orientation, unbalanced_class_pairs,
                    validate_factorization)


# Round-robin schedule = 1-factorization of a complete graph...
f = one_factorize_complete(6)
print("K_6 split into perfect matchings (edges by index):")
print(format_factorization(f), end="")
print("as vertex pairs:")
for i, factor in enumerate(f.factors):
    print(f"  round {i}: {[f.base.edges[e] for e in factor]}")
print("valid:", validate_factorization(f))
print()

# Regular bipartite graphs factor through repeated perfect matchings...
fb = one_factorize_regular_bipartite(complete_bipartite(3, 3))
print("K_33 factors:", [[fb.base.edges[e] for e in fac] for fac in fb.factors])
print()

# Coloring the line graph's vertices by factor index and orienting each
# line-graph edge toward the larger index gives a fixed-shape orientation.
fo = factor_index_orientation(one_factorize_complete(4))
print("line graph of K_4 under the factor-index orientation:")
print("  classes:", fo.classes)
print("  outdegrees:", fo.orientation.out_degrees,
      "max", max_outdegree(fo.orientation))
print("  parity counts:", eulerian_parity_diff(fo.orientation).to_json())
# Every arc climbs to a higher class, so each class pair is one-sided.
print("  class pairs failing per-vertex balance:",
      unbalanced_class_pairs(fo.orientation, fo.classes))
print()

# Contrast: between the parts of a complete multipartite graph the
# half-and-half rule keeps every pair of parts balanced.
o = pairwise_eulerian_orientation(3, 2)
parts = tuple(v // 2 for v in range(6))
print("pairwise orientation on three parts of size 2:")
print("  outdegrees:", o.out_degrees, "max", max_outdegree(o))
print("  unbalanced part pairs:", unbalanced_class_pairs(o, parts))
print("  parity counts:", eulerian_parity_diff(o).to_json())
diff = eulerian_parity_diff(o).diff
print(f"  nonzero difference {diff} certifies lists of size "
      f"{max_outdegree(o) + 1} suffice")
