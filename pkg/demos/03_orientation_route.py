#!/usr/bin/env python3
"""The orientation route and the sign correspondence that makes it work.

For an orientation D with outdegree vector d, the coefficient of the
monomial x^d in the expanded edge-difference product equals

    (-1)^(number of edges directed high->low) * (even - odd)

where even/odd count the spanning sub-digraphs with balanced in/out
degree at every vertex (the empty one included) by arc-count parity.
So instead of expanding a polynomial we can scan outdegree vectors,
realize one orientation per vector by max flow, and count balanced
subsets with a popcount kernel.
"""

from atnlab import (Orientation, atn_via_orientations, coefficient, cycle,
                    eulerian_orientation, eulerian_parity_diff, line_graph,
                    complete, orientation_sign, orientation_with_outdegrees,
                    verify_correspondence)


c4 = cycle(4)
around = eulerian_orientation(c4)
print("C_4 oriented all the way around:", around.arcs)
pd = eulerian_parity_diff(around)
print(f"  balanced subsets: {pd.even_count} even, {pd.odd_count} odd, "
      f"difference {pd.diff}")
print(f"  sign {orientation_sign(around):+d}, coefficient at outdegrees "
      f"{around.out_degrees}: {coefficient(c4, around.out_degrees)}")
print()

# A directed triangle cancels: the empty subset is even, the full cycle odd.
tri = Orientation.from_arcs(cycle(3), [(0, 1), (1, 2), (2, 0)])
print("directed triangle parity counts:", eulerian_parity_diff(tri).to_json())
print()

# The whole report in one call...
print("correspondence report for the C_4 loop:")
for key, val in verify_correspondence(c4, around).items():
    print(f"  {key}: {val}")
print()

# Realizing a target outdegree vector (or refusing to)...
print("realize (1,1,1,1) on C_4:",
      orientation_with_outdegrees(c4, (1, 1, 1, 1)).arcs)
print("realize (2,1,1,0) on C_4:",
      orientation_with_outdegrees(c4, (2, 1, 1, 0)).arcs)
# (2,2,0,0) is hopeless: the edge between vertices 0 and 1 cannot leave both
print("realize (2,2,0,0) on C_4:", orientation_with_outdegrees(c4, (2, 2, 0, 0)))
print()

# Level-by-level search: vectors with max coordinate k are tried before
# any with k+1, so the first nonzero difference ends the search.
for g, name in [(cycle(5), "C_5"), (complete(4), "K_4"),
                (line_graph(complete(4)), "line graph of K_4")]:
    print(f"{name}: {atn_via_orientations(g)}")
