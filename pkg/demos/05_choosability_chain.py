#!/usr/bin/env python3
"""chromatic number <= list chromatic number <= the orientation bound.

The middle quantity is decided exactly (for small graphs) by a reduction
engine; "no" answers come with a concrete list assignment that is
re-checked to be uncolorable before being reported.
"""

from atnlab import (atn_via_polynomial, chromatic_number, complete,
                    complete_bipartite, complete_multipartite, cycle,
                    is_k_choosable, proper_coloring_exists)


def list_chromatic(g) -> int:
    k = 1
    while True:
        if is_k_choosable(g, k).status == "yes":
            return k
        k += 1


print(f"{'graph':<14} {'chromatic':>9} {'choosable':>9} {'alon-tarsi':>10}")
for name, g in [("K_3", complete(3)), ("C_4", cycle(4)), ("C_5", cycle(5)),
                ("K_22", complete_bipartite(2, 2)),
                ("K_222", complete_multipartite(2, 2, 2)),
                ("K_33", complete_bipartite(3, 3))]:
    chi = chromatic_number(g)
    ch = list_chromatic(g)
    at = atn_via_polynomial(g)
    assert chi <= ch <= at
    print(f"{name:<14} {chi:>9} {ch:>9} {at:>10}")
print()

# K_33 is the textbook gap between chromatic and list chromatic...
g = complete_bipartite(3, 3)
res = is_k_choosable(g, 2)
print("K_33 with lists of size 2:", res.status)
lists = res.witness_json()["lists"]
print("  witness lists:", lists)
ok, _ = proper_coloring_exists(g, lists)
print("  colorable from those lists?", ok)
print()

# Even cycles are 2-choosable, odd ones are not...
for n in (4, 5, 6, 7):
    print(f"C_{n} from lists of size 2: {is_k_choosable(cycle(n), 2).status}")
