#!/usr/bin/env python3
"""Tour of the graph builders, derived graphs, and the edge-list format."""

from atnlab import (FamilySpec, build_family, complete, complete_bipartite,
                    cycle, format_edge_list, line_graph, parse_edge_list,
                    subdivision_graph, total_graph)


# Named families...
print("Families by name:")
for family, params in [("complete", (4,)), ("complete_bipartite", (2, 3)),
                       ("complete_multipartite", (2, 2, 2)),
                       ("cycle", (6,)), ("path", (5,)),
                       ("circulant_bipartite", (4, 2))]:
    g = build_family(FamilySpec(family, params))
    print(f"  {family}{params}: {g.n} vertices, {g.m} edges, "
          f"degrees {sorted(set(g.degrees))}")
print()

# Derived graphs: vertices of the line graph are edges of the base...
base = complete(4)
lg = line_graph(base)
print(f"line graph of K_4: {lg.n} vertices, {lg.m} edges")
for v in range(3):
    print(f"  vertex {v} is {lg.vertex_labels[v]}")
print()

sd = subdivision_graph(base)
tg = total_graph(base)
print(f"subdividing K_4 gives {sd.n} vertices / {sd.m} edges (always bipartite)")
print(f"total graph of K_4 has {tg.n} vertices / {tg.m} edges, "
      f"max degree {tg.max_degree()}")
print()

# The text format round-trips and tolerates comments...
text = format_edge_list(cycle(4))
print("edge-list text for C_4:")
print(text)
assert parse_edge_list("# same thing\n" + text) == cycle(4)

k23 = complete_bipartite(2, 3)
print(f"K_23 adjacency of vertex 0: {k23.adjacency[0]}")
print(f"K_23 edge ranks: {k23.edge_index}")
