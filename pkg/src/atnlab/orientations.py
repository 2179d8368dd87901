"""Edge orientations and the structured orientation constructions.

An orientation stores one direction bit per canonical edge: 0 keeps the
arc low-index -> high-index, 1 reverses it.  Besides the representation,
this module builds the three structured orientations the verification
suites exercise:

* `eulerian_orientation`: in-degree = out-degree everywhere (even-degree
  graphs), by walking an Euler circuit of each component;
* `pairwise_eulerian_orientation`: an orientation of a complete
  multipartite graph with equal even part sizes whose restriction to the
  complete bipartite graph between any two parts is itself Eulerian;
* `factor_index_orientation`: an orientation of a line graph driven by a
  1-factorization of the base graph, directing every line-graph edge from
  the lower factor index to the higher (each base vertex's clique in the
  line graph is thereby oriented acyclically).

The factor-index construction is *checked*, not trusted:
`unbalanced_class_pairs` reports, for a vertex-class labelling, every
class pair whose crossing arcs fail per-vertex in/out balance.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple

from .factorization import Factorization, validate_factorization
from .graphs import Graph, complete_multipartite, line_graph


@dataclass(frozen=True)
class Orientation:
    """Direction bits over the canonical edge order (0 = low -> high)."""

    graph: Graph
    bits: tuple[int, ...]

    def __post_init__(self):
        if len(self.bits) != self.graph.m:
            raise ValueError(
                f"expected {self.graph.m} direction bits, got {len(self.bits)}")
        if any(b not in (0, 1) for b in self.bits):
            raise ValueError("direction bits must be 0 or 1")

    @classmethod
    def from_arcs(cls, g: Graph, arcs) -> "Orientation":
        bits = [-1] * g.m
        for (tail, head) in arcs:
            e = (min(tail, head), max(tail, head))
            idx = g.edge_index.get(e)
            if idx is None:
                raise ValueError(f"arc ({tail},{head}) is not an edge")
            if bits[idx] != -1:
                raise ValueError(f"edge {e} oriented twice")
            bits[idx] = 0 if tail < head else 1
        if any(b == -1 for b in bits):
            missing = next(i for i, b in enumerate(bits) if b == -1)
            raise ValueError(f"edge {g.edges[missing]} left unoriented")
        return cls(g, tuple(bits))

    @cached_property
    def arcs(self) -> tuple[tuple[int, int], ...]:
        return tuple((v, u) if b else (u, v)
                     for (u, v), b in zip(self.graph.edges, self.bits))

    @cached_property
    def out_degrees(self) -> tuple[int, ...]:
        out = [0] * self.graph.n
        for (tail, _) in self.arcs:
            out[tail] += 1
        return tuple(out)

    def reversed(self) -> "Orientation":
        return Orientation(self.graph, tuple(1 - b for b in self.bits))


def max_outdegree(o: Orientation) -> int:
    return max(o.out_degrees) if o.graph.n else 0


def eulerian_orientation(g: Graph) -> Orientation:
    """Orient every component along an Euler circuit, giving out-degree =
    in-degree = deg/2 at each vertex.  Start vertices and neighbor choices
    take the smallest index, so the output is a golden-stable function of
    the graph."""
    odd = [v for v in range(g.n) if g.degrees[v] % 2]
    if odd:
        raise ValueError(f"vertices with odd degree: {odd}")
    unused = [list(g.adjacency[v]) for v in range(g.n)]
    used: set[tuple[int, int]] = set()
    arcs = []
    for start in range(g.n):
        if not unused[start]:
            continue
        stack = [start]
        walk = []
        while stack:
            v = stack[-1]
            while unused[v] and (min(v, unused[v][0]), max(v, unused[v][0])) in used:
                unused[v].pop(0)
            if unused[v]:
                w = unused[v].pop(0)
                used.add((min(v, w), max(v, w)))
                stack.append(w)
            else:
                walk.append(stack.pop())
        walk.reverse()
        for a, b in zip(walk, walk[1:]):
            arcs.append((a, b))
    return Orientation.from_arcs(g, arcs)


def pairwise_eulerian_orientation(k: int, n: int) -> Orientation:
    """Orientation of the complete k-partite graph with k parts of even
    size n (consecutive index blocks): between parts p < q, vertex p*n+i
    points at q*n+j exactly when (j - i) mod n < n/2.  Every vertex then
    has out-degree n/2 toward each other part (total (k-1)*n/2), and the
    restriction to any two parts is Eulerian."""
    if k < 2:
        raise ValueError(f"need at least 2 parts, got {k}")
    if n < 2 or n % 2:
        raise ValueError(f"part size must be even and >= 2, got {n}")
    g = complete_multipartite(*([n] * k))
    half = n // 2
    bits = []
    for (a, b) in g.edges:
        i = a % n
        j = b % n
        bits.append(0 if (j - i) % n < half else 1)
    return Orientation(g, tuple(bits))


class FactorOrientation(NamedTuple):
    line: Graph
    orientation: Orientation
    classes: tuple[int, ...]


def factor_index_orientation(f: Factorization) -> FactorOrientation:
    """Orient the line graph of a 1-factorized regular graph by factor
    rank: the line-graph edge between base edges e and f points from the
    lower factor index to the higher.  Within each base vertex's clique
    this is an acyclic (linear) order.  Returns the line graph, the
    orientation, and the per-line-vertex factor index, so callers can run
    the class balance check."""
    ok, diagnostic = validate_factorization(f)
    if not ok:
        raise ValueError(f"invalid factorization: {diagnostic}")
    if not f.base.is_regular():
        raise ValueError("base graph must be regular")
    classes = f.factor_of_edge()
    line = line_graph(f.base)
    bits = []
    for (a, b) in line.edges:
        ca, cb = classes[a], classes[b]
        assert ca != cb, "adjacent line vertices share a factor"
        bits.append(0 if ca < cb else 1)
    return FactorOrientation(line, Orientation(line, tuple(bits)), classes)


def unbalanced_class_pairs(o: Orientation, classes) -> tuple[tuple[int, int], ...]:
    """Class pairs whose crossing arcs are not balanced at every vertex.

    For each pair (a, b) of distinct class labels, restrict the
    orientation to arcs with one endpoint labelled a and the other b; the
    pair is balanced when every vertex has equal in- and out-degree in
    that restriction.  Pairs with no crossing edges are trivially balanced
    and never reported.
    """
    classes = tuple(classes)
    if len(classes) != o.graph.n:
        raise ValueError("need one class label per vertex")
    flow: dict[tuple[int, int], dict[int, int]] = {}
    for (tail, head) in o.arcs:
        ct, ch = classes[tail], classes[head]
        if ct == ch:
            continue
        pair = (min(ct, ch), max(ct, ch))
        counts = flow.setdefault(pair, {})
        counts[tail] = counts.get(tail, 0) + 1
        counts[head] = counts.get(head, 0) - 1
    bad = [pair for pair, counts in flow.items()
           if any(c != 0 for c in counts.values())]
    return tuple(sorted(bad))


# --- text format ------------------------------------------------------------
#
# Line 1 repeats the graph header "<n> <m>"; line 2 is a string of m '0'/'1'
# characters, one per canonical edge ('0' = low -> high).

def format_orientation(o: Orientation) -> str:
    return (f"{o.graph.n} {o.graph.m}\n"
            + "".join(str(b) for b in o.bits) + "\n")


def parse_orientation(text: str, g: Graph) -> Orientation:
    rows = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append(line)
    # an edgeless graph has a blank bit line, which strips away entirely
    if len(rows) != 2 and not (len(rows) == 1 and g.m == 0):
        raise ValueError("orientation file must have a header and a bit line")
    header = rows[0].split()
    if len(header) != 2 or (int(header[0]), int(header[1])) != (g.n, g.m):
        raise ValueError(
            f"orientation header {rows[0]!r} does not match graph "
            f"({g.n} vertices, {g.m} edges)")
    bit_line = rows[1] if len(rows) == 2 else ""
    if len(bit_line) != g.m or any(c not in "01" for c in bit_line):
        raise ValueError(f"expected {g.m} direction bits of 0/1")
    return Orientation(g, tuple(int(c) for c in bit_line))


def read_orientation(file_path: str, g: Graph) -> Orientation:
    with open(file_path, "r", encoding="utf-8") as fh:
        return parse_orientation(fh.read(), g)


def write_orientation(o: Orientation, file_path: str):
    with open(file_path, "w", encoding="utf-8") as fh:
        fh.write(format_orientation(o))
