"""Canonical undirected simple graphs, family builders, derived graphs.

A Graph is immutable: `n` vertices labelled 0..n-1 and a lexicographically
sorted tuple of edges (u, v) with u < v.  The sorted edge order is the
canonical edge order that every other module indexes against (orientations
are bit vectors over it, factorizations are lists of indices into it).

Builders cover the families used throughout: complete, complete bipartite
and multipartite graphs, cycles, paths, and circulant bipartite graphs
(a deterministic, parameterized source of d-regular bipartite instances).
Derived constructions: line graph, subdivision graph, total graph.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

Edge = tuple[int, int]

FAMILIES = (
    "complete",
    "complete_bipartite",
    "complete_multipartite",
    "cycle",
    "path",
    "circulant_bipartite",
)


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph with canonical (sorted) edge list."""

    n: int
    edges: tuple[Edge, ...]
    vertex_labels: tuple[str, ...] | None = None

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"vertex count must be >= 0, got {self.n}")
        prev = None
        for (u, v) in self.edges:
            if not (0 <= u < v < self.n):
                raise ValueError(f"edge ({u},{v}) out of range for n={self.n}")
            if prev is not None and (u, v) <= prev:
                raise ValueError(
                    f"edge list not in strict lexicographic order at ({u},{v})")
            prev = (u, v)
        if (self.vertex_labels is not None
                and len(self.vertex_labels) != self.n):
            raise ValueError("vertex_labels length must equal n")

    @classmethod
    def from_edges(cls, n: int, edges, vertex_labels=None) -> "Graph":
        """Build a Graph from an arbitrary edge iterable (normalized,
        deduplicated, sorted)."""
        canon = set()
        for (u, v) in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            canon.add((min(u, v), max(u, v)))
        labels = tuple(vertex_labels) if vertex_labels is not None else None
        return cls(n, tuple(sorted(canon)), labels)

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        deg = [0] * self.n
        for (u, v) in self.edges:
            deg[u] += 1
            deg[v] += 1
        return tuple(deg)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj = [[] for _ in range(self.n)]
        for (u, v) in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(a)) for a in adj)

    @cached_property
    def edge_index(self) -> dict[Edge, int]:
        """Canonical edge -> position in the edge list."""
        return {e: i for i, e in enumerate(self.edges)}

    def max_degree(self) -> int:
        return max(self.degrees) if self.n else 0

    def is_regular(self) -> bool:
        return self.n == 0 or len(set(self.degrees)) == 1


@dataclass(frozen=True)
class FamilySpec:
    """Named graph family plus integer parameters."""

    family: str
    params: tuple[int, ...]

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; "
                             f"choose from {', '.join(FAMILIES)}")
        object.__setattr__(self, "params", tuple(int(p) for p in self.params))


def build_family(spec: FamilySpec) -> Graph:
    """Construct the canonical representative of a graph family.

    Part conventions: complete_bipartite [m, n] uses parts {0..m-1} and
    {m..m+n-1}; complete_multipartite part sizes occupy consecutive index
    blocks; circulant_bipartite [n, d] joins left vertex i to right
    vertices n + ((i + t) mod n) for t = 0..d-1, giving a d-regular
    bipartite graph.
    """
    fam, params = spec.family, spec.params
    if fam == "complete":
        (k,) = _expect_params(params, 1, fam)
        _require(k >= 1, f"complete: order must be >= 1, got {k}")
        return Graph.from_edges(
            k, ((i, j) for i in range(k) for j in range(i + 1, k)))
    if fam == "complete_bipartite":
        a, b = _expect_params(params, 2, fam)
        _require(a >= 1 and b >= 1,
                 f"complete_bipartite: part sizes must be >= 1, got {a},{b}")
        return Graph.from_edges(
            a + b, ((i, a + j) for i in range(a) for j in range(b)))
    if fam == "complete_multipartite":
        _require(len(params) >= 2,
                 "complete_multipartite: need at least 2 part sizes")
        _require(all(p >= 1 for p in params),
                 f"complete_multipartite: part sizes must be >= 1, got {params}")
        bounds = [0]
        for p in params:
            bounds.append(bounds[-1] + p)
        n = bounds[-1]
        edges = []
        for a in range(len(params)):
            for b in range(a + 1, len(params)):
                for u in range(bounds[a], bounds[a + 1]):
                    for v in range(bounds[b], bounds[b + 1]):
                        edges.append((u, v))
        return Graph.from_edges(n, edges)
    if fam == "cycle":
        (k,) = _expect_params(params, 1, fam)
        _require(k >= 3, f"cycle: length must be >= 3, got {k}")
        return Graph.from_edges(
            k, [(i, i + 1) for i in range(k - 1)] + [(0, k - 1)])
    if fam == "path":
        (k,) = _expect_params(params, 1, fam)
        _require(k >= 1, f"path: order must be >= 1, got {k}")
        return Graph.from_edges(k, ((i, i + 1) for i in range(k - 1)))
    if fam == "circulant_bipartite":
        side, d = _expect_params(params, 2, fam)
        _require(side >= 1, f"circulant_bipartite: part size must be >= 1, got {side}")
        _require(1 <= d <= side,
                 f"circulant_bipartite: degree must be in 1..{side}, got {d}")
        return Graph.from_edges(
            2 * side, ((i, side + (i + t) % side)
                       for i in range(side) for t in range(d)))
    raise AssertionError(fam)


def _expect_params(params, count, fam):
    if len(params) != count:
        raise ValueError(f"{fam}: expected {count} parameter(s), got {list(params)}")
    return params


def _require(cond: bool, message: str):
    if not cond:
        raise ValueError(message)


def complete(n: int) -> Graph:
    return build_family(FamilySpec("complete", (n,)))


def complete_bipartite(a: int, b: int) -> Graph:
    return build_family(FamilySpec("complete_bipartite", (a, b)))


def complete_multipartite(*sizes: int) -> Graph:
    return build_family(FamilySpec("complete_multipartite", tuple(sizes)))


def cycle(n: int) -> Graph:
    return build_family(FamilySpec("cycle", (n,)))


def path(n: int) -> Graph:
    return build_family(FamilySpec("path", (n,)))


def circulant_bipartite(side: int, degree: int) -> Graph:
    return build_family(FamilySpec("circulant_bipartite", (side, degree)))


def line_graph(g: Graph) -> Graph:
    """Graph on the edges of g; two edge-vertices adjacent iff the edges
    share an endpoint.  Edge-vertex j corresponds to g.edges[j], recorded
    in vertex_labels."""
    if g.m < 1:
        raise ValueError("line_graph: input graph has no edges")
    incident: list[list[int]] = [[] for _ in range(g.n)]
    for j, (u, v) in enumerate(g.edges):
        incident[u].append(j)
        incident[v].append(j)
    edges = set()
    for ids in incident:
        for x in range(len(ids)):
            for y in range(x + 1, len(ids)):
                edges.add((ids[x], ids[y]))
    labels = tuple(f"edge {{{u},{v}}} of base graph" for (u, v) in g.edges)
    return Graph.from_edges(g.m, edges, labels)


def subdivision_graph(g: Graph) -> Graph:
    """Replace every edge j = (u, v) by a path u - (n+j) - v."""
    edges = []
    for j, (u, v) in enumerate(g.edges):
        edges.append((u, g.n + j))
        edges.append((v, g.n + j))
    labels = tuple(f"vertex {i}" for i in range(g.n)) + tuple(
        f"edge {{{u},{v}}} of base graph" for (u, v) in g.edges)
    return Graph.from_edges(g.n + g.m, edges, labels)


def total_graph(g: Graph) -> Graph:
    """Union of g, its line graph (shifted by n), and the vertex-edge
    incidence adjacencies."""
    edges = list(g.edges)
    if g.m:
        for (a, b) in line_graph(g).edges:
            edges.append((g.n + a, g.n + b))
    for j, (u, v) in enumerate(g.edges):
        edges.append((u, g.n + j))
        edges.append((v, g.n + j))
    labels = tuple(f"vertex {i}" for i in range(g.n)) + tuple(
        f"edge {{{u},{v}}} of base graph" for (u, v) in g.edges)
    return Graph.from_edges(g.n + g.m, edges, labels)


def atn_lower_bound(g: Graph) -> Fraction:
    """Half the average degree, |E|/n, as an exact rational.

    Every graph's Alon-Tarsi number is at least this value; callers decide
    whether they need the raw fraction or a ceiling.
    """
    if g.n < 1:
        raise ValueError("atn_lower_bound: graph must have at least one vertex")
    return Fraction(g.m, g.n)


def bipartition(g: Graph) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """Two-color g by BFS; returns the two sides or None if an odd cycle
    exists.  Isolated vertices land on the first side."""
    color = [-1] * g.n
    for start in range(g.n):
        if color[start] != -1:
            continue
        color[start] = 0
        queue = [start]
        while queue:
            v = queue.pop()
            for w in g.adjacency[v]:
                if color[w] == -1:
                    color[w] = 1 - color[v]
                    queue.append(w)
                elif color[w] == color[v]:
                    return None
    left = tuple(v for v in range(g.n) if color[v] == 0)
    right = tuple(v for v in range(g.n) if color[v] == 1)
    return left, right


def connected_components(g: Graph) -> list[tuple[int, ...]]:
    seen = [False] * g.n
    comps = []
    for start in range(g.n):
        if seen[start]:
            continue
        stack = [start]
        seen[start] = True
        comp = []
        while stack:
            v = stack.pop()
            comp.append(v)
            for w in g.adjacency[v]:
                if not seen[w]:
                    seen[w] = True
                    stack.append(w)
        comps.append(tuple(sorted(comp)))
    return comps


def random_regular_bipartite(side: int, degree: int, seed: int) -> Graph:
    """Seeded random d-regular bipartite graph on parts of size `side`
    (union of d random disjoint perfect matchings; resamples on collision)."""
    if not (1 <= degree <= side):
        raise ValueError(f"degree must be in 1..{side}, got {degree}")
    rng = random.Random(seed)
    while True:
        edges = set()
        ok = True
        for _ in range(degree):
            perm = list(range(side))
            rng.shuffle(perm)
            round_edges = [(i, side + perm[i]) for i in range(side)]
            if any(e in edges for e in round_edges):
                ok = False
                break
            edges.update(round_edges)
        if ok:
            return Graph.from_edges(2 * side, edges)


# --- edge-list text format ------------------------------------------------
#
# line 1: "<n> <m>"; next m lines: "<u> <v>" with 0 <= u < v < n, in
# canonical order.  Blank lines and lines starting with '#' are ignored.

def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for (u, v) in g.edges)
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str) -> Graph:
    rows = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append(line)
    if not rows:
        raise ValueError("empty edge-list input")
    header = rows[0].split()
    if len(header) != 2:
        raise ValueError(f"bad header {rows[0]!r}: expected '<n> <m>'")
    n, m = int(header[0]), int(header[1])
    if len(rows) - 1 != m:
        raise ValueError(f"header says {m} edges, found {len(rows) - 1}")
    edges = []
    for row in rows[1:]:
        parts = row.split()
        if len(parts) != 2:
            raise ValueError(f"bad edge line {row!r}")
        u, v = int(parts[0]), int(parts[1])
        if not u < v:
            raise ValueError(f"edge line {row!r}: expected u < v")
        edges.append((u, v))
    if edges != sorted(set(edges)):
        raise ValueError("edge list must be sorted and duplicate-free")
    return Graph(n, tuple(edges))


def write_graph(g: Graph, file_path: str):
    with open(file_path, "w", encoding="utf-8") as fh:
        fh.write(format_edge_list(g))


def read_graph(file_path: str) -> Graph:
    with open(file_path, "r", encoding="utf-8") as fh:
        return parse_edge_list(fh.read())
