"""1-factorizations: partitions of a regular graph's edge set into perfect
matchings.

Two constructive cases are covered: complete graphs of even order (the
round-robin rotation) and regular bipartite graphs (repeated extraction of
a perfect matching by augmenting paths, which always succeeds for regular
bipartite graphs).  Factors are stored as tuples of indices into the base
graph's canonical edge list.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph, bipartition, complete


@dataclass(frozen=True)
class Factorization:
    """A base graph plus an ordered list of factors (edge-index tuples)."""

    base: Graph
    factors: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        for factor in self.factors:
            for idx in factor:
                if not (0 <= idx < self.base.m):
                    raise ValueError(f"edge index {idx} out of range")

    def factor_of_edge(self) -> tuple[int, ...]:
        """For each canonical edge, the index of the factor containing it.
        Requires the factors to cover every edge exactly once."""
        owner = [-1] * self.base.m
        for fi, factor in enumerate(self.factors):
            for idx in factor:
                if owner[idx] != -1:
                    raise ValueError(f"edge {idx} appears in two factors")
                owner[idx] = fi
        if any(o == -1 for o in owner):
            missing = next(i for i, o in enumerate(owner) if o == -1)
            raise ValueError(f"edge {missing} not covered by any factor")
        return tuple(owner)


def validate_factorization(f: Factorization) -> tuple[bool, str]:
    """Check the 1-factorization invariants; returns (ok, diagnostic) with
    the first violated condition named."""
    g = f.base
    seen: set[int] = set()
    for fi, factor in enumerate(f.factors):
        covered: set[int] = set()
        for idx in factor:
            if idx in seen:
                return False, f"edge {idx} appears in more than one factor"
            seen.add(idx)
            u, v = g.edges[idx]
            if u in covered or v in covered:
                return False, f"factor {fi} is not a matching at edge {idx}"
            covered.add(u)
            covered.add(v)
        if covered != set(range(g.n)):
            return False, f"factor {fi} does not cover every vertex"
    if len(seen) != g.m:
        return False, "factors do not cover every edge"
    return True, "ok"


def one_factorize_complete(order: int) -> Factorization:
    """Round-robin 1-factorization of the complete graph on an even number
    of vertices: fix vertex order-1; in round r it plays r, and
    (r+i) mod (order-1) plays (r-i) mod (order-1) for the remaining pairs.
    """
    if order < 2 or order % 2:
        raise ValueError(f"order must be even and >= 2, got {order}")
    g = complete(order)
    hub = order - 1
    factors = []
    for r in range(order - 1):
        pairs = [(hub, r)]
        for i in range(1, order // 2):
            pairs.append(((r + i) % hub, (r - i) % hub))
        factors.append(tuple(sorted(
            g.edge_index[(min(a, b), max(a, b))] for (a, b) in pairs)))
    return Factorization(g, tuple(factors))


def one_factorize_regular_bipartite(g: Graph) -> Factorization:
    """Split a d-regular bipartite graph into d perfect matchings by
    repeatedly extracting one (augmenting-path search) and deleting it."""
    parts = bipartition(g)
    if parts is None:
        raise ValueError("graph is not bipartite")
    if not g.is_regular():
        raise ValueError(f"graph is not regular (degrees {sorted(set(g.degrees))})")
    left, right = parts
    degree = g.degrees[0] if g.n else 0
    if degree == 0:
        if g.n:
            raise ValueError("0-regular graph has no perfect matching")
        return Factorization(g, ())

    adj = {u: [v for v in g.adjacency[u]] for u in left}
    factors = []
    for _ in range(degree):
        match_of_right: dict[int, int] = {}

        def augment(u: int, visited: set[int]) -> bool:
            for w in adj[u]:
                if w in visited:
                    continue
                visited.add(w)
                if w not in match_of_right or augment(match_of_right[w], visited):
                    match_of_right[w] = u
                    return True
            return False

        for u in left:
            found = augment(u, set())
            assert found, "regular bipartite graph must have a perfect matching"
        factor = []
        for w, u in match_of_right.items():
            factor.append(g.edge_index[(min(u, w), max(u, w))])
            adj[u].remove(w)
        factors.append(tuple(sorted(factor)))
    return Factorization(g, tuple(factors))


# --- text format ------------------------------------------------------------
#
# One line per factor: the factor's edge indices, space-separated, in
# ascending order.

def format_factorization(f: Factorization) -> str:
    lines = [" ".join(str(i) for i in factor) for factor in f.factors]
    return "\n".join(lines) + ("\n" if lines else "")


def parse_factorization(text: str, base: Graph) -> Factorization:
    factors = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        factors.append(tuple(int(x) for x in line.split()))
    return Factorization(base, tuple(factors))
