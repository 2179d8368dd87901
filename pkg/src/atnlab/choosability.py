"""Exact list-coloring (choosability) decisions for small graphs.

A graph is k-choosable when every assignment of k-color lists to its
vertices admits a proper coloring from the lists.  The decision procedure
shrinks the raw "all assignments" space with three lossless reductions:

1. a vertex whose degree in the current induced subgraph is below k can
   always be colored last, so it is deleted;
2. if some vertex holds a color missing from all of its neighbors' lists,
   that color is safe for it and the assignment reduces to the
   vertex-deleted subgraph; k-choosability of every vertex-deleted
   subgraph (computed recursively, memoized by vertex subset) therefore
   disposes of all such assignments;
3. splitting each color's class of holders into connected components
   (fresh color per component) changes no colorability, so the remaining
   assignments to test are exactly the multisets of *connected* induced
   vertex sets of size >= 2 that cover every vertex exactly k times.

The multisets are enumerated canonically: each step picks a class
containing the smallest vertex that still needs coverage, with
non-decreasing class index along the way (every multiset is produced
exactly once).  Each enumerated assignment is tested by backtracking; the
first uncolorable one yields the "no" witness.  Vertices deleted by the
reductions rejoin the witness with fresh colors used nowhere else, which
leaves the assignment uncolorable.  Budget exhaustion yields the in-band
verdict "unknown", never an exception.
"""

from __future__ import annotations

from dataclasses import dataclass

from .budget import Budget, BudgetExceededError
from .graphs import Graph


@dataclass(frozen=True)
class ChoosabilityResult:
    """Verdict "yes" | "no" | "unknown"; a "no" carries witness lists."""

    status: str
    witness: tuple[tuple[int, ...], ...] | None = None

    def witness_json(self) -> dict | None:
        if self.witness is None:
            return None
        return {"lists": [list(lst) for lst in self.witness],
                "colorable": False}


def proper_coloring_exists(g: Graph, lists) -> tuple[bool, tuple[int, ...] | None]:
    """Backtracking list-coloring: picks the uncolored vertex with the
    fewest currently usable colors; returns a witness coloring on success."""
    lists = [tuple(dict.fromkeys(lst)) for lst in lists]
    if len(lists) != g.n:
        raise ValueError(f"need {g.n} lists, got {len(lists)}")
    if any(not lst for lst in lists):
        raise ValueError("every vertex needs a non-empty list")
    coloring: list[int | None] = [None] * g.n

    def usable(v: int) -> list[int]:
        taken = {coloring[w] for w in g.adjacency[v] if coloring[w] is not None}
        return [c for c in lists[v] if c not in taken]

    def solve() -> bool:
        best_v = None
        best = None
        for v in range(g.n):
            if coloring[v] is not None:
                continue
            options = usable(v)
            if best is None or len(options) < len(best):
                best_v, best = v, options
                if not options:
                    return False
        if best_v is None:
            return True
        for c in best:
            coloring[best_v] = c
            if solve():
                return True
        coloring[best_v] = None
        return False

    if solve():
        return True, tuple(coloring)  # type: ignore[arg-type]
    return False, None


def chromatic_number(g: Graph) -> int:
    """Exact chromatic number by backtracking, seeded with a greedy clique
    lower bound.  Intended for graphs with at most 16 vertices."""
    if g.n > 16:
        raise ValueError(f"exact search limited to 16 vertices, got {g.n}")
    if g.n == 0:
        return 0
    if g.m == 0:
        return 1
    order = sorted(range(g.n), key=lambda v: (-g.degrees[v], v))
    clique: list[int] = []
    for v in order:
        if all(w in g.adjacency[v] for w in clique):
            clique.append(v)
    for c in range(len(clique), g.n + 1):
        if _colorable_with(g, order, c):
            return c
    raise AssertionError("a graph is always n-colorable")


def _colorable_with(g: Graph, order: list[int], c: int) -> bool:
    coloring: dict[int, int] = {}

    def rec(i: int, used: int) -> bool:
        if i == len(order):
            return True
        v = order[i]
        taken = {coloring[w] for w in g.adjacency[v] if w in coloring}
        # colors beyond the first unused one are interchangeable
        for color in range(min(used + 1, c)):
            if color in taken:
                continue
            coloring[v] = color
            if rec(i + 1, max(used, color + 1)):
                return True
            del coloring[v]
        return False

    return rec(0, 0)


def is_k_choosable(g: Graph, k: int,
                   budget: Budget | None = None) -> ChoosabilityResult:
    """Decide k-choosability; "no" carries a witness assignment (verified
    uncolorable before returning), budget exhaustion gives "unknown"."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    budget = budget if budget is not None else Budget()
    adjset = [set(a) for a in g.adjacency]
    memo: dict[frozenset, tuple[bool, dict | None]] = {}

    def fresh_lift(witness: dict, v: int) -> dict:
        base = 1 + max((max(lst) for lst in witness.values()), default=-1)
        lifted = dict(witness)
        lifted[v] = tuple(range(base, base + k))
        return lifted

    def solve(sub: frozenset) -> tuple[bool, dict | None]:
        if not sub:
            return True, None
        hit = memo.get(sub)
        if hit is not None:
            return hit
        low = min((v for v in sub if len(adjset[v] & sub) < k), default=None)
        if low is not None:
            ok, wit = solve(sub - {low})
            result = (True, None) if ok else (False, fresh_lift(wit, low))
        else:
            result = None
            for v in sorted(sub):
                ok, wit = solve(sub - {v})
                if not ok:
                    result = (False, fresh_lift(wit, v))
                    break
            if result is None:
                bad = _uncolorable_assignment(g, sub, k, budget)
                result = (True, None) if bad is None else (False, bad)
        memo[sub] = result
        return result

    try:
        ok, witness = solve(frozenset(range(g.n)))
    except BudgetExceededError:
        return ChoosabilityResult("unknown", None)
    if ok:
        return ChoosabilityResult("yes", None)
    lists = tuple(tuple(sorted(witness[v])) for v in range(g.n))
    colorable, _ = proper_coloring_exists(g, lists)
    assert not colorable, "witness assignment must be uncolorable"
    return ChoosabilityResult("no", lists)


def _connected_subsets(g: Graph, verts: list[int]) -> list[tuple[int, ...]]:
    """All subsets of `verts` of size >= 2 inducing a connected subgraph,
    as sorted tuples in ascending lexicographic order."""
    vset = set(verts)
    out = []
    for mask in range(1, 1 << len(verts)):
        subset = [verts[i] for i in range(len(verts)) if mask >> i & 1]
        if len(subset) < 2:
            continue
        seen = {subset[0]}
        frontier = [subset[0]]
        inside = set(subset)
        while frontier:
            v = frontier.pop()
            for w in g.adjacency[v]:
                if w in inside and w not in seen:
                    seen.add(w)
                    frontier.append(w)
        if len(seen) == len(subset):
            out.append(tuple(subset))
    out.sort()
    return out


def _uncolorable_assignment(g: Graph, sub: frozenset, k: int,
                            budget: Budget) -> dict | None:
    """Search the canonical hard assignments on the induced subgraph: every
    color class a connected set of size >= 2, every vertex in exactly k
    classes.  Returns witness lists for the first uncolorable assignment,
    or None when all are colorable."""
    verts = sorted(sub)
    classes = _connected_subsets(g, verts)
    by_first: dict[int, list[tuple[int, tuple[int, ...]]]] = {}
    for idx, cls in enumerate(classes):
        by_first.setdefault(cls[0], []).append((idx, cls))
    deficit = {v: k for v in verts}
    chosen: list[tuple[int, ...]] = []

    def rec(last_idx: int) -> dict | None:
        target = next((v for v in verts if deficit[v]), None)
        if target is None:
            budget.charge_assignments(1)
            if _assignment_colorable(g, verts, chosen):
                return None
            return {v: tuple(i for i, cls in enumerate(chosen) if v in cls)
                    for v in verts}
        for idx, cls in by_first.get(target, ()):
            if idx < last_idx:
                continue
            if all(deficit[u] for u in cls):
                for u in cls:
                    deficit[u] -= 1
                chosen.append(cls)
                found = rec(idx)
                chosen.pop()
                for u in cls:
                    deficit[u] += 1
                if found is not None:
                    return found
        return None

    return rec(0)


def _assignment_colorable(g: Graph, verts: list[int],
                          chosen: list[tuple[int, ...]]) -> bool:
    """Can each vertex pick one of its covering class instances so that
    adjacent vertices pick different instances?"""
    palette: dict[int, list[int]] = {v: [] for v in verts}
    for i, cls in enumerate(chosen):
        for v in cls:
            palette[v].append(i)
    pick: dict[int, int] = {}

    def rec(pos: int) -> bool:
        if pos == len(verts):
            return True
        v = verts[pos]
        taken = {pick[w] for w in g.adjacency[v] if w in pick}
        for i in palette[v]:
            if i in taken:
                continue
            pick[v] = i
            if rec(pos + 1):
                return True
            del pick[v]
        return False

    return rec(0)
