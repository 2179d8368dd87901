"""Shared brute-force oracles and the acceptance summary hook.

Every oracle here recomputes its answer from the definition with no
shortcuts, so library results are checked against an independent route.
All are exponential in the edge count; keep inputs small.
"""

from __future__ import annotations

import itertools
import random

from atnlab import Graph, Orientation


def brute_poly(g: Graph) -> dict[tuple[int, ...], int]:
    """Expand the product of (x_u - x_v) over all 2^m pick patterns."""
    coefs: dict[tuple[int, ...], int] = {}
    m = g.m
    for picks in range(1 << m):
        exps = [0] * g.n
        sign = 1
        for i, (u, v) in enumerate(g.edges):
            if picks >> i & 1:
                exps[u] += 1
            else:
                exps[v] += 1
                sign = -sign
        key = tuple(exps)
        coefs[key] = coefs.get(key, 0) + sign
    return {e: c for e, c in coefs.items() if c != 0}


def brute_coefficient(g: Graph, target) -> int:
    return brute_poly(g).get(tuple(target), 0)


def brute_atn(g: Graph) -> int:
    poly = brute_poly(g)
    if not poly:
        raise AssertionError("graph polynomial of a simple graph is nonzero")
    return 1 + min(max(exps) for exps in poly)


def brute_parity_diff(o: Orientation) -> tuple[int, int]:
    """Count balanced arc subsets by size parity, one subset at a time."""
    arcs = o.arcs
    even = odd = 0
    for r in range(len(arcs) + 1):
        for sub in itertools.combinations(arcs, r):
            net = [0] * o.graph.n
            for u, v in sub:
                net[u] += 1
                net[v] -= 1
            if any(net):
                continue
            if r % 2 == 0:
                even += 1
            else:
                odd += 1
    return even, odd


def random_graph(rng: random.Random, max_n: int = 10, max_m: int = 14) -> Graph:
    n = rng.randint(1, max_n)
    pool = [(u, v) for u in range(n) for v in range(u + 1, n)]
    m = rng.randint(0, min(max_m, len(pool)))
    return Graph.from_edges(n, rng.sample(pool, m))


def random_orientation(rng: random.Random, g: Graph) -> Orientation:
    return Orientation(g, tuple(rng.randint(0, 1) for _ in range(g.m)))


def slow_choosable(g: Graph, k: int) -> bool:
    """Literal k-choosability: try every list assignment over a shared
    palette of k*n colors, first list pinned to {0..k-1} by symmetry.
    Only viable for very small n and k."""
    from atnlab import proper_coloring_exists

    if g.n == 0:
        return True
    universe = range(min(k * g.n, k + (g.n - 1) * k))
    options = list(itertools.combinations(universe, k))
    first = [tuple(range(k))]
    for rest in itertools.product(options, repeat=g.n - 1):
        lists = first + list(rest)
        ok, _ = proper_coloring_exists(g, lists)
        if not ok:
            return False
    return True


_CRITERION_LINES: list[str] = []


def record_criterion(num: int, ok: bool, text: str):
    line = f"[criterion {num:2d}] {'PASS' if ok else 'FAIL'} - {text}"
    _CRITERION_LINES.append(line)
    print(line)
    assert ok, line


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _CRITERION_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(_CRITERION_LINES):
        terminalreporter.write_line(line)
