"""Exact expansion of the graph polynomial and the polynomial route to the
Alon-Tarsi number.

The graph polynomial of G is the product over canonical edges (u, v),
u < v, of (x_u - x_v).  Everything here is exact integer arithmetic; a
term is an exponent tuple (one entry per vertex) with a nonzero
arbitrary-precision coefficient.

Cap pruning is the workhorse: exponents only ever grow while multiplying
factors in, so a partial term whose exponents already violate a cap can
never recover, and discarding it is lossless for the within-cap part of
the result.  `atn_via_polynomial` raises the cap from the degree-sum
floor until some term survives; the Alon-Tarsi number is one plus that
first surviving cap.

Edges are multiplied in a greedy order that keeps touching vertices seen
before (not in canonical order), which makes caps bite as early as
possible; the final term order is canonical regardless.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple

from .budget import Budget, BudgetExceededError
from .graphs import Graph, atn_lower_bound


class Term(NamedTuple):
    coef: int
    exps: tuple[int, ...]


@dataclass(frozen=True)
class SparsePoly:
    """Integer multivariate polynomial, terms sorted by exponent tuple."""

    nvars: int
    terms: tuple[Term, ...]

    def __post_init__(self):
        prev = None
        for t in self.terms:
            if t.coef == 0:
                raise ValueError("zero coefficient term")
            if len(t.exps) != self.nvars or any(e < 0 for e in t.exps):
                raise ValueError(f"bad exponent tuple {t.exps}")
            if prev is not None and t.exps <= prev:
                raise ValueError("terms not in strictly increasing order")
            prev = t.exps

    @classmethod
    def from_dict(cls, nvars: int, coeffs: dict) -> "SparsePoly":
        terms = tuple(Term(coeffs[e], e) for e in sorted(coeffs)
                      if coeffs[e] != 0)
        return cls(nvars, terms)

    @cached_property
    def _by_exps(self) -> dict[tuple[int, ...], int]:
        return {t.exps: t.coef for t in self.terms}

    def coefficient_of(self, exps: tuple[int, ...]) -> int:
        return self._by_exps.get(tuple(exps), 0)

    def is_zero(self) -> bool:
        return not self.terms

    def evaluate(self, values) -> int:
        vals = tuple(values)
        if len(vals) != self.nvars:
            raise ValueError(f"expected {self.nvars} values, got {len(vals)}")
        total = 0
        for coef, exps in self.terms:
            prod = coef
            for v, e in zip(vals, exps):
                if e:
                    prod *= v ** e
            total += prod
        return total


def _expansion_edge_order(g: Graph) -> list[tuple[int, int]]:
    """Greedy reordering: prefer edges whose endpoints were already touched,
    so per-vertex caps prune as early as possible."""
    remaining = list(g.edges)
    seen: set[int] = set()
    ordered = []
    while remaining:
        best = max(range(len(remaining)),
                   key=lambda i: ((remaining[i][0] in seen)
                                  + (remaining[i][1] in seen),
                                  -remaining[i][0], -remaining[i][1]))
        u, v = remaining.pop(best)
        ordered.append((u, v))
        seen.add(u)
        seen.add(v)
    return ordered


def _expand(g: Graph, caps, budget: Budget) -> dict[tuple[int, ...], int]:
    """Multiply the edge factors together, dropping any term whose exponent
    exceeds its cap.  `caps` is one bound per vertex (None = unbounded).
    The result is exactly the within-caps part of the full expansion."""
    cur = {(0,) * g.n: 1}
    for (u, v) in _expansion_edge_order(g):
        budget.charge_term_ops(2 * len(cur))
        nxt: dict[tuple[int, ...], int] = {}
        cap_u = caps[u]
        cap_v = caps[v]
        for exps, coef in cur.items():
            if cap_u is None or exps[u] < cap_u:
                up = exps[:u] + (exps[u] + 1,) + exps[u + 1:]
                c = nxt.get(up, 0) + coef
                if c:
                    nxt[up] = c
                elif up in nxt:
                    del nxt[up]
            if cap_v is None or exps[v] < cap_v:
                down = exps[:v] + (exps[v] + 1,) + exps[v + 1:]
                c = nxt.get(down, 0) - coef
                if c:
                    nxt[down] = c
                elif down in nxt:
                    del nxt[down]
        cur = nxt
        if not cur:
            break
    return cur


def graph_polynomial(g: Graph, cap: int | None = None,
                     budget: Budget | None = None) -> SparsePoly:
    """Expanded product of (x_u - x_v) over canonical edges.

    With a cap, the result holds exactly those terms of the full expansion
    whose maximum exponent is <= cap (possibly none).
    """
    if cap is not None and cap < 0:
        raise ValueError(f"cap must be >= 0, got {cap}")
    budget = budget if budget is not None else Budget()
    caps = (cap,) * g.n
    return SparsePoly.from_dict(g.n, _expand(g, caps, budget))


def coefficient(g: Graph, target, budget: Budget | None = None) -> int:
    """Exact coefficient of prod_v x_v^{target_v} in the graph polynomial.

    Expansion runs with per-vertex caps equal to the target, so only terms
    that can still reach the target are carried.
    """
    target = tuple(int(t) for t in target)
    if len(target) != g.n:
        raise ValueError(f"target length {len(target)} != vertex count {g.n}")
    if any(t < 0 for t in target):
        raise ValueError(f"negative exponent in target {target}")
    if sum(target) != g.m:
        return 0
    budget = budget if budget is not None else Budget()
    return _expand(g, target, budget).get(target, 0)


def min_max_exponent(p: SparsePoly) -> int:
    """Minimum over terms of the largest exponent in the term."""
    if p.is_zero():
        raise ValueError("zero polynomial has no terms")
    return min(max(t.exps) for t in p.terms)


def atn_via_polynomial(g: Graph, budget: Budget | None = None) -> int:
    """Alon-Tarsi number via capped expansion.

    Raises the cap k from ceil(|E|/n); the first k whose capped expansion
    is nonempty equals the min-max exponent of the full polynomial (a term
    with smaller max exponent would have survived a smaller cap), so the
    answer is k + 1.  A cap of max degree always succeeds, since every
    exponent of x_v is at most deg(v).
    """
    if g.n < 1:
        raise ValueError("graph must have at least one vertex")
    if g.m == 0:
        return 1
    budget = budget if budget is not None else Budget()
    start = math.ceil(atn_lower_bound(g))
    for k in range(start, g.max_degree() + 1):
        try:
            capped = _expand(g, (k,) * g.n, budget)
        except BudgetExceededError as e:
            raise BudgetExceededError(
                str(e), limit_kind=e.limit_kind, stats=e.stats,
                atn_lower_bound=k + 1) from None
        if capped:
            assert min(max(e) for e in capped) == k
            return k + 1
    raise AssertionError("graph polynomial of a nonempty graph is nonzero")


# --- text dump format -------------------------------------------------------
#
# One term per line: "coef e_0 e_1 ... e_{n-1}", decimal integers, terms in
# canonical (sorted exponent tuple) order.

def format_polynomial(p: SparsePoly) -> str:
    lines = [" ".join([str(t.coef)] + [str(e) for e in t.exps])
             for t in p.terms]
    return "\n".join(lines) + ("\n" if lines else "")


def parse_polynomial(text: str, nvars: int | None = None) -> SparsePoly:
    terms = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        coef = int(parts[0])
        exps = tuple(int(x) for x in parts[1:])
        if nvars is None:
            nvars = len(exps)
        elif len(exps) != nvars:
            raise ValueError(f"inconsistent variable count on line {line!r}")
        terms.append(Term(coef, exps))
    if nvars is None:
        raise ValueError("empty polynomial dump")
    terms.sort(key=lambda t: t.exps)
    return SparsePoly(nvars, tuple(terms))
