"""Bitmask search primitives shared by the colouring engine and the oracle.

Vertex sets are Python ints; bit ``v`` set means vertex ``v`` is present.
"""

from __future__ import annotations

import os
from typing import Iterator, Sequence

from .graphs import Graph

DEFAULT_BUDGET_VERTICES = 25
BUDGET_ENV = "CHROMIND_BUDGET_VERTICES"


class BudgetExceeded(RuntimeError):
    """The graph is too large for exhaustive search under the current budget."""


def vertex_budget() -> int:
    raw = os.environ.get(BUDGET_ENV)
    if raw is None or raw.strip() == "":
        return DEFAULT_BUDGET_VERTICES
    try:
        return int(raw)
    except ValueError:
        raise BudgetExceeded(f"{BUDGET_ENV}={raw!r} is not an integer") from None


def check_budget(g: Graph, what: str = "exact search") -> None:
    limit = vertex_budget()
    if g.vertex_count > limit:
        raise BudgetExceeded(
            f"{what} on {g.vertex_count} vertices exceeds the desk-scale budget of {limit} "
            f"(set {BUDGET_ENV} to override)")


def popcount(x: int) -> int:
    return bin(x).count("1")


def bits(x: int) -> Iterator[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def is_independent_mask(masks: Sequence[int], s: int) -> bool:
    for v in bits(s):
        if masks[v] & s:
            return False
    return True


def max_clique_size(masks: Sequence[int], within: int) -> int:
    """Exact clique number of the subgraph induced by ``within``."""
    best = 0

    def expand(size: int, cand: int) -> None:
        nonlocal best
        if cand == 0:
            best = max(best, size)
            return
        while cand:
            if size + popcount(cand) <= best:
                return
            v = cand.bit_length() - 1
            cand &= ~(1 << v)
            expand(size + 1, cand & masks[v])

    expand(0, within)
    return best


def k_colourable(masks: Sequence[int], within: int, k: int) -> bool:
    """DSATUR-style backtracking: can ``within`` be properly coloured with ``k`` colours?"""
    verts = list(bits(within))
    if not verts:
        return True
    if k <= 0:
        return False
    colour = {}
    # class_masks[c] = vertices currently coloured c
    class_masks = [0] * k

    def pick() -> int | None:
        best, best_key = None, None
        for v in verts:
            if v in colour:
                continue
            sat = sum(1 for c in range(k) if class_masks[c] & masks[v])
            key = (sat, popcount(masks[v] & within))
            if best_key is None or key > best_key:
                best, best_key = v, key
        return best

    def solve(used: int) -> bool:
        v = pick()
        if v is None:
            return True
        # symmetry break: a fresh colour is only tried once
        for c in range(min(used + 1, k)):
            if class_masks[c] & masks[v]:
                continue
            colour[v] = c
            class_masks[c] |= 1 << v
            if solve(max(used, c + 1)):
                return True
            class_masks[c] &= ~(1 << v)
            del colour[v]
        return False

    return solve(0)


def maximal_independent_sets(masks: Sequence[int], within: int) -> list[int]:
    """All maximal independent sets of the subgraph induced by ``within``.

    Bron-Kerbosch with pivoting, run on the complement graph.
    """
    out: list[int] = []

    def non_nbrs(v: int) -> int:
        return within & ~masks[v] & ~(1 << v)

    def bk(r: int, p: int, x: int) -> None:
        if p == 0:
            if x == 0:
                out.append(r)
            return
        pu = p | x
        pivot = max(bits(pu), key=lambda u: popcount(p & non_nbrs(u)))
        for v in list(bits(p & ~non_nbrs(pivot))):
            nv = non_nbrs(v)
            bk(r | (1 << v), p & nv, x & nv)
            p &= ~(1 << v)
            x |= 1 << v

    bk(0, within, 0)
    return out


def lex_max_strengths(masks: Sequence[int], within: int, k: int) -> tuple[int, ...] | None:
    """Lexicographically largest class-size vector over proper colourings of
    ``within`` into exactly ``k`` non-empty ordered classes, or ``None``.

    Only correct when no proper colouring of ``within`` uses fewer than ``k``
    colours: then each class of an optimum is a maximal independent set of
    what remains after removing the earlier classes.
    """
    memo: dict[tuple[int, int], tuple[int, ...] | None] = {}
    mis_cache: dict[int, list[int]] = {}

    def solve(mask: int, k: int) -> tuple[int, ...] | None:
        if k == 0:
            return () if mask == 0 else None
        if mask == 0:
            return None
        if k == 1:
            return (popcount(mask),) if is_independent_mask(masks, mask) else None
        key = (mask, k)
        if key in memo:
            return memo[key]
        sets = mis_cache.get(mask)
        if sets is None:
            sets = sorted(maximal_independent_sets(masks, mask), key=popcount, reverse=True)
            mis_cache[mask] = sets
        best = None
        for s in sets:
            size = popcount(s)
            if best is not None and size < best[0]:
                break
            rest = solve(mask & ~s, k - 1)
            if rest is None:
                continue
            cand = (size,) + rest
            if best is None or cand > best:
                best = cand
        memo[key] = best
        return best

    return solve(within, k)


def lex_min_with_strengths(masks: Sequence[int], n: int, target: Sequence[int],
                           fixed: dict[int, int] | None = None) -> list[int] | None:
    """Lexicographically smallest colour sequence (vertex 0 first, colours
    1..k) whose class sizes equal ``target`` exactly, or ``None``.

    Forward checking keeps per-vertex domains and per-colour supply counts.
    """
    k = len(target)
    full = (1 << k) - 1
    zeta = [0] * n
    need = list(target)
    domains = [full] * n
    if fixed:
        for v, c in fixed.items():
            domains[v] = 1 << (c - 1)

    def feasible(unassigned_from: int) -> bool:
        supply = [0] * k
        for v in range(unassigned_from, n):
            d = domains[v]
            if d == 0:
                return False
            for c in bits(d):
                supply[c] += 1
        return all(supply[c] >= need[c] for c in range(k))

    def solve(v: int) -> bool:
        if v == n:
            return True
        for c in bits(domains[v]):
            zeta[v] = c + 1
            need[c] -= 1
            saved = domains[v + 1:]
            bit = 1 << c
            for w in bits(masks[v]):
                if w > v:
                    domains[w] &= ~bit
            if need[c] == 0:
                for w in range(v + 1, n):
                    domains[w] &= ~bit
            if feasible(v + 1) and solve(v + 1):
                return True
            domains[v + 1:] = saved
            need[c] += 1
        zeta[v] = 0
        return False

    if sum(target) != n or any(t < 0 for t in target):
        return None
    for c in range(k):
        if need[c] == 0:
            for w in range(n):
                domains[w] &= ~(1 << c)
    if not feasible(0):
        return None
    return list(zeta) if solve(0) else None
