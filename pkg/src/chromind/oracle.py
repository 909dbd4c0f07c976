"""Ground truth by exhaustive search over proper colourings.

Enumeration order is fixed: vertices in id order, colours ascending, so
colourings come out in lexicographic order of their colour sequence.  Every
optimiser here returns the first optimal colouring in that order.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from typing import Iterator, Sequence

from ._search import bits, check_budget, lex_min_with_strengths
from .coloring import Coloring, ColoringError
from .graphs import Graph
from .indices import ColorProfile, index_value, m4_standard_from_strengths

ORACLE_INDICES = ("m1", "m2", "m3", "m4_paper", "m4_std")
GOALS = ("min", "max")
MAX_PERMUTATION_COLOURS = 8


def _normalise_index(index: str) -> str:
    if index == "m4":
        return "m4_paper"
    if index not in ORACLE_INDICES:
        raise ValueError(f"unknown index {index!r}; expected one of {ORACLE_INDICES}")
    return index


def _check_goal(goal: str) -> None:
    if goal not in GOALS:
        raise ValueError(f"goal must be 'min' or 'max', got {goal!r}")


def enumerate_colorings(g: Graph, k: int) -> Iterator[Coloring]:
    """Every proper colouring of ``g`` with colours from ``1..k``."""
    check_budget(g, "colouring enumeration")
    n = g.vertex_count
    adj = g.adjacency
    zeta = [0] * n

    def rec(v: int) -> Iterator[Coloring]:
        if v == n:
            yield Coloring(tuple(zeta), k)
            return
        taken = {zeta[w] for w in adj[v] if w < v}
        for c in range(1, k + 1):
            if c not in taken:
                zeta[v] = c
                yield from rec(v + 1)
        zeta[v] = 0

    if n == 0:
        return iter(())
    return rec(0)


def count_colorings(g: Graph, k: int) -> int:
    return sum(1 for _ in enumerate_colorings(g, k))


def extrema(g: Graph, k: int, index: str, goal: str, prune: bool = True,
            strengths: Sequence[int] | None = None) -> tuple[Fraction, Coloring]:
    """Exact optimum of ``index`` over all proper colourings with colours
    ``1..k``, plus the first optimal colouring in enumeration order.

    ``strengths`` restricts the search to colourings with exactly those class
    sizes.  ``prune=False`` scans the full enumeration; the pruned searches
    must agree with it exactly.
    """
    index = _normalise_index(index)
    _check_goal(goal)
    check_budget(g, "oracle search")
    if k < 1:
        raise ColoringError(f"k must be positive, got {k}")
    if strengths is not None:
        strengths = tuple(strengths)
        if len(strengths) != k:
            raise ColoringError(f"strengths {strengths} do not have {k} entries")
    if not prune:
        result = _scan(g, k, index, goal, strengths)
    elif index in ("m2", "m3"):
        result = _branch_and_bound(g, k, index, goal, strengths)
    elif strengths is not None:
        zeta = lex_min_with_strengths(g.masks, g.vertex_count, strengths)
        result = None if zeta is None else (_strength_value(strengths, index),
                                            Coloring(tuple(zeta), k))
    else:
        result = _by_strengths(g, k, index, goal)
    if result is None:
        raise ColoringError(f"{g.name or 'graph'} has no proper colouring with {k} colours")
    return result


def _better(a: Fraction, b: Fraction, goal: str) -> bool:
    return a < b if goal == "min" else a > b


def _scan(g: Graph, k: int, index: str, goal: str, strengths=None):
    best = None
    for c in enumerate_colorings(g, k):
        if strengths is not None and c.strengths() != strengths:
            continue
        val = index_value(g, c, index)
        if best is None or _better(val, best[0], goal):
            best = (val, c)
    return best


# -- strength-only indices ----------------------------------------------------

def _strength_value(theta: Sequence[int], index: str) -> Fraction:
    if index == "m1":
        return Fraction(sum(t * j * j for j, t in enumerate(theta, start=1)))
    std = m4_standard_from_strengths(theta)
    return Fraction(std) if index == "m4_std" else Fraction(std, 2)


def _compositions(total: int, parts: int, cap: int) -> Iterator[tuple[int, ...]]:
    if parts == 1:
        if total <= cap:
            yield (total,)
        return
    for first in range(min(total, cap), -1, -1):
        for rest in _compositions(total - first, parts - 1, cap):
            yield (first,) + rest


def _independence_number(g: Graph) -> int:
    from ._search import maximal_independent_sets, popcount
    everything = (1 << g.vertex_count) - 1
    return max((popcount(s) for s in maximal_independent_sets(g.masks, everything)), default=0)


def _by_strengths(g: Graph, k: int, index: str, goal: str):
    """m1 and m4 depend on class sizes only: walk size vectors best-first and
    stop at the first value level that some proper colouring attains."""
    n = g.vertex_count
    alpha = _independence_number(g)
    levels: dict[Fraction, list[tuple[int, ...]]] = {}
    for theta in _compositions(n, k, alpha):
        levels.setdefault(_strength_value(theta, index), []).append(theta)
    for value in sorted(levels, reverse=(goal == "max")):
        found = None
        for theta in levels[value]:
            zeta = lex_min_with_strengths(g.masks, n, theta)
            if zeta is not None and (found is None or zeta < found):
                found = zeta
        if found is not None:
            return value, Coloring(tuple(found), k)
    return None


# -- edge indices -------------------------------------------------------------

def _edge_tables(k: int, index: str):
    def f(a: int, b: int) -> int:
        return a * b if index == "m2" else abs(a - b)

    full = 1 << k
    # one endpoint fixed at colour a (1-based), other restricted to mask
    one = [[(0, 0)] * full for _ in range(k + 1)]
    for a in range(1, k + 1):
        for mask in range(full):
            vals = [f(a, c + 1) for c in bits(mask) if c + 1 != a]
            one[a][mask] = (min(vals), max(vals)) if vals else (None, None)
    two = [[(0, 0)] * full for _ in range(full)]
    for m1_ in range(full):
        for m2_ in range(full):
            vals = [f(a + 1, b + 1) for a in bits(m1_) for b in bits(m2_) if a != b]
            two[m1_][m2_] = (min(vals), max(vals)) if vals else (None, None)
    return f, one, two


def _branch_and_bound(g: Graph, k: int, index: str, goal: str,
                      strengths: Sequence[int] | None = None):
    """Depth-first search in enumeration order with forward checking.

    Prunes a subtree when its optimistic bound is worse than the incumbent,
    or equal to it while the subtree's prefix already sorts after the
    incumbent (so it cannot hold an earlier optimum).
    """
    n = g.vertex_count
    f, one, two = _edge_tables(k, index)
    pick = 0 if goal == "min" else 1
    full = (1 << k) - 1
    adj = g.adjacency
    edges = g.edges
    zeta = [0] * n
    domains = [full] * n
    colour_order = list(range(k)) if goal == "min" else list(range(k - 1, -1, -1))
    best_val: int | None = None
    best_zeta: list[int] | None = None
    # edges whose larger endpoint is v become fully assigned when v is
    back_edges = [[w for w in adj[v] if w < v] for v in range(n)]
    need = list(strengths) if strengths is not None else None
    if need is not None and sum(need) != n:
        return None

    def supply_ok(upto: int) -> bool:
        for c in range(k):
            if need[c] > 0:
                bit = 1 << c
                if sum(1 for w in range(upto, n) if domains[w] & bit) < need[c]:
                    return False
        return True

    def bound(upto: int, exact: int) -> int | None:
        total = exact
        for a, b in edges:
            if b < upto:
                continue
            if a < upto:
                lo_hi = one[zeta[a]][domains[b]]
            else:
                lo_hi = two[domains[a]][domains[b]]
            val = lo_hi[pick]
            if val is None:
                return None
            total += val
        return total

    def worse(x: int, y: int) -> bool:
        return x > y if goal == "min" else x < y

    def prefix_after(v: int) -> bool:
        # True if zeta[:v] sorts strictly after best_zeta[:v]
        return zeta[:v] > best_zeta[:v]

    def rec(v: int, exact: int) -> None:
        nonlocal best_val, best_zeta
        if v == n:
            if (best_val is None or worse(best_val, exact)
                    or (exact == best_val and zeta < best_zeta)):
                best_val, best_zeta = exact, list(zeta)
            return
        dom = domains[v]
        for c in colour_order:
            if not dom >> c & 1:
                continue
            if need is not None and need[c] == 0:
                continue
            colour = c + 1
            zeta[v] = colour
            gained = sum(f(colour, zeta[w]) for w in back_edges[v])
            saved = [domains[w] for w in adj[v] if w > v]
            wiped = False
            for w in adj[v]:
                if w > v:
                    domains[w] &= ~(1 << c)
                    if domains[w] == 0:
                        wiped = True
            if need is not None:
                need[c] -= 1
                wiped = wiped or not supply_ok(v + 1)
            if not wiped:
                est = bound(v + 1, exact + gained)
                if est is not None and not (
                        best_val is not None
                        and (worse(est, best_val) or (est == best_val and prefix_after(v + 1)))):
                    rec(v + 1, exact + gained)
            if need is not None:
                need[c] += 1
            for w, d in zip((w for w in adj[v] if w > v), saved):
                domains[w] = d
        zeta[v] = 0

    if n == 0:
        return None
    rec(0, 0)
    if best_val is None:
        return None
    return Fraction(best_val), Coloring(tuple(best_zeta), k)


# -- fixed partition, permuted labels ----------------------------------------

def _profile_value(p: ColorProfile, index: str) -> Fraction:
    if index == "m1":
        return Fraction(sum(t * j * j for j, t in enumerate(p.theta, start=1)))
    if index == "m2":
        return Fraction(sum(t * s * c for (t, s), c in p.eta.items()))
    if index == "m3":
        return Fraction(sum((s - t) * c for (t, s), c in p.eta.items()))
    std = m4_standard_from_strengths(p.theta)
    return Fraction(std) if index == "m4_std" else Fraction(std, 2)


def permutation_extrema(p: ColorProfile, index: str, goal: str) -> tuple[Fraction, tuple[int, ...]]:
    """Optimum of ``index`` over the ``k!`` relabellings of a fixed class
    partition, with the first optimal permutation (lexicographic order)."""
    index = _normalise_index(index)
    _check_goal(goal)
    k = p.num_colors
    if k > MAX_PERMUTATION_COLOURS:
        raise ValueError(f"{k}! relabellings exceeds the limit of {MAX_PERMUTATION_COLOURS} colours")
    best = None
    for perm in itertools.permutations(range(1, k + 1)):
        val = _profile_value(p.relabelled(perm), index)
        if best is None or _better(val, best[0], goal):
            best = (val, perm)
    assert best is not None
    return best


def rearrangement_m1_min(theta: Sequence[int]) -> int:
    """Largest classes on the smallest colours."""
    return sum(t * j * j for j, t in enumerate(sorted(theta, reverse=True), start=1))
