"""Proper colourings: validation, exact chromatic number and the
minimum-parameter colourings phi-minus / phi-plus.

Colours are the integers ``1..k``; colour ``j`` stands for ``c_j``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

from ._search import (
    check_budget,
    k_colourable,
    lex_max_strengths,
    lex_min_with_strengths,
    max_clique_size,
)
from .graphs import Graph


class ColoringError(ValueError):
    """Invalid colouring, infeasible colour count, or size mismatch."""

    def __init__(self, message: str, violations: Sequence[tuple[int, int]] = ()):
        super().__init__(message)
        self.violations = list(violations)


@dataclass(frozen=True)
class Coloring:
    """Vertex colouring ``zeta`` (vertex id -> colour in 1..num_colors).

    ``num_colors`` defaults to the largest colour used.  Properness is not
    part of the type; see :func:`validate`.
    """

    zeta: tuple[int, ...]
    num_colors: int = 0

    def __post_init__(self):
        zeta = tuple(int(c) for c in self.zeta)
        object.__setattr__(self, "zeta", zeta)
        if any(c < 1 for c in zeta):
            raise ColoringError("colours must be positive integers")
        top = max(zeta, default=0)
        if self.num_colors == 0:
            object.__setattr__(self, "num_colors", top)
        elif self.num_colors < top:
            raise ColoringError(f"colour {top} exceeds num_colors={self.num_colors}")

    def __len__(self):
        return len(self.zeta)

    def __getitem__(self, v: int) -> int:
        return self.zeta[v]

    @property
    def is_surjective(self) -> bool:
        return set(self.zeta) == set(range(1, self.num_colors + 1))

    def strengths(self) -> tuple[int, ...]:
        counts = [0] * self.num_colors
        for c in self.zeta:
            counts[c - 1] += 1
        return tuple(counts)

    def reversed(self) -> "Coloring":
        """Relabel colour ``s`` as ``num_colors + 1 - s``."""
        top = self.num_colors + 1
        return Coloring(tuple(top - c for c in self.zeta), self.num_colors)

    def permuted(self, perm: Sequence[int]) -> "Coloring":
        """Relabel colour ``s`` as ``perm[s - 1]`` (``perm`` is a permutation of 1..k)."""
        return Coloring(tuple(perm[c - 1] for c in self.zeta), self.num_colors)

    def to_json(self) -> str:
        return json.dumps(list(self.zeta))

    @classmethod
    def from_json(cls, text: str) -> "Coloring":
        data = json.loads(text)
        if not isinstance(data, list) or not all(isinstance(c, int) for c in data):
            raise ColoringError("colouring JSON must be an array of integers")
        return cls(tuple(data))

    @classmethod
    def from_classes(cls, n: int, classes: Iterable[Iterable[int]]) -> "Coloring":
        """Colouring that gives the j-th vertex set colour j (1-based)."""
        zeta = [0] * n
        for colour, members in enumerate(classes, start=1):
            for v in members:
                if zeta[v]:
                    raise ColoringError(f"vertex {v} placed in two classes")
                zeta[v] = colour
        missing = [v for v, c in enumerate(zeta) if c == 0]
        if missing:
            raise ColoringError(f"vertices {missing} left uncoloured")
        return cls(tuple(zeta))


def validate(g: Graph, c: Coloring) -> list[tuple[int, int]]:
    """Edges whose endpoints share a colour; empty iff ``c`` is proper on ``g``."""
    if len(c) != g.vertex_count:
        raise ColoringError(
            f"colouring covers {len(c)} vertices but the graph has {g.vertex_count}")
    return [(a, b) for a, b in g.edges if c.zeta[a] == c.zeta[b]]


def require_proper(g: Graph, c: Coloring) -> None:
    bad = validate(g, c)
    if bad:
        raise ColoringError(f"improper colouring: {len(bad)} monochromatic edge(s) {bad}", bad)


def chromatic_number(g: Graph) -> int:
    """Exact chromatic number by iterative deepening from the clique number."""
    if g.vertex_count == 0:
        return 0
    check_budget(g, "chromatic number")
    everything = (1 << g.vertex_count) - 1
    k = max(1, max_clique_size(g.masks, everything))
    while not k_colourable(g.masks, everything, k):
        k += 1
    return k


def _check_k(g: Graph, k: int) -> None:
    check_budget(g, "minimum-parameter colouring")
    chi = chromatic_number(g)
    if k < chi:
        raise ColoringError(f"no proper colouring with {k} colours: chromatic number is {chi}")
    if k > chi:
        raise ColoringError(
            f"minimum-parameter colourings use exactly chi={chi} colours, got k={k}")


def phi_minus_strengths(g: Graph, k: int) -> tuple[int, ...]:
    _check_k(g, k)
    everything = (1 << g.vertex_count) - 1
    best = lex_max_strengths(g.masks, everything, k)
    assert best is not None
    return best


def phi_minus(g: Graph, k: int) -> Coloring:
    """Proper k-colouring whose strengths ``(theta_1, theta_2, ...)`` are
    lexicographically largest; ties go to the smallest colour sequence in
    vertex order."""
    target = phi_minus_strengths(g, k)
    zeta = lex_min_with_strengths(g.masks, g.vertex_count, target)
    assert zeta is not None
    return Coloring(tuple(zeta), k)


def phi_plus(g: Graph, k: int) -> Coloring:
    """Mirror of :func:`phi_minus`: maximise ``(theta_k, theta_{k-1}, ...)``."""
    target = tuple(reversed(phi_minus_strengths(g, k)))
    zeta = lex_min_with_strengths(g.masks, g.vertex_count, target)
    assert zeta is not None
    return Coloring(tuple(zeta), k)
