"""Chromatic Zagreb and irregularity indices of a coloured graph.

All values are exact: integers, except the halved total irregularity which is
a :class:`fractions.Fraction` with denominator 1 or 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .coloring import Coloring, require_proper
from .graphs import Graph

M4_CONVENTIONS = ("standard", "paper")


@dataclass(frozen=True)
class ColorProfile:
    """Class strengths ``theta[j-1]`` and cross-edge counts ``eta[(t, s)]`` (t < s)."""

    theta: tuple[int, ...]
    eta: dict[tuple[int, int], int]

    @property
    def num_colors(self) -> int:
        return len(self.theta)

    def eta_matrix(self) -> list[list[int]]:
        """Upper-triangular ``k x k`` matrix, 0-based: ``[t-1][s-1]``."""
        k = self.num_colors
        out = [[0] * k for _ in range(k)]
        for (t, s), count in self.eta.items():
            out[t - 1][s - 1] = count
        return out

    def nonzero_eta(self) -> dict[tuple[int, int], int]:
        return {pair: c for pair, c in sorted(self.eta.items()) if c}

    def relabelled(self, perm: Sequence[int]) -> "ColorProfile":
        """Profile after relabelling colour ``s`` as ``perm[s - 1]``."""
        theta = [0] * self.num_colors
        for s, count in enumerate(self.theta, start=1):
            theta[perm[s - 1] - 1] = count
        eta: dict[tuple[int, int], int] = {}
        for (t, s), count in self.eta.items():
            a, b = sorted((perm[t - 1], perm[s - 1]))
            eta[(a, b)] = eta.get((a, b), 0) + count
        return ColorProfile(tuple(theta), eta)


def profile(g: Graph, c: Coloring) -> ColorProfile:
    require_proper(g, c)
    eta: dict[tuple[int, int], int] = {}
    for a, b in g.edges:
        pair = tuple(sorted((c.zeta[a], c.zeta[b])))
        eta[pair] = eta.get(pair, 0) + 1
    return ColorProfile(c.strengths(), dict(sorted(eta.items())))


def m1(p: ColorProfile) -> int:
    return sum(count * j * j for j, count in enumerate(p.theta, start=1))


def m1_vertex_sum(c: Coloring) -> int:
    return sum(z * z for z in c.zeta)


def m2(g: Graph, c: Coloring) -> int:
    require_proper(g, c)
    z = c.zeta
    return sum(z[a] * z[b] for a, b in g.edges)


def m3(g: Graph, c: Coloring) -> int:
    require_proper(g, c)
    z = c.zeta
    return sum(abs(z[a] - z[b]) for a, b in g.edges)


def m2_from_profile(p: ColorProfile) -> int:
    return sum(t * s * count for (t, s), count in p.eta.items())


def m3_from_profile(p: ColorProfile) -> int:
    return sum((s - t) * count for (t, s), count in p.eta.items())


def m4_standard_from_strengths(theta: Sequence[int]) -> int:
    """Sum of colour gaps over unordered vertex pairs."""
    k = len(theta)
    return sum(theta[t] * theta[s] * (s - t) for t in range(k) for s in range(t + 1, k))


def m4(p: ColorProfile, convention: str = "paper") -> Fraction:
    """Total irregularity.  ``standard`` sums colour gaps over unordered
    vertex pairs; ``paper`` is half of that."""
    std = m4_standard_from_strengths(p.theta)
    if convention == "standard":
        return Fraction(std)
    if convention == "paper":
        return Fraction(std, 2)
    raise ValueError(f"unknown m4 convention {convention!r}; expected one of {M4_CONVENTIONS}")


@dataclass(frozen=True)
class IndexBundle:
    m1: int
    m2: int
    m3: int
    m4_std: int
    m4_paper: Fraction

    def value(self, index: str) -> Fraction:
        """Index value by name; ``m4`` means the halved convention."""
        if index == "m4":
            return self.m4_paper
        return Fraction(getattr(self, index))

    def to_json_dict(self) -> dict:
        return {
            "m1": self.m1,
            "m2": self.m2,
            "m3": self.m3,
            "m4_std": self.m4_std,
            "m4_paper": {"num": self.m4_paper.numerator, "den": self.m4_paper.denominator},
        }


def bundle(g: Graph, c: Coloring) -> IndexBundle:
    p = profile(g, c)
    first = m1(p)
    if first != m1_vertex_sum(c):
        raise AssertionError("m1 per-class and per-vertex sums disagree")
    second, third = m2_from_profile(p), m3_from_profile(p)
    std = m4_standard_from_strengths(p.theta)
    return IndexBundle(first, second, third, std, Fraction(std, 2))


def index_value(g: Graph, c: Coloring, index: str) -> Fraction:
    """One index by name: m1, m2, m3, m4 / m4_paper, or m4_std."""
    if index == "m1":
        return Fraction(m1_vertex_sum(c))
    if index == "m2":
        return Fraction(m2(g, c))
    if index == "m3":
        return Fraction(m3(g, c))
    if index in ("m4", "m4_paper"):
        return Fraction(m4_standard_from_strengths(c.strengths()), 2)
    if index == "m4_std":
        return Fraction(m4_standard_from_strengths(c.strengths()))
    raise ValueError(f"unknown index {index!r}")
