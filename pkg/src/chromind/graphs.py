"""Cycle-derived graph families with a fixed vertex layout.

Every family is built on an n-cycle ``u_1 .. u_n``.  Vertex ids follow one
canonical layout so that colourings and reports are reproducible:

* rim vertices ``u_1 .. u_n`` take ids ``0 .. n-1``;
* outer / pendant vertices ``v_1 .. v_n`` (when the family has them) take
  ids ``n .. 2n-1``;
* the hub (when present) is the last vertex.

For the triangle families (sunflower, closed sunflower, blossom) the outer
vertex ``v_i`` sits on the rim edge ``u_i u_{i+1}`` (indices mod n).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Iterable, Sequence


class GraphError(ValueError):
    """Raised for invalid family parameters or out-of-range vertices."""


class Role(str, Enum):
    HUB = "hub"
    RIM = "rim"
    OUTER = "outer"
    PLAIN = "plain"


class Family(str, Enum):
    CYCLE = "cycle"
    WHEEL = "wheel"
    HELM = "helm"
    FLOWER = "flower"
    SUNFLOWER = "sunflower"
    CLOSED_SUNFLOWER = "closed_sunflower"
    BLOSSOM = "blossom"


FAMILY_NAMES = tuple(f.value for f in Family)


@dataclass(frozen=True)
class FamilySpec:
    family: Family
    n: int

    def __post_init__(self):
        object.__setattr__(self, "family", Family(self.family))
        if isinstance(self.n, bool) or not isinstance(self.n, int):
            raise GraphError(f"n must be an integer, got {self.n!r}")
        if self.n < 3:
            raise GraphError(f"{self.family.value} needs n >= 3, got {self.n}")


@dataclass(frozen=True, eq=False)
class Graph:
    """Immutable simple undirected graph with role-tagged vertices."""

    vertex_count: int
    adjacency: tuple[tuple[int, ...], ...]
    roles: tuple[Role, ...]
    labels: tuple[str, ...] = field(default=())
    name: str = ""

    def __post_init__(self):
        if len(self.adjacency) != self.vertex_count or len(self.roles) != self.vertex_count:
            raise GraphError("adjacency/roles length does not match vertex_count")
        for v, nbrs in enumerate(self.adjacency):
            if v in nbrs:
                raise GraphError(f"self-loop at vertex {v}")
            if len(set(nbrs)) != len(nbrs):
                raise GraphError(f"duplicate edge at vertex {v}")
            for w in nbrs:
                if not 0 <= w < self.vertex_count or v not in self.adjacency[w]:
                    raise GraphError(f"asymmetric adjacency between {v} and {w}")
        if not self.labels:
            object.__setattr__(self, "labels", tuple(str(v) for v in range(self.vertex_count)))

    @classmethod
    def from_edges(cls, vertex_count: int, edges: Iterable[tuple[int, int]],
                   roles: Sequence[Role] | None = None,
                   labels: Sequence[str] | None = None, name: str = "") -> "Graph":
        nbrs: list[set[int]] = [set() for _ in range(vertex_count)]
        for a, b in edges:
            if a == b:
                raise GraphError(f"self-loop at vertex {a}")
            if not (0 <= a < vertex_count and 0 <= b < vertex_count):
                raise GraphError(f"edge ({a}, {b}) out of range")
            nbrs[a].add(b)
            nbrs[b].add(a)
        return cls(
            vertex_count=vertex_count,
            adjacency=tuple(tuple(sorted(s)) for s in nbrs),
            roles=tuple(roles) if roles is not None else (Role.PLAIN,) * vertex_count,
            labels=tuple(labels) if labels is not None else (),
            name=name,
        )

    # -- queries -------------------------------------------------------

    def _check(self, v: int) -> None:
        if isinstance(v, bool) or not isinstance(v, int) or not 0 <= v < self.vertex_count:
            raise GraphError(f"vertex {v!r} out of range 0..{self.vertex_count - 1}")

    def degree(self, v: int) -> int:
        self._check(v)
        return len(self.adjacency[v])

    def neighbours(self, v: int) -> tuple[int, ...]:
        self._check(v)
        return self.adjacency[v]

    def has_edge(self, a: int, b: int) -> bool:
        self._check(a)
        self._check(b)
        return b in self.adjacency[a]

    @cached_property
    def edges(self) -> tuple[tuple[int, int], ...]:
        """Each edge once as ``(a, b)`` with ``a < b``, lexicographically sorted."""
        return tuple((a, b) for a in range(self.vertex_count) for b in self.adjacency[a] if a < b)

    def edge_list(self) -> list[tuple[int, int]]:
        return list(self.edges)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def masks(self) -> tuple[int, ...]:
        """Neighbourhood of each vertex as an int bitmask."""
        return tuple(sum(1 << w for w in nbrs) for nbrs in self.adjacency)

    def is_independent(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        for v in vs:
            self._check(v)
        chosen = set(vs)
        return not any(w in chosen for v in chosen for w in self.adjacency[v])

    def is_connected(self) -> bool:
        if self.vertex_count == 0:
            return True
        seen = {0}
        queue = deque([0])
        while queue:
            v = queue.popleft()
            for w in self.adjacency[v]:
                if w not in seen:
                    seen.add(w)
                    queue.append(w)
        return len(seen) == self.vertex_count

    def vertices_with_role(self, role: Role) -> list[int]:
        return [v for v, r in enumerate(self.roles) if r is role]

    @property
    def hub(self) -> int | None:
        hubs = self.vertices_with_role(Role.HUB)
        return hubs[0] if hubs else None

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed ``perm[v]``."""
        if sorted(perm) != list(range(self.vertex_count)):
            raise GraphError("relabel needs a permutation of the vertex ids")
        roles = [Role.PLAIN] * self.vertex_count
        labels = [""] * self.vertex_count
        for v in range(self.vertex_count):
            roles[perm[v]] = self.roles[v]
            labels[perm[v]] = self.labels[v]
        return Graph.from_edges(self.vertex_count, ((perm[a], perm[b]) for a, b in self.edges),
                                roles=roles, labels=labels, name=self.name)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return (self.vertex_count, self.adjacency, self.roles) == (
            other.vertex_count, other.adjacency, other.roles)

    def __hash__(self):
        return hash((self.vertex_count, self.adjacency, self.roles))

    def __repr__(self):
        return f"Graph({self.name or '?'}: {self.vertex_count} vertices, {self.edge_count} edges)"

    # -- export --------------------------------------------------------

    def to_dot(self) -> str:
        lines = [f"graph {_dot_id(self.name or 'G')} {{"]
        for v in range(self.vertex_count):
            lines.append(f'  {v} [label="{self.labels[v]}"];')
        for a, b in self.edges:
            lines.append(f"  {a} -- {b};")
        lines.append("}")
        return "\n".join(lines) + "\n"

    def to_json_dict(self) -> dict:
        return {
            "name": self.name,
            "vertex_count": self.vertex_count,
            "labels": list(self.labels),
            "roles": [r.value for r in self.roles],
            "adjacency": [list(nbrs) for nbrs in self.adjacency],
            "edges": [list(e) for e in self.edges],
        }


def _dot_id(name: str) -> str:
    return name if name.replace("_", "").isalnum() else f'"{name}"'


def build(spec: FamilySpec | Family | str, n: int | None = None) -> Graph:
    """Build a family graph, e.g. ``build("flower", 4)`` or ``build(FamilySpec(...))``."""
    if not isinstance(spec, FamilySpec):
        if n is None:
            raise GraphError("n is required")
        try:
            spec = FamilySpec(Family(spec), n)
        except ValueError as exc:
            if isinstance(exc, GraphError):
                raise
            raise GraphError(f"unknown family {spec!r}; expected one of {', '.join(FAMILY_NAMES)}") from None
    fam, n = spec.family, spec.n

    rim = list(range(n))
    edges = [(i, (i + 1) % n) for i in range(n)]
    roles = [Role.RIM] * n
    labels = [f"u{i + 1}" for i in range(n)]
    if fam is Family.CYCLE:
        return Graph.from_edges(n, edges, [Role.PLAIN] * n, labels, name=f"cycle_{n}")

    has_outer = fam is not Family.WHEEL
    outer = list(range(n, 2 * n)) if has_outer else []
    hub = 2 * n if has_outer else n
    vertex_count = hub + 1
    if has_outer:
        roles += [Role.OUTER] * n
        labels += [f"v{i + 1}" for i in range(n)]
    roles.append(Role.HUB)
    labels.append("hub")

    edges += [(u, hub) for u in rim]
    if fam in (Family.HELM, Family.FLOWER):
        edges += [(rim[i], outer[i]) for i in range(n)]
    if fam is Family.FLOWER:
        edges += [(v, hub) for v in outer]
    if fam in (Family.SUNFLOWER, Family.CLOSED_SUNFLOWER, Family.BLOSSOM):
        for i in range(n):
            edges += [(outer[i], rim[i]), (outer[i], rim[(i + 1) % n])]
    if fam in (Family.CLOSED_SUNFLOWER, Family.BLOSSOM):
        edges += [(outer[i], outer[(i + 1) % n]) for i in range(n)]
    if fam is Family.BLOSSOM:
        edges += [(v, hub) for v in outer]

    return Graph.from_edges(vertex_count, edges, roles, labels, name=f"{fam.value}_{n}")
