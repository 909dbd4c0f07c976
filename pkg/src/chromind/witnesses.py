"""Explicit colourings for the four flower-type families, together with the
class strengths and cross-edge counts stated for them.

Constructions are written against the canonical layout of
:mod:`chromind.graphs`.  Where the original constructions index the outer
vertices from the other side of their rim edge, the classes here are shifted
so that the resulting strengths and edge counts are the stated ones.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from importlib import resources

from . import _expr
from .coloring import Coloring, ColoringError
from .graphs import Family, FamilySpec

WITNESS_FAMILIES = (Family.FLOWER, Family.SUNFLOWER, Family.CLOSED_SUNFLOWER, Family.BLOSSOM)
VARIANTS = ("minus", "plus")
INDICES = ("m1", "m2", "m3", "m4")
MIN_N = 4


class NoWitness(ColoringError):
    """No construction is defined for the requested combination."""


def residue_modulus(family: Family) -> int:
    return 3 if Family(family) is Family.CLOSED_SUNFLOWER else 2


def _layout(n: int):
    def u(i: int) -> int:  # rim u_i, 1-based, wraps mod n
        return (i - 1) % n

    def v(i: int) -> int:
        return n + (i - 1) % n

    return u, v, 2 * n


def _flower_minus(n: int) -> list[int]:
    u, v, hub = _layout(n)
    z = [0] * (2 * n + 1)
    z[hub] = 3
    if n % 2 == 0:
        for i in range(1, n + 1):
            z[v(i)] = 1 if i % 2 else 2
            z[u(i)] = 2 if i % 2 else 1
    else:
        for i in range(1, n):
            z[v(i)] = 1 if i % 2 else 2
            z[u(i)] = 2 if i % 2 else 1
        z[v(n)] = 1
        z[u(n)] = 4
    return z


def _sunflower_minus(n: int) -> list[int]:
    u, v, hub = _layout(n)
    z = [0] * (2 * n + 1)
    z[hub] = 1
    for i in range(1, n + 1):
        z[v(i)] = 1
        z[u(i)] = 2 if i % 2 else 3
    if n % 2:
        z[u(n)] = 4
    return z


def _closed_sunflower_minus(n: int) -> list[int]:
    # colour along the square-cycle order u1 v1 u2 v2 ... un vn
    u, v, hub = _layout(n)
    order = [w for i in range(1, n + 1) for w in (u(i), v(i))]
    length = len(order)
    z = [0] * (2 * n + 1)
    r = n % 3
    if r == 0:
        pattern = [p % 3 + 1 for p in range(length)]
        z[hub] = 4
    elif r == 1:
        pattern = [p % 3 + 1 for p in range(length - 6)] + [4, 1, 3, 4, 2, 3]
        z[hub] = 5
    else:
        pattern = [5] + [(1, 3, 2)[(p - 1) % 3] for p in range(1, length)]
        z[hub] = 4
    for w, c in zip(order, pattern):
        z[w] = c
    return z


def _blossom_minus(n: int, index: str) -> list[int]:
    u, v, hub = _layout(n)
    z = [0] * (2 * n + 1)
    z[hub] = 5
    if n % 2 == 0:
        outer, inner = ((1, 4), (2, 3)) if index == "m2" else ((1, 2), (3, 4))
        for i in range(1, n + 1):
            z[v(i)] = outer[(i - 1) % 2]
            z[u(i)] = inner[(i - 1) % 2]
        return z
    # the outer vertex between u_{i-1} and u_i is v(i - 1) here
    def between(i: int) -> int:
        return v(i - 1)

    for i in range(1, n - 1, 2):
        z[between(i)] = 1
        z[u(i)] = 3
    for i in range(2, n, 2):
        z[between(i)] = 2
        if i <= n - 3:
            z[u(i)] = 4
    z[u(n - 1)] = 1
    z[u(n)] = 2
    z[between(n)] = 3
    return z


def witness(spec: FamilySpec, variant: str, index: str) -> Coloring:
    """The explicit colouring used for ``(family, n, variant, index)``.

    The plus colouring is the minus colouring with colour ``s`` relabelled
    ``k + 1 - s``.  Raises :class:`NoWitness` for unsupported combinations.
    """
    family, n = spec.family, spec.n
    if family not in WITNESS_FAMILIES:
        raise NoWitness(f"no witness defined for family {family.value}")
    if variant not in VARIANTS:
        raise NoWitness(f"no witness defined for variant {variant!r}")
    if index not in INDICES:
        raise NoWitness(f"no witness defined for index {index!r}")
    if n < MIN_N:
        raise NoWitness(f"no witness defined for {family.value} with n={n} (need n >= {MIN_N})")
    if family is Family.FLOWER:
        z = _flower_minus(n)
    elif family is Family.SUNFLOWER:
        z = _sunflower_minus(n)
    elif family is Family.CLOSED_SUNFLOWER:
        z = _closed_sunflower_minus(n)
    else:
        z = _blossom_minus(n, index)
    c = Coloring(tuple(z))
    return c.reversed() if variant == "plus" else c


# -- stated tables ------------------------------------------------------------

@dataclass
class StatedTable:
    family: Family
    variant: str
    index: str  # "*" = all indices
    condition: str
    theta: str | None = None
    eta: dict[tuple[int, int], str] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    def applies(self, index: str, n: int) -> bool:
        return self.index in ("*", index) and _expr.holds(self.condition, n)

    def theta_at(self, n: int) -> tuple[int, ...] | None:
        if self.theta is None:
            return None
        return tuple(_as_int(_expr.evaluate(e, n), e, n) for e in self.theta.split(","))

    def eta_at(self, n: int) -> dict[tuple[int, int], int] | None:
        if not self.eta:
            return None
        out = {pair: _as_int(_expr.evaluate(e, n), e, n) for pair, e in self.eta.items()}
        return {pair: val for pair, val in out.items() if val}


def _as_int(x: Fraction, expr: str, n: int) -> int:
    if x.denominator != 1 or x < 0:
        raise ValueError(f"{expr} is not a non-negative integer at n={n}")
    return int(x)


@lru_cache(maxsize=None)
def stated_tables() -> tuple[StatedTable, ...]:
    text = resources.files("chromind.data").joinpath("witness_tables.txt").read_text()
    return tuple(parse_tables(text))


def parse_tables(text: str) -> list[StatedTable]:
    tables: dict[tuple, StatedTable] = {}
    pending_notes: list[str] = []
    errors = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line:
            pending_notes = []
            continue
        if line.startswith("#"):
            pending_notes.append(line.lstrip("# "))
            continue
        parts = line.split()
        if len(parts) != 6:
            errors.append(f"line {lineno}: expected 6 fields, got {len(parts)}")
            continue
        fam, variant, index, cond, quantity, expr = parts
        try:
            key = (Family(fam), variant, index, cond)
            if variant not in VARIANTS or (index != "*" and index not in INDICES):
                raise ValueError("bad variant/index")
            if cond not in _expr.CONDITIONS:
                raise ValueError(f"bad condition {cond}")
        except ValueError as exc:
            errors.append(f"line {lineno}: {exc}")
            continue
        table = tables.setdefault(key, StatedTable(*key))
        if quantity == "theta":
            table.theta = expr
        elif quantity.startswith("eta") and len(quantity) == 5 and quantity[3:].isdigit():
            t, s = int(quantity[3]), int(quantity[4])
            if not t < s:
                errors.append(f"line {lineno}: eta pair must have t < s")
                continue
            table.eta[(t, s)] = expr
        else:
            errors.append(f"line {lineno}: unknown quantity {quantity!r}")
            continue
        table.notes.extend(pending_notes)
        pending_notes = []
    if errors:
        raise ValueError("malformed witness table data:\n" + "\n".join(errors))
    return list(tables.values())


def stated_for(spec: FamilySpec, variant: str, index: str) -> StatedTable | None:
    """The stated table for this witness, preferring an index-specific one."""
    hits = [t for t in stated_tables()
            if t.family is spec.family and t.variant == variant and t.applies(index, spec.n)]
    hits.sort(key=lambda t: t.index == "*")
    return hits[0] if hits else None
