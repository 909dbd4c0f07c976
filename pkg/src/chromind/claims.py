"""Closed-form index claims and the harness that checks them.

Each claim is a rational polynomial in ``n`` valid on one residue class.  A
claim is compared at each ``n`` against the explicit witness colouring, the
phi-engine colouring, the exhaustive oracle and the fixed-partition
permutation optimum.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from importlib import resources
from typing import Iterable, Mapping, Sequence

from . import _expr
from ._search import BudgetExceeded
from .coloring import Coloring, chromatic_number, phi_minus, phi_plus
from .graphs import Family, FamilySpec, build
from .indices import index_value, profile
from .oracle import extrema, permutation_extrema
from .witnesses import NoWitness, witness

N_MIN = 4
SEMANTICS = ("oracle", "permutation", "witness")
VERDICTS = ("MATCH", "MISMATCH", "NONINTEGER", "NO_WITNESS", "SKIPPED")
ALLOWED_DENOMINATORS = (1, 2, 3, 8, 18)
INTEGER_INDICES = ("m1", "m2", "m3")
LABEL_TYPO = "label-typo"

# acceptance-scale n values per family
DESK_N = {
    Family.FLOWER: (4, 5, 6, 7),
    Family.SUNFLOWER: (4, 5, 6, 7),
    Family.CLOSED_SUNFLOWER: (6, 7, 8),
    Family.BLOSSOM: (4, 5),
}


class ClaimsError(ValueError):
    pass


@dataclass(frozen=True)
class Claim:
    family: Family
    variant: str
    index: str
    condition: str
    coeffs: tuple[int, int, int]
    denominator: int
    source: str
    display: str
    note: str = ""

    @property
    def theorem(self) -> str:
        return self.source.split("(", 1)[0]

    @property
    def part(self) -> str:
        return self.source[len(self.theorem):].split("@", 1)[0]

    @property
    def reading(self) -> str:
        return self.source.split("@", 1)[1] if "@" in self.source else "statement"

    @property
    def case(self) -> str:
        tag = "" if self.reading == "statement" else f"@{self.reading}"
        return f"{self.part}{tag} {self.condition}"

    @property
    def goal(self) -> str:
        return "min" if self.variant == "minus" else "max"

    def applies(self, n: int) -> bool:
        return n >= 3 and _expr.holds(self.condition, n)

    def evaluate(self, n: int) -> Fraction:
        if not self.applies(n):
            raise ClaimsError(f"claim {self.source} ({self.condition}) does not apply at n={n}")
        c0, c1, c2 = self.coeffs
        return Fraction(c0 + c1 * n + c2 * n * n, self.denominator)

    def formula(self) -> str:
        """Canonical typeset form: expanded numerator over the denominator."""
        num = _format_poly(self.coeffs)
        return num if self.denominator == 1 else rf"\frac{{{num}}}{{{self.denominator}}}"


def _format_poly(coeffs: Sequence[int]) -> str:
    terms = []
    for power in (2, 1, 0):
        c = coeffs[power]
        if c == 0:
            continue
        var = {2: "n^2", 1: "n", 0: ""}[power]
        mag = str(abs(c)) if (abs(c) != 1 or power == 0) else ""
        sign = "-" if c < 0 else ("+" if terms else "")
        terms.append(f"{sign}{mag}{var}")
    return "".join(terms) or "0"


def display_value(display: str, n: int) -> Fraction:
    """Evaluate a typeset expression such as ``\\frac{25(n-1)}{2}`` at ``n``."""
    text = display.replace(" ", "")
    while r"\frac{" in text:
        text = re.sub(r"\\frac\{([^{}]*)\}\{([^{}]*)\}", r"((\1)/(\2))", text)
    text = text.replace("^", "**")
    text = re.sub(r"(\d)(n|\()", r"\1*\2", text)
    text = re.sub(r"\)(n|\(|\d)", r")*\1", text)
    return _expr.evaluate(text, n)


@dataclass
class ClaimResult:
    claim: Claim
    n: int
    semantics: str
    claimed: Fraction
    k: int | None = None
    witness_value: Fraction | None = None
    phi_engine_value: Fraction | None = None
    oracle_value: Fraction | None = None
    perm_value: Fraction | None = None
    phi_class_value: Fraction | None = None
    oracle_m4_std: Fraction | None = None
    literal_value: Fraction | None = None
    oracle_coloring: Coloring | None = None
    witness_coloring: Coloring | None = None
    notes: list[str] = field(default_factory=list)
    verdict: str = ""

    def to_json_dict(self) -> dict:
        c = self.claim
        return {
            "theorem": c.theorem,
            "case": c.case,
            "family": c.family.value,
            "variant": c.variant,
            "index": c.index,
            "n": self.n,
            "k": self.k,
            "semantics": self.semantics,
            "formula": c.display,
            "claimed": _frac(self.claimed),
            "witness": _frac(self.witness_value),
            "phi_engine": _frac(self.phi_engine_value),
            "oracle": _frac(self.oracle_value),
            "permutation": _frac(self.perm_value),
            "phi_class": _frac(self.phi_class_value),
            "oracle_m4_std": _frac(self.oracle_m4_std),
            "literal_minus": _frac(self.literal_value),
            "verdict": self.verdict,
            "oracle_coloring": list(self.oracle_coloring.zeta) if self.oracle_coloring else None,
            "witness_coloring": list(self.witness_coloring.zeta) if self.witness_coloring else None,
            "notes": list(self.notes),
        }


def _frac(x: Fraction | None):
    if x is None:
        return None
    return {"num": x.numerator, "den": x.denominator}


# -- data file ----------------------------------------------------------------

def parse_claims(text: str) -> list[Claim]:
    claims, errors = [], []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields_ = [f.strip() for f in line.split("|")]
        if len(fields_) not in (2, 3):
            errors.append(f"line {lineno}: expected 'record | display [| note]'")
            continue
        head = fields_[0].split()
        if len(head) != 9:
            errors.append(f"line {lineno}: expected 9 leading fields, got {len(head)}")
            continue
        fam, variant, index, cond, c0, c1, c2, den, source = head
        try:
            family = Family(fam)
            coeffs = (int(c0), int(c1), int(c2))
            denom = int(den)
        except ValueError as exc:
            errors.append(f"line {lineno}: {exc}")
            continue
        problems = []
        if variant not in ("minus", "plus"):
            problems.append(f"variant {variant!r}")
        if index not in ("m1", "m2", "m3", "m4"):
            problems.append(f"index {index!r}")
        if cond not in _expr.CONDITIONS:
            problems.append(f"condition {cond!r}")
        if denom not in ALLOWED_DENOMINATORS:
            problems.append(f"denominator {denom}")
        if not re.fullmatch(r"\d+\.\d+\([ivx]+\)(@\w+)?", source):
            problems.append(f"source {source!r}")
        if problems:
            errors.append(f"line {lineno}: bad " + ", ".join(problems))
            continue
        claims.append(Claim(family, variant, index, cond, coeffs, denom, source,
                            fields_[1], fields_[2] if len(fields_) == 3 else ""))
    if errors:
        raise ClaimsError("malformed claims data:\n" + "\n".join(errors))
    return claims


@lru_cache(maxsize=None)
def builtin_claims() -> tuple[Claim, ...]:
    text = resources.files("chromind.data").joinpath("claims.txt").read_text(encoding="utf-8")
    return tuple(parse_claims(text))


def theorem_ids(claims: Iterable[Claim] | None = None) -> list[str]:
    seen: list[str] = []
    for c in claims if claims is not None else builtin_claims():
        if c.theorem not in seen:
            seen.append(c.theorem)
    return seen


def select(theorems: Sequence[str] | None = None,
           families: Sequence[Family | str] | None = None) -> list[Claim]:
    claims = list(builtin_claims())
    if theorems is not None:
        unknown = set(theorems) - set(theorem_ids(claims))
        if unknown:
            raise ClaimsError(f"unknown theorem id(s): {', '.join(sorted(unknown))}")
        claims = [c for c in claims if c.theorem in theorems]
    if families is not None:
        wanted = {Family(f) for f in families}
        claims = [c for c in claims if c.family in wanted]
    if not claims:
        raise ClaimsError("no claims selected")
    return claims


# -- verdicts -----------------------------------------------------------------

def assign_verdict(index: str, claimed: Fraction, semantics: str,
                   reference: Fraction | None, oracle: Fraction | None,
                   witness_value: Fraction | None) -> str:
    """MATCH needs the claim to equal the semantics' reference value and
    every other available value among oracle and witness."""
    if index in INTEGER_INDICES and claimed.denominator != 1:
        return "NONINTEGER"
    if reference is None:
        return "NO_WITNESS" if semantics == "witness" else "SKIPPED"
    values = [reference] + [x for x in (oracle, witness_value) if x is not None]
    return "MATCH" if all(v == claimed for v in values) else "MISMATCH"


# -- harness ------------------------------------------------------------------

class _Cell:
    """Per-(family, n) computations shared by all claims on that graph."""

    def __init__(self, family: Family, n: int):
        self.spec = FamilySpec(family, n)
        self.graph = build(self.spec)
        self._k: int | None = None
        self._engine: dict[str, Coloring] = {}
        self._oracle: dict[tuple, tuple[Fraction, Coloring]] = {}

    @property
    def k(self) -> int:
        if self._k is None:
            self._k = chromatic_number(self.graph)
        return self._k

    def engine(self, variant: str) -> Coloring:
        if variant not in self._engine:
            fn = phi_minus if variant == "minus" else phi_plus
            self._engine[variant] = fn(self.graph, self.k)
        return self._engine[variant]

    def oracle(self, index: str, goal: str, strengths=None) -> tuple[Fraction, Coloring]:
        key = (index, goal, strengths)
        if key not in self._oracle:
            self._oracle[key] = extrema(self.graph, self.k, index, goal, strengths=strengths)
        return self._oracle[key]


def _value(g, c: Coloring, index: str) -> Fraction:
    return index_value(g, c, "m4_paper" if index == "m4" else index)


def verify(claims: Sequence[Claim] | None = None,
           n_values: Iterable[int] | Mapping[Family, Iterable[int]] | None = None,
           semantics: str = "oracle") -> list[ClaimResult]:
    """Check every applicable (claim, n) cell; rows come back in claim order
    then ascending n."""
    if semantics not in SEMANTICS:
        raise ClaimsError(f"semantics must be one of {SEMANTICS}, got {semantics!r}")
    claims = list(claims) if claims is not None else list(builtin_claims())
    if not claims:
        raise ClaimsError("no claims to verify")
    if n_values is None:
        n_values = DESK_N
    cells: dict[tuple[Family, int], _Cell] = {}
    results = []
    for claim in claims:
        if isinstance(n_values, Mapping):
            ns = n_values.get(claim.family, ())
        else:
            ns = n_values
        for n in sorted(set(ns)):
            if n < N_MIN or not claim.applies(n):
                continue
            key = (claim.family, n)
            if key not in cells:
                cells[key] = _Cell(claim.family, n)
            results.append(_check(claim, cells[key], semantics))
    return results


def _check(claim: Claim, cell: _Cell, semantics: str) -> ClaimResult:
    n = cell.spec.n
    g = cell.graph
    res = ClaimResult(claim, n, semantics, claim.evaluate(n))
    try:
        res.witness_coloring = witness(cell.spec, claim.variant, claim.index)
        res.witness_value = _value(g, res.witness_coloring, claim.index)
    except NoWitness as exc:
        res.notes.append(str(exc))
    try:
        res.k = cell.k
        engine = cell.engine(claim.variant)
        res.phi_engine_value = _value(g, engine, claim.index)
        res.perm_value = permutation_extrema(profile(g, engine), claim.index, claim.goal)[0]
        res.phi_class_value = cell.oracle(claim.index, claim.goal, engine.strengths())[0]
        res.oracle_value, res.oracle_coloring = cell.oracle(claim.index, claim.goal)
        if claim.index == "m4":
            res.oracle_m4_std = cell.oracle("m4_std", claim.goal)[0]
        if claim.note == LABEL_TYPO:
            res.literal_value = cell.oracle(claim.index, "min")[0]
    except BudgetExceeded as exc:
        res.notes.append(f"skipped: {exc}")
    reference = {
        "oracle": res.oracle_value,
        "permutation": res.perm_value,
        "witness": res.witness_value,
    }[semantics]
    res.verdict = assign_verdict(claim.index, res.claimed, semantics, reference,
                                 res.oracle_value, res.witness_value)
    return res


# -- reports ------------------------------------------------------------------

def summary(results: Sequence[ClaimResult]) -> dict[str, dict[str, int]]:
    out: dict[str, dict[str, int]] = {}
    for r in results:
        counts = out.setdefault(r.claim.theorem, {v: 0 for v in VERDICTS})
        counts[r.verdict] += 1
    return out


def report_json(results: Sequence[ClaimResult]) -> str:
    if not results:
        raise ClaimsError("empty result set")
    doc = {
        "semantics": sorted({r.semantics for r in results}),
        "summary": summary(results),
        "rows": [r.to_json_dict() for r in results],
    }
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _fmt(x: Fraction | None) -> str:
    if x is None:
        return "-"
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def report_text(results: Sequence[ClaimResult]) -> str:
    if not results:
        raise ClaimsError("empty result set")
    header = ("case", "idx", "n", "k", "claimed", "witness", "phi", "perm", "phi-cls", "oracle", "verdict")
    lines = []
    by_thm: dict[str, list[ClaimResult]] = {}
    for r in results:
        by_thm.setdefault(r.claim.theorem, []).append(r)
    for thm, rows in by_thm.items():
        fam = rows[0].claim.family.value
        lines.append(f"Theorem {thm} ({fam}, {rows[0].claim.variant})")
        table = [header] + [(
            r.claim.case, r.claim.index, str(r.n), str(r.k) if r.k else "-", _fmt(r.claimed),
            _fmt(r.witness_value), _fmt(r.phi_engine_value), _fmt(r.perm_value),
            _fmt(r.phi_class_value), _fmt(r.oracle_value), r.verdict) for r in rows]
        widths = [max(len(row[i]) for row in table) for i in range(len(header))]
        for row in table:
            lines.append("  " + "  ".join(cell.ljust(w) for cell, w in zip(row, widths)).rstrip())
        counts = summary(rows)[thm]
        lines.append("  " + ", ".join(f"{v}={c}" for v, c in counts.items() if c))
        lines.append("")
    mismatches = [r for r in results if r.verdict in ("MISMATCH", "NONINTEGER")]
    if mismatches:
        lines.append("Witnesses for disagreeing rows (oracle-optimal colouring, vertex order)")
        for r in mismatches:
            zeta = " ".join(map(str, r.oracle_coloring.zeta)) if r.oracle_coloring else "-"
            lines.append(f"  {r.claim.source} {r.claim.condition} n={r.n} {r.claim.index}: "
                         f"claimed {_fmt(r.claimed)}, oracle {_fmt(r.oracle_value)}: {zeta}")
        lines.append("")
    totals = {v: sum(1 for r in results if r.verdict == v) for v in VERDICTS}
    lines.append("Total: " + ", ".join(f"{v}={c}" for v, c in totals.items()))
    return "\n".join(lines) + "\n"
