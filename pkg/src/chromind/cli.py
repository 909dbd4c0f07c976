"""Command-line front end.

Exit codes: 0 ok, 1 runtime error, 2 usage error, 3 search budget exceeded.
Mismatching claims are findings, so ``verify`` exits 0 whenever the report
was written.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import claims as claims_mod
from ._search import BudgetExceeded
from .coloring import Coloring, ColoringError, chromatic_number, phi_minus, phi_plus, validate
from .graphs import FAMILY_NAMES, FamilySpec, GraphError, build
from .indices import bundle, profile
from .oracle import GOALS, ORACLE_INDICES, extrema
from .witnesses import INDICES, NoWitness, witness

EXIT_OK, EXIT_RUNTIME, EXIT_USAGE, EXIT_BUDGET = 0, 1, 2, 3
PRESETS = {"desk": claims_mod.DESK_N}


class UsageError(Exception):
    pass


def _dump(doc) -> str:
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _frac(x):
    return {"num": x.numerator, "den": x.denominator}


def parse_n_range(text: str) -> list[int]:
    """``4..8``, ``4,6,7`` or ``5``."""
    out: set[int] = set()
    try:
        for part in text.split(","):
            part = part.strip()
            if ".." in part:
                lo, hi = (int(x) for x in part.split("..", 1))
                if lo > hi:
                    raise UsageError(f"empty range {part!r}")
                out.update(range(lo, hi + 1))
            else:
                out.add(int(part))
    except ValueError:
        raise UsageError(f"bad n range {text!r}; use e.g. 4..8 or 4,6") from None
    return sorted(out)


def _spec(args) -> FamilySpec:
    try:
        return FamilySpec(args.family, args.n)
    except GraphError as exc:
        raise UsageError(str(exc)) from None


def cmd_gen(args) -> int:
    g = build(_spec(args))
    sys.stdout.write(g.to_dot() if args.emit == "dot" else _dump(g.to_json_dict()))
    return EXIT_OK


def cmd_indices(args) -> int:
    spec = _spec(args)
    g = build(spec)
    if args.coloring is not None:
        try:
            c = Coloring.from_json(args.coloring)
        except (ValueError, ColoringError) as exc:
            raise UsageError(f"bad --coloring: {exc}") from None
        source = "given"
    elif args.witness is not None:
        c = witness(spec, args.variant, args.witness)
        source = f"witness:{args.witness}"
    else:
        k = chromatic_number(g)
        c = (phi_minus if args.variant == "minus" else phi_plus)(g, k)
        source = f"phi_{args.variant}"
    if len(c) != g.vertex_count:
        raise ColoringError(f"colouring has {len(c)} entries, graph has {g.vertex_count} vertices")
    bad = validate(g, c)
    if bad:
        raise ColoringError("colouring is not proper", bad)
    p = profile(g, c)
    doc = {
        "family": spec.family.value,
        "n": spec.n,
        "variant": args.variant,
        "source": source,
        "coloring": list(c.zeta),
        "theta": list(p.theta),
        "eta": {f"{t},{s}": v for (t, s), v in sorted(p.nonzero_eta().items())},
        "indices": bundle(g, c).to_json_dict(),
    }
    sys.stdout.write(_dump(doc))
    return EXIT_OK


def cmd_oracle(args) -> int:
    spec = _spec(args)
    g = build(spec)
    k = args.k if args.k is not None else chromatic_number(g)
    value, c = extrema(g, k, args.index, args.goal)
    doc = {
        "family": spec.family.value,
        "n": spec.n,
        "k": k,
        "index": args.index,
        "goal": args.goal,
        "value": _frac(value),
        "witness": list(c.zeta),
    }
    sys.stdout.write(_dump(doc))
    return EXIT_OK


def cmd_verify(args) -> int:
    theorems = None
    if args.theorems != "all":
        theorems = [t.strip() for t in args.theorems.split(",") if t.strip()]
    if (args.n is None) == (args.preset is None):
        raise UsageError("give exactly one of --n and --preset")
    n_values = PRESETS[args.preset] if args.preset else parse_n_range(args.n)
    families = args.families.split(",") if args.families else None
    try:
        selected = claims_mod.select(theorems, families)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    results = claims_mod.verify(selected, n_values, args.semantics)
    if not results:
        raise UsageError("no claim applies to the requested n values")
    text = claims_mod.report_text(results)
    if args.out:
        out = Path(args.out)
        try:
            out.mkdir(parents=True, exist_ok=True)
            (out / "report.json").write_text(claims_mod.report_json(results), encoding="utf-8")
            (out / "report.txt").write_text(text, encoding="utf-8")
        except OSError as exc:
            print(f"error: cannot write report: {exc}", file=sys.stderr)
            return EXIT_RUNTIME
    if args.json:
        sys.stdout.write(claims_mod.report_json(results))
    else:
        sys.stdout.write(text)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    theorem_list = ", ".join(claims_mod.theorem_ids())
    parser = argparse.ArgumentParser(
        prog="chromind",
        description="Chromatic Zagreb and irregularity indices of cycle-derived graphs.",
        epilog=f"families: {', '.join(FAMILY_NAMES)}\ntheorem ids: {theorem_list}\n"
               "exit codes: 0 ok, 1 runtime error, 2 usage, 3 budget exceeded",
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_args(p):
        p.add_argument("--family", required=True, choices=FAMILY_NAMES)
        p.add_argument("--n", required=True, type=int)

    p = sub.add_parser("gen", help="emit a graph as DOT or JSON")
    graph_args(p)
    p.add_argument("--emit", choices=("dot", "json"), default="json")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("indices", help="colour a graph and print its indices")
    graph_args(p)
    p.add_argument("--variant", choices=("minus", "plus"), default="minus")
    src = p.add_mutually_exclusive_group()
    src.add_argument("--witness", choices=INDICES, metavar="INDEX",
                     help="use the explicit construction for this index")
    src.add_argument("--coloring", metavar="JSON", help="colour list, e.g. '[1,2,1,2]'")
    p.set_defaults(func=cmd_indices)

    p = sub.add_parser("oracle", help="exact extremum over all proper colourings")
    graph_args(p)
    p.add_argument("--index", required=True, choices=ORACLE_INDICES + ("m4",))
    p.add_argument("--goal", required=True, choices=GOALS)
    p.add_argument("--k", type=int, help="number of colours (default: chromatic number)")
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("verify", help="check theorem claims and write a report",
                       epilog=f"theorem ids: {theorem_list}")
    p.add_argument("--theorems", default="all", help=f"comma list of ids or 'all' ({theorem_list})")
    p.add_argument("--families", help="comma list restricting the families checked")
    p.add_argument("--n", help="n values, e.g. 4..8 or 4,6")
    p.add_argument("--preset", choices=sorted(PRESETS))
    p.add_argument("--semantics", choices=claims_mod.SEMANTICS, default="oracle")
    p.add_argument("--out", help="directory for report.json and report.txt")
    p.add_argument("--json", action="store_true", help="print the JSON report instead of the table")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"chromind: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExceeded as exc:
        print(f"chromind: budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except NoWitness as exc:
        print(f"chromind: {exc}", file=sys.stderr)
        return EXIT_RUNTIME
    except ColoringError as exc:
        print(f"chromind: {exc}", file=sys.stderr)
        for a, b in getattr(exc, "violations", ()):
            print(f"  edge {a}-{b}", file=sys.stderr)
        return EXIT_RUNTIME


if __name__ == "__main__":
    sys.exit(main())
