"""Command-line interface.

Subcommands: parse, bounds, construct, pi1, simplify, verify,
homology-check, export.  Exit codes: 0 success, 1 input error,
2 refuted isomorphism evidence, 3 budget exhausted.

Reports are deterministic: identical requests produce byte-identical
output (no timestamps).  A "consistent" verdict never claims a proof;
every JSON report of the construct pipeline carries ``"proof": false``.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import bounds as B
from . import loops as L
from . import monodromy as M
from . import presentations as P
from .finite_groups import get_target
from .pi1 import WitnessError

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_REFUTED = 2
EXIT_BUDGET = 3


class CliError(Exception):
    def __init__(self, message: str, code: int = EXIT_INPUT):
        super().__init__(message)
        self.code = code


def _read_presentation(args) -> P.GroupPresentation:
    if getattr(args, "presentation", None):
        text = args.presentation
    elif getattr(args, "file", None):
        with open(args.file, "r", encoding="utf-8") as fh:
            text = fh.read()
    else:
        raise CliError("supply --presentation or --file")
    try:
        return P.parse_presentation(text)
    except P.ParseError as exc:
        raise CliError(f"parse error: {exc}") from exc


def _targets(args) -> list:
    names = (args.targets or "S3,Z4").split(",")
    try:
        return [get_target(name.strip()) for name in names if name.strip()]
    except KeyError as exc:
        raise CliError(str(exc.args[0])) from exc


def _emit(args, payload, text_lines):
    fmt = getattr(args, "format", "text") or "text"
    if fmt == "json":
        out = json.dumps(payload, indent=2) + "\n"
    elif fmt == "csv" and isinstance(payload, str):
        out = payload
    else:
        out = "\n".join(text_lines) + "\n"
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)


def _genus_range(text: str) -> list[int]:
    if ".." in text:
        lo, hi = text.split("..", 1)
        return list(range(int(lo), int(hi) + 1))
    return [int(text)]


def _evidence_payload(ev: P.IsoEvidence) -> dict:
    return {
        "abelianization": {
            "match": ev.abelian_match,
            "input": ev.abelian_left.describe(),
            "constructed": ev.abelian_right.describe(),
        },
        "hom_counts": [
            {"target": name, "input": a, "constructed": b}
            for name, a, b in ev.hom_counts
        ],
        "verdict": ev.verdict,
    }


# ---------------------------------------------------------------------------
# subcommands


def cmd_parse(args) -> int:
    pres = _read_presentation(args)
    invariants = P.abelianization(pres)
    payload = {
        "presentation": P.serialize_presentation(pres),
        "generators": len(pres.generators),
        "relators": len(pres.relators),
        "total_syllables": pres.total_syllables(),
        "complexity_d": B.presentation_complexity(pres),
        "abelianization": invariants.describe(),
    }
    _emit(args, payload, [f"{key}: {value}" for key, value in payload.items()])
    return EXIT_OK


def cmd_simplify(args) -> int:
    pres = _read_presentation(args)
    result = P.tietze_simplify(pres, args.tietze_budget)
    payload = {
        "presentation": P.serialize_presentation(result.presentation),
        "steps": result.steps,
        "exhausted": result.exhausted,
    }
    _emit(args, payload, [f"{key}: {value}" for key, value in payload.items()])
    return EXIT_BUDGET if result.exhausted else EXIT_OK


def cmd_bounds(args) -> int:
    if not args.family and not (args.presentation or args.file):
        csv = B.bounds_table_csv()
        rows = [
            {
                "family": r.family,
                "params": r.params,
                "lower": r.lower,
                "upper": r.upper,
                "exact": r.exact,
                "note": r.note,
            }
            for r in B.bounds_table()
        ]
        if args.format == "csv":
            _emit(args, csv, [])
        else:
            _emit(args, rows, [csv.rstrip("\n")])
        return EXIT_OK
    if args.family:
        family = _parse_family(args.family)
    else:
        family = B.Family.presentation(_read_presentation(args))
    gb = B.genus_bounds(family)
    payload = {
        "family": args.family or "presentation",
        "lower": gb.lower,
        "upper": gb.upper,
        "exact": gb.exact,
        "notes": list(gb.notes),
    }
    lines = [
        f"family: {payload['family']}",
        f"genus bounds: [{gb.lower}, {gb.upper}]"
        + (f" (exact {gb.exact})" if gb.exact is not None else ""),
    ]
    if family.variant == "presentation" and args.b2 is not None:
        pres = family.params[0]
        invariants = P.abelianization(pres)
        kb = B.kotschick_bounds(
            invariants.free_rank, args.b2, B.presentation_complexity(pres), gb
        )
        payload["kotschick"] = {
            "q": [kb.q_lower, kb.q_upper],
            "p": [kb.p_lower, kb.p_upper],
            "feasible": kb.feasible,
            "notes": list(kb.notes),
        }
        lines.append(f"q in [{kb.q_lower}, {kb.q_upper}] feasible={kb.feasible}")
        lines.append(f"p in [{kb.p_lower}, {kb.p_upper}]")
    _emit(args, payload, lines)
    return EXIT_OK


def _parse_family(text: str) -> B.Family:
    """Parse compact family descriptors such as free(3) or abelian(2;2,4)."""
    text = text.strip()
    name, _, rest = text.partition("(")
    rest = rest.rstrip(")")
    name = name.strip().lower()
    try:
        if name == "trivial":
            return B.Family.trivial()
        if name in ("zxz", "z_x_z"):
            return B.Family.z_times_z()
        if name == "z":
            return B.Family.z()
        if name in ("z_n", "zn"):
            return B.Family.zn(int(rest))
        if name in ("z+z_n", "z_zn"):
            return B.Family.z_plus_zn(int(rest))
        if name in ("z_m+z_n", "zm_zn"):
            m, n = (int(x) for x in rest.split(","))
            return B.Family.zm_plus_zn(m, n)
        if name == "surface":
            return B.Family.surface(int(rest))
        if name == "free":
            return B.Family.free(int(rest))
        if name in ("free_cyclic", "free*z_m"):
            n, m = (int(x) for x in rest.split(","))
            return B.Family.free_times_cyclic(n, m)
        if name == "abelian":
            head, _, tail = rest.partition(";")
            torsions = tuple(int(x) for x in tail.split(",") if x)
            return B.Family.abelian(int(head), torsions)
        if name == "nonorientable":
            return B.Family.nonorientable(int(rest))
        if name == "braid":
            return B.Family.braid(int(rest))
        if name == "sl2z":
            return B.Family.sl2z()
    except (ValueError, TypeError) as exc:
        raise CliError(f"bad family parameters in {text!r}: {exc}") from exc
    raise CliError(f"unknown family {text!r}")


def _compile(args) -> L.CompileResult:
    pres = _read_presentation(args)
    exponent = "auto" if args.c_exponent == "auto" else int(args.c_exponent)
    try:
        return L.compile_presentation(
            pres,
            genus=args.genus,
            c_exponent=exponent,
            targets=_targets(args),
            tietze_budget=args.tietze_budget,
            hom_budget=args.hom_budget,
        )
    except (ValueError, WitnessError) as exc:
        raise CliError(str(exc)) from exc
    except P.BudgetExceeded as exc:
        raise CliError(str(exc), code=EXIT_BUDGET) from exc


def _compile_payload(result: L.CompileResult) -> dict:
    return {
        "input": P.serialize_presentation(result.source),
        "h": result.h,
        "genus": result.genus,
        "copies": result.copies,
        "c_exponent": {
            "resolved": result.c_exponent.resolved,
            "passes": {str(e): ok for e, ok in sorted(result.c_exponent.passes.items())},
            "ambiguous": result.c_exponent.ambiguous,
            "warning": result.c_exponent.warning,
        },
        "factor_count": len(result.factorization),
        "factorization": M.export_factorization(result.factorization),
        "pi1": P.serialize_presentation(result.pi1_raw),
        "simplified": P.serialize_presentation(result.simplified),
        "tietze_exhausted": result.tietze.exhausted,
        "evidence": _evidence_payload(result.evidence),
        "proof": False,
    }


def cmd_construct(args) -> int:
    result = _compile(args)
    payload = _compile_payload(result)
    lines = [
        f"input: {payload['input']}",
        f"h = {result.h}, genus = {result.genus}, copies = {result.copies}",
        f"factors: {len(result.factorization)}",
        f"simplified pi1: {payload['simplified']}",
        f"evidence: {result.verdict} (not a proof)",
    ]
    _emit(args, payload, lines)
    if result.tietze.exhausted:
        return EXIT_BUDGET
    return EXIT_OK if result.verdict == "consistent" else EXIT_REFUTED


def cmd_pi1(args) -> int:
    result = _compile(args)
    payload = {
        "genus": result.genus,
        "pi1": P.serialize_presentation(result.pi1_raw),
        "simplified": P.serialize_presentation(result.simplified),
    }
    _emit(args, payload, [f"{k}: {v}" for k, v in payload.items()])
    return EXIT_OK


def cmd_verify(args) -> int:
    left = _read_presentation(args)
    if not args.other:
        raise CliError("supply --other with a second presentation")
    try:
        right = P.parse_presentation(args.other)
    except P.ParseError as exc:
        raise CliError(f"parse error in --other: {exc}") from exc
    try:
        evidence = P.iso_evidence(
            left, right, _targets(args), args.hom_budget, args.tietze_budget
        )
    except P.BudgetExceeded as exc:
        raise CliError(str(exc), code=EXIT_BUDGET) from exc
    payload = _evidence_payload(evidence)
    lines = [f"verdict: {evidence.verdict}"]
    _emit(args, payload, lines)
    return EXIT_OK if evidence.verdict == "consistent" else EXIT_REFUTED


def cmd_homology_check(args) -> int:
    genera = _genus_range(args.genus_range)
    even = [g for g in genera if g % 2 == 0 and g >= 2]
    if not even:
        raise CliError(f"no even genus >= 2 in range {args.genus_range!r}")
    reports = [M.resolve_c_exponent(g) for g in even]
    resolved = {r.resolved for r in reports}
    payload = {
        "per_genus": [
            {
                "genus": r.genus,
                "passes": {str(e): ok for e, ok in sorted(r.passes.items())},
                "resolved": r.resolved,
                "ambiguous": r.ambiguous,
                "warning": r.warning,
            }
            for r in reports
        ],
        "consistent": len(resolved) == 1,
        "resolved": sorted(resolved),
        "identity_ok": all(r.passes[r.resolved] for r in reports),
    }
    lines = [
        f"genus {r.genus}: resolved exponent {r.resolved}"
        + (" (ambiguous)" if r.ambiguous else "")
        for r in reports
    ] + [f"consistent: {payload['consistent']}"]
    _emit(args, payload, lines)
    if not payload["identity_ok"]:
        raise CliError("homology identity failed", code=EXIT_INPUT)
    return EXIT_OK


def cmd_export(args) -> int:
    if args.presentation or args.file:
        result = _compile(args)
        factorization = result.factorization
    else:
        if args.genus is None:
            raise CliError("supply --genus or a presentation to export")
        if args.genus % 2 != 0:
            raise CliError("plain export needs an even genus (odd needs curve config)")
        exponent = 2 if args.c_exponent == "auto" else int(args.c_exponent)
        factorization = M.base_factorization(args.genus, exponent)
    payload = M.export_factorization(factorization)
    _emit(args, payload, [json.dumps(payload, indent=2)])
    return EXIT_OK


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lefschetz",
        description=(
            "Compile finite group presentations into positive Dehn-twist "
            "factorizations and estimate the fiber-genus invariant."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, genus=True):
        p.add_argument("--presentation", help="inline presentation text")
        p.add_argument("--file", help="path to a .gp presentation file")
        if genus:
            p.add_argument("--genus", type=int, default=None)
        p.add_argument(
            "--c-exponent", choices=["1", "2", "auto"], default="auto", dest="c_exponent"
        )
        p.add_argument("--targets", help="comma-separated target groups (default S3,Z4)")
        p.add_argument(
            "--tietze-budget", type=int, default=P.DEFAULT_TIETZE_BUDGET
        )
        p.add_argument("--hom-budget", type=int, default=P.DEFAULT_HOM_BUDGET)
        p.add_argument("--format", choices=["text", "json", "csv"], default="text")
        p.add_argument("--out", help="write the report here instead of stdout")

    common(sub.add_parser("parse", help="parse and normalize a presentation"))
    common(sub.add_parser("simplify", help="Tietze-simplify a presentation"))
    common(sub.add_parser("construct", help="run the full pipeline with evidence"))
    common(sub.add_parser("pi1", help="extract the total space presentation"))

    verify = sub.add_parser("verify", help="compare two presentations by invariants")
    common(verify)
    verify.add_argument("--other", help="second presentation (inline)")

    hom = sub.add_parser("homology-check", help="resolve the c exponent per genus")
    hom.add_argument(
        "--genus", dest="genus_range", default="2..8", help="genus or range, e.g. 2..8"
    )
    hom.add_argument("--format", choices=["text", "json", "csv"], default="text")
    hom.add_argument("--out")

    bounds = sub.add_parser("bounds", help="genus bounds table or one family row")
    common(bounds)
    bounds.add_argument("--family", help="e.g. sl2z, free(3), abelian(2;2)")
    bounds.add_argument("--b2", type=int, default=None, help="second Betti number")

    export = sub.add_parser("export", help="emit a factorization as JSON")
    common(export)
    return parser


COMMANDS = {
    "parse": cmd_parse,
    "simplify": cmd_simplify,
    "construct": cmd_construct,
    "pi1": cmd_pi1,
    "verify": cmd_verify,
    "homology-check": cmd_homology_check,
    "bounds": cmd_bounds,
    "export": cmd_export,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 0 for --help, 2 for usage errors; fold the
        # latter into the input-error code
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    try:
        return COMMANDS[args.command](args)
    except CliError as exc:
        sys.stderr.write(json.dumps({"error": str(exc)}) + "\n")
        return exc.code
    except P.BudgetExceeded as exc:
        sys.stderr.write(json.dumps({"error": str(exc)}) + "\n")
        return EXIT_BUDGET
    except (ValueError, KeyError, OSError) as exc:
        sys.stderr.write(json.dumps({"error": str(exc)}) + "\n")
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
