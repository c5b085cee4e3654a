"""Command-line interface: every pipeline as a subcommand with JSON output.

All exact values in the JSON are decimal strings so nothing is ever rounded.
Exit codes: 0 success, 1 the mathematical verdict was not the one demanded
by --expect-holds, 2 input errors, 3 internal consistency breach.
"""

from __future__ import annotations

import argparse
import json
import sys
import traceback
from pathlib import Path
from typing import Sequence

from . import matrices, polynomials, quadratic, rings, spectrum, verify
from .errors import ParseError, RealSnfError, TheoremConsistencyError
from .matrices import matrix_from_json, smith_normal_form
from .polynomials import poly_from_json
from .ringspec import RingFamily, RingSpec, parse_ring

EXIT_OK = 0
EXIT_VERDICT = 1
EXIT_INPUT = 2
EXIT_BREACH = 3


def _emit(payload: object, pretty: bool) -> None:
    print(json.dumps(payload, indent=2 if pretty else None, sort_keys=False))


def _load_input(text: str | None, default: object = None) -> object:
    """Inline JSON (starts with '[', '{' or '"') or a path to a JSON file."""
    if text is None:
        return default
    stripped = text.strip()
    if stripped and stripped[0] in "[{\"":
        try:
            return json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise ParseError(f"inline JSON is malformed: {exc}") from None
    path = Path(text)
    if not path.exists():
        raise ParseError(f"input {text!r} is neither inline JSON nor an existing file")
    try:
        return json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise ParseError(f"file {text} is not valid JSON: {exc}") from None


def _ring_of(args: argparse.Namespace) -> RingSpec | None:
    return parse_ring(args.ring) if args.ring else None


def _require_ring(args: argparse.Namespace) -> RingSpec:
    if not args.ring:
        raise ParseError("this subcommand needs --ring")
    return parse_ring(args.ring)


def _cmd_snf(args: argparse.Namespace) -> int:
    data = _load_input(args.input)
    if data is None:
        raise ParseError("snf needs --input with a matrix")
    m = matrix_from_json(data, _ring_of(args))
    result = smith_normal_form(m)
    check = matrices.verify_snf(m, result)
    _emit(
        {
            "ring": str(m.ring),
            "diagonals": [rings.element_to_json(d, m.ring) for d in result.diagonals],
            "rank": len(result.diagonals),
            "D": result.D.to_json(),
            "P": result.P.to_json(),
            "Q": result.Q.to_json(),
            "verified": bool(check),
        },
        args.pretty,
    )
    return EXIT_OK if check else EXIT_BREACH


def _cmd_psd(args: argparse.Namespace) -> int:
    data = _load_input(args.input)
    if data is None:
        raise ParseError("psd needs --input with a symmetric matrix")
    m = matrix_from_json(data, _ring_of(args))
    report = spectrum.is_psd_on_spectrum(m)
    _emit(report.to_json(), args.pretty)
    if args.expect_holds and not report.is_psd:
        return EXIT_VERDICT
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    data = _load_input(args.input)
    if data is None:
        raise ParseError("verify needs --input with a symmetric matrix")
    m = matrix_from_json(data, _ring_of(args))
    report = verify.verify_main_theorem(m)
    _emit(report.to_json(), args.pretty)
    if args.expect_holds and report.conclusion is not verify.Conclusion.THEOREM_HOLDS:
        return EXIT_VERDICT
    return EXIT_OK


def _cmd_pnri(args: argparse.Namespace) -> int:
    ring = _require_ring(args)
    payload: dict = {"ring": str(ring), "pnri": rings.pnri(ring)}
    if ring.family is RingFamily.QUADRATIC_INTEGERS:
        fu = quadratic.fundamental_unit(ring)
        payload["unit"] = str(fu.unit)
        payload["norm"] = str(fu.norm)
    _emit(payload, args.pretty)
    return EXIT_OK


def _cmd_unit(args: argparse.Namespace) -> int:
    ring = _require_ring(args)
    fu = quadratic.fundamental_unit(ring)
    _emit(
        {"ring": str(ring), "unit": str(fu.unit), "norm": str(fu.norm)},
        args.pretty,
    )
    return EXIT_OK


def _cmd_counterexample(args: argparse.Namespace) -> int:
    ring = _ring_of(args)
    data = _load_input(args.input)
    if data is None:
        recipe = verify.builtin_counterexample_recipe(ring)
    else:
        if not isinstance(data, dict):
            raise ParseError("counterexample input must be a JSON object")
        recipe = verify.recipe_from_json(data, ring or verify.builtin_counterexample_recipe().ring)
    matrix = verify.build_counterexample(recipe)
    report = verify.verify_main_theorem(matrix)
    _emit(
        {
            "recipe": recipe.to_json(),
            "matrix": matrix.to_json(),
            "report": report.to_json(),
        },
        args.pretty,
    )
    if args.expect_holds and report.conclusion is not verify.Conclusion.THEOREM_HOLDS:
        return EXIT_VERDICT
    return EXIT_OK


def _cmd_valuation_lemma(args: argparse.Namespace) -> int:
    data = _load_input(args.input)
    if not isinstance(data, dict):
        raise ParseError("valuation-lemma needs --input '{\"a\":..., \"b\":..., \"p\":...}'")
    polys = {}
    for name in ("a", "b", "p"):
        if name not in data:
            raise ParseError(f"field {name!r} is missing")
        polys[name] = poly_from_json(data[name])
    a, b, p = polys["a"], polys["b"], polys["p"]
    holds = verify.check_valuation_lemma(a, b, p)
    payload = {
        "holds": holds,
        "valuation_a": None if a.is_zero() else str(polynomials.valuation(p, a)),
        "valuation_b": None if b.is_zero() else str(polynomials.valuation(p, b)),
    }
    _emit(payload, args.pretty)
    return EXIT_OK


def _cmd_suite(args: argparse.Namespace) -> int:
    ring = _require_ring(args)
    cfg = verify.TrialConfig(
        ring=ring,
        matrix_size=args.size,
        entry_height_bound=args.height,
        trial_count=args.trials,
        seed=args.seed,
        max_degree=args.degree,
    )
    summary = verify.run_property_suite(cfg)
    for index, report in enumerate(summary.reports):
        line = {"trial": index, **report.to_json()}
        print(json.dumps(line))
    _emit(summary.to_json(), args.pretty)
    if not summary.ok:
        return EXIT_BREACH
    if args.expect_holds and any(
        r.conclusion is not verify.Conclusion.THEOREM_HOLDS for r in summary.reports
    ):
        return EXIT_VERDICT
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="realsnf",
        description=(
            "Exact Smith Normal Forms and real-spectrum positivity over Z, Q[x], "
            "and real quadratic integer rings."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, needs_input: bool = False) -> None:
        p.add_argument("--ring", help="Z, Q[x], Zsqrt:<d> or Zhalf:<d>")
        if needs_input:
            p.add_argument("--input", help="inline JSON or a path to a JSON file")
        p.add_argument("--pretty", action="store_true", help="indent the JSON output")
        p.add_argument(
            "--expect-holds",
            action="store_true",
            help="exit 1 unless the mathematical verdict is fully positive",
        )

    common(sub.add_parser("snf", help="Smith Normal Form of a matrix"), True)
    common(sub.add_parser("psd", help="positive semidefiniteness on the real spectrum"), True)
    common(sub.add_parser("verify", help="full positivity pipeline on a matrix"), True)
    common(sub.add_parser("pnri", help="whether units realize every sign pattern"))
    common(sub.add_parser("unit", help="fundamental unit of a quadratic ring"))
    common(sub.add_parser("counterexample", help="build and judge a 2x2 recipe"), True)
    common(sub.add_parser("valuation-lemma", help="check the valuation inequality"), True)

    suite = sub.add_parser("suite", help="seeded randomized falsification run")
    common(suite)
    suite.add_argument("--trials", type=int, default=100)
    suite.add_argument("--size", type=int, default=4, help="maximum matrix size")
    suite.add_argument("--height", type=int, default=3, help="entry height bound")
    suite.add_argument("--degree", type=int, default=2, help="entry degree bound (Q[x])")
    suite.add_argument("--seed", type=int, default=0)
    return parser


_HANDLERS = {
    "snf": _cmd_snf,
    "psd": _cmd_psd,
    "verify": _cmd_verify,
    "pnri": _cmd_pnri,
    "unit": _cmd_unit,
    "counterexample": _cmd_counterexample,
    "valuation-lemma": _cmd_valuation_lemma,
    "suite": _cmd_suite,
}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except TheoremConsistencyError as exc:
        print(f"consistency breach: {exc}", file=sys.stderr)
        return EXIT_BREACH
    except RealSnfError as exc:
        # parse errors, unsupported rings, violated recipe conditions, failed
        # preconditions: all problems with the input
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ZeroDivisionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except Exception:  # a crash must not look like a mathematical verdict
        traceback.print_exc()
        return EXIT_BREACH


if __name__ == "__main__":
    sys.exit(main())
