"""Command-line front end.

    concordium alex MATRIX
    concordium certify {iterates [PATTERN] | ckrs --i N | hopf-top POLY}
    concordium legendrian {stabilize|iterate|satellite|front} ...
    concordium diagram {lk DIAGRAM A B | writhe DIAGRAM A}

Inputs are file paths or inline JSON. Paths under ``fixtures/`` that do not
exist relative to the working directory are looked up in the fixture
directory (``CONCORDIUM_FIXTURES`` or the packaged one).

Exit status: 0 for a definite answer, 2 for an inconclusive one, 1 for bad
input.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import fixtures
from .certify import (
    CRITERION_FAILS,
    INCONCLUSIVE,
    Certificate,
    certify_distinct_iterates,
    certify_not_topologically_hopf,
    certify_qi_vs_ckrs,
    render_text,
)
from .diagram import diagram_from_json, linking_number, writhe
from .laurent import normalize_up_to_units, poly_from_json, poly_to_json
from .legendrian import (
    front_from_json,
    front_tb_rot,
    iterate_pattern,
    knot_from_json,
    knot_to_json,
    legendrian_satellite,
    pattern_from_json,
    pattern_to_json,
    stabilize_many,
)
from .polymatrix import det, matrix_from_json

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_INCONCLUSIVE = 2


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # usage errors count as invalid input (1); 2 is reserved for "inconclusive"
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def read_input(arg: str):
    """Load JSON from an inline string, a path, or a fixture name."""
    if arg.lstrip().startswith(("{", "[")):
        source, text = "<inline>", arg
    else:
        path = Path(arg)
        if not path.exists():
            candidate = fixtures.fixture_dir() / (path.name if path.parts[:1] == ("fixtures",) else arg)
            if candidate.exists():
                path = candidate
            else:
                raise InputError(f"{arg}: no such file")
        source, text = str(path), path.read_text(encoding="utf-8")
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{source}: line {exc.lineno} column {exc.colno}: {exc.msg}") from exc


def _emit(payload: dict, text: str, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(payload, indent=2))
    else:
        print(text)


def _certificate_exit(cert: Certificate) -> int:
    return EXIT_INCONCLUSIVE if cert.conclusion in (INCONCLUSIVE, CRITERION_FAILS) else EXIT_OK


def cmd_alex(args) -> int:
    m = matrix_from_json(read_input(args.matrix))
    d = det(m)
    norm = normalize_up_to_units(d)
    trivial = len(d.terms) == 1 and abs(d.terms[0][2]) == 1
    payload = {"det": poly_to_json(d), "normalized": poly_to_json(norm), "trivial": trivial}
    text = f"det = {d}\nnormalized = {norm}\ntrivial = {str(trivial).lower()}"
    _emit(payload, text, args.output)
    return EXIT_OK


def cmd_certify(args) -> int:
    if args.kind == "ckrs":
        if args.i is None:
            raise InputError("certify ckrs needs --i")
        cert = certify_qi_vs_ckrs(args.i)
    elif args.kind == "iterates":
        p = pattern_from_json(read_input(args.input)) if args.input else None
        cert = certify_distinct_iterates(p)
    else:
        if not args.input:
            raise InputError("certify hopf-top needs a polynomial")
        cert = certify_not_topologically_hopf(poly_from_json(read_input(args.input)))
    _emit(cert.to_json(), render_text(cert), args.output)
    return _certificate_exit(cert)


def _knot_text(k) -> str:
    return f"tb={k.tb} rot={k.rot}"


def cmd_legendrian(args) -> int:
    action = args.action
    if action == "front":
        k = front_tb_rot(front_from_json(read_input(args.input)))
        _emit(knot_to_json(k), _knot_text(k), args.output)
        return EXIT_OK
    if action == "satellite":
        if not (args.pattern and args.companion):
            raise InputError("legendrian satellite needs --pattern and --companion")
        p = stabilize_many(pattern_from_json(read_input(args.pattern)), args.stab)
        if args.i is not None:
            p = iterate_pattern(p, args.i)
        k = legendrian_satellite(p, knot_from_json(read_input(args.companion)))
        _emit(knot_to_json(k), _knot_text(k), args.output)
        return EXIT_OK

    src = args.input or args.pattern
    if not src:
        raise InputError(f"legendrian {action} needs an input")
    obj = read_input(src)
    is_pattern = "winding" in obj or "pu_unknotted" in obj
    x = pattern_from_json(obj) if is_pattern else knot_from_json(obj)
    x = stabilize_many(x, args.stab)
    if action == "iterate":
        if args.i is None:
            raise InputError("legendrian iterate needs --i")
        if not is_pattern:
            x = pattern_from_json({"tb": x.tb, "rot": x.rot})
        x = iterate_pattern(x, args.i)
    payload = pattern_to_json(x) if is_pattern or action == "iterate" else knot_to_json(x)
    _emit(payload, _knot_text(x), args.output)
    return EXIT_OK


def cmd_diagram(args) -> int:
    d = diagram_from_json(read_input(args.input))
    if args.action == "lk":
        if len(args.labels) != 2:
            raise InputError("diagram lk needs two component labels")
        a, b = args.labels
        value = linking_number(d, a, b)
        _emit({"lk": value}, f"lk({a}, {b}) = {value}", args.output)
    else:
        if len(args.labels) != 1:
            raise InputError("diagram writhe needs one component label")
        (a,) = args.labels
        value = writhe(d, a)
        _emit({"writhe": value}, f"writhe({a}) = {value}", args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--output", choices=("json", "text"), default="text")

    parser = _Parser(prog="concordium", description=__doc__.splitlines()[0] if __doc__ else None)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("alex", parents=[common], help="determinant / Alexander polynomial of a presentation matrix")
    p.add_argument("matrix")
    p.set_defaults(func=cmd_alex)

    p = sub.add_parser("certify", parents=[common], help="emit a distinctness certificate")
    p.add_argument("kind", choices=("iterates", "ckrs", "hopf-top"))
    p.add_argument("input", nargs="?")
    p.add_argument("--i", type=int)
    p.set_defaults(func=cmd_certify)

    p = sub.add_parser("legendrian", parents=[common], help="tb/rot calculus")
    p.add_argument("action", choices=("stabilize", "iterate", "satellite", "front"))
    p.add_argument("input", nargs="?")
    p.add_argument("--stab", default="", help="stabilization signs applied first, e.g. ++")
    p.add_argument("--i", type=int)
    p.add_argument("--pattern")
    p.add_argument("--companion")
    p.set_defaults(func=cmd_legendrian)

    p = sub.add_parser("diagram", parents=[common], help="linking number and writhe")
    p.add_argument("action", choices=("lk", "writhe"))
    p.add_argument("input")
    p.add_argument("labels", nargs="*")
    p.set_defaults(func=cmd_diagram)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if any(ch not in "+-" for ch in getattr(args, "stab", "")):
        parser.error(f"--stab takes a string of '+' and '-', got {args.stab!r}")
    try:
        return args.func(args)
    except (InputError, ValueError, OSError) as exc:
        print(f"concordium: error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
