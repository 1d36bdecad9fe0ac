"""``bimoebius`` command line: JSON on stdout, diagnostics on stderr.

Exit status is 0 on success, 1 for domain errors (degenerate transform,
non-invertible ``c``, ...) and 2 for usage or literal syntax errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .core import DEFAULT_EPS, Bicomplex, SingularOperand
from .extended import ExtendedBicomplex, classify
from .fixedpoints import fixed_points
from .literal import CartesianInfinity, ParseError, format_component, parse, parse_component
from .literal import format as format_literal
from .mobius import (
    CNotInvertible,
    DegenerateDeterminant,
    MobiusTransform,
    compose,
    decompose_affine,
    decompose_generators,
    evaluate,
    invert_transform,
    orbit,
)

GENERATOR_KINDS = ("translation", "inversion", "dilation", "translation")


class UsageError(Exception):
    pass


class DomainError(Exception):
    def __init__(self, code: str, message: str, **extra):
        super().__init__(message)
        self.code = code
        self.extra = extra


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj) + "\n")


# --- transform specs -------------------------------------------------------

def _coefficient(value, name: str) -> Bicomplex:
    try:
        if isinstance(value, str):
            w = parse(value)
        elif isinstance(value, list) and len(value) == 2:
            parts = [v if isinstance(v, str) else repr(v) for v in value]
            w = ExtendedBicomplex(*(parse_component(p) for p in parts))
        elif isinstance(value, (int, float)) and not isinstance(value, bool):
            w = parse(repr(float(value)))
        else:
            raise UsageError(f"coefficient {name!r}: expected a literal string or [p1, p2]")
    except ParseError as exc:
        raise UsageError(f"coefficient {name!r}: {exc}") from None
    if not w.is_finite:
        raise DomainError("InfiniteCoefficient", f"coefficient {name!r} must be finite")
    return w.to_bicomplex()


def load_transform(text: str, eps: float | None = None) -> MobiusTransform:
    """Build a transform from a JSON object (or ``@path`` to one)."""
    if text.startswith("@"):
        try:
            text = Path(text[1:]).read_text(encoding="utf-8")
        except OSError as exc:
            raise UsageError(f"cannot read transform file: {exc}") from None
    try:
        spec = json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"transform is not valid JSON: {exc}") from None
    if not isinstance(spec, dict) or not {"a", "b", "c", "d"} <= spec.keys():
        raise UsageError('transform must be a JSON object with keys "a", "b", "c", "d"')
    coeffs = [_coefficient(spec[k], k) for k in "abcd"]
    if eps is None:
        eps = spec.get("eps", DEFAULT_EPS)
    if not isinstance(eps, (int, float)) or eps < 0:
        raise UsageError("eps must be a non-negative number")
    try:
        return MobiusTransform(*coeffs, eps=float(eps))
    except DegenerateDeterminant as exc:
        raise DomainError("DegenerateDeterminant", str(exc)) from None


def transform_json(S: MobiusTransform, **extra) -> dict:
    out = dict(extra)
    for name, w in zip("abcd", S.coefficients):
        out[name] = format_literal(w)
    out["det"] = format_literal(S.det)
    return out


def _point(text: str):
    try:
        return parse(text)
    except ParseError as exc:
        raise UsageError(f"point: {exc}") from None


# --- commands --------------------------------------------------------------

def cmd_eval(args) -> None:
    S = load_transform(args.transform[0], args.eps)
    result = evaluate(S, _point(args.point))
    try:
        text = format_literal(result, args.style)
    except CartesianInfinity as exc:
        raise DomainError("CartesianInfinity", str(exc)) from None
    _emit({"result": text, "class": classify(result, S.eps).value})


def cmd_compose(args) -> None:
    if len(args.transform) < 2:
        raise UsageError("compose needs at least two --transform values")
    transforms = [load_transform(t, args.eps) for t in args.transform]
    result = transforms[0]
    for S in transforms[1:]:
        try:
            result = compose(result, S)
        except DegenerateDeterminant as exc:
            raise DomainError("DegenerateDeterminant", str(exc)) from None
    _emit(transform_json(result))


def cmd_invert(args) -> None:
    S = load_transform(args.transform[0], args.eps)
    _emit(transform_json(invert_transform(S)))


def cmd_fixed_points(args) -> None:
    S = load_transform(args.transform[0], args.eps)
    _emit(fixed_points(S).to_json())


def cmd_classify(args) -> None:
    eps = DEFAULT_EPS if args.eps is None else args.eps
    _emit({"class": classify(_point(args.point), eps).value})


def cmd_orbit(args) -> None:
    S = load_transform(args.transform[0], args.eps)
    if args.n < 1:
        raise UsageError("-n must be at least 1")
    trace = orbit(S, _point(args.start), args.n, args.tol)
    for k, w in enumerate(trace.points):
        _emit({"k": k, "point": format_literal(w), "class": classify(w, S.eps).value})
    _emit({"converged": trace.converged, "steps": trace.steps})


def cmd_decompose(args) -> None:
    S = load_transform(args.transform[0], args.eps)
    try:
        gens = decompose_generators(S)
    except CNotInvertible as exc:
        extra = {}
        if all(z == 0 for z in (S.c.p1, S.c.p2)):
            affine = decompose_affine(S)
            extra["affine_fallback"] = [
                transform_json(g, kind=k) for g, k in zip(affine, ("dilation", "translation"))
            ]
        raise DomainError("CNotInvertible", str(exc), **extra) from None
    except SingularOperand as exc:
        raise DomainError("CNotInvertible", str(exc)) from None
    _emit([transform_json(g, kind=k) for g, k in zip(gens, GENERATOR_KINDS)])


def cmd_parse(args) -> None:
    w = _point(args.point)
    try:
        text = format_literal(w, args.style)
    except CartesianInfinity as exc:
        raise DomainError("CartesianInfinity", str(exc)) from None
    eps = DEFAULT_EPS if args.eps is None else args.eps
    _emit(
        {
            "literal": text,
            "p1": format_component(w.p1),
            "p2": format_component(w.p2),
            "class": classify(w, eps).value,
        }
    )


# --- argument parsing ------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="bimoebius", description="Bicomplex Moebius transformations.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def with_transform(p, many=False):
        p.add_argument(
            "--transform",
            "-t",
            action="append",
            required=True,
            help='JSON {"a":..,"b":..,"c":..,"d":..} or @file' + (" (repeatable)" if many else ""),
        )

    def with_eps(p):
        p.add_argument("--eps", type=float, default=None, help=f"null-cone tolerance (default {DEFAULT_EPS})")

    p = sub.add_parser("eval", help="evaluate S at a point")
    with_transform(p)
    p.add_argument("--point", required=True)
    p.add_argument("--style", choices=("idempotent", "cartesian"), default="idempotent")
    with_eps(p)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("compose", help="left-fold composition S1 o S2 o ...")
    with_transform(p, many=True)
    with_eps(p)
    p.set_defaults(func=cmd_compose)

    p = sub.add_parser("invert", help="inverse transform")
    with_transform(p)
    with_eps(p)
    p.set_defaults(func=cmd_invert)

    p = sub.add_parser("fixed-points", help="all fixed points of S")
    with_transform(p)
    with_eps(p)
    p.set_defaults(func=cmd_fixed_points)

    p = sub.add_parser("classify", help="zero/infinity class of a point")
    p.add_argument("--point", required=True)
    with_eps(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("orbit", help="iterate S from a start point")
    with_transform(p)
    p.add_argument("--start", required=True)
    p.add_argument("-n", type=int, default=100)
    p.add_argument("--tol", type=float, default=1e-12)
    with_eps(p)
    p.set_defaults(func=cmd_orbit)

    p = sub.add_parser("decompose", help="translation/inversion/dilation generators")
    with_transform(p)
    with_eps(p)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("parse", help="normalize a literal")
    p.add_argument("--point", required=True)
    p.add_argument("--style", choices=("idempotent", "cartesian"), default="idempotent")
    with_eps(p)
    p.set_defaults(func=cmd_parse)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command != "compose" and len(getattr(args, "transform", None) or ()) > 1:
            raise UsageError("--transform given more than once")
        args.func(args)
    except UsageError as exc:
        _emit({"error": "UsageError", "message": str(exc)})
        print(f"bimoebius: error: {exc}", file=sys.stderr)
        return 2
    except OverflowError as exc:
        _emit({"error": "OverflowError", "message": str(exc)})
        print(f"bimoebius: error: {exc}", file=sys.stderr)
        return 2
    except DomainError as exc:
        _emit({"error": exc.code, "message": str(exc), **exc.extra})
        print(f"bimoebius: {exc.code}: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
