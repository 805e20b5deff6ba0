"""Command line interface: so4 classify|equivalent|conjugate|decompose|verify-tables.

Subalgebras enter as JSON documents:

    {"format_version": "1",
     "basis": [["0", "1", "0", "0", "1", "0"], ...]}

where each row is either a 6-vector of scalars in the coordinate order
(h1, x1, y1, h2, x2, y2) or a 4x4 block-diagonal traceless matrix; all
rows must use the same representation.  Scalars are strings like
"3/2-1/2i" (plain integers are also accepted).  Exit codes: 0 success,
1 verification failure, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .catalog import load_catalog_file
from .classify import classify, structural_profile
from .conjugacy import (
    InnerAutomorphism,
    apply_subalgebra,
    find_witness,
    random_inner,
)
from .liecore import (
    COORD_NAMES,
    Element,
    NotClosedError,
    Subalgebra,
    element_from_matrix,
    is_solvable,
    levi_factor,
    radical,
    span_close,
)
from .modulerep import adjoint_decompose, standard_triple
from .scalars import Scalar, parse_scalar, render_scalar
from .verify import verify_tables

DOCUMENT_FORMAT_VERSION = "1"

EXIT_OK = 0
EXIT_VERIFICATION_FAILURE = 1
EXIT_INPUT_ERROR = 2


class DocumentError(ValueError):
    pass


def _parse_entry(x) -> Scalar:
    if isinstance(x, str):
        return parse_scalar(x)
    if isinstance(x, bool):
        raise DocumentError("booleans are not scalars")
    if isinstance(x, int):
        return Scalar(x)
    if isinstance(x, float):
        raise DocumentError(
            f"floating point entry {x!r} rejected; scalars must be exact "
            "(use strings like '1/2' or '3-2i')"
        )
    raise DocumentError(f"cannot read {x!r} as a scalar")


def parse_document(obj) -> list[Element]:
    """Read a subalgebra document into basis elements (not yet closed)."""
    if not isinstance(obj, dict):
        raise DocumentError("document must be a JSON object")
    version = obj.get("format_version")
    if version != DOCUMENT_FORMAT_VERSION:
        raise DocumentError(
            f"unsupported format_version {version!r} (expected {DOCUMENT_FORMAT_VERSION!r})"
        )
    basis = obj.get("basis")
    if not isinstance(basis, list):
        raise DocumentError("document needs a 'basis' list")
    kinds = set()
    elements = []
    for k, row in enumerate(basis):
        if not isinstance(row, list):
            raise DocumentError(f"basis entry {k} is not a list")
        if len(row) == 6 and not any(isinstance(x, list) for x in row):
            kinds.add("coords")
            elements.append(Element([_parse_entry(x) for x in row]))
        elif len(row) == 4 and all(isinstance(x, list) and len(x) == 4 for x in row):
            kinds.add("matrix")
            try:
                elements.append(
                    element_from_matrix([[_parse_entry(x) for x in r] for r in row])
                )
            except ValueError as exc:
                raise DocumentError(f"basis entry {k}: {exc}") from None
        else:
            raise DocumentError(
                f"basis entry {k} must be a 6-vector or a 4x4 matrix"
            )
        if len(kinds) > 1:
            raise DocumentError("all basis rows must share one representation kind")
    return elements


def load_document(path: str) -> list[Element]:
    try:
        if path == "-":
            obj = json.load(sys.stdin)
        else:
            with open(path, encoding="utf-8") as fh:
                obj = json.load(fh)
    except OSError as exc:
        raise DocumentError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise DocumentError(f"{path} is not valid JSON: {exc}") from None
    return parse_document(obj)


def subalgebra_document(s: Subalgebra, extra: dict | None = None) -> dict:
    doc = {
        "format_version": DOCUMENT_FORMAT_VERSION,
        "basis": [[render_scalar(c) for c in b.coeffs] for b in s.basis],
    }
    if extra:
        doc.update(extra)
    return doc


def _close(elements: list[Element]) -> Subalgebra:
    try:
        return span_close(elements)
    except NotClosedError as exc:
        raise DocumentError(
            f"basis does not span a subalgebra: the bracket of rows "
            f"{exc.pair[0]} and {exc.pair[1]} leaves the span "
            f"(it equals {exc.witness})"
        ) from None


def _matrix_json(m) -> list[list[str]]:
    return [[render_scalar(x) for x in row] for row in m]


def _emit(obj: dict, as_json: bool, lines: list[str]) -> None:
    if as_json:
        print(json.dumps(obj, indent=2, sort_keys=True))
    else:
        print("\n".join(lines))


# -- subcommands -------------------------------------------------------------


def cmd_classify(args) -> int:
    s = _close(load_document(args.input))
    label = classify(s)
    profile = structural_profile(s)
    payload = {
        "label": label.to_json(),
        "name": label.name(),
        "dimension": s.dim,
        "solvable": profile.solvable,
        "derived_dims": list(profile.derived_dims),
        "basis": [[render_scalar(c) for c in b.coeffs] for b in s.basis],
    }
    lines = [
        f"label:      {label.name()}",
        f"dimension:  {s.dim}",
        f"solvable:   {'yes' if profile.solvable else 'no'}"
        f"  (derived dims {' -> '.join(str(d) for d in profile.derived_dims)})",
        "basis:      " + ("0" if s.dim == 0 else "; ".join(str(b) for b in s.basis)),
    ]
    if not profile.solvable and 0 < s.dim < 6:
        levi = levi_factor(s)
        rad = radical(s)
        payload["levi"] = {
            "basis": [[render_scalar(c) for c in b.coeffs] for b in levi.basis],
            "label": classify(levi).name(),
            "radical_basis": [[render_scalar(c) for c in b.coeffs] for b in rad.basis],
        }
        lines.append(f"levi:       {classify(levi).name()} = " + "; ".join(str(b) for b in levi.basis))
        lines.append(
            "radical:    " + ("0" if rad.dim == 0 else "; ".join(str(b) for b in rad.basis))
        )
    _emit(payload, args.json, lines)
    return EXIT_OK


def cmd_equivalent(args) -> int:
    s = _close(load_document(args.a))
    t = _close(load_document(args.b))
    ls, lt = classify(s), classify(t)
    same = ls == lt
    payload = {
        "equivalent": same,
        "label_a": ls.to_json(),
        "label_b": lt.to_json(),
        "name_a": ls.name(),
        "name_b": lt.name(),
    }
    lines = [
        f"first:      {ls.name()}",
        f"second:     {lt.name()}",
        f"verdict:    {'equivalent' if same else 'inequivalent'}",
    ]
    if same and args.witness_budget > 0:
        w = find_witness(s, t, args.witness_budget, seed=args.seed)
        if w is None:
            payload["witness"] = None
            lines.append(
                f"witness:    none found within budget {args.witness_budget} (seed {args.seed})"
            )
        else:
            payload["witness"] = {
                "factor1": _matrix_json(w.a),
                "factor2": _matrix_json(w.b),
            }
            lines.append(f"witness:    factor1 {_matrix_json(w.a)}, factor2 {_matrix_json(w.b)}")
    _emit(payload, args.json, lines)
    return EXIT_OK


def cmd_conjugate(args) -> int:
    s = _close(load_document(args.input))
    phi = random_inner(args.seed, args.complexity)
    image = apply_subalgebra(phi, s)
    doc = subalgebra_document(
        image,
        extra={
            "automorphism": {
                "factor1": _matrix_json(phi.a),
                "factor2": _matrix_json(phi.b),
            },
            "seed": args.seed,
            "complexity": args.complexity,
        },
    )
    print(json.dumps(doc, indent=2, sort_keys=True))
    return EXIT_OK


def cmd_decompose(args) -> int:
    s = _close(load_document(args.input))
    try:
        triple = standard_triple(s)
    except ValueError as exc:
        raise DocumentError(str(exc)) from None
    dec = adjoint_decompose(triple)
    payload = {
        "summands": list(dec.summands),
        "description": str(dec),
        "triple": {
            "h": [render_scalar(c) for c in triple.h.coeffs],
            "x": [render_scalar(c) for c in triple.x.coeffs],
            "y": [render_scalar(c) for c in triple.y.coeffs],
        },
        "highest_weight_vectors": [
            [render_scalar(c) for c in v.coeffs] for v in dec.highest_weight_vectors
        ],
    }
    lines = [
        f"decomposition:  {dec}",
        f"triple:         h = {triple.h}; x = {triple.x}; y = {triple.y}",
        "highest weight vectors:",
    ]
    for m, v in zip(dec.summands, dec.highest_weight_vectors):
        lines.append(f"  V({m}): {v}")
    _emit(payload, args.json, lines)
    return EXIT_OK


def cmd_verify_tables(args) -> int:
    entries = None
    if args.catalog is not None:
        try:
            entries = load_catalog_file(args.catalog)
        except (OSError, ValueError, KeyError) as exc:
            raise DocumentError(f"cannot load catalog: {exc}") from None
    report = verify_tables(trials=args.trials, seed=args.seed, entries=entries)
    if args.json:
        print(json.dumps(report.to_json(), indent=2, sort_keys=True))
    else:
        print(f"seed {report.seed}, trials {report.trials}")
        print("\n".join(report.lines()))
        print("overall:", "PASS" if report.passed else "FAIL")
    return EXIT_OK if report.passed else EXIT_VERIFICATION_FAILURE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="so4",
        description="Classify subalgebras of so(4,C) up to inner automorphism.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="classify a subalgebra document")
    p.add_argument("input", help="JSON document path, or - for stdin")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("equivalent", help="test two documents for equivalence")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--json", action="store_true")
    p.add_argument("--witness-budget", type=int, default=0, metavar="N",
                   help="search effort for an explicit conjugating automorphism")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_equivalent)

    p = sub.add_parser("conjugate", help="apply a seeded random inner automorphism")
    p.add_argument("input")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--complexity", type=int, default=3)
    p.set_defaults(func=cmd_conjugate)

    p = sub.add_parser("decompose", help="adjoint-module decomposition over an sl2 input")
    p.add_argument("input")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("verify-tables", help="run the classification verification suite")
    p.add_argument("--trials", type=int, default=5,
                   help="random automorphisms per representative (0 = deterministic only)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--json", action="store_true")
    p.add_argument("--catalog", default=None,
                   help="verify an external catalog JSON instead of the embedded one")
    p.set_defaults(func=cmd_verify_tables)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except DocumentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
