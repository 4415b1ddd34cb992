"""Command-line interface.

Subcommands: stabilize, verify, fan, schur, hypersurface,
boundary-stabilize, plot.  Matrix and point payloads are inline JSON or a
path to a JSON file.  All randomized commands require an explicit seed and
produce byte-identical output for identical inputs.  Exit codes: 0 ok,
1 failed verification, 2 malformed input, 3 precondition violation.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from . import suites, svgplot
from .apartment import ApartmentPoint, stabilizer_membership
from .compactification import BoundaryPoint, boundary_stabilizes
from .errors import TropstabError, UnknownSuiteError
from .fields import FieldSpec
from .serialize import (InputError, fan_to_json, matrix_from_json,
                        point_from_json, point_to_json, spec_to_json,
                        trop_from_json)
from .symplectic import SpApartmentPoint, sp_stabilizer_membership
from .tropical import NEG_INF, trop_matvec, tropicalize
from .weights import schur_eval_bialternant, schur_eval_tableaux, weight_fan


def _load_payload(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError:
        path = Path(text)
        if path.exists():
            try:
                return json.loads(path.read_text(encoding="utf-8"))
            except json.JSONDecodeError as exc:
                raise InputError(f"file {text} does not contain valid JSON") from exc
        raise InputError(f"neither valid JSON nor an existing file: {text!r}")


def _field_spec(args) -> FieldSpec:
    kind = {"qp": "Qp", "fpt": "FpT"}[args.field]
    try:
        return FieldSpec(kind, args.p)
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def _parse_lambda(text: str):
    try:
        return tuple(int(part) for part in text.split(","))
    except ValueError as exc:
        raise InputError(f"invalid partition: {text!r}") from exc


def _parse_values(text: str):
    try:
        return tuple(Fraction(part) for part in text.split(","))
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"invalid value list: {text!r}") from exc


def _emit(args, text: str):
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _emit_json(args, doc) -> None:
    _emit(args, json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n")


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", choices=("qp", "fpt"), default="qp",
                        help="ground field: p-adic rationals or F_p(T)")
    common.add_argument("--p", type=int, default=2,
                        help="residue characteristic (a prime)")
    common.add_argument("--group", choices=("sln", "sp2n"), default="sln",
                        help="which group's predicates to use")
    common.add_argument("--seed", type=int, default=None,
                        help="seed for randomized runs (mandatory there)")
    common.add_argument("--out", default=None, help="write output to this path")

    parser = argparse.ArgumentParser(
        prog="tropstab",
        description="exact max-plus stabilizers over discretely valued fields")
    sub = parser.add_subparsers(dest="command", required=True)

    st = sub.add_parser("stabilize", parents=[common],
                        help="tropical stabilizer membership for a point")
    st.add_argument("--matrix", required=True,
                    help="matrix payload, or an array of matrices to compare "
                         "product action with composed action")
    st.add_argument("--point", required=True, help="point payload")
    st.add_argument("--boundary", action="store_true",
                    help="treat the point as a boundary point")

    ver = sub.add_parser("verify", parents=[common], help="run a property suite")
    ver.add_argument("--suite", required=True,
                     help="semiring | stabilizer | parahoric | sp | fans | "
                          "hypersurface | schur | boundary")
    ver.add_argument("--n", type=int, default=3)
    ver.add_argument("--count", type=int, default=None)
    ver.add_argument("--matrices", type=int, default=None)
    ver.add_argument("--points", type=int, default=None)
    ver.add_argument("--samples", type=int, default=None)
    ver.add_argument("--rep", choices=("identity", "sp", "schur"),
                     default="identity")
    ver.add_argument("--lambda", dest="lam", default=None,
                     help="partition, e.g. 2,1,0")

    fan = sub.add_parser("fan", parents=[common],
                         help="maximal cones and vertices of a weight fan")
    fan.add_argument("--rep", choices=("identity", "sp", "schur"), required=True)
    fan.add_argument("--n", type=int, default=None)
    fan.add_argument("--lambda", dest="lam", default=None)

    sch = sub.add_parser("schur", parents=[common],
                         help="evaluate a Schur polynomial by both routes")
    sch.add_argument("--lambda", dest="lam", required=True)
    sch.add_argument("--z", required=True, help="comma-separated rationals")

    hyp = sub.add_parser("hypersurface", parents=[common],
                         help="sample tropical hypersurface membership")
    hyp.add_argument("--rep", choices=("identity", "sp", "schur"),
                     default="identity")
    hyp.add_argument("--n", type=int, default=None)
    hyp.add_argument("--lambda", dest="lam", default=None)
    hyp.add_argument("--sample", type=int, required=True)

    bst = sub.add_parser("boundary-stabilize", parents=[common],
                         help="stabilizer membership for a boundary point")
    bst.add_argument("--matrix", required=True)
    bst.add_argument("--point", required=True)

    plot = sub.add_parser("plot", parents=[common],
                          help="SVG figure of a rank-two fan")
    plot.add_argument("--target", choices=("fan", "hypersurface"), default="fan")
    plot.add_argument("--rep", choices=("identity", "sp", "schur"),
                      default="identity")
    plot.add_argument("--n", type=int, default=None)
    plot.add_argument("--lambda", dest="lam", default=None)
    plot.add_argument("--sample", type=int, default=0)
    plot.add_argument("--walls", action="store_true")

    return parser


def _require_seed(args):
    if args.seed is None:
        raise InputError("--seed is required for randomized runs")
    return args.seed


def _char_params(args):
    lam = _parse_lambda(args.lam) if args.lam else None
    n = args.n
    if args.rep == "schur" and lam is None:
        raise InputError("--lambda is required for the schur representation")
    if args.rep in ("identity", "sp") and n is None:
        raise InputError("--n is required for this representation")
    return args.rep, n, lam


def _cmd_stabilize(args) -> int:
    spec = _field_spec(args)
    payload = _load_payload(args.matrix)
    point_payload = _load_payload(args.point)
    if (isinstance(payload, list) and payload
            and isinstance(payload[0], list) and payload[0]
            and isinstance(payload[0][0], list)):
        matrices = [matrix_from_json(spec, m) for m in payload]
    else:
        matrices = [matrix_from_json(spec, payload)]
    coords = point_from_json(point_payload)
    boundary = args.boundary or any(c is NEG_INF for c in coords)

    product = matrices[0]
    for m in matrices[1:]:
        product = product * m

    doc = {
        "field": spec_to_json(spec),
        "point": point_to_json(coords),
        "tropicalized": [point_to_json(row) for row in tropicalize(product)],
    }

    if boundary:
        bp = BoundaryPoint(coords)
        if args.group == "sp2n":
            from .errors import NotSymplecticError
            from .symplectic import is_symplectic
            if not is_symplectic(product):
                raise NotSymplecticError("matrix does not preserve the symplectic form")
        value = boundary_stabilizes(product, bp)
        image = trop_matvec(tropicalize(product), coords)
        doc["canonical_point"] = point_to_json(bp.coords)
    elif args.group == "sp2n":
        x = SpApartmentPoint(coords)
        value = sp_stabilizer_membership(product, x)
        from .symplectic import embed_point
        embedded = embed_point(x).coords
        image = trop_matvec(tropicalize(product), embedded)
        doc["embedded_point"] = point_to_json(embedded)
    else:
        x = ApartmentPoint(coords)
        value = stabilizer_membership(product, x)
        image = trop_matvec(tropicalize(product), coords)
        doc["canonical_point"] = point_to_json(x.coords)

    doc["stabilizes"] = value
    doc["image"] = point_to_json(image)

    if len(matrices) > 1:
        composed = list(coords)
        for m in reversed(matrices):
            composed = list(trop_matvec(tropicalize(m), composed))
        doc["composed_image"] = point_to_json(composed)
        doc["product_image"] = doc["image"]

    _emit_json(args, doc)
    return 0


def _expected_cone_count(rep, n, lam):
    if rep == "identity":
        return n
    if rep == "sp":
        return 2 * n
    import itertools
    rank = n if n else len(lam)
    padded = tuple(lam) + (0,) * (rank - len(lam))
    return len(set(itertools.permutations(padded)))


def _cmd_verify(args) -> int:
    spec = _field_spec(args)
    seed = _require_seed(args)
    suite = args.suite
    if suite == "semiring":
        report = suites.run_semiring(seed, count=args.count or 200, spec=spec)
    elif suite == "stabilizer":
        report = suites.run_stabilizer(
            spec, args.n, seed,
            matrices=args.matrices or 100,
            points=args.points or 10,
            closure_pairs=args.count or 100)
    elif suite == "parahoric":
        report = suites.run_parahoric(spec, args.n, seed, count=args.count or 100)
    elif suite == "sp":
        report = suites.run_sp(spec, args.n, seed, count=args.count or 100)
    elif suite == "fans":
        rep, n, lam = _char_params(args)
        report = suites.run_fans(rep, seed, n=n, lam=lam,
                                 samples=args.samples or 500,
                                 expected_cones=_expected_cone_count(rep, n, lam))
    elif suite == "hypersurface":
        rep, n, lam = _char_params(args)
        report = suites.run_hypersurface(rep, args.p, seed, n=n, lam=lam,
                                         samples=args.samples or 500)
    elif suite == "schur":
        report = suites.run_schur(seed, inputs=args.count or 10)
    elif suite == "boundary":
        if args.group == "sp2n":
            report = suites.run_sp_boundary(spec, seed, count=args.count or 100)
        else:
            report = suites.run_boundary(spec, args.n, seed,
                                         count=args.count or 100)
    else:
        raise UnknownSuiteError(f"unknown suite {suite!r}")
    _emit_json(args, report)
    return 0 if report["pass"] else 1


def _cmd_fan(args) -> int:
    rep, n, lam = _char_params(args)
    char = suites.character_from_params(rep, n, lam)
    _emit_json(args, fan_to_json(weight_fan(char)))
    return 0


def _cmd_schur(args) -> int:
    lam = _parse_lambda(args.lam)
    values = _parse_values(args.z)
    tabl = schur_eval_tableaux(lam, values)
    bial = schur_eval_bialternant(lam, values)
    doc = {
        "lambda": list(lam),
        "z": [str(v) for v in values],
        "tableaux": str(tabl),
        "bialternant": str(bial),
        "agree": tabl == bial,
    }
    _emit_json(args, doc)
    return 0 if tabl == bial else 1


def _cmd_hypersurface(args) -> int:
    import random as _random

    from .sampling import random_fraction
    from .weights import skeleton_member, tropical_hypersurface_member

    rep, n, lam = _char_params(args)
    char = suites.character_from_params(rep, n, lam)
    seed = _require_seed(args)
    rng = _random.Random(seed)
    fan = weight_fan(char)
    samples = []
    agree = True
    for _ in range(args.sample):
        coords = tuple(random_fraction(rng, 12, 4) for _ in range(char.rank))
        member = tropical_hypersurface_member(char, args.p, coords)
        skel = skeleton_member(fan, coords)
        agree = agree and member == skel
        samples.append({"point": point_to_json(coords), "member": member,
                        "skeleton": skel})
    doc = {"field_p": args.p, "rep": rep, "seed": seed,
           "samples": samples, "agree_all": agree}
    _emit_json(args, doc)
    return 0 if agree else 1


def _cmd_boundary_stabilize(args) -> int:
    spec = _field_spec(args)
    matrix = matrix_from_json(spec, _load_payload(args.matrix))
    coords = point_from_json(_load_payload(args.point))
    bp = BoundaryPoint(coords)
    value = boundary_stabilizes(matrix, bp)
    doc = {
        "field": spec_to_json(spec),
        "point": point_to_json(bp.coords),
        "stratum": sorted(bp.stratum),
        "tropicalized": [point_to_json(row) for row in tropicalize(matrix)],
        "image": point_to_json(trop_matvec(tropicalize(matrix), bp.coords)),
        "stabilizes": value,
    }
    _emit_json(args, doc)
    return 0


def _cmd_plot(args) -> int:
    rep, n, lam = _char_params(args)
    char = suites.character_from_params(rep, n, lam)
    samples = args.sample if args.target == "hypersurface" else 0
    seed = _require_seed(args) if samples else 0
    svg = svgplot.render_fan_svg(char, p=args.p, samples=samples, seed=seed,
                                 walls=args.walls)
    _emit(args, svg)
    return 0


_DISPATCH = {
    "stabilize": _cmd_stabilize,
    "verify": _cmd_verify,
    "fan": _cmd_fan,
    "schur": _cmd_schur,
    "hypersurface": _cmd_hypersurface,
    "boundary-stabilize": _cmd_boundary_stabilize,
    "plot": _cmd_plot,
}


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _DISPATCH[args.command](args)
    except (InputError, UnknownSuiteError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except TropstabError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
