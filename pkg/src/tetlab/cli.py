"""Command-line entry point.

Every successful command prints one JSON document on stdout (``survey`` also
writes JSON Lines to ``--out``).  Domain errors print ``{"error": {...}}`` on
stderr and exit 1; usage errors exit 2.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from . import classification, equivalence, normalization, pointcount, survey, width
from .errors import PreconditionError, TetlabError
from .exact import format_rational
from .lattice import StandardTet, barycentric_of, parse_tet, parse_vertices


def _standard_from_flag(text: str) -> StandardTet:
    a, b, n = parse_tet(text)
    if n == 0:
        raise PreconditionError("n must be nonzero")
    if n < 0:
        n = -n
    a, b, _ = normalization.euclidean_shear(a, b, n)
    return StandardTet(a, b, n)


def _ints(text: str) -> list[int]:
    return [int(x) for x in text.split(",")]


def _bc_json(bc) -> list[str]:
    return [format_rational(q) for q in bc]


def cmd_normalize(args) -> dict:
    T = parse_vertices(args.vertices)
    res = normalization.to_standard(T)
    return {
        "a": res.standard.a,
        "b": res.standard.b,
        "n": res.standard.n,
        "witness": {
            "matrix": [list(row) for row in res.witness.matrix],
            "translation": list(res.witness.translation),
        },
        "vertex_permutation": [i + 1 for i in res.vertex_permutation],
    }


def cmd_census(args) -> dict:
    T = parse_vertices(args.vertices)
    cen = pointcount.census(T)
    return {
        "vertices": [list(v) for v in T.vertices],
        "normalized_volume": abs(T.signed_det()),
        "interior": [list(p) for p in cen.interior],
        "boundary_nonvertex": [list(p) for p in cen.boundary_nonvertex],
        "vertex_count": cen.vertex_count,
    }


def cmd_count(args) -> dict:
    T = _standard_from_flag(args.tet)
    pts = pointcount.interior_points_formula(T)
    return {
        "tet": [T.a, T.b, T.n],
        "i": len(pts),
        "interior_points": [
            {"point": list(p), "bc": _bc_json(barycentric_of(T, p))} for p in pts
        ],
    }


def cmd_classify(args) -> dict:
    T = _standard_from_flag(args.tet)
    result = classification.classify(T)
    out: dict = {"tet": [T.a, T.b, T.n]}
    if isinstance(result, classification.Empty):
        out.update({"class": "empty", "k": 0})
    else:
        out.update({"class": "k-point", "k": result.k, "canonical": list(result.canonical.as_tuple())})
    out["interior_points"] = [
        {"point": list(info.point), "bc": _bc_json(info.bc), "N": info.N, "g": info.g}
        for info in classification.interior_point_info(T)
    ]
    return out


def cmd_equiv(args) -> dict:
    T1, T2 = _standard_from_flag(args.t1), _standard_from_flag(args.t2)
    verdict = equivalence.compare(T1, T2)
    witness = None
    if verdict is equivalence.Verdict.EQUIVALENT and T1.n > 1:
        witness = [T2.a % T2.n, T2.b % T2.n]
    return {
        "t1": [T1.a, T1.b, T1.n],
        "t2": [T2.a, T2.b, T2.n],
        "equivalent": verdict.value,
        "witness_pair": witness,
    }


def cmd_width(args) -> dict:
    T = _standard_from_flag(args.tet)
    rep = width.lattice_width(T, with_occupancy=args.directions)
    out: dict = {"tet": [T.a, T.b, T.n], "width": rep.width, "direction_count": len(rep.minimal_directions)}
    if args.directions:
        out["directions"] = [
            {"u": list(d.as_tuple()), "occupancy": rep.occupancy[d]} for d in rep.minimal_directions
        ]
    return out


def cmd_ripe(args) -> dict:
    quads = classification.enumerate_ripe(args.max)
    return {"max_d": args.max, "ripe": [{"d": list(q.d), "N": q.N} for q in quads]}


def cmd_construct_bc(args) -> dict:
    d = _ints(args.d)
    N = args.N if args.N is not None else sum(d)
    T, w = pointcount.construct_from_bc(d, N)
    return {
        "tet": [T.a, T.b, T.n],
        "point": list(w),
        "bc": _bc_json(barycentric_of(T, w)),
        "i": pointcount.interior_count_formula(T),
    }


def cmd_survey(args) -> dict:
    records = survey.sweep(args.n_max, workers=args.workers, width_max_n=args.width_max_n)
    with open(args.out, "w", encoding="utf-8") as fh:
        survey.write_jsonl(records, fh)
    if args.csv:
        with open(args.csv, "w", encoding="utf-8", newline="") as fh:
            survey.write_csv(records, fh)
    return {"records": len(records), "n_max": args.n_max, "out": args.out, "csv": args.csv}


def cmd_check(args) -> dict:
    with open(args.catalog, encoding="utf-8") as fh:
        records = survey.read_jsonl(fh)
    return survey.conjecture_report(records).to_json()


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="tetlab", description="Exact computations on lattice tetrahedra.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("normalize", help="reduce vertices to T_{a,b,n}")
    s.add_argument("--vertices", required=True, help='"x,y,z;x,y,z;x,y,z;x,y,z"')
    s.set_defaults(func=cmd_normalize)

    s = sub.add_parser("census", help="brute-force lattice point census")
    s.add_argument("--vertices", required=True)
    s.set_defaults(func=cmd_census)

    s = sub.add_parser("count", help="interior points of a clean T_{a,b,n}")
    s.add_argument("--tet", required=True, help="a,b,n")
    s.set_defaults(func=cmd_count)

    s = sub.add_parser("classify", help="empty / k-point classification")
    s.add_argument("--tet", required=True)
    s.set_defaults(func=cmd_classify)

    s = sub.add_parser("equiv", help="unimodular equivalence of two standard tetrahedra")
    s.add_argument("--t1", required=True)
    s.add_argument("--t2", required=True)
    s.set_defaults(func=cmd_equiv)

    s = sub.add_parser("width", help="exact lattice width")
    s.add_argument("--tet", required=True)
    s.add_argument("--directions", action="store_true", help="list minimal directions with occupancy")
    s.set_defaults(func=cmd_width)

    s = sub.add_parser("ripe", help="enumerate ripe quadruples")
    s.add_argument("--max", type=int, default=20)
    s.set_defaults(func=cmd_ripe)

    s = sub.add_parser("construct-bc", help="build a tetrahedron realizing d/N as barycentrics")
    s.add_argument("--d", required=True, help="d1,d2,d3,d4")
    s.add_argument("--N", type=int, default=None, help="defaults to d1+d2+d3+d4")
    s.set_defaults(func=cmd_construct_bc)

    s = sub.add_parser("survey", help="sweep all clean T_{a,b,n} into a JSONL catalog")
    s.add_argument("--n-max", type=int, required=True)
    s.add_argument("--out", required=True)
    s.add_argument("--csv", default=None)
    s.add_argument("--workers", type=int, default=None, help="defaults to $TETLAB_THREADS or the CPU count")
    s.add_argument("--width-max-n", type=int, default=survey.DEFAULT_WIDTH_MAX_N)
    s.set_defaults(func=cmd_survey)

    s = sub.add_parser("check", help="evaluate conjectures over a catalog")
    s.add_argument("--catalog", required=True)
    s.set_defaults(func=cmd_check)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        out = args.func(args)
    except TetlabError as exc:
        print(json.dumps(exc.to_json()), file=sys.stderr)
        return 1
    except ValueError as exc:
        print(json.dumps({"error": {"code": "BAD_INPUT", "message": str(exc)}}), file=sys.stderr)
        return 1
    except OSError as exc:
        print(json.dumps({"error": {"code": "IO_ERROR", "message": str(exc)}}), file=sys.stderr)
        return 1
    print(json.dumps(out))
    return 0


if __name__ == "__main__":
    sys.exit(main())
