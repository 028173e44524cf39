"""Exhaustive sweeps over clean ``T_{a,b,n}`` and checks run on the resulting catalog.

Catalogs are JSON Lines, one record per clean ``(a, b, n)`` in ``(n, a, b)``
order, each tagged with ``"schema": "tetlab-catalog/1"``.  The sweep fans out
over ``n`` and always merges results in input order, so output is
byte-identical for any worker count.
"""

from __future__ import annotations

import csv
import json
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import IO, Iterable, Sequence

from .classification import interior_point_info
from .equivalence import are_equivalent, canonical_pair, is_clean_params
from .exact import format_rational
from .lattice import LatticePoint, StandardTet
from .pointcount import interior_count_formula
from .width import _search

SCHEMA = "tetlab-catalog/1"
DEFAULT_WIDTH_MAX_N = 200


@dataclass(frozen=True)
class CatalogRecord:
    a: int
    b: int
    n: int
    c_mod_n: int
    clean: bool
    i: int
    width: int | None
    canonical: tuple[int, int]
    interior_points: list[tuple[LatticePoint, tuple]] = field(default_factory=list)
    minimal_direction_count: int | None = None

    @property
    def tet(self) -> StandardTet:
        return StandardTet(self.a, self.b, self.n)

    def to_json(self) -> dict:
        return {
            "schema": SCHEMA,
            "a": self.a,
            "b": self.b,
            "n": self.n,
            "c_mod_n": self.c_mod_n,
            "clean": self.clean,
            "i": self.i,
            "width": self.width,
            "canonical": list(self.canonical),
            "interior_points": [
                {"point": list(p), "bc": [format_rational(q) for q in bc]}
                for p, bc in self.interior_points
            ],
            "minimal_direction_count": self.minimal_direction_count,
        }

    @classmethod
    def from_json(cls, obj: dict) -> "CatalogRecord":
        from fractions import Fraction

        if obj.get("schema") != SCHEMA:
            raise ValueError(f"unsupported catalog schema {obj.get('schema')!r}")
        return cls(
            a=obj["a"],
            b=obj["b"],
            n=obj["n"],
            c_mod_n=obj["c_mod_n"],
            clean=obj["clean"],
            i=obj["i"],
            width=obj["width"],
            canonical=tuple(obj["canonical"]),
            interior_points=[
                (LatticePoint(*ip["point"]), tuple(Fraction(q) for q in ip["bc"]))
                for ip in obj["interior_points"]
            ],
            minimal_direction_count=obj["minimal_direction_count"],
        )


def make_record(a: int, b: int, n: int, with_width: bool = True) -> CatalogRecord:
    T = StandardTet(a, b, n)
    width = ndirs = None
    if with_width:
        width, dirs = _search(T)
        ndirs = len(dirs)
    canon = canonical_pair(T)
    return CatalogRecord(
        a=a,
        b=b,
        n=n,
        c_mod_n=T.c % n,
        clean=True,
        i=interior_count_formula(T),
        width=width,
        canonical=(canon.a_star, canon.b_star),
        interior_points=[(info.point, tuple(info.bc)) for info in interior_point_info(T)],
        minimal_direction_count=ndirs,
    )


def _records_for_n(args: tuple[int, bool]) -> list[CatalogRecord]:
    n, with_width = args
    return [
        make_record(a, b, n, with_width)
        for a in range(n)
        for b in range(n)
        if is_clean_params(a, b, n)
    ]


def default_workers() -> int:
    env = os.environ.get("TETLAB_THREADS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def sweep(n_max: int, workers: int | None = None, width_max_n: int = DEFAULT_WIDTH_MAX_N) -> list[CatalogRecord]:
    """One record per clean ``T_{a,b,n}`` with ``2 <= n <= n_max``.

    Widths are computed for ``n <= width_max_n`` and left as ``None`` above it.
    """
    if n_max < 2:
        raise ValueError("n_max must be at least 2")
    workers = default_workers() if workers is None else workers
    jobs = [(n, n <= width_max_n) for n in range(2, n_max + 1)]
    if workers <= 1:
        chunks = map(_records_for_n, jobs)
        return [r for chunk in chunks for r in chunk]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        # map() yields in submission order, which keeps the output deterministic
        return [r for chunk in pool.map(_records_for_n, jobs) for r in chunk]


def write_jsonl(records: Iterable[CatalogRecord], fh: IO[str]) -> None:
    for r in records:
        fh.write(json.dumps(r.to_json(), separators=(",", ":")) + "\n")


def read_jsonl(fh: IO[str]) -> list[CatalogRecord]:
    return [CatalogRecord.from_json(json.loads(line)) for line in fh if line.strip()]


CSV_FIELDS = ("a", "b", "n", "c_mod_n", "clean", "i", "width", "canonical_a", "canonical_b", "minimal_direction_count")


def write_csv(records: Iterable[CatalogRecord], fh: IO[str]) -> None:
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(CSV_FIELDS)
    for r in records:
        w.writerow([
            r.a, r.b, r.n, r.c_mod_n, int(r.clean), r.i,
            "" if r.width is None else r.width,
            r.canonical[0], r.canonical[1],
            "" if r.minimal_direction_count is None else r.minimal_direction_count,
        ])


def check_duong_bounds(records: Sequence[CatalogRecord]) -> dict:
    """``3k+1 <= n <= 12k+8`` for every record with ``k >= 1``; also report extreme uniqueness."""
    bad = [
        {"a": r.a, "b": r.b, "n": r.n, "k": r.i}
        for r in records
        if r.i >= 1 and not (3 * r.i + 1 <= r.n <= 12 * r.i + 8)
    ]
    not_unique = []
    for r in records:
        k = r.i
        if k < 1:
            continue
        if r.n == 3 * k + 1:
            ref = StandardTet(3 * k, 3 * k, 3 * k + 1)
        elif r.n == 12 * k + 8:
            ref = StandardTet(2 * k + 1, 4 * k + 3, 12 * k + 8)
        else:
            continue
        if not are_equivalent(r.tet, ref):
            not_unique.append({"a": r.a, "b": r.b, "n": r.n, "k": k})
    return {
        "duong_bounds_hold": not bad,
        "duong_counterexamples": bad,
        "duong_extremes_unique": not not_unique,
        "duong_extreme_exceptions": not_unique,
    }


def check_extremal_families(k_max: int) -> bool:
    """The two extremal families and ``i(T_{n-1,n-1,n}) = floor(n/3)``."""
    if k_max < 1:
        raise ValueError("k_max must be at least 1")
    for k in range(1, k_max + 1):
        if interior_count_formula(StandardTet(3 * k, 3 * k, 3 * k + 1)) != k:
            return False
        if interior_count_formula(StandardTet(2 * k + 1, 4 * k + 3, 12 * k + 8)) != k:
            return False
    for n in range(2, 3 * k_max + 2):
        if n % 3 == 0:
            continue
        if interior_count_formula(StandardTet(n - 1, n - 1, n)) != n // 3:
            return False
    return True


def _interior_planes_covered(T: StandardTet, points: Sequence[LatticePoint]) -> list[tuple[int, int, int]]:
    """Minimal directions having an inner plane without an interior point."""
    width, dirs = _search(T)
    missing = []
    for d in dirs:
        u = d.as_tuple()
        vals = [v.dot(u) for v in T.vertices()]
        lo, hi = min(vals), max(vals)
        hit = {p.dot(u) for p in points}
        if any(j not in hit for j in range(lo + 1, hi)):
            missing.append(u)
    return missing


def check_width_conjecture(records: Sequence[CatalogRecord]) -> dict:
    """Width ``<= k+1`` and an interior point on every inner plane of every minimal direction.

    Violations are findings, reported as data.
    """
    width_bad, plane_bad = [], []
    for r in records:
        if r.i < 1 or r.width is None:
            continue
        if r.width > r.i + 1:
            width_bad.append({"a": r.a, "b": r.b, "n": r.n, "k": r.i, "width": r.width})
        missing = _interior_planes_covered(r.tet, [p for p, _ in r.interior_points])
        if missing:
            plane_bad.append({"a": r.a, "b": r.b, "n": r.n, "k": r.i, "directions": [list(u) for u in missing]})
    return {
        "width_le_k_plus_1_holds": not width_bad,
        "width_counterexamples": width_bad,
        "interior_point_per_plane_holds": not plane_bad,
        "interior_point_per_plane_counterexamples": plane_bad,
    }


@dataclass(frozen=True)
class ConjectureReport:
    duong_bounds_hold: bool
    duong_counterexamples: list
    width_le_k_plus_1_holds: bool
    width_counterexamples: list
    interior_point_per_plane_holds: bool
    extra: dict = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "duong_bounds_hold": self.duong_bounds_hold,
            "duong_counterexamples": self.duong_counterexamples,
            "width_le_k_plus_1_holds": self.width_le_k_plus_1_holds,
            "width_counterexamples": self.width_counterexamples,
            "interior_point_per_plane_holds": self.interior_point_per_plane_holds,
            **self.extra,
        }


def conjecture_report(records: Sequence[CatalogRecord]) -> ConjectureReport:
    duong = check_duong_bounds(records)
    width = check_width_conjecture(records)
    n_max = max((r.n for r in records), default=1)
    return ConjectureReport(
        duong_bounds_hold=duong["duong_bounds_hold"],
        duong_counterexamples=duong["duong_counterexamples"],
        width_le_k_plus_1_holds=width["width_le_k_plus_1_holds"],
        width_counterexamples=width["width_counterexamples"],
        interior_point_per_plane_holds=width["interior_point_per_plane_holds"],
        extra={
            "records": len(records),
            "n_max": n_max,
            "duong_extremes_unique": duong["duong_extremes_unique"],
            "duong_extreme_exceptions": duong["duong_extreme_exceptions"],
            "interior_point_per_plane_counterexamples": width["interior_point_per_plane_counterexamples"],
        },
    )
