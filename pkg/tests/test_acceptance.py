"""Acceptance criteria, each at its full stated range.

Every test reports into ``RESULTS``; ``conftest.pytest_terminal_summary``
prints one PASS/FAIL line per criterion after the run.  Run just this
module with ``pytest tests/test_acceptance.py``.
"""

import functools
import random
from fractions import Fraction as F

import pytest

from tetlab.classification import (
    ONE_POINT_REPRESENTATIVES,
    RIPE_QUADRUPLES,
    enumerate_ripe,
    interior_point_info,
    is_empty_white,
    lambda_table,
)
from tetlab.equivalence import are_equivalent, canonical_pair, candidate_pairs, is_clean_params
from tetlab.lattice import (
    Direction,
    LatticeTetrahedron,
    StandardTet,
    apply_map,
    barycentric_general,
    barycentric_of,
    normalized_volume,
    point_from_barycentric,
)
from tetlab.normalization import to_standard
from tetlab.pointcount import (
    a_t_numerators,
    census,
    construct_from_bc,
    corner_tetrahedra,
    interior_count_formula,
    interior_points_formula,
    pairwise_sum_empty_test,
)
from tetlab.survey import check_duong_bounds, check_extremal_families, sweep
from tetlab.width import lattice_width, lattice_width_value, width_bound, width_of_tetrahedron

from conftest import clean_tets, random_unimodular

# criterion id -> list of (part, passed)
RESULTS: dict[str, list[tuple[str, bool]]] = {}


def criterion(cid: str, part: str):
    def wrap(fn):
        @functools.wraps(fn)
        def run(*args, **kwargs):
            try:
                fn(*args, **kwargs)
            except BaseException:
                RESULTS.setdefault(cid, []).append((part, False))
                raise
            RESULTS.setdefault(cid, []).append((part, True))

        return run

    return wrap


@pytest.fixture(scope="module")
def catalog():
    return sweep(100, width_max_n=0)


@pytest.fixture(scope="module")
def one_point_records(catalog):
    return [r for r in catalog if r.i == 1]


@criterion("1", "formula vs census, clean n <= 40")
def test_c01_formula_matches_census():
    for a, b, n in clean_tets(2, 40):
        T = StandardTet(a, b, n)
        cen = census(T.to_lattice())
        pts = sorted(interior_points_formula(T))
        assert interior_count_formula(T) == len(cen.interior), T
        assert pts == cen.interior, T


@criterion("2", "gcd-clean iff no boundary points, n <= 40")
def test_c02_clean_iff_no_boundary_points():
    for n in range(2, 41):
        for a in range(n):
            for b in range(n):
                T = StandardTet(a, b, n)
                assert is_clean_params(a, b, n) == (not census(T.to_lattice()).boundary_nonvertex), T


@criterion("3", "empty iff (1,d) candidate iff pairwise-sum test, n <= 60")
def test_c03_three_way_emptiness():
    for a, b, n in clean_tets(2, 60):
        T = StandardTet(a, b, n)
        empty = interior_count_formula(T) == 0
        white = any(p[0] == 1 for p in candidate_pairs(T))
        assert empty == white == pairwise_sum_empty_test(T), T
        assert white == is_empty_white(T)


@criterion("4", "eight 1-point classes, n <= 100")
def test_c04_one_point_classes(one_point_records):
    classes = {r.canonical + (r.n,) for r in one_point_records}
    assert len(classes) == 8
    reps = [StandardTet(*t) for t in ONE_POINT_REPRESENTATIVES]
    matched = set()
    for a, b, n in classes:
        hits = [R for R in reps if are_equivalent(StandardTet(a, b, n), R)]
        assert len(hits) == 1
        matched.add(hits[0])
    assert matched == set(reps)


@criterion("5", "enumerate_ripe(50) is the seven quadruples")
def test_c05_ripe():
    assert [q.d for q in enumerate_ripe(50)] == list(RIPE_QUADRUPLES)


@criterion("6", "1-point barycentrics lie in the lambda table")
def test_c06_bc_table(one_point_records):
    allowed = {lam.sorted() for lam in lambda_table()}
    for r in one_point_records:
        ((_, bc),) = r.interior_points
        assert tuple(sorted(bc)) in allowed, r
    (info,) = interior_point_info(StandardTet(3, 7, 20))
    assert info.bc.sorted() == lambda_table()[0].sorted()
    assert (info.N, info.g) == (4, 5)


@criterion("7", "Duong bounds and extremal families")
def test_c07_duong(catalog):
    rep = check_duong_bounds(catalog)
    assert rep["duong_counterexamples"] == []
    assert any(r.i >= 1 for r in catalog)
    for k in range(1, 21):
        assert interior_count_formula(StandardTet(3 * k, 3 * k, 3 * k + 1)) == k
        assert interior_count_formula(StandardTet(2 * k + 1, 4 * k + 3, 12 * k + 8)) == k
    assert check_extremal_families(20)


def _d(*u):
    return Direction.normalize(*u)


# printed minimal directions with printed occupancy profiles
PRINTED_WIDTH = {
    (3, 3, 4): {
        **{_d(*u): (1, 3, 1) for u in [(1, 0, -1), (0, 1, -1), (1, -1, 0), (2, 1, -2), (1, 2, -2), (1, 1, -1)]},
        **{_d(*u): (2, 1, 2) for u in [(2, 0, -1), (0, 2, -1), (2, 2, -3)]},
    },
    (2, 2, 5): {
        **{_d(*u): (1, 3, 1) for u in [(2, 1, -1), (1, 2, -1), (1, -1, 0)]},
        **{_d(*u): (2, 2, 1) for u in [(1, 0, 0), (0, 1, 0), (1, 1, -1)]},
    },
    (2, 4, 7): {
        _d(2, 1, -1): (1, 3, 1),
        **{_d(*u): (2, 2, 1) for u in [(1, 0, 0), (0, 2, -1), (1, 1, -1)]},
    },
    (2, 6, 11): {_d(1, 0, 0): (2, 2, 1), _d(0, 2, -1): (2, 2, 1)},
    (2, 7, 13): {_d(1, 0, 0): (2, 2, 1), _d(0, 2, -1): (2, 2, 1)},
    (2, 9, 17): {_d(1, 0, 0): (2, 2, 1), _d(0, 2, -1): (2, 2, 1)},
    (2, 13, 19): {_d(1, 0, 0): (2, 2, 1)},
    (3, 7, 20): {_d(2, 2, -1): (2, 2, 1)},
}


def _same_up_to_sign(got, printed):
    return tuple(got) in (tuple(printed), tuple(reversed(printed)))


@criterion("8", "width 2 for the eight classes; printed directions")
def test_c08_width_directions():
    for t in ONE_POINT_REPRESENTATIVES:
        rep = lattice_width(StandardTet(*t), with_occupancy=False)
        assert rep.width == 2, t
        assert set(rep.minimal_directions) == set(PRINTED_WIDTH[t]), t


@criterion("8", "printed occupancies (up to sign)")
@pytest.mark.parametrize("tet", [t for t in ONE_POINT_REPRESENTATIVES if t != (3, 7, 20)])
def test_c08_occupancy(tet):
    rep = lattice_width(StandardTet(*tet))
    for d, printed in PRINTED_WIDTH[tet].items():
        assert _same_up_to_sign(rep.occupancy[d], printed), (tet, d, rep.occupancy[d], printed)
    if tet == (3, 3, 4):
        profiles = sorted(tuple(v) for v in rep.occupancy.values())
        assert profiles == [(1, 3, 1)] * 6 + [(2, 1, 2)] * 3


@criterion("8", "printed occupancy (2,2,1) for T_{3,7,20}, u=(2,2,-1)")
@pytest.mark.xfail(
    strict=True,
    reason="vertex values under u=(2,2,-1) are 0,2,2,0, so two vertices sit on each outer plane; "
    "the profile is (2,1,2)",
)
def test_c08_occupancy_3_7_20():
    rep = lattice_width(StandardTet(3, 7, 20))
    (d,) = rep.minimal_directions
    assert _same_up_to_sign(rep.occupancy[d], PRINTED_WIDTH[(3, 7, 20)][d])


@criterion("8", "T_{3,5,23} width 3; T_{m,m^2,m^3+1} width m")
def test_c08_width_other():
    assert lattice_width_value(StandardTet(3, 5, 23)) == 3
    for m in (2, 3, 4, 5):
        assert lattice_width_value(StandardTet(m, m * m, m**3 + 1)) == m


@criterion("9", "width <= 2*ceil(n^(1/3)), clean n <= 200")
def test_c09_width_bound():
    for a, b, n in clean_tets(1, 200):
        assert lattice_width_value(StandardTet(a, b, n)) <= width_bound(n), (a, b, n)


@criterion("10", "A_t + A_(n-t) = 4, clean n <= 60")
def test_c10_a_t_symmetry():
    for a, b, n in clean_tets(2, 60):
        nums = a_t_numerators(a, b, n)
        assert all(nums[t - 1] + nums[n - t - 1] == 4 * n for t in range(1, n)), (a, b, n)


@criterion("10", "barycentric round trip")
def test_c10_bc_roundtrip():
    rng = random.Random(7)
    for _ in range(2000):
        n = rng.randint(1, 60)
        T = StandardTet(rng.randrange(n), rng.randrange(n), n)
        w = (rng.randint(-50, 50), rng.randint(-50, 50), rng.randint(-80, 80))
        bc = barycentric_of(T, w)
        assert sum(bc) == 1
        assert point_from_barycentric(T, bc) == w
        assert barycentric_general(T.to_lattice(), w) == bc


def _invariants(T: LatticeTetrahedron):
    cen = census(T)
    bcs = sorted(barycentric_general(T, w).sorted() for w in cen.interior)
    return normalized_volume(T), len(cen.interior), width_of_tetrahedron(T, with_occupancy=False).width, bcs


@criterion("10", "(n, i, width, BC multiset) invariant under 1000 random maps")
def test_c10_unimodular_invariance():
    rng = random.Random(20240607)
    pool = list(clean_tets(2, 24))
    for _ in range(1000):
        a, b, n = rng.choice(pool)
        T = StandardTet(a, b, n).to_lattice()
        img = apply_map(random_unimodular(rng), T)
        assert _invariants(img) == _invariants(T), (a, b, n)
        res = to_standard(img)
        assert are_equivalent(res.standard, StandardTet(a, b, n))


@criterion("10", "corner tetrahedra of 1-point representatives are empty")
def test_c10_corner_emptiness():
    for t in ONE_POINT_REPRESENTATIVES:
        T = StandardTet(*t)
        (w,) = interior_points_formula(T)
        for C in corner_tetrahedra(T.to_lattice(), w):
            cen = census(C)
            assert not cen.interior and not cen.boundary_nonvertex, (t, C)


@criterion("10", "construct_from_bc self-verifies for the ripe quadruples")
def test_c10_construct_from_bc():
    for d in RIPE_QUADRUPLES:
        N = sum(d)
        T, w = construct_from_bc(d, N)
        assert tuple(barycentric_of(T, w)) == tuple(F(x, N) for x in d)
        assert w in interior_points_formula(T)


@criterion("10", "n >= 2k+1 across the sweep")
def test_c10_n_vs_k(catalog):
    assert all(r.n >= 2 * r.i + 1 for r in catalog)


@criterion("11", "2-point anecdotes")
def test_c11_two_point_anecdotes():
    assert interior_points_formula(StandardTet(5, 5, 7)) == [(1, 1, 1), (3, 3, 4)]
    assert interior_points_formula(StandardTet(5, 5, 8)) == [(1, 1, 1), (2, 2, 3)]
    assert interior_points_formula(StandardTet(11, 13, 16)) == [(1, 1, 1), (5, 6, 7)]
    v1, v2, v3, v4 = StandardTet(11, 13, 16).vertices()
    w1, w2 = (1, 1, 1), (5, 6, 7)
    assert barycentric_general(LatticeTetrahedron.from_points(v1, v2, v3, w2), w1) == (
        F(3, 7), F(2, 7), F(1, 7), F(1, 7))
    assert barycentric_general(LatticeTetrahedron.from_points(v2, v3, v4, w1), w2) == (
        F(1, 7), F(2, 7), F(3, 7), F(1, 7))
