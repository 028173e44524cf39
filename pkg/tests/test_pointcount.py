from fractions import Fraction as F

import pytest

from tetlab.errors import NotClean, PreconditionError
from tetlab.lattice import LatticeTetrahedron, StandardTet, barycentric_of, normalized_volume
from tetlab.pointcount import (
    a_t,
    a_t_numerators,
    bc_row,
    bc_table,
    census,
    construct_from_bc,
    corner_tetrahedra,
    interior_count_formula,
    interior_points_formula,
    is_clean_standard,
    nogen_check,
    pairwise_sum_empty_test,
)

from conftest import clean_tets


def test_a_t_examples():
    T = StandardTet(3, 7, 20)
    assert a_t(T, 5) == 1
    assert a_t(T, 1) == F(9 + 17 + 13 + 1, 20)
    with pytest.raises(PreconditionError):
        a_t(T, 0)


def test_a_t_numerators_match_fractions():
    for a, b, n in [(3, 7, 20), (2, 4, 6), (5, 5, 8)]:
        T = StandardTet(a, b, n)
        assert a_t_numerators(a, b, n) == [a_t(T, t) * n for t in range(1, n)]


def test_a_t_symmetry():
    for a, b, n in clean_tets(2, 60):
        nums = a_t_numerators(a, b, n)
        for t in range(1, n):
            assert nums[t - 1] + nums[n - t - 1] == 4 * n


@pytest.mark.parametrize(
    "tet,points",
    [
        ((3, 7, 20), [(1, 2, 5)]),
        ((3, 3, 4), [(1, 1, 1)]),
        ((2, 2, 5), [(1, 1, 2)]),
        ((1, 1, 2), []),
        ((0, 0, 1), []),
        ((5, 5, 7), [(1, 1, 1), (3, 3, 4)]),
    ],
)
def test_interior_points_formula(tet, points):
    T = StandardTet(*tet)
    assert interior_points_formula(T) == points
    assert interior_count_formula(T) == len(points)


def test_formula_requires_clean():
    with pytest.raises(NotClean):
        interior_count_formula(StandardTet(2, 4, 6))


def test_census_examples():
    cen = census(StandardTet(7, 7, 8).to_lattice())
    assert (1, 1, 1) in cen.interior and (2, 2, 2) in cen.interior
    cen = census(StandardTet(2, 4, 6).to_lattice())
    assert (1, 2, 3) in cen.boundary_nonvertex
    assert census(StandardTet(0, 0, 1).to_lattice()).total == 4


def test_census_on_moved_copy():
    T = LatticeTetrahedron.from_points((5, -3, 2), (6, -3, 2), (5, -2, 2), (8, 4, 22))
    assert census(T).interior == [(6, -1, 7)]


def test_formula_matches_census_small():
    for a, b, n in clean_tets(2, 16):
        T = StandardTet(a, b, n)
        cen = census(T.to_lattice())
        assert cen.interior == sorted(interior_points_formula(T))
        assert cen.boundary_nonvertex == []


def test_cleanliness_matches_census_small():
    for n in range(2, 13):
        for a in range(n):
            for b in range(n):
                T = StandardTet(a, b, n)
                assert is_clean_standard(T) == (not census(T.to_lattice()).boundary_nonvertex)


def test_n_at_least_2k_plus_1():
    for a, b, n in clean_tets(2, 40):
        assert n >= 2 * interior_count_formula(StandardTet(a, b, n)) + 1


def test_bc_row_and_table():
    T = StandardTet(4, 4, 5)
    assert bc_row(T, 1) == (F(2, 5), F(1, 5), F(1, 5), F(1, 5))
    tab = bc_table(T)
    assert len(tab.rows) == 4
    assert tab.row(1) == bc_row(T, 1)
    # row sum is A_t
    for t in range(1, 5):
        assert sum(tab.row(t)) == a_t(T, t)
    with pytest.raises(PreconditionError):
        bc_table(StandardTet(0, 0, 1))


def test_bc_row_at_interior_point_is_barycentric():
    T = StandardTet(3, 7, 20)
    assert bc_row(T, 5) == tuple(barycentric_of(T, (1, 2, 5)))


def test_pairwise_sum_test_matches_count():
    for a, b, n in clean_tets(2, 30):
        T = StandardTet(a, b, n)
        assert pairwise_sum_empty_test(T) == (interior_count_formula(T) == 0)


def test_nogen_check():
    assert nogen_check((1, 1, 1, 1), 4)
    assert nogen_check((2, 3, 5, 7), 17)
    assert not nogen_check((1, 1, 1, 4), 7)
    with pytest.raises(PreconditionError):
        nogen_check((1, 1, 2, 4), 8)
    with pytest.raises(PreconditionError):
        nogen_check((1, 1, 1, 1), 5)


@pytest.mark.parametrize(
    "d,N,expected",
    [((1, 1, 1, 2), 5, ((2, 2, 5), (1, 1, 2))), ((1, 1, 1, 1), 4, ((3, 3, 4), (1, 1, 1)))],
)
def test_construct_from_bc_examples(d, N, expected):
    T, w = construct_from_bc(d, N)
    assert (T.a, T.b, T.n) == expected[0]
    assert w == expected[1]


@pytest.mark.parametrize(
    "d,N", [((1, 1, 2, 3), 7), ((2, 1, 3, 5), 11), ((1, 3, 4, 5), 13), ((2, 3, 5, 7), 17), ((3, 5, 4, 7), 19)]
)
def test_construct_from_bc_realizes_input(d, N):
    T, w = construct_from_bc(d, N)
    assert T.n == N
    assert tuple(barycentric_of(T, w)) == tuple(F(x, N) for x in d)
    assert is_clean_standard(T)
    assert w in interior_points_formula(T)


def test_construct_from_bc_rejects_bad_input():
    with pytest.raises(PreconditionError):
        construct_from_bc((1, 1, 2, 4), 8)
    with pytest.raises(PreconditionError):
        construct_from_bc((1, 1, 1, 1), 5)


def test_corner_tetrahedra():
    T = StandardTet(3, 3, 4).to_lattice()
    corners = corner_tetrahedra(T, (1, 1, 1))
    assert len(corners) == 4
    assert sum(normalized_volume(C) for C in corners) == 4
    for j, C in enumerate(corners):
        assert T.vertices[j] not in C.vertices
        assert (1, 1, 1) in C.vertices
