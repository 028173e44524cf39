"""Cleanliness, interior-point counting and the brute-force census oracle.

Two independent routes count interior points of ``T_{a,b,n}``:

* the fractional-part formula: the only candidates are
  ``w_t = (ceil(ta/n), ceil(tb/n), t)`` for ``1 <= t <= n-1``, and ``w_t`` is
  interior exactly when ``A_t = 1``;
* :func:`census`, which classifies every integer point of the bounding box by
  the signs of its exact barycentric coordinates.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .equivalence import is_clean_params
from .errors import InternalInconsistency, NotClean, PreconditionError
from .exact import frac_part, mod_inverse
from .lattice import (
    LatticePoint,
    LatticeTetrahedron,
    StandardTet,
    adjugate3,
    barycentric_of,
    det3,
)
from .normalization import _box_chunks, _fits_int64, euclidean_shear

@dataclass(frozen=True)
class Census:
    interior: list[LatticePoint]
    boundary_nonvertex: list[LatticePoint]
    vertex_count: int = 4

    @property
    def total(self) -> int:
        return self.vertex_count + len(self.interior) + len(self.boundary_nonvertex)

    def all_points(self, T: LatticeTetrahedron) -> list[LatticePoint]:
        return sorted({*T.vertices, *self.interior, *self.boundary_nonvertex})

def is_clean_standard(T: StandardTet) -> bool:
    return is_clean_params(T.a, T.b, T.n)

def _require_clean(T: StandardTet) -> None:
    if not is_clean_standard(T):
        raise NotClean(f"{T} is not clean")

def a_t(T: StandardTet, t: int) -> Fraction:
    n = T.n
    if not 1 <= t <= n - 1:
        raise PreconditionError(f"t={t} outside [1, {n - 1}]")
    return (
        frac_part(Fraction(t * (n - T.c), n))
        + frac_part(Fraction(t * (n - T.a), n))
        + frac_part(Fraction(t * (n - T.b), n))
        + frac_part(Fraction(t, n))
    )

def a_t_numerators(a: int, b: int, n: int) -> list[int]:
    """``n * A_t`` for ``t = 1..n-1``, in integers."""
    c = 1 - a - b
    return [
        (t * (n - c)) % n + (t * (n - a)) % n + (t * (n - b)) % n + t % n
        for t in range(1, n)
    ]

def interior_ts(a: int, b: int, n: int) -> list[int]:
    return [t for t, s in enumerate(a_t_numerators(a, b, n), start=1) if s == n]

def interior_count_formula(T: StandardTet) -> int:
    _require_clean(T)
    if T.n == 1:
        return 0
    return len(interior_ts(T.a, T.b, T.n))

def w_t(T: StandardTet, t: int) -> LatticePoint:
    return LatticePoint(-((-t * T.a) // T.n), -((-t * T.b) // T.n), t)

def interior_points_formula(T: StandardTet) -> list[LatticePoint]:
    _require_clean(T)
    if T.n == 1:
        return []
    return [w_t(T, t) for t in interior_ts(T.a, T.b, T.n)]

def census(T: LatticeTetrahedron) -> Census:
    """Every lattice point of ``T``, found by scanning its bounding box.

    Barycentric signs come from integer Cramer numerators; the scan runs on
    int64 arrays when the magnitudes are provably safe and falls back to
    Python integers otherwise.
    """
    T.require_nondegenerate()
    m = T.edge_matrix()
    d = det3(m)
    adj = adjugate3(m)
    sign = 1 if d > 0 else -1
    v1 = T.vertices[0]
    lo, hi = T.bounding_box()
    span = max(hi[i] - lo[i] for i in range(3)) + 1
    coef = max(abs(x) for row in adj for x in row) + 1
    if not _fits_int64(span * coef * 8, abs(d) * 8):
        return _census_slow(T, adj, d)
    verts = set(T.vertices)
    interior: list[LatticePoint] = []
    boundary: list[LatticePoint] = []
    for X, Y, Z in _box_chunks(lo, hi):
        px, py, pz = X - v1.x, Y - v1.y, Z - v1.z
        mu = [sign * (adj[i][0] * px + adj[i][1] * py + adj[i][2] * pz) for i in range(3)]
        lam1 = abs(d) - mu[0] - mu[1] - mu[2]
        inside = (lam1 >= 0) & (mu[0] >= 0) & (mu[1] >= 0) & (mu[2] >= 0)
        strict = (lam1 > 0) & (mu[0] > 0) & (mu[1] > 0) & (mu[2] > 0)
        for x, y, z in zip(X[strict], Y[strict], Z[strict]):
            interior.append(LatticePoint(int(x), int(y), int(z)))
        edge = inside & ~strict
        for x, y, z in zip(X[edge], Y[edge], Z[edge]):
            p = LatticePoint(int(x), int(y), int(z))
            if p not in verts:
                boundary.append(p)
    return Census(sorted(interior), sorted(boundary))

def _census_slow(T: LatticeTetrahedron, adj, d: int) -> Census:
    sign = 1 if d > 0 else -1
    v1 = T.vertices[0]
    lo, hi = T.bounding_box()
    verts = set(T.vertices)
    interior, boundary = [], []
    for p in itertools.product(*(range(lo[i], hi[i] + 1) for i in range(3))):
        q = (p[0] - v1.x, p[1] - v1.y, p[2] - v1.z)
        mu = [sign * sum(adj[i][j] * q[j] for j in range(3)) for i in range(3)]
        lam = [abs(d) - sum(mu), *mu]
        if min(lam) < 0:
            continue
        lp = LatticePoint(*p)
        if min(lam) > 0:
            interior.append(lp)
        elif lp not in verts:
            boundary.append(lp)
    return Census(sorted(interior), sorted(boundary))

def bc_row(T: StandardTet, t: int) -> tuple[Fraction, Fraction, Fraction, Fraction]:
    """Row ``t`` of the barycentric table: the fractional parts at ``w_t``.

    The entries sum to 1, 2 or 3, so this is a plain tuple rather than
    :class:`BarycentricCoords`.
    """
    n = T.n
    return (
        frac_part(Fraction(t * (n - T.c), n)),
        frac_part(Fraction(t * (n - T.a), n)),
        frac_part(Fraction(t * (n - T.b), n)),
        Fraction(t, n),
    )

@dataclass(frozen=True)
class BCTable:
    T: StandardTet
    rows: list[tuple[Fraction, Fraction, Fraction, Fraction]] = field(repr=False)

    def row(self, t: int) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return self.rows[t - 1]

def bc_table(T: StandardTet) -> BCTable:
    _require_clean(T)
    if T.n < 2:
        raise PreconditionError("the barycentric table needs n >= 2")
    return BCTable(T, [bc_row(T, t) for t in range(1, T.n)])

def _pairs_to_integers(row: Sequence[Fraction]) -> bool:
    for j in (1, 2, 3):
        rest = [k for k in (1, 2, 3) if k != j]
        if (row[0] + row[j]).denominator == 1 and (row[rest[0]] + row[rest[1]]).denominator == 1:
            return True
    return False

def pairwise_sum_empty_test(T: StandardTet) -> bool:
    """True when every residue row splits into two pairs with integer sums."""
    _require_clean(T)
    if T.n == 1:
        return True
    return all(_pairs_to_integers(bc_row(T, t)) for t in range(1, T.n))

def _check_bc_numerators(d: Sequence[int], N: int) -> None:
    if len(d) != 4 or any(x < 1 for x in d):
        raise PreconditionError(f"{tuple(d)} must be four positive integers")
    if sum(d) != N:
        raise PreconditionError(f"{tuple(d)} does not sum to N={N}")
    if any(math.gcd(x, N) != 1 for x in d):
        raise PreconditionError(f"some entry of {tuple(d)} shares a factor with N={N}")

def nogen_check(d: Sequence[int], N: int) -> bool:
    """For every ``2 <= s <= N-1`` the fractional parts of ``s*d_j/N`` sum past one."""
    _check_bc_numerators(d, N)
    return all(sum((s * x) % N for x in d) > N for s in range(2, N))

def construct_from_bc(d: Sequence[int], N: int) -> tuple[StandardTet, LatticePoint]:
    """A clean ``T_{a,b,N}`` with an interior point whose barycentrics are ``d/N``."""
    _check_bc_numerators(d, N)
    d1, d2, d3, d4 = d
    if N == 1:
        raise PreconditionError("N must exceed 1")
    m = mod_inverse(d4, N)
    s = (m * d4 - 1) // N
    a, b, shear = euclidean_shear(N - m * d2, N - m * d3, N)
    T = StandardTet(a, b, N)
    w = shear((d4 - s * d2, d4 - s * d3, d4))
    expected = tuple(Fraction(x, N) for x in d)
    if tuple(barycentric_of(T, w)) != expected:
        raise InternalInconsistency(f"{T} with w={w} does not realize {expected}")
    return T, w

def corner_tetrahedra(T: LatticeTetrahedron, w: Sequence[int]) -> list[LatticeTetrahedron]:
    """The four tetrahedra obtained by replacing one vertex with ``w``.

    The j-th entry is the one that omits vertex ``j`` (joined to the opposite face).
    """
    v = T.vertices
    w = LatticePoint(*w)
    return [
        LatticeTetrahedron(tuple(x for k, x in enumerate(v) if k != j) + (w,))  # type: ignore[arg-type]
        for j in range(4)
    ]
