"""Reduction of a lattice tetrahedron with a clean face to ``T_{a,b,n}``.

The reduction is built only from tweaks (determinant-one 2x2 moves from the
extended Euclidean algorithm), Euclidean shears and at most one reflection, so
the composed witness is unimodular by construction.  It is re-applied to the
input before being returned.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import InternalInconsistency, NoCleanFace, PreconditionError
from .exact import ext_gcd
from .lattice import (
    IDENTITY3,
    LatticePoint,
    LatticeTetrahedron,
    StandardTet,
    UnimodularMap,
    apply_map,
)

# faces tried in this order: opposite v4, v3, v2, v1
FACE_ORDER: tuple[tuple[int, int, int, int], ...] = (
    (0, 1, 2, 3),
    (0, 1, 3, 2),
    (0, 2, 3, 1),
    (1, 2, 3, 0),
)


def tweak(p: int, q: int) -> tuple[tuple[int, int], tuple[int, int]]:
    """Determinant-one integer matrix sending ``(p, q)`` to ``(gcd(p, q), 0)``."""
    if p == 0 and q == 0:
        raise PreconditionError("tweak of (0, 0) is undefined")
    g, x, y = ext_gcd(p, q)
    return ((x, y), (-q // g, p // g))


def _embed_tweak(m2, i: int, j: int) -> UnimodularMap:
    """Lift a 2x2 tweak acting on coordinates ``i, j`` to a 3x3 map."""
    m = [list(row) for row in IDENTITY3]
    m[i][i], m[i][j] = m2[0]
    m[j][i], m[j][j] = m2[1]
    return UnimodularMap(tuple(tuple(r) for r in m))


def _shear_xy_by_z(p: int, q: int) -> UnimodularMap:
    """``(x, y, z) -> (x - p z, y - q z, z)``."""
    return UnimodularMap(((1, 0, -p), (0, 1, -q), (0, 0, 1)))


def euclidean_shear(a: int, b: int, n: int) -> tuple[int, int, UnimodularMap]:
    """Reduce the top vertex ``(a, b, n)`` into ``0 <= a', b' <= |n|-1``.

    The map fixes the base plane ``z = 0`` pointwise.
    """
    if n == 0:
        raise PreconditionError("euclidean shear needs n != 0")
    # (x - p z) with p chosen so that a - p n lands in [0, |n|-1]
    p = (a - a % abs(n)) // n
    q = (b - b % abs(n)) // n
    f = _shear_xy_by_z(p, q)
    top = f((a, b, n))
    return top.x, top.y, f


@dataclass(frozen=True)
class NormalizationResult:
    standard: StandardTet
    witness: UnimodularMap
    vertex_permutation: tuple[int, int, int, int]

    def permuted(self, T: LatticeTetrahedron) -> LatticeTetrahedron:
        return LatticeTetrahedron(tuple(T.vertices[i] for i in self.vertex_permutation))  # type: ignore[arg-type]


def _box_chunks(lo: Sequence[int], hi: Sequence[int], max_points: int = 1 << 20):
    """Yield integer arrays of box points, chunked along z."""
    nx, ny = hi[0] - lo[0] + 1, hi[1] - lo[1] + 1
    per_slice = nx * ny
    step = max(1, max_points // per_slice)
    xs = np.arange(lo[0], hi[0] + 1, dtype=np.int64)
    ys = np.arange(lo[1], hi[1] + 1, dtype=np.int64)
    for z0 in range(lo[2], hi[2] + 1, step):
        zs = np.arange(z0, min(hi[2], z0 + step - 1) + 1, dtype=np.int64)
        X, Y, Z = np.meshgrid(xs, ys, zs, indexing="ij")
        yield X.ravel(), Y.ravel(), Z.ravel()


def _fits_int64(*magnitudes: int) -> bool:
    return max(magnitudes) < 2**62


def triangle_lattice_points(p0: Sequence[int], p1: Sequence[int], p2: Sequence[int]) -> list[LatticePoint]:
    """All lattice points of the closed triangle, by scanning its bounding box."""
    p0, p1, p2 = (LatticePoint(*p) for p in (p0, p1, p2))
    e1, e2 = p1 - p0, p2 - p0
    nrm = (
        e1.y * e2.z - e1.z * e2.y,
        e1.z * e2.x - e1.x * e2.z,
        e1.x * e2.y - e1.y * e2.x,
    )
    nn = sum(c * c for c in nrm)
    if nn == 0:
        raise PreconditionError("triangle is degenerate")
    lo = [min(p[i] for p in (p0, p1, p2)) for i in range(3)]
    hi = [max(p[i] for p in (p0, p1, p2)) for i in range(3)]
    span = max(hi[i] - lo[i] for i in range(3)) + 1
    coef = max(abs(c) for c in (*e1, *e2, *nrm)) + 1
    if not _fits_int64(span * coef * coef * 16, nn * 4):
        return _triangle_points_slow(p0, e1, e2, nrm, nn, lo, hi)
    # alpha * nn = ((d x e2) . nrm), beta * nn = ((e1 x d) . nrm)
    # (d x e2) . nrm = d . (e2 x nrm); (e1 x d) . nrm = d . (nrm x e1)
    a_vec = _cross(e2, nrm)
    b_vec = _cross(nrm, e1)
    found: list[LatticePoint] = []
    for X, Y, Z in _box_chunks(lo, hi):
        dx, dy, dz = X - p0.x, Y - p0.y, Z - p0.z
        plane = dx * nrm[0] + dy * nrm[1] + dz * nrm[2]
        al = dx * a_vec[0] + dy * a_vec[1] + dz * a_vec[2]
        be = dx * b_vec[0] + dy * b_vec[1] + dz * b_vec[2]
        ok = (plane == 0) & (al >= 0) & (be >= 0) & (al + be <= nn)
        for x, y, z in zip(X[ok], Y[ok], Z[ok]):
            found.append(LatticePoint(int(x), int(y), int(z)))
    return sorted(found)


def _cross(u, v):
    return (u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0])


def _triangle_points_slow(p0, e1, e2, nrm, nn, lo, hi):
    a_vec = _cross(e2, nrm)
    b_vec = _cross(nrm, e1)
    out = []
    for x, y, z in itertools.product(*(range(lo[i], hi[i] + 1) for i in range(3))):
        d = (x - p0.x, y - p0.y, z - p0.z)
        if sum(d[i] * nrm[i] for i in range(3)):
            continue
        al = sum(d[i] * a_vec[i] for i in range(3))
        be = sum(d[i] * b_vec[i] for i in range(3))
        if al >= 0 and be >= 0 and al + be <= nn:
            out.append(LatticePoint(x, y, z))
    return sorted(out)


def is_clean_triangle(p0, p1, p2) -> bool:
    return len(triangle_lattice_points(p0, p1, p2)) == 3


def _reduce_with_clean_base(verts: Sequence[LatticePoint]) -> tuple[StandardTet, UnimodularMap]:
    v1 = verts[0]
    f = UnimodularMap.translation_by(LatticePoint(-v1.x, -v1.y, -v1.z))

    def step(g: UnimodularMap) -> None:
        nonlocal f
        f = g.compose(f)

    # v2 -> (1, 0, 0)
    r, s, t = f(verts[1])
    if (s, t) != (0, 0):
        step(_embed_tweak(tweak(s, t), 1, 2))
    r, g, _ = f(verts[1])
    step(_embed_tweak(tweak(r, g), 0, 1))
    if f(verts[1]) != (1, 0, 0):
        raise InternalInconsistency(f"edge v1v2 is not primitive: {f(verts[1])}")

    # v3 -> (p, q, 0) -> (0, 1, 0)
    i, j, k = f(verts[2])
    if (j, k) != (0, 0):
        step(_embed_tweak(tweak(j, k), 1, 2))
    i, q, _ = f(verts[2])
    if q != 1:
        raise InternalInconsistency(f"base face is not clean: v3 reduced to {(i, q, 0)}")
    step(UnimodularMap(((1, -i, 0), (0, 1, 0), (0, 0, 1))))

    # v4 -> (a, b, n), n >= 1, then shear into the window
    if f(verts[3]).z < 0:
        step(UnimodularMap(((1, 0, 0), (0, 1, 0), (0, 0, -1))))
    a, b, n = f(verts[3])
    a, b, shear = euclidean_shear(a, b, n)
    step(shear)
    return StandardTet(a, b, n), f


def to_standard(T: LatticeTetrahedron) -> NormalizationResult:
    """Find a clean face and map ``T`` onto some ``T_{a,b,n}``.

    Raises:
        DegenerateTetrahedron: for coplanar input.
        NoCleanFace: when every face carries a non-vertex lattice point.
    """
    T.require_nondegenerate()
    for perm in FACE_ORDER:
        verts = [T.vertices[i] for i in perm]
        if not is_clean_triangle(*verts[:3]):
            continue
        std, f = _reduce_with_clean_base(verts)
        image = tuple(f(v) for v in verts)
        if image != std.vertices():
            raise InternalInconsistency(f"witness maps {verts} to {image}, not {std}")
        return NormalizationResult(std, f, perm)
    raise NoCleanFace(f"no face of {T.vertices} is free of non-vertex lattice points")


def check_result(T: LatticeTetrahedron, result: NormalizationResult) -> bool:
    """Re-apply the witness to the permuted input and compare with the standard vertices."""
    return apply_map(result.witness, result.permuted(T)).vertices == result.standard.vertices()
