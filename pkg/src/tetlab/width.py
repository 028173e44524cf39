"""Exact lattice width of lattice tetrahedra.

For ``T_{a,b,n}`` and ``u = (r, s, t)`` the u-width is
``max{0, r, s, ar+bs+nt} - min{0, r, s, ar+bs+nt}``.  So a direction of
width at most ``W`` has ``|r|, |s| <= W`` and ``|ar+bs+nt| <= W``.  The last
inequality leaves at most ``floor(2W/n) + 1`` choices of ``t`` for each
``(r, s)``.  The candidate set ``C(W)`` is therefore finite and contains every
direction of width ``<= W``.

:func:`lattice_width` scans ``C(1), C(2), ...`` and stops at the first ``W``
whose candidates reach a width ``m <= W``.  Every direction of width ``m``
lies in ``C(m)``, which is contained in ``C(W)``.  So ``m`` is the exact
width, and the ``C(W)`` minimizers are all of the minimal directions.
The loop never passes ``2 * ceil(n^(1/3))``, a proven upper bound on the
width of every ``T_{a,b,n}``.

:func:`width_of_tetrahedron` handles arbitrary vertices.  It enumerates the
integer vectors ``y = E^T u`` in a cube, where ``E`` is the edge matrix, and
keeps the ``y`` whose preimage ``u`` is integral.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

from .errors import InternalInconsistency, NoCleanFace
from .exact import icbrt_ceil
from .lattice import (
    Direction,
    LatticeTetrahedron,
    StandardTet,
    adjugate3,
    det3,
    matvec3,
)
from .normalization import to_standard
from .pointcount import census


@dataclass(frozen=True)
class WidthReport:
    width: int
    minimal_directions: list[Direction]
    occupancy: dict[Direction, list[int]] = field(default_factory=dict)


def width_bound(n: int) -> int:
    return 2 * icbrt_ceil(n)


def u_width(T: StandardTet, u: Sequence[int]) -> int:
    r, s, t = u
    h = T.a * r + T.b * s + T.n * t
    return max(0, r, s, h) - min(0, r, s, h)


def _candidates(T: StandardTet, W: int):
    a, b, n = T.a, T.b, T.n
    for r in range(-W, W + 1):
        for s in range(-W, W + 1):
            base = a * r + b * s
            t_lo = -((W + base) // n)  # ceil((-W - base) / n)
            t_hi = (W - base) // n
            for t in range(t_lo, t_hi + 1):
                if r or s or t:
                    yield r, s, t


def _search(T: StandardTet) -> tuple[int, list[Direction]]:
    bound = width_bound(T.n)
    for W in range(1, bound + 1):
        best = None
        hits: set[Direction] = set()
        for u in _candidates(T, W):
            w = u_width(T, u)
            if w > W:
                continue
            if best is None or w < best:
                best, hits = w, set()
            if w == best:
                hits.add(Direction.normalize(*u))
        if best is not None:
            return best, sorted(hits)
    raise InternalInconsistency(f"{T}: no direction of width <= {bound}")


def lattice_width_value(T: StandardTet) -> int:
    return _search(T)[0]


def minimal_directions(T: StandardTet) -> list[Direction]:
    return _search(T)[1]


def orient_profile(values: Sequence[int], origin_value: int) -> list[int]:
    """Per-plane point counts, ordered from the origin's plane when it is outer."""
    lo, hi = min(values), max(values)
    counts = [0] * (hi - lo + 1)
    for v in values:
        counts[v - lo] += 1
    if origin_value == hi and origin_value != lo:
        counts.reverse()
    return counts


def plane_occupancy(T: StandardTet, u: Sequence[int]) -> list[int]:
    cen = census(T.to_lattice())
    pts = cen.all_points(T.to_lattice())
    return orient_profile([p.dot(u) for p in pts], 0)


def lattice_width(T: StandardTet, with_occupancy: bool = True) -> WidthReport:
    width, dirs = _search(T)
    occ: dict[Direction, list[int]] = {}
    if with_occupancy:
        lat = T.to_lattice()
        pts = census(lat).all_points(lat)
        for d in dirs:
            occ[d] = orient_profile([p.dot(d.as_tuple()) for p in pts], 0)
    return WidthReport(width, dirs, occ)


def _general_search(T: LatticeTetrahedron) -> tuple[int, list[Direction]]:
    T.require_nondegenerate()
    E = T.edge_matrix()
    Et = tuple(tuple(E[j][i] for j in range(3)) for i in range(3))
    D = det3(Et)
    adj = adjugate3(Et)
    W = 0
    while True:
        W += 1
        best, hits = None, set()
        for y in itertools.product(range(-W, W + 1), repeat=3):
            if y == (0, 0, 0):
                continue
            w = max(0, *y) - min(0, *y)
            if w > W:
                continue
            num = matvec3(adj, y)
            if any(c % D for c in num):
                continue
            u = tuple(c // D for c in num)
            if best is None or w < best:
                best, hits = w, set()
            if w == best:
                hits.add(Direction.normalize(*u))
        if best is not None:
            return best, sorted(hits)


def width_of_tetrahedron(T: LatticeTetrahedron, with_occupancy: bool = True) -> WidthReport:
    """Lattice width of arbitrary vertices, reported in the input's coordinates.

    Inputs with a clean face are normalized first and their directions are
    pulled back through the witness; others are searched directly.
    """
    try:
        res = to_standard(T)
    except NoCleanFace:
        width, dirs = _general_search(T)
    else:
        width, std_dirs = _search(res.standard)
        M = res.witness.matrix
        # u . (M x + c) = (M^T u) . x + const
        dirs = sorted(
            Direction.normalize(*(sum(M[k][i] * d.as_tuple()[k] for k in range(3)) for i in range(3)))
            for d in std_dirs
        )
    occ: dict[Direction, list[int]] = {}
    if with_occupancy:
        pts = census(T).all_points(T)
        origin = T.vertices[0]
        for d in dirs:
            vals = [p.dot(d.as_tuple()) for p in pts]
            occ[d] = orient_profile(vals, origin.dot(d.as_tuple()))
    return WidthReport(width, dirs, occ)


def lattice_width_oracle(T: StandardTet) -> tuple[int, list[Direction]]:
    """Independent route: the general search run on the standard vertices."""
    return _general_search(T.to_lattice())
