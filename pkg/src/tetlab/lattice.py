"""Core geometric types: points, tetrahedra, unimodular maps, directions.

Vertex order of a standard tetrahedron ``T_{a,b,n}`` is always
``(0,0,0), (1,0,0), (0,1,0), (a,b,n)`` and every barycentric quadruple in the
library is reported in that order.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence

from .errors import DegenerateTetrahedron, NotALatticePoint, PreconditionError
from .exact import check_int64

Matrix3 = tuple[tuple[int, int, int], tuple[int, int, int], tuple[int, int, int]]


class LatticePoint(NamedTuple):
    x: int
    y: int
    z: int

    def __add__(self, other):  # type: ignore[override]
        return LatticePoint(self.x + other[0], self.y + other[1], self.z + other[2])

    def __sub__(self, other):
        return LatticePoint(self.x - other[0], self.y - other[1], self.z - other[2])

    def dot(self, u: Sequence[int]) -> int:
        return self.x * u[0] + self.y * u[1] + self.z * u[2]


def point(p: Sequence[int]) -> LatticePoint:
    x, y, z = (check_int64(int(c)) for c in p)
    return LatticePoint(x, y, z)


def det3(m: Sequence[Sequence[int]]) -> int:
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )


def adjugate3(m: Sequence[Sequence[int]]) -> Matrix3:
    """Integer adjugate, so that ``m @ adj == det(m) * I``."""
    c = [[0] * 3 for _ in range(3)]
    for i in range(3):
        for j in range(3):
            r = [k for k in range(3) if k != i]
            s = [k for k in range(3) if k != j]
            minor = m[r[0]][s[0]] * m[r[1]][s[1]] - m[r[0]][s[1]] * m[r[1]][s[0]]
            c[j][i] = (-1) ** (i + j) * minor
    return tuple(tuple(row) for row in c)  # type: ignore[return-value]


def matmul3(a: Sequence[Sequence[int]], b: Sequence[Sequence[int]]) -> Matrix3:
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(3)) for j in range(3)) for i in range(3)
    )  # type: ignore[return-value]


def matvec3(m: Sequence[Sequence[int]], v: Sequence[int]) -> LatticePoint:
    return LatticePoint(*(m[i][0] * v[0] + m[i][1] * v[1] + m[i][2] * v[2] for i in range(3)))


IDENTITY3: Matrix3 = ((1, 0, 0), (0, 1, 0), (0, 0, 1))


@dataclass(frozen=True)
class LatticeTetrahedron:
    vertices: tuple[LatticePoint, LatticePoint, LatticePoint, LatticePoint]

    def __post_init__(self):
        if len(self.vertices) != 4:
            raise ValueError("a tetrahedron needs exactly four vertices")
        object.__setattr__(self, "vertices", tuple(point(v) for v in self.vertices))

    @classmethod
    def from_points(cls, *pts: Sequence[int]) -> "LatticeTetrahedron":
        return cls(tuple(point(p) for p in pts))  # type: ignore[arg-type]

    def edge_matrix(self) -> Matrix3:
        """Columns are ``v2-v1, v3-v1, v4-v1``."""
        v1 = self.vertices[0]
        cols = [v - v1 for v in self.vertices[1:]]
        return tuple(tuple(cols[j][i] for j in range(3)) for i in range(3))  # type: ignore[return-value]

    def signed_det(self) -> int:
        return det3(self.edge_matrix())

    def is_degenerate(self) -> bool:
        return self.signed_det() == 0

    def require_nondegenerate(self) -> None:
        if self.is_degenerate():
            raise DegenerateTetrahedron(f"vertices {self.vertices} are coplanar")

    def bounding_box(self) -> tuple[LatticePoint, LatticePoint]:
        lo = LatticePoint(*(min(v[i] for v in self.vertices) for i in range(3)))
        hi = LatticePoint(*(max(v[i] for v in self.vertices) for i in range(3)))
        return lo, hi


@dataclass(frozen=True, order=True)
class StandardTet:
    a: int
    b: int
    n: int

    def __post_init__(self):
        for v in (self.a, self.b, self.n):
            check_int64(v)
        if self.n < 1 or not (0 <= self.a < self.n and 0 <= self.b < self.n):
            raise PreconditionError(
                f"T_{{{self.a},{self.b},{self.n}}} is not in the window n >= 1, 0 <= a,b <= n-1"
            )

    @property
    def c(self) -> int:
        return 1 - self.a - self.b

    @property
    def top(self) -> LatticePoint:
        return LatticePoint(self.a, self.b, self.n)

    def vertices(self) -> tuple[LatticePoint, LatticePoint, LatticePoint, LatticePoint]:
        return (LatticePoint(0, 0, 0), LatticePoint(1, 0, 0), LatticePoint(0, 1, 0), self.top)

    def to_lattice(self) -> LatticeTetrahedron:
        return LatticeTetrahedron(self.vertices())

    def __str__(self) -> str:
        return f"T_{{{self.a},{self.b},{self.n}}}"


@dataclass(frozen=True)
class UnimodularMap:
    """Affine map ``v -> matrix @ v + translation`` with ``det(matrix) = +-1``."""

    matrix: Matrix3
    translation: LatticePoint = LatticePoint(0, 0, 0)

    def __post_init__(self):
        m = tuple(tuple(int(x) for x in row) for row in self.matrix)
        object.__setattr__(self, "matrix", m)
        object.__setattr__(self, "translation", point(self.translation))
        if det3(m) not in (1, -1):
            raise PreconditionError(f"matrix {m} has determinant {det3(m)}, not +-1")

    def __call__(self, v: Sequence[int]) -> LatticePoint:
        return matvec3(self.matrix, v) + self.translation

    def compose(self, inner: "UnimodularMap") -> "UnimodularMap":
        """``self o inner``."""
        return UnimodularMap(
            matmul3(self.matrix, inner.matrix), self(inner.translation)
        )

    def inverse(self) -> "UnimodularMap":
        d = det3(self.matrix)
        adj = adjugate3(self.matrix)
        inv = tuple(tuple(d * x for x in row) for row in adj)
        t = matvec3(inv, self.translation)
        return UnimodularMap(inv, LatticePoint(-t.x, -t.y, -t.z))

    @classmethod
    def identity(cls) -> "UnimodularMap":
        return cls(IDENTITY3)

    @classmethod
    def translation_by(cls, u: Sequence[int]) -> "UnimodularMap":
        return cls(IDENTITY3, point(u))


def apply_map(f: UnimodularMap, T: LatticeTetrahedron) -> LatticeTetrahedron:
    return LatticeTetrahedron(tuple(f(v) for v in T.vertices))  # type: ignore[arg-type]


def normalized_volume(T: LatticeTetrahedron) -> int:
    """Six times the volume, i.e. ``|det|``; zero flags a degenerate input."""
    return abs(T.signed_det())


class BarycentricCoords(tuple):
    """Four exact weights summing to one, in the owning tetrahedron's vertex order."""

    def __new__(cls, values: Sequence[Fraction | int]):
        lam = tuple(Fraction(v) for v in values)
        if len(lam) != 4:
            raise ValueError("barycentric coordinates have four entries")
        if sum(lam) != 1:
            raise ValueError(f"barycentric coordinates {lam} do not sum to 1")
        return super().__new__(cls, lam)

    def sorted(self) -> tuple[Fraction, ...]:
        return tuple(sorted(self))

    def denominator(self) -> int:
        return math.lcm(*(q.denominator for q in self))


def barycentric_of(T: StandardTet, w: Sequence[int]) -> BarycentricCoords:
    r, s, t = w
    n = T.n
    return BarycentricCoords((
        1 - r - s + Fraction(t * (T.a + T.b - 1), n),
        r - Fraction(t * T.a, n),
        s - Fraction(t * T.b, n),
        Fraction(t, n),
    ))


def point_from_barycentric(T: StandardTet, bc: Sequence[Fraction]) -> LatticePoint:
    bc = BarycentricCoords(bc)
    coords = [sum(lam * v[i] for lam, v in zip(bc, T.vertices())) for i in range(3)]
    if any(Fraction(c).denominator != 1 for c in coords):
        raise NotALatticePoint(f"{tuple(coords)} is not integral")
    return LatticePoint(*(int(c) for c in coords))


def barycentric_general(T: LatticeTetrahedron, w: Sequence[int]) -> BarycentricCoords:
    """Barycentric coordinates of ``w`` by Cramer's rule over the edge matrix."""
    T.require_nondegenerate()
    m = T.edge_matrix()
    d = det3(m)
    mu = matvec3(adjugate3(m), LatticePoint(*w) - T.vertices[0])
    lam = [Fraction(x, d) for x in mu]
    return BarycentricCoords([1 - sum(lam), *lam])


class PointClass(enum.Enum):
    INTERIOR = "interior"
    ON_BOUNDARY = "boundary"
    VERTEX = "vertex"
    OUTSIDE = "outside"


def classify_point(T: LatticeTetrahedron, w: Sequence[int]) -> PointClass:
    """Locate ``w`` from the signs of its Cramer numerators (all scaled by ``|det|``)."""
    T.require_nondegenerate()
    m = T.edge_matrix()
    d = det3(m)
    sign = 1 if d > 0 else -1
    mu = [sign * x for x in matvec3(adjugate3(m), LatticePoint(*w) - T.vertices[0])]
    lam = [abs(d) - sum(mu), *mu]
    if min(lam) < 0:
        return PointClass.OUTSIDE
    if min(lam) > 0:
        return PointClass.INTERIOR
    if max(lam) == abs(d):
        return PointClass.VERTEX
    return PointClass.ON_BOUNDARY


@dataclass(frozen=True, order=True)
class Direction:
    """Primitive integer direction, sign-normalized so the first nonzero entry is positive."""

    r: int
    s: int
    t: int

    def __post_init__(self):
        g = math.gcd(self.r, self.s, self.t)
        if g == 0:
            raise PreconditionError("the zero vector is not a direction")
        if g != 1:
            raise PreconditionError(f"({self.r},{self.s},{self.t}) is not primitive")
        first = next(x for x in (self.r, self.s, self.t) if x)
        if first < 0:
            raise PreconditionError(f"({self.r},{self.s},{self.t}) is not sign-normalized")

    @classmethod
    def normalize(cls, r: int, s: int, t: int) -> "Direction":
        g = math.gcd(r, s, t)
        if g == 0:
            raise PreconditionError("the zero vector is not a direction")
        r, s, t = r // g, s // g, t // g
        if next(x for x in (r, s, t) if x) < 0:
            r, s, t = -r, -s, -t
        return cls(r, s, t)

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.r, self.s, self.t)


def parse_vertices(text: str) -> LatticeTetrahedron:
    """Parse ``"x,y,z;x,y,z;x,y,z;x,y,z"``."""
    parts = [p for p in text.strip().split(";")]
    if len(parts) != 4:
        raise ValueError(f"expected four ';'-separated points, got {len(parts)}")
    pts = []
    for p in parts:
        coords = p.split(",")
        if len(coords) != 3:
            raise ValueError(f"point {p!r} does not have three coordinates")
        pts.append(point(int(c) for c in coords))
    return LatticeTetrahedron(tuple(pts))  # type: ignore[arg-type]


def parse_tet(text: str) -> tuple[int, int, int]:
    """Parse ``"a,b,n"`` into a raw triple (window not enforced)."""
    parts = text.strip().split(",")
    if len(parts) != 3:
        raise ValueError(f"expected 'a,b,n', got {text!r}")
    return tuple(check_int64(int(p)) for p in parts)  # type: ignore[return-value]
