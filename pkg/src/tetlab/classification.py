"""Emptiness, ripe quadruples and the classification of 1-point tetrahedra."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .equivalence import CanonicalPair, candidate_pairs, canonical_pair
from .errors import CatalogViolation, InternalInconsistency, NotClean
from .lattice import BarycentricCoords, LatticePoint, StandardTet, barycentric_of
from .pointcount import interior_count_formula, interior_points_formula, is_clean_standard

ONE_POINT_REPRESENTATIVES: tuple[tuple[int, int, int], ...] = (
    (3, 3, 4),
    (2, 2, 5),
    (2, 4, 7),
    (2, 6, 11),
    (2, 7, 13),
    (2, 9, 17),
    (2, 13, 19),
    (3, 7, 20),
)

RIPE_QUADRUPLES: tuple[tuple[int, int, int, int], ...] = (
    (1, 1, 1, 1),
    (1, 1, 1, 2),
    (1, 1, 2, 3),
    (1, 2, 3, 5),
    (1, 3, 4, 5),
    (2, 3, 5, 7),
    (3, 4, 5, 7),
)

_LAMBDA_NUMERATORS: tuple[tuple[tuple[int, int, int, int], int], ...] = (
    ((1, 1, 1, 1), 4),
    ((1, 1, 1, 2), 5),
    ((1, 1, 2, 3), 7),
    ((2, 1, 3, 5), 11),
    ((1, 3, 4, 5), 13),
    ((2, 3, 5, 7), 17),
    ((3, 5, 4, 7), 19),
)


@dataclass(frozen=True)
class RipeQuadruple:
    d: tuple[int, int, int, int]
    N: int


@dataclass(frozen=True)
class KPointClass:
    k: int
    canonical: CanonicalPair
    members_found: list[StandardTet] = field(default_factory=list, compare=False)


@dataclass(frozen=True)
class Empty:
    """Classification result for a clean tetrahedron without interior points."""

    def __str__(self) -> str:
        return "Empty"


@dataclass(frozen=True)
class KPoint:
    k: int
    canonical: CanonicalPair


def is_empty_white(T: StandardTet) -> bool:
    """Emptiness read off the equivalence class: is some candidate pair ``(1, d)``?"""
    if T.n == 1:
        return True
    return any(p[0] == 1 % T.n for p in candidate_pairs(T))


def is_empty(T: StandardTet) -> bool:
    """Emptiness by counting, cross-checked against the ``T_{1,d,n}`` criterion."""
    if not is_clean_standard(T):
        raise NotClean(f"{T} is not clean")
    by_count = interior_count_formula(T) == 0
    if by_count != is_empty_white(T):
        raise InternalInconsistency(f"{T}: count says empty={by_count}, class criterion disagrees")
    return by_count


def is_ripe(d: Sequence[int], require_multiplicity: bool = True) -> bool:
    """Check the three ripeness conditions literally.

    With ``require_multiplicity=False`` only the gcd and pair-sum conditions
    are applied, which admits the infinite families noted alongside the
    finite list.
    """
    d = tuple(d)
    if len(d) != 4 or any(x < 1 for x in d):
        raise ValueError(f"{d} must be four positive integers")
    N = sum(d)
    if any(math.gcd(x, N) != 1 for x in d):
        return False
    for i in range(4):
        others = [d[j] for j in range(4) if j != i]
        if not any((x + y) % d[i] == 0 for x, y in itertools.combinations(others, 2)):
            return False
    if require_multiplicity:
        for i, j in itertools.permutations(range(4), 2):
            if (d[j] == d[i] or d[j] == 2 * d[i]) and d[i] != 1:
                return False
    return True


def enumerate_ripe(max_d: int) -> list[RipeQuadruple]:
    out = []
    for d in itertools.combinations_with_replacement(range(1, max_d + 1), 4):
        if is_ripe(d):
            out.append(RipeQuadruple(d, sum(d)))
    return out


def lambda_table() -> list[BarycentricCoords]:
    return [BarycentricCoords([Fraction(x, N) for x in d]) for d, N in _LAMBDA_NUMERATORS]


@lru_cache(maxsize=1)
def one_point_catalog() -> tuple[CanonicalPair, ...]:
    return tuple(canonical_pair(StandardTet(*t)) for t in ONE_POINT_REPRESENTATIVES)


def classify(T: StandardTet) -> Empty | KPoint:
    if not is_clean_standard(T):
        raise NotClean(f"{T} is not clean")
    k = interior_count_formula(T)
    if k == 0:
        return Empty()
    canon = canonical_pair(T)
    if k == 1 and canon not in one_point_catalog():
        raise CatalogViolation(f"{T} is 1-point but its class {canon} is not in the catalog")
    return KPoint(k, canon)


@dataclass(frozen=True)
class InteriorPointInfo:
    point: LatticePoint
    bc: BarycentricCoords
    N: int
    g: int


def interior_point_info(T: StandardTet) -> list[InteriorPointInfo]:
    """Interior points with their barycentrics, common denominator ``N`` and ``g = n / N``."""
    out = []
    for w in interior_points_formula(T):
        bc = barycentric_of(T, w)
        N = bc.denominator()
        out.append(InteriorPointInfo(w, bc, N, T.n // N))
    return out
