"""Unimodular equivalence of standard tetrahedra.

Two standard tetrahedra of the same volume are equivalent exactly when the
second's ``(a, b)`` is congruent to two entries of one of up to four triples
built from the first: ``(a,b,c)`` and its rescalings by ``a^-1``, ``b^-1`` and
``c^-1``.  The canonical representative of a class is the lexicographically
smallest such pair.  Canonicalization is only offered for clean tetrahedra.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass
from functools import lru_cache

from .errors import NotClean, NotInvertible, PreconditionError
from .exact import gcd, mod_inverse
from .lattice import StandardTet

Triple = tuple[int, int, int]


@dataclass(frozen=True, order=True)
class CanonicalPair:
    a_star: int
    b_star: int
    n: int

    def tet(self) -> StandardTet:
        return StandardTet(self.a_star, self.b_star, self.n)

    def as_tuple(self) -> tuple[int, int, int]:
        return (self.a_star, self.b_star, self.n)


def _require_n(T: StandardTet) -> None:
    if T.n < 2:
        raise PreconditionError(f"{T}: triple families need n >= 2")


def triple_families(T: StandardTet) -> list[Triple]:
    """The triples whose pairs index the equivalence class of ``T``.

    A rescaled triple is omitted when its pivot is not invertible mod ``n``.
    """
    _require_n(T)
    n = T.n
    a, b, c = T.a % n, T.b % n, T.c % n
    out: list[Triple] = [(a, b, c)]
    for pivot, rest in ((a, (b, c)), (b, (a, c)), (c, (a, b))):
        try:
            inv = mod_inverse(pivot, n)
        except NotInvertible:
            continue
        out.append((inv, (-rest[0] * inv) % n, (-rest[1] * inv) % n))
    return out


def candidate_pairs(T: StandardTet) -> set[tuple[int, int]]:
    pairs: set[tuple[int, int]] = set()
    for triple in triple_families(T):
        for i, j in itertools.permutations(range(3), 2):
            pairs.add((triple[i] % T.n, triple[j] % T.n))
    return pairs


def is_clean_params(a: int, b: int, n: int) -> bool:
    if n == 1:
        return a == 0 and b == 0
    return n >= 2 and gcd(a, n) == 1 and gcd(b, n) == 1 and gcd(1 - a - b, n) == 1


def _require_clean(T: StandardTet) -> None:
    if not is_clean_params(T.a, T.b, T.n):
        raise NotClean(f"{T} is not clean")


@lru_cache(maxsize=1 << 16)
def _canonical(a: int, b: int, n: int) -> CanonicalPair:
    if n == 1:
        return CanonicalPair(0, 0, 1)
    return CanonicalPair(*min(candidate_pairs(StandardTet(a, b, n))), n)


def canonical_pair(T: StandardTet) -> CanonicalPair:
    """Lexicographically least candidate pair; requires a clean tetrahedron."""
    _require_clean(T)
    return _canonical(T.a, T.b, T.n)


def are_equivalent(T1: StandardTet, T2: StandardTet) -> bool:
    _require_clean(T1)
    _require_clean(T2)
    if T1.n != T2.n:
        return False
    if T1.n == 1:
        return True
    return (T2.a % T2.n, T2.b % T2.n) in candidate_pairs(T1)


def witness_pair(T1: StandardTet, T2: StandardTet) -> tuple[int, int] | None:
    """The pair of ``T1``'s candidates matching ``T2``, when equivalent."""
    if are_equivalent(T1, T2):
        return (T2.a % T2.n, T2.b % T2.n)
    return None


class Verdict(enum.Enum):
    EQUIVALENT = "true"
    NOT_EQUIVALENT = "false"
    UNKNOWN = "unknown"


def invariant_signature(T: StandardTet) -> tuple:
    """Unimodular invariants usable for tetrahedra that may not be clean.

    Volume, the counts of interior and boundary points, the multiset of
    per-point sorted barycentric quadruples over all lattice points, and the
    lattice width.
    """
    from .pointcount import census
    from .width import lattice_width_value
    from .lattice import barycentric_of

    cen = census(T.to_lattice())
    pts = [*cen.interior, *cen.boundary_nonvertex]
    bcs = sorted(barycentric_of(T, p).sorted() for p in pts)
    return (T.n, len(cen.interior), len(cen.boundary_nonvertex), tuple(bcs), lattice_width_value(T))


def compare(T1: StandardTet, T2: StandardTet) -> Verdict:
    """Three-valued equivalence that never claims an unwitnessed equivalence.

    Clean inputs are decided exactly.  Otherwise differing invariants prove
    inequivalence and matching ones leave the answer unknown.
    """
    if T1.n != T2.n:
        return Verdict.NOT_EQUIVALENT
    c1, c2 = is_clean_params(T1.a, T1.b, T1.n), is_clean_params(T2.a, T2.b, T2.n)
    if c1 and c2:
        return Verdict.EQUIVALENT if are_equivalent(T1, T2) else Verdict.NOT_EQUIVALENT
    if c1 != c2:
        return Verdict.NOT_EQUIVALENT
    if T1.n == 1 or (T2.a, T2.b) in candidate_pairs(T1):
        # each candidate pair comes from an explicit unimodular map
        return Verdict.EQUIVALENT
    if invariant_signature(T1) != invariant_signature(T2):
        return Verdict.NOT_EQUIVALENT
    return Verdict.UNKNOWN
