"""Exact integer and rational primitives.

Rationals are :class:`fractions.Fraction`, which is reduced with a positive
denominator at construction time.  Python integers cannot wrap around, so the
64-bit policy is enforced explicitly by :func:`check_int64` at the points where
values enter the library or leave for fixed-width numpy arrays.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .errors import IntegerOverflowError, NotInvertible, PreconditionError

Rational = Fraction

INT64_MIN = -(2**63)
INT64_MAX = 2**63 - 1


def check_int64(value: int) -> int:
    """Return ``value`` unchanged, or raise if it does not fit in 64 bits."""
    if not INT64_MIN <= value <= INT64_MAX:
        raise IntegerOverflowError(f"{value} does not fit in a signed 64-bit integer")
    return value


def gcd(a: int, b: int) -> int:
    return math.gcd(a, b)


def ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, x, y)`` with ``a*x + b*y == g == gcd(a, b) >= 0``."""
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    if old_r < 0:
        old_r, old_x, old_y = -old_r, -old_x, -old_y
    return old_r, old_x, old_y


def mod_inverse(a: int, n: int) -> int:
    """Inverse of ``a`` modulo ``n`` in ``[1, n-1]``.

    Raises:
        NotInvertible: when ``gcd(a, n) > 1``.
    """
    if n < 2:
        raise PreconditionError(f"modulus must be >= 2, got {n}")
    g, x, _ = ext_gcd(a % n, n)
    if g != 1:
        raise NotInvertible(f"{a} is not invertible mod {n} (gcd {g})")
    return x % n


def frac_part(q: Fraction | int) -> Fraction:
    q = Fraction(q)
    return q - math.floor(q)


def icbrt_ceil(n: int) -> int:
    """Smallest integer ``m >= 0`` with ``m**3 >= n``."""
    if n <= 0:
        return 0
    lo, hi = 0, 1
    while hi**3 < n:
        hi *= 2
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if mid**3 >= n:
            hi = mid
        else:
            lo = mid
    return hi


def format_rational(q: Fraction | int) -> str:
    """Serialize as ``"p/q"`` with ``q > 0``; integers keep the ``/1``."""
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"
