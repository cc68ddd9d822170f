"""Exact coefficient scalars and p-adic valuations.

Scalars are plain ``fractions.Fraction`` values.  Everything downstream
(admissibility inequalities, isomorphism conditions, monodromy solving)
only needs field operations, equality tests and the exponent of p in a
reduced fraction, so exact rationals carry the full logic.
"""

from __future__ import annotations

from fractions import Fraction

Scalar = Fraction

#: Valuation of zero.  Ordinary valuations are exact ints, so mixing the
#: float infinity in comparisons and sums stays exact for valid data
#: (valid Frobenius data never has a zero coordinate).
INF = float("inf")


def is_odd_prime(p: int) -> bool:
    if p < 3 or p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def vp(s: Scalar, p: int):
    """Exponent of the prime p in the reduced fraction s; INF for s = 0."""
    if p < 2:
        raise ValueError(f"not a prime: {p}")
    if s == 0:
        return INF
    e = 0
    n = abs(s.numerator)
    while n % p == 0:
        n //= p
        e += 1
    d = s.denominator
    while d % p == 0:
        d //= p
        e -= 1
    return e


def parse_scalar(text: str) -> Scalar:
    """Parse the textual encoding "n" or "n/d" into an exact rational."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"bad scalar {text!r}") from exc


def format_scalar(s: Scalar) -> str:
    """Reduced textual encoding, "n" or "n/d", no whitespace."""
    if s.denominator == 1:
        return str(s.numerator)
    return f"{s.numerator}/{s.denominator}"
