"""Small exact-arithmetic helpers shared by the certified modules.

All bounds produced here are rigorous: square roots are rounded outward by
construction (integer isqrt on scaled values), and the base-2 logarithm
bounds come straight from bit lengths.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt


def sqrt_upper(q: Fraction, bits: int = 32) -> Fraction:
    """Rational u with u >= sqrt(q) and u^2 within ~2^-bits relative slack."""
    q = Fraction(q)
    if q < 0:
        raise ValueError("sqrt of negative rational")
    if q == 0:
        return Fraction(0)
    scale = 1 << bits
    n = q.numerator * scale * scale
    d = q.denominator
    root = isqrt(n // d) + 1
    return Fraction(root, scale)


def sqrt_lower(q: Fraction, bits: int = 32) -> Fraction:
    """Rational l with 0 <= l <= sqrt(q)."""
    q = Fraction(q)
    if q <= 0:
        if q < 0:
            raise ValueError("sqrt of negative rational")
        return Fraction(0)
    scale = 1 << bits
    n = q.numerator * scale * scale
    d = q.denominator
    root = isqrt(n // d)
    return Fraction(root, scale)


def log2_upper(q: Fraction) -> int:
    """Integer u with log2(q) < u, from bit lengths alone."""
    q = Fraction(q)
    if q <= 0:
        raise ValueError("log2 of nonpositive rational")
    return q.numerator.bit_length() - q.denominator.bit_length() + 1


def log2_lower(q: Fraction) -> int:
    """Integer l with l <= log2(q)."""
    q = Fraction(q)
    if q <= 0:
        raise ValueError("log2 of nonpositive rational")
    return q.numerator.bit_length() - q.denominator.bit_length() - 1


def divide_intervals(num_lo: Fraction, num_hi: Fraction,
                     den_lo: Fraction, den_hi: Fraction) -> tuple[Fraction, Fraction]:
    """Enclosure of {n/d : n in [num_lo,num_hi], d in [den_lo,den_hi]}.

    The denominator interval must exclude zero.
    """
    if den_lo <= 0 <= den_hi:
        raise ZeroDivisionError("denominator interval contains zero")
    quotients = [num_lo / den_lo, num_lo / den_hi,
                 num_hi / den_lo, num_hi / den_hi]
    return min(quotients), max(quotients)
