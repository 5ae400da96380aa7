"""Exact, certified evaluation of the entire function

    f(x) = sum_{n >= 0} x^n / (n! * a^(n(n-1)/2)),        a > 1,

the solution of the proportional-delay Cauchy problem y'(x) = y(x/a),
y(0) = 1.  The main case throughout the library is a = 2.

Everything here is computed in exact rational arithmetic
(``fractions.Fraction``), because the series alternates for x < 0 with
terms as large as ~2^(n^2/2) while the value near a zero is tiny: floating
summation loses every significant digit to cancellation long before the
interesting range, whereas rational partial sums are exact and only the
*tail* needs bounding.

Tail bound.  The term ratio is t_{n+1}/t_n = x / ((n+1) a^n), which is
eventually below 1/2 in absolute value.  Once |x| / ((N+1) a^N) <= 1/2 the
tail after the degree-N partial sum is dominated by a geometric series with
ratio 1/2, so

    |f(x) - P_N(x)| <= 2 |x|^(N+1) / ((N+1)! * a^(N(N+1)/2)).

Every evaluation returns an :class:`IntervalValue` (exact partial sum plus
this rigorous tail radius); sign queries succeed only when the interval
excludes zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import BudgetExceededError, SignIndeterminateError

RationalLike = Union[int, Fraction]

#: Default resource limits; generous for desk scale, small enough that a
#: runaway request fails fast instead of exhausting memory.
DEFAULT_MAX_TERMS = 512
DEFAULT_MAX_BITS = 1_000_000


@dataclass(frozen=True)
class SeriesSpec:
    """Delay ratio a > 1 plus the resource budget for exact evaluation."""

    alpha: Fraction = Fraction(2)
    max_terms: int = DEFAULT_MAX_TERMS
    max_bits: int = DEFAULT_MAX_BITS

    def __post_init__(self):
        object.__setattr__(self, "alpha", Fraction(self.alpha))
        if self.alpha <= 1:
            raise ValueError("delay ratio alpha must exceed 1")
        if self.max_terms < 1:
            raise ValueError("max_terms must be positive")


DEFAULT_SPEC = SeriesSpec()


@dataclass(frozen=True)
class IntervalValue:
    """A certified scalar: exact center plus rigorous absolute error radius.

    The true value is guaranteed to lie in [center - radius, center + radius].
    When 0 is outside the interval, the sign of ``center`` is the certified
    sign of the true value.
    """

    center: Fraction
    radius: Fraction

    def __post_init__(self):
        object.__setattr__(self, "center", Fraction(self.center))
        object.__setattr__(self, "radius", Fraction(self.radius))
        if self.radius < 0:
            raise ValueError("radius must be nonnegative")

    @property
    def lo(self) -> Fraction:
        return self.center - self.radius

    @property
    def hi(self) -> Fraction:
        return self.center + self.radius

    def contains_zero(self) -> bool:
        return self.lo <= 0 <= self.hi

    def sign(self) -> int:
        """Certified sign (+1 or -1); raises if 0 is inside the interval."""
        if self.contains_zero():
            raise SignIndeterminateError(
                "interval straddles zero; sign not certified", interval=self)
        return 1 if self.center > 0 else -1

    def __float__(self) -> float:
        return float(self.center)

    def __repr__(self) -> str:  # keep huge rationals readable
        return f"IntervalValue({float(self.center)!r} ± {float(self.radius)!r})"


def _as_fraction(x: RationalLike, name: str) -> Fraction:
    if isinstance(x, float):
        raise TypeError(f"{name} must be exact (int or Fraction), got float; "
                        "use eval_float for float inputs")
    return Fraction(x)


class _SeriesSum:
    """Incremental exact partial summation with budget enforcement.

    State after ``extend``: ``partial`` holds sum of terms 0..n and ``term``
    holds t_{n+1}, the first omitted term.
    """

    def __init__(self, x: Fraction, spec: SeriesSpec):
        self.x = x
        self.alpha = spec.alpha
        self.spec = spec
        self.n = 0
        self.partial = Fraction(1)      # t_0
        self.term = x                   # t_1 = x / (1 * a^0)
        self.alpha_pow = Fraction(1)    # a^n, for the next ratio

    def _check_budget(self):
        if self.n > self.spec.max_terms:
            raise BudgetExceededError(
                f"series truncation exceeded max_terms={self.spec.max_terms}",
                terms=self.n)
        bits = (self.partial.numerator.bit_length()
                + self.partial.denominator.bit_length())
        if bits > self.spec.max_bits:
            raise BudgetExceededError(
                f"partial sum exceeded max_bits={self.spec.max_bits}",
                terms=self.n, bits=bits)

    def step(self):
        """Fold t_{n+1} into the partial sum and advance the omitted term."""
        self.partial += self.term
        self.n += 1
        self.alpha_pow *= self.alpha
        # t_{n+1} = t_n * x / ((n+1) a^n)
        self.term = self.term * self.x / ((self.n + 1) * self.alpha_pow)
        self._check_budget()

    def ratio_small(self) -> bool:
        """True once |x| / ((n+1) a^n) <= 1/2, validating the geometric tail."""
        return 2 * abs(self.x) <= (self.n + 1) * self.alpha_pow

    def tail_bound(self) -> Fraction:
        """2 |t_{n+1}|; rigorous only when ``ratio_small`` holds."""
        return 2 * abs(self.term)


def truncation_order(x_abs: RationalLike, tol: RationalLike,
                     spec: SeriesSpec = DEFAULT_SPEC) -> int:
    """Smallest N with a valid geometric tail certificate below ``tol``.

    Returns the least N such that |x|/((N+1) a^N) <= 1/2 and
    2 |x|^(N+1) / ((N+1)! a^(N(N+1)/2)) <= tol, which together guarantee
    |f(x) - P_N(x)| <= tol for every |x| <= x_abs.
    """
    x_abs = _as_fraction(x_abs, "x_abs")
    tol = _as_fraction(tol, "tol")
    if x_abs < 0:
        raise ValueError("x_abs must be nonnegative")
    if tol <= 0:
        raise ValueError("tol must be positive")
    acc = _SeriesSum(x_abs, spec)
    while True:
        if acc.ratio_small() and acc.tail_bound() <= tol:
            return acc.n
        acc.step()


def eval_interval(x: RationalLike, tol: RationalLike,
                  spec: SeriesSpec = DEFAULT_SPEC) -> IntervalValue:
    """Certified value of f at an exact rational point, radius <= tol."""
    x = _as_fraction(x, "x")
    tol = _as_fraction(tol, "tol")
    if tol <= 0:
        raise ValueError("tol must be positive")
    acc = _SeriesSum(x, spec)
    while not (acc.ratio_small() and 2 * abs(acc.term) <= tol):
        acc.step()
    return IntervalValue(acc.partial, acc.tail_bound())


def sign_at(x: RationalLike, spec: SeriesSpec = DEFAULT_SPEC,
            max_halvings: int = 256) -> int:
    """Certified sign of f(x) for exact rational x, +1 or -1.

    Repeatedly halves the evaluation tolerance until the certified interval
    excludes 0.  The budget exists because f is conjectured to have no
    rational zeros but this is unproven: at an actual zero the loop would
    never terminate, so it errs out instead.
    """
    x = _as_fraction(x, "x")
    acc = _SeriesSum(x, spec)
    tol = Fraction(1)
    interval = None
    for _ in range(max_halvings):
        while not (acc.ratio_small() and 2 * abs(acc.term) <= tol):
            acc.step()
        interval = IntervalValue(acc.partial, acc.tail_bound())
        if not interval.contains_zero():
            return interval.sign()
        tol /= 2
    raise SignIndeterminateError(
        f"sign of f({x}) not certified after {max_halvings} tolerance "
        "halvings", interval=interval)


def eval_float(x: float, rel_tol: float = 1e-12,
               spec: SeriesSpec = DEFAULT_SPEC) -> float:
    """f(x) as a float with relative error <= rel_tol plus one rounding.

    The argument is snapped to the exact dyadic rational the float
    represents, so the certified rational path stays the single source of
    truth.  Near a zero of f this needs progressively tighter absolute
    tolerances; the series budget still bounds the work.
    """
    if rel_tol <= 0:
        raise ValueError("rel_tol must be positive")
    xq = Fraction(x)  # exact dyadic value of the float
    rel = Fraction(rel_tol)
    tol = Fraction(1)
    for _ in range(spec.max_terms):
        iv = eval_interval(xq, tol, spec)
        if iv.center == 0 and iv.radius == 0:
            return 0.0
        if iv.radius <= rel * abs(iv.center):
            return float(iv.center)
        # aim directly for the relative target implied by the current center
        tol = min(tol / 2, rel * abs(iv.center) / 2) if iv.center != 0 \
            else tol / 2
    raise BudgetExceededError(
        f"eval_float({x}) did not reach relative tolerance {rel_tol}")


def sup_abs_bound(r: RationalLike, spec: SeriesSpec = DEFAULT_SPEC) -> Fraction:
    """Rational upper bound for sup of |f| over the disc |x| <= r.

    All series coefficients are positive, so the supremum equals f(r) with
    r >= 0; returned as the certified interval's upper endpoint.
    """
    r = abs(_as_fraction(r, "r"))
    return eval_interval(r, Fraction(1), spec).hi
