"""Exact closed-form and recursive counting formulas.

All counts are plain Python ints (arbitrary precision); nothing in this
module touches floating point except the certified series evaluator,
which works in exact rationals and only rounds once the result is
provably within 1/4 of an integer.
"""

from fractions import Fraction
from functools import lru_cache
from math import comb, prod

from .errors import SeriesPrecisionError


def double_factorial(n: int) -> int:
    """(2n-1)!! = 1*3*5*...*(2n-1), the number of doubled Stirling words of order n."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return prod(range(1, 2 * n, 2))


@lru_cache(maxsize=None)
def stirling2(a: int, b: int) -> int:
    """Stirling number of the second kind: partitions of an a-set into b nonempty blocks.

    Convention: S(0,0) = 1 and S(a,0) = 0 for a >= 1.  The boundary value
    S(0,0) = 1 is required for ``dowling`` to count the partition whose
    zero-block absorbs every element; see that function's docstring.
    """
    if a < 0 or b < 0:
        raise ValueError("arguments must be nonnegative")
    if a == 0:
        return 1 if b == 0 else 0
    if b == 0 or b > a:
        return 0
    return b * stirling2(a - 1, b) + stirling2(a - 1, b - 1)


def dowling(n: int) -> int:
    """Number of type B set partitions of [-n, n].

    Counts by zero-block support size i, then by the number k of block
    pairs: sum_i C(n,i) * sum_k 2^(n-i-k) * S(n-i, k).  The i = n term
    (everything in the zero-block) must contribute exactly 1, which is
    why ``stirling2`` uses S(0,0) = 1.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    return sum(
        comb(n, i) * sum(2 ** (n - i - k) * stirling2(n - i, k) for k in range(n - i + 1))
        for i in range(n + 1)
    )


def flat2_recurrence(n: int) -> int:
    """Count of flattened doubled Stirling words of order n with exactly two runs.

    Evaluates a(k+1) = 2*a(k) + 2k - 1 with a(1) = 0.
    """
    if n < 1:
        raise ValueError("n must be positive")
    a = 0
    for k in range(1, n):
        a = 2 * a + 2 * k - 1
    return a


def flat2_closed(n: int) -> int:
    """Closed form 3*(2^n - 1) - 2n for the two-run count at order n+1.

    Equals ``flat2_recurrence(n + 1)`` for every n >= 1.
    """
    if n < 1:
        raise ValueError("n must be positive")
    return 3 * (2**n - 1) - 2 * n


def max_runs(n: int) -> int:
    """Maximum run count attainable by a flattened doubled word of order n: ceil(2n/3)."""
    if n < 1:
        raise ValueError("n must be positive")
    return -(-2 * n // 3)


def _choose_at_least_two(s: int) -> int:
    """sum_{j=2}^{s} C(s, j); empty (zero) whenever s < 2."""
    return sum(comb(s, j) for j in range(2, s + 1))


def flat3_conjecture(n: int) -> int:
    """Conjectured count of flattened doubled words of order n with exactly three runs.

    Three-term sum over k; the first two sums both carry the factor 2
    (with the factor on the first sum only, the value at n = 5 comes out
    64 instead of the verified 70).  Inner sums whose upper bound is
    below 2 contribute 0.
    """
    if n < 1:
        raise ValueError("n must be positive")
    t = n - 1
    first = sum(comb(t, k) * _choose_at_least_two(t - k) for k in range(1, t + 1))
    second = sum(comb(t, k) * _choose_at_least_two(t - k) for k in range(2, t + 1))
    third = sum((2 ** (k - 1) - 2) * comb(t, k) for k in range(3, t + 1))
    return 2 * first + 2 * second + third


def mstirling_count(n: int, m: int) -> int:
    """|Q_n^m| = prod_{i=0}^{n-1} (i*m + 1); reduces to (2n-1)!! at m = 2."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if m < 1:
        raise ValueError("m must be positive")
    return prod(i * m + 1 for i in range(n))


def flatm_recurrence(n: int, m: int) -> int:
    """Count of flattened m-Stirling words of order n, via the conjectured recurrence.

    The recurrence b(j) = (m-1)*b(j-1) + sum_{k=1}^{j} C(j-1,k-1) * m^(k-1) * b(j-k),
    b(0) = 1, produces the count for order j+1 (reading b(j) as the
    order-j count would give m at order 1 instead of the correct 1), so
    the count for order n is b(n-1); the empty word gives 1 at n = 0.
    At m = 2 this reproduces ``dowling(n - 1)``.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if m < 2:
        raise ValueError("m must be at least 2")
    if n == 0:
        return 1
    b = [1]
    for j in range(1, n):
        b.append(
            (m - 1) * b[j - 1]
            + sum(comb(j - 1, k - 1) * m ** (k - 1) * b[j - k] for k in range(1, j + 1))
        )
    return b[n - 1]


def _exp_neg_inverse_bounds(m: int, terms: int) -> tuple[Fraction, Fraction]:
    """Certified rational bounds on e^(-1/m) from the alternating Taylor series."""
    x = Fraction(1, m)
    total = Fraction(0)
    term = Fraction(1)
    for i in range(terms + 1):
        if i:
            term *= -x / i
        total += term
    err = x ** (terms + 1) / prod(range(1, terms + 2))
    return total - err, total + err


def flatm_series(n: int, m: int, max_rounds: int = 12) -> int:
    """Count of flattened m-Stirling words of order n, via the conjectured series.

    Evaluates e^(-1/m) * sum_{k>=0} (mk + m - 1)^(n-1) / (k! * m^k) in
    exact rational arithmetic.  The partial sum is cut off once the term
    ratio is certifiably below 1/2 (the ratio is monotone decreasing), so
    the tail is bounded by twice the first omitted term; e^(-1/m) is
    enclosed by alternating-series bounds.  Precision (series terms on
    both sides) grows geometrically until the certified interval lies
    within 1/4 of a single integer, which is then returned.

    Raises SeriesPrecisionError if the interval cannot be certified, or
    if it provably does not round (value further than 1/4 from every
    integer).
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if m < 2:
        raise ValueError("m must be at least 2")
    p = n - 1 if n >= 1 else 0

    def term(k: int, factorial: int) -> Fraction:
        return Fraction((m * k + m - 1) ** p, factorial * m**k)

    quarter = Fraction(1, 4)
    terms_main = 8
    terms_exp = 8
    narrow_interval: tuple[Fraction, Fraction] | None = None
    for _ in range(max_rounds):
        total = Fraction(0)
        factorial = 1
        k = 0
        while True:
            total += term(k, factorial)
            # the term ratio t(k+1)/t(k) decreases in k; once it is <= 1/2
            # the tail beyond t(k+1) is geometrically dominated, so the
            # whole remainder is at most 2*t(k+1)
            nxt = term(k + 1, factorial * (k + 1))
            if k >= terms_main and 2 * nxt <= term(k, factorial) and nxt < Fraction(1, 16):
                tail_hi = 2 * nxt
                break
            factorial *= k + 1
            k += 1
        exp_lo, exp_hi = _exp_neg_inverse_bounds(m, terms_exp)
        lo = total * exp_lo
        hi = (total + tail_hi) * exp_hi
        if hi - lo < Fraction(1, 8):
            nearest = (lo + hi + 1) // 2  # floor(midpoint + 1/2)
            if nearest - quarter <= lo and hi <= nearest + quarter:
                return int(nearest)
            # narrow but not inside the quarter window: tighten further
            narrow_interval = (lo, hi)
        terms_main *= 2
        terms_exp *= 2
    if narrow_interval is not None:
        lo, hi = narrow_interval
        raise SeriesPrecisionError(
            f"series value for (n={n}, m={m}) certified in "
            f"[{float(lo):.9f}, {float(hi):.9f}] is not within 1/4 of an integer"
        )
    raise SeriesPrecisionError(
        f"series for (n={n}, m={m}) did not certify within {max_rounds} precision rounds"
    )
