"""Exact arithmetic for pitch ratios.

Pitch ratios live in three exact representations:

* ``Fraction`` -- any positive rational, arbitrary precision;
* ``Monzo`` -- a rational factored over the primes {2, 3, 5}, stored as its
  exponent vector, which makes membership in the 3-limit/5-limit lattices a
  structural fact instead of a numeric test;
* decimal strings produced by :func:`to_decimal`, which truncate (never
  round) so that printed digits are always exact.

Everything here is immutable and pure.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .errors import ExponentBoundError

#: Safety bound on prime exponents.  3**64 is astronomically larger than any
#: value a scale construction reaches; exceeding the bound means a caller is
#: iterating out of control, so it becomes a typed error instead of silence.
EXPONENT_BOUND = 64

RationalLike = Union[int, Fraction]


@dataclass(frozen=True)
class Monzo:
    """A positive rational 2**exp2 * 3**exp3 * 5**exp5 as its exponent vector.

    Two monzos are equal iff their exponents are equal; by unique
    factorization that coincides with equality of the rationals they denote.
    """

    exp2: int
    exp3: int
    exp5: int = 0

    def __post_init__(self):
        for e in (self.exp2, self.exp3, self.exp5):
            if abs(e) > EXPONENT_BOUND:
                raise ExponentBoundError(
                    f"exponent {e} exceeds the configured bound +/-{EXPONENT_BOUND}"
                )

    def __add__(self, other: "Monzo") -> "Monzo":
        return Monzo(self.exp2 + other.exp2, self.exp3 + other.exp3, self.exp5 + other.exp5)

    def __sub__(self, other: "Monzo") -> "Monzo":
        return Monzo(self.exp2 - other.exp2, self.exp3 - other.exp3, self.exp5 - other.exp5)

    def as_fraction(self) -> Fraction:
        return monzo_to_rational(self)

    @property
    def is_three_limit(self) -> bool:
        return self.exp5 == 0


def monzo_to_rational(m: Monzo) -> Fraction:
    """Return the reduced fraction 2**exp2 * 3**exp3 * 5**exp5."""
    num = 1
    den = 1
    for prime, e in ((2, m.exp2), (3, m.exp3), (5, m.exp5)):
        if e >= 0:
            num *= prime ** e
        else:
            den *= prime ** (-e)
    return Fraction(num, den)


def rational_to_monzo(r: RationalLike) -> Optional[Monzo]:
    """Factor ``r`` over {2, 3, 5}; None when it is not 5-smooth.

    None is a membership signal, not an error: callers use it to test whether
    a sound belongs to the prime lattice at all.
    """
    r = Fraction(r)
    if r <= 0:
        raise ValueError("pitch ratios must be positive")
    exps = {2: 0, 3: 0, 5: 0}
    num, den = r.numerator, r.denominator
    for p in (2, 3, 5):
        while num % p == 0:
            num //= p
            exps[p] += 1
        while den % p == 0:
            den //= p
            exps[p] -= 1
    if num != 1 or den != 1:
        return None
    return Monzo(exps[2], exps[3], exps[5])


def is_five_smooth(r: RationalLike) -> bool:
    return rational_to_monzo(r) is not None


def reduce_to_octave(r: RationalLike) -> Fraction:
    """Multiply by the unique power of two that lands ``r`` in [1, 2)."""
    r = Fraction(r)
    if r <= 0:
        raise ValueError("pitch ratios must be positive")
    while r < 1:
        r *= 2
    while r >= 2:
        r /= 2
    return r


def integer_nth_root(x: int, n: int) -> int:
    """floor(x ** (1/n)) computed purely with integers."""
    if x < 0 or n < 1:
        raise ValueError("integer_nth_root requires x >= 0, n >= 1")
    if x == 0:
        return 0
    if n == 1:
        return x
    # bisection on a bracket derived from the bit length
    hi = 1 << (x.bit_length() // n + 1)
    lo = 0
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if mid ** n <= x:
            lo = mid
        else:
            hi = mid
    return lo


def is_perfect_nth_power(m: int, n: int) -> tuple[bool, Optional[int]]:
    """Whether a**n == m for some integer a; returns (flag, a or None)."""
    if m < 1:
        raise ValueError("m must be a positive integer")
    if n < 2:
        raise ValueError("n must be at least 2")
    a = integer_nth_root(m, n)
    if a ** n == m:
        return True, a
    return False, None


def is_nth_root_irrational(m: int, n: int) -> bool:
    """True exactly when the nth root of m is irrational (m, n >= 2)."""
    if m < 2 or n < 2:
        raise ValueError("requires m >= 2 and n >= 2")
    return not is_perfect_nth_power(m, n)[0]


def _terminating_digits(den: int) -> Optional[int]:
    """Length of the exact decimal expansion for 1/den, or None if infinite."""
    twos = fives = 0
    while den % 2 == 0:
        den //= 2
        twos += 1
    while den % 5 == 0:
        den //= 5
        fives += 1
    return max(twos, fives) if den == 1 else None


def to_decimal(r: RationalLike, digits: int) -> str:
    """Truncated decimal expansion of ``r`` with ``digits`` fraction digits.

    Expansions that terminate within the requested width are emitted in full
    with no zero padding ("1.5", "1"); all other values get exactly ``digits``
    truncated digits ("1.33333", "1.60180").
    """
    if digits < 1:
        raise ValueError("digits must be >= 1")
    r = Fraction(r)
    if r < 0:
        raise ValueError("negative ratios are not printable pitches")
    exact_len = _terminating_digits(r.denominator)
    width = exact_len if exact_len is not None and exact_len <= digits else digits
    scaled = r.numerator * 10 ** width // r.denominator
    if width == 0:
        return str(scaled)
    s = str(scaled).rjust(width + 1, "0")
    return f"{s[:-width]}.{s[-width:]}"


def monzo_form(r: Union[RationalLike, Monzo]) -> str:
    """Factored rendering over {2, 3, 5}: 243/128 -> "3^5/2^7", 15/8 -> "3*5/2^3".

    Ratios outside the lattice fall back to plain "p/q".
    """
    if isinstance(r, Monzo):
        m = r
    else:
        m = rational_to_monzo(r)
        if m is None:
            f = Fraction(r)
            return f"{f.numerator}/{f.denominator}"

    def side(exps: list[tuple[int, int]]) -> str:
        parts = [f"{p}^{e}" if e > 1 else str(p) for p, e in exps if e > 0]
        return "*".join(parts)

    num = side([(2, m.exp2), (3, m.exp3), (5, m.exp5)])
    den = side([(2, -m.exp2), (3, -m.exp3), (5, -m.exp5)])
    if not num and not den:
        return "1"
    if not den:
        return num
    return f"{num or '1'}/{den}"


def cents(r) -> float:
    """Interval size of a ratio in cents: 1200 * log2(r).

    Accepts anything with a positive real value: int, Fraction, float, Monzo,
    or objects exposing ``cents()`` themselves (symbolic equal-division
    pitches).
    """
    if hasattr(r, "cents"):
        return r.cents()
    if isinstance(r, Monzo):
        r = monzo_to_rational(r)
    if isinstance(r, Fraction):
        # split the log to stay accurate for very large numerator/denominator
        return 1200.0 * (math.log2(r.numerator) - math.log2(r.denominator))
    value = float(r)
    if value <= 0:
        raise ValueError("cents is defined for positive ratios only")
    return 1200.0 * math.log2(value)
