"""Exact arithmetic over real quadratic fields Q(sqrt(d)).

A :class:`QuadSurd` is the value (p + q*sqrt(d))/r with integers p, q, a
positive integer r and a square-free positive radicand d.  Every operation
here is exact: comparisons, floors and ceilings are decided by integer
arithmetic alone, never by floating point.  Rationals embed as q = 0 (with
d normalised to 1), so a single type covers both paths.

Values are immutable and hashable; arithmetic returns fresh objects.
"""

from __future__ import annotations

import re
from decimal import Decimal, localcontext
from fractions import Fraction
from math import gcd, isqrt

from .errors import DivideByZero, MixedFields, NonSquareFree, ZeroDenominator

_TRIAL_LIMIT = 10_000
_LARGE_COFACTOR = 10**12


def _small_primes(limit: int = _TRIAL_LIMIT) -> list[int]:
    sieve = bytearray([1]) * (limit + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, isqrt(limit) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(sieve[i * i :: i]))
    return [i for i, flag in enumerate(sieve) if flag]

_PRIMES = _small_primes()

# radicands already certified square-free (avoids re-factoring in hot paths)
_SQUAREFREE_SEEN: set[int] = {1, 2, 3, 5, 6, 7, 10, 11, 13, 14, 15, 17, 19, 21, 22, 23}


def is_square_free(d: int) -> bool:
    if d < 1:
        return False
    if d in _SQUAREFREE_SEEN:
        return True
    m = d
    for p in _PRIMES:
        if p * p > m:
            break
        if m % p == 0:
            m //= p
            if m % p == 0:
                return False
    if m > 1:
        s = isqrt(m)
        if s * s == m:
            return False
        if m > _LARGE_COFACTOR and not _large_square_free(m):
            return False
    _SQUAREFREE_SEEN.add(d)
    return True


def _large_square_free(m: int) -> bool:
    # cofactor with no prime factor <= _TRIAL_LIMIT and not a perfect square;
    # only m >= 10^12 can still hide a repeated prime, so factor properly
    from sympy import factorint

    return all(e == 1 for e in factorint(m).values())


def square_free_part(m: int) -> tuple[int, int]:
    """Decompose m > 0 as s*s*d0 with d0 square-free; returns (d0, s)."""
    if m <= 0:
        raise ValueError("square_free_part needs a positive integer")
    d0, s = 1, 1
    for p in _PRIMES:
        if p * p > m:
            break
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            s *= p ** (e // 2)
            if e % 2:
                d0 *= p
    if m > 1:
        r = isqrt(m)
        if r * r == m:
            s *= r
        elif m <= _LARGE_COFACTOR:
            d0 *= m
        else:
            from sympy import factorint

            for p, e in factorint(m).items():
                s *= p ** (e // 2)
                if e % 2:
                    d0 *= p
    return d0, s


class QuadSurd:
    """(p + q*sqrt(d))/r, normalised so r > 0, gcd(p, q, r) = 1, d square-free.

    Rational values always have q = 0 and d = 1, so structural equality
    coincides with numerical equality.
    """

    __slots__ = ("p", "q", "r", "d")

    def __init__(self, p: int, q: int = 0, r: int = 1, d: int = 1):
        if r == 0:
            raise ZeroDenominator("denominator r must be nonzero")
        if d < 1:
            raise NonSquareFree(f"radicand must be a positive integer, got {d}")
        if q != 0 and d > 1 and not is_square_free(d):
            raise NonSquareFree(f"radicand {d} is not square-free")
        if d == 1:
            p, q = p + q, 0
        if q == 0:
            d = 1
        if r < 0:
            p, q, r = -p, -q, -r
        g = gcd(gcd(abs(p), abs(q)), r)
        if g > 1:
            p //= g
            q //= g
            r //= g
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "d", d)

    def __setattr__(self, name, value):
        raise AttributeError("QuadSurd is immutable")

    # -- classification ------------------------------------------------

    @property
    def is_rational(self) -> bool:
        return self.q == 0

    @property
    def is_zero(self) -> bool:
        return self.p == 0 and self.q == 0

    def as_fraction(self) -> Fraction:
        if self.q != 0:
            raise ValueError("irrational surd has no Fraction form")
        return Fraction(self.p, self.r)

    @classmethod
    def from_rational(cls, x: int | Fraction) -> QuadSurd:
        f = Fraction(x)
        return cls(f.numerator, 0, f.denominator, 1)

    # -- field merging ---------------------------------------------------

    def _merge_d(self, other: QuadSurd) -> int:
        if self.d == other.d:
            return self.d
        if self.q == 0:
            return other.d
        if other.q == 0:
            return self.d
        raise MixedFields(f"cannot combine sqrt({self.d}) with sqrt({other.d})")

    @staticmethod
    def _coerce(x) -> QuadSurd:
        if isinstance(x, QuadSurd):
            return x
        if isinstance(x, int):
            return QuadSurd(x)
        if isinstance(x, Fraction):
            return QuadSurd(x.numerator, 0, x.denominator)
        return NotImplemented

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other) -> QuadSurd:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        d = self._merge_d(o)
        return QuadSurd(
            self.p * o.r + o.p * self.r,
            self.q * o.r + o.q * self.r,
            self.r * o.r,
            d,
        )

    __radd__ = __add__

    def __neg__(self) -> QuadSurd:
        return QuadSurd(-self.p, -self.q, self.r, self.d)

    def __sub__(self, other) -> QuadSurd:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> QuadSurd:
        return (-self) + other

    def __mul__(self, other) -> QuadSurd:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        d = self._merge_d(o)
        return QuadSurd(
            self.p * o.p + self.q * o.q * d,
            self.p * o.q + self.q * o.p,
            self.r * o.r,
            d,
        )

    __rmul__ = __mul__

    def inverse(self) -> QuadSurd:
        if self.is_zero:
            raise DivideByZero("cannot invert zero")
        den = self.p * self.p - self.q * self.q * self.d
        # den = 0 would force p = q = 0 because d is never a perfect square
        return QuadSurd(self.r * self.p, -self.r * self.q, den, self.d)

    def __truediv__(self, other) -> QuadSurd:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other) -> QuadSurd:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return o * self.inverse()

    def __abs__(self) -> QuadSurd:
        return -self if self.sign() < 0 else self

    def conjugate(self) -> QuadSurd:
        return QuadSurd(self.p, -self.q, self.r, self.d)

    # -- exact order -----------------------------------------------------

    def sign(self) -> int:
        """Sign of the value, decided by integer comparisons only."""
        p, q = self.p, self.q
        if q == 0:
            return (p > 0) - (p < 0)
        if p == 0:
            return (q > 0) - (q < 0)
        if (p > 0) == (q > 0):
            return 1 if p > 0 else -1
        # opposite signs: |p| vs |q|*sqrt(d); equality impossible (d non-square)
        if p * p > q * q * self.d:
            return 1 if p > 0 else -1
        return 1 if q > 0 else -1

    def _cmp(self, other) -> int:
        o = self._coerce(other)
        if o is NotImplemented:
            raise TypeError(f"cannot compare QuadSurd with {type(other)!r}")
        if self.d == o.d or self.q == 0 or o.q == 0:
            return (self - o).sign()
        return self._cmp_cross_field(o)

    def _cmp_cross_field(self, o: QuadSurd) -> int:
        # sign of (self - o) = u + a*sqrt(d1) - b*sqrt(d2), all exact:
        # compare u + a*sqrt(d1) against b*sqrt(d2) by one squaring step,
        # which lands back in Q(sqrt(d1)).
        u = Fraction(self.p, self.r) - Fraction(o.p, o.r)
        a = Fraction(self.q, self.r)
        b = Fraction(o.q, o.r)
        lhs = QuadSurd(
            u.numerator * a.denominator,
            a.numerator * u.denominator,
            u.denominator * a.denominator,
            self.d,
        )
        ls = lhs.sign()
        rs = (b > 0) - (b < 0)
        if ls != rs:
            return 1 if ls > rs else -1
        if ls == 0:
            return 0
        diff_sq = lhs * lhs - QuadSurd.from_rational(b * b * o.d)
        return ls * diff_sq.sign()

    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return (self.p, self.q, self.r, self.d) == (o.p, o.q, o.r, o.d)

    def __hash__(self) -> int:
        if self.q == 0:
            return hash(Fraction(self.p, self.r))
        return hash((self.p, self.q, self.r, self.d))

    def __lt__(self, other) -> bool:
        return self._cmp(other) < 0

    def __le__(self, other) -> bool:
        return self._cmp(other) <= 0

    def __gt__(self, other) -> bool:
        return self._cmp(other) > 0

    def __ge__(self, other) -> bool:
        return self._cmp(other) >= 0

    # -- floor / ceil ------------------------------------------------------

    def _cmp_with_int_times(self, m: int) -> int:
        """Sign of (m*r - (p + q*sqrt(d))), exact."""
        x = m * self.r - self.p
        q = self.q
        if q == 0:
            return (x > 0) - (x < 0)
        if q > 0:
            if x <= 0:
                return -1
            return 1 if x * x > q * q * self.d else -1
        if x >= 0:
            return 1
        return -1 if x * x > q * q * self.d else 1

    def __floor__(self) -> int:
        p, q, r, d = self.p, self.q, self.r, self.d
        if q == 0:
            return p // r
        s = isqrt(q * q * d)
        lo = p + s if q > 0 else p - s - 1
        n = lo // r
        while self._cmp_with_int_times(n + 1) <= 0:
            n += 1
        while self._cmp_with_int_times(n) > 0:
            n -= 1
        return n

    def __ceil__(self) -> int:
        if self.q == 0:
            return -((-self.p) // self.r)
        return self.__floor__() + 1

    def floor_ceil(self) -> tuple[int, int]:
        """Exact floor and ceiling; equal for integer values."""
        f = self.__floor__()
        if self.q == 0 and self.p == f * self.r:
            return f, f
        return f, f + 1

    # -- rendering -------------------------------------------------------

    def approx_fraction(self, digits: int = 25) -> Fraction:
        """Rational approximation with absolute error below 10**-digits."""
        scale = 10**digits
        t = self.q * scale
        s = isqrt(t * t * self.d)
        if self.q < 0:
            s = -s
        return Fraction(self.p * scale + s, self.r * scale)

    def __float__(self) -> float:
        return float(self.approx_fraction(25))

    def to_decimal(self, digits: int = 15) -> str:
        f = self.approx_fraction(digits + 10)
        with localcontext() as ctx:
            ctx.prec = digits
            return str(Decimal(f.numerator) / Decimal(f.denominator))

    def __str__(self) -> str:
        return format_surd(self)

    def __repr__(self) -> str:
        return f"QuadSurd({self.p}, {self.q}, {self.r}, {self.d})"


def surd(p: int, q: int = 0, r: int = 1, d: int = 1) -> QuadSurd:
    """Construct a normalised surd (p + q*sqrt(d))/r."""
    return QuadSurd(p, q, r, d)


def sqrt_surd(d: int) -> QuadSurd:
    """sqrt(d) as an exact value, pulling out square factors."""
    d0, s = square_free_part(d)
    return QuadSurd(0, s, 1, d0) if d0 > 1 else QuadSurd(s)


_SURD_RE = re.compile(
    r"""^\(\s*(?P<p>[+-]?\d+)\s*(?P<sign>[+-])\s*(?P<q>\d+)\s*\*\s*
        sqrt\(\s*(?P<d>\d+)\s*\)\s*\)\s*/\s*(?P<r>[+-]?\d+)$""",
    re.VERBOSE,
)
_RAT_RE = re.compile(r"^(?P<p>[+-]?\d+)\s*(?:/\s*(?P<r>[+-]?\d+))?$")


def parse_surd(text: str) -> QuadSurd:
    """Parse "(p+q*sqrt(d))/r" or the rational shorthand "p/r" / "p"."""
    t = text.strip()
    m = _SURD_RE.match(t)
    if m:
        q = int(m.group("q"))
        if m.group("sign") == "-":
            q = -q
        return QuadSurd(int(m.group("p")), q, int(m.group("r")), int(m.group("d")))
    m = _RAT_RE.match(t)
    if m:
        r = int(m.group("r")) if m.group("r") else 1
        return QuadSurd(int(m.group("p")), 0, r, 1)
    raise ValueError(f"cannot parse surd from {text!r}")


def format_surd(x: QuadSurd) -> str:
    if x.q == 0:
        return str(x.p) if x.r == 1 else f"{x.p}/{x.r}"
    sign = "+" if x.q > 0 else "-"
    return f"({x.p}{sign}{abs(x.q)}*sqrt({x.d}))/{x.r}"
