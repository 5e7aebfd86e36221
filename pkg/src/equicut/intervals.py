"""Rigorous numerics: rational intervals and refinable real numbers.

``RatInterval`` is plain interval arithmetic with exact ``Fraction``
endpoints, so every operation encloses the true result with no rounding.

``NumericReal`` represents a real number through a refinement callback that
can produce an enclosure of any requested width.  Arithmetic on
``NumericReal`` values composes the callbacks; precision is raised until the
requested output width is met.

Transcendental values (pi, acos, sin) come from mpmath evaluated at elevated
working precision and are then padded outward by a full 2**-bits, several
orders of magnitude beyond mpmath's documented few-ulp error, so the returned
intervals are trustworthy enclosures.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Union

import mpmath

from .exact import TowerReal, fraction_sqrt_bounds

__all__ = [
    "NumericReal",
    "RatInterval",
    "acos_interval",
    "acos_numeric",
    "mpf_to_fraction",
    "pi_interval",
    "sin_interval",
    "sin_numeric",
]

_ZERO = Fraction(0)
_ONE = Fraction(1)

_GUARD_BITS = 16


class RatInterval:
    """A closed interval [lo, hi] with exact rational endpoints."""

    __slots__ = ("lo", "hi")

    def __init__(self, lo: Union[Fraction, int], hi: Union[Fraction, int, None] = None):
        lo = Fraction(lo)
        hi = lo if hi is None else Fraction(hi)
        if hi < lo:
            raise ValueError("interval endpoints out of order")
        self.lo = lo
        self.hi = hi

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def contains(self, x: Union[Fraction, int]) -> bool:
        return self.lo <= x <= self.hi

    def contains_zero(self) -> bool:
        return self.lo <= 0 <= self.hi

    def strict_sign(self) -> int:
        """+1 or -1 when the interval certifies a sign, else 0 (unknown)."""
        if self.lo > 0:
            return 1
        if self.hi < 0:
            return -1
        return 0

    def __add__(self, other: "RatInterval") -> "RatInterval":
        return RatInterval(self.lo + other.lo, self.hi + other.hi)

    def __sub__(self, other: "RatInterval") -> "RatInterval":
        return RatInterval(self.lo - other.hi, self.hi - other.lo)

    def __neg__(self) -> "RatInterval":
        return RatInterval(-self.hi, -self.lo)

    def __mul__(self, other: Union["RatInterval", Fraction, int]) -> "RatInterval":
        if isinstance(other, (Fraction, int)):
            other = Fraction(other)
            if other >= 0:
                return RatInterval(self.lo * other, self.hi * other)
            return RatInterval(self.hi * other, self.lo * other)
        ps = (
            self.lo * other.lo,
            self.lo * other.hi,
            self.hi * other.lo,
            self.hi * other.hi,
        )
        return RatInterval(min(ps), max(ps))

    __rmul__ = __mul__

    def inverse(self) -> "RatInterval":
        if self.contains_zero():
            raise ZeroDivisionError("interval contains zero")
        return RatInterval(1 / self.hi, 1 / self.lo)

    def sqrt(self, bits: int = 128) -> "RatInterval":
        lo = self.lo if self.lo > 0 else _ZERO
        return RatInterval(
            fraction_sqrt_bounds(lo, bits)[0], fraction_sqrt_bounds(self.hi, bits)[1]
        )

    def pad(self, eps: Fraction) -> "RatInterval":
        return RatInterval(self.lo - eps, self.hi + eps)

    def __repr__(self) -> str:
        return f"RatInterval({float(self.lo)!r}, {float(self.hi)!r})"


def mpf_to_fraction(x: mpmath.mpf) -> Fraction:
    """Exact conversion of a finite mpf to a Fraction."""
    sign, man, exp, _ = mpmath.mpf(x)._mpf_
    if man == 0:
        if exp != 0:
            raise ValueError("cannot convert non-finite mpf")
        return _ZERO
    value = Fraction(man) * (Fraction(2) ** exp)
    return -value if sign else value


def pi_interval(bits: int) -> RatInterval:
    eps = Fraction(1, 1 << bits)
    with mpmath.workprec(bits + _GUARD_BITS):
        approx = mpf_to_fraction(+mpmath.pi)
    return RatInterval(approx - eps, approx + eps)


def _dyadic_out(x: Fraction, p: int, up: bool) -> Fraction:
    """Round outward onto the 2**-p dyadic grid (exactly mpf-representable),
    so transcendental functions are evaluated at exact machine inputs."""
    scaled = x * (1 << p)
    n = scaled.numerator // scaled.denominator
    if up and n * scaled.denominator != scaled.numerator:
        n += 1
    return Fraction(n, 1 << p)


def _exact_mpf(x: Fraction) -> mpmath.mpf:
    # valid only for dyadic x whose mantissa fits the working precision
    return mpmath.ldexp(x.numerator, -(x.denominator.bit_length() - 1))


def _clamp(x: Fraction, lo: Fraction, hi: Fraction) -> Fraction:
    return min(max(x, lo), hi)


def acos_interval(x: RatInterval, bits: int) -> RatInterval:
    """Enclosure of acos over ``x`` (clamped into [-1, 1]); acos is
    decreasing, so the image endpoints swap."""
    p = bits + _GUARD_BITS
    lo_in = _clamp(_dyadic_out(x.lo, p, up=False), -_ONE, _ONE)
    hi_in = _clamp(_dyadic_out(x.hi, p, up=True), -_ONE, _ONE)
    eps = Fraction(1, 1 << bits)
    with mpmath.workprec(p + 8):
        out_lo = mpf_to_fraction(mpmath.acos(_exact_mpf(hi_in)))
        out_hi = mpf_to_fraction(mpmath.acos(_exact_mpf(lo_in)))
    lo = max(_ZERO, out_lo - eps)
    hi = out_hi + eps
    return RatInterval(lo, max(lo, hi))


def sin_interval(x: RatInterval, bits: int) -> RatInterval:
    """Enclosure of sin over ``x``, assuming 0 <= x <= pi (the only range the
    package needs); accounts for the maximum at pi/2."""
    p = bits + _GUARD_BITS
    lo_in = _dyadic_out(x.lo, p, up=False)
    hi_in = _dyadic_out(x.hi, p, up=True)
    eps = Fraction(1, 1 << bits)
    with mpmath.workprec(p + 8):
        s_lo = mpf_to_fraction(mpmath.sin(_exact_mpf(lo_in)))
        s_hi = mpf_to_fraction(mpmath.sin(_exact_mpf(hi_in)))
    half_pi = pi_interval(bits + 2) * Fraction(1, 2)
    lo = max(-_ONE, min(s_lo, s_hi) - eps)
    if x.lo <= half_pi.hi and x.hi >= half_pi.lo:
        hi = _ONE
    else:
        hi = min(_ONE, max(s_lo, s_hi) + eps)
    return RatInterval(lo, max(lo, hi))


ExactLike = Union[TowerReal, Fraction, int]


class NumericReal:
    """A real number accessible only through arbitrarily precise enclosures.

    The refinement callback receives a target ``bits`` and must return an
    enclosure of width at most 2**-bits.  Results are cached per precision.
    """

    __slots__ = ("_refine", "_cache", "exact_backing")

    def __init__(
        self,
        refine: Callable[[int], RatInterval],
        exact_backing: Union[TowerReal, None] = None,
    ):
        self._refine = refine
        self._cache: dict[int, RatInterval] = {}
        self.exact_backing = exact_backing

    @classmethod
    def from_exact(cls, value: ExactLike) -> "NumericReal":
        if not isinstance(value, TowerReal):
            value = TowerReal.from_rational(value)

        def refine(bits: int) -> RatInterval:
            lo, hi = value.enclosure(bits)
            return RatInterval(lo, hi)

        return cls(refine, exact_backing=value)

    def enclosure(self, bits: int) -> RatInterval:
        iv = self._cache.get(bits)
        if iv is None:
            iv = self._refine(bits)
            self._cache[bits] = iv
        return iv

    # -- arithmetic ---------------------------------------------------------

    @staticmethod
    def _coerce(value: Union["NumericReal", ExactLike]) -> "NumericReal":
        if isinstance(value, NumericReal):
            return value
        return NumericReal.from_exact(value)

    @staticmethod
    def _combine(
        parts: tuple["NumericReal", ...],
        op: Callable[..., RatInterval],
    ) -> "NumericReal":
        def refine(bits: int) -> RatInterval:
            work = bits + 2
            while True:
                out = op(*(p.enclosure(work) for p in parts))
                if out.width <= Fraction(1, 1 << bits):
                    return out
                work *= 2

        return NumericReal(refine)

    def __add__(self, other):
        try:
            o = NumericReal._coerce(other)
        except TypeError:
            return NotImplemented
        return NumericReal._combine((self, o), lambda a, b: a + b)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            o = NumericReal._coerce(other)
        except TypeError:
            return NotImplemented
        return NumericReal._combine((self, o), lambda a, b: a - b)

    def __rsub__(self, other):
        try:
            o = NumericReal._coerce(other)
        except TypeError:
            return NotImplemented
        return NumericReal._combine((self, o), lambda a, b: b - a)

    def __mul__(self, other):
        try:
            o = NumericReal._coerce(other)
        except TypeError:
            return NotImplemented
        return NumericReal._combine((self, o), lambda a, b: a * b)

    __rmul__ = __mul__

    def __truediv__(self, other):
        try:
            o = NumericReal._coerce(other)
        except TypeError:
            return NotImplemented

        def div(a: RatInterval, b: RatInterval) -> RatInterval:
            return a * b.inverse()

        def refine(bits: int) -> RatInterval:
            work = bits + 2
            while True:
                bi = o.enclosure(work)
                if not bi.contains_zero():
                    out = div(self.enclosure(work), bi)
                    if out.width <= Fraction(1, 1 << bits):
                        return out
                work *= 2

        return NumericReal(refine)

    def __rtruediv__(self, other):
        try:
            o = NumericReal._coerce(other)
        except TypeError:
            return NotImplemented
        return o / self

    def __neg__(self):
        return NumericReal._combine((self,), lambda a: -a)

    def sqrt(self) -> "NumericReal":
        def refine(bits: int) -> RatInterval:
            work = bits + 2
            while True:
                out = self.enclosure(work).sqrt(work)
                if out.width <= Fraction(1, 1 << bits):
                    return out
                work *= 2

        return NumericReal(refine)

    def __float__(self) -> float:
        return float(self.enclosure(64).mid)

    def __repr__(self) -> str:
        iv = self.enclosure(64)
        return f"NumericReal(~{float(iv.mid)!r})"


def acos_numeric(x: NumericReal) -> NumericReal:
    def refine(bits: int) -> RatInterval:
        work = bits + 2
        while True:
            out = acos_interval(x.enclosure(work), work)
            if out.width <= Fraction(1, 1 << bits):
                return out
            work *= 2

    return NumericReal(refine)


def sin_numeric(x: NumericReal) -> NumericReal:
    def refine(bits: int) -> RatInterval:
        work = bits + 2
        while True:
            out = sin_interval(x.enclosure(work), work)
            if out.width <= Fraction(1, 1 << bits):
                return out
            work *= 2

    return NumericReal(refine)
