"""Exact arithmetic over iterated square-root extensions of the rationals.

Two representations cooperate:

* ``KElement`` -- rational combinations of square roots of squarefree
  integers, kept in the canonical squarefree-basis normal form, so equality
  is coefficient equality.
* ``TowerReal`` -- elements of an explicit real quadratic tower
  Q(sqrt(r1))(sqrt(r2))...(sqrt(rk)).  Values are nested (p, q) pairs with
  Fraction leaves; signs and zero tests are decided exactly, with a rigorous
  rational-interval fast path and a pure recursion as the decision procedure.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt
from typing import Callable, Iterable, Optional, Union

__all__ = [
    "Fraction",
    "KElement",
    "NegativeSqrtError",
    "SquarefreeBoundError",
    "TowerContext",
    "TowerReal",
    "fraction_sqrt_bounds",
    "k_membership",
    "sqrt_adjoin",
    "squarefree_decompose",
    "tower_sign",
    "tower_to_k",
]

DEFAULT_FACTOR_BOUND = 10**6

_ZERO = Fraction(0)
_ONE = Fraction(1)
_HALF = Fraction(1, 2)

Rationalish = Union[int, Fraction]


class NegativeSqrtError(ValueError):
    """Square root of a certified-negative quantity was requested."""


class SquarefreeBoundError(ValueError):
    """A radicand was too large to factor within the trial-division bound."""


def squarefree_decompose(n: int, bound: int = DEFAULT_FACTOR_BOUND) -> tuple[int, int]:
    """Write n >= 1 as s**2 * d with d squarefree; returns (s, d).

    Trial division runs up to ``bound``; inputs whose unfactored cofactor
    cannot be certified squarefree are rejected rather than guessed at.
    """
    if n < 1:
        raise ValueError("squarefree_decompose expects a positive integer")
    s, d, m = 1, 1, n
    p = 2
    while p * p <= m and p <= bound:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            s *= p ** (e // 2)
            if e % 2:
                d *= p
        p += 1 if p == 2 else 2
    if m > 1:
        if m <= bound * bound:
            # all prime factors of m exceed bound, so m <= bound**2 forces m prime
            d *= m
        else:
            r = isqrt(m)
            if r * r == m and r <= bound * bound:
                s *= r
            else:
                raise SquarefreeBoundError(
                    f"cannot certify squarefree part of {n} with trial division bound {bound}"
                )
    return s, d


def fraction_sqrt_bounds(f: Fraction, bits: int) -> tuple[Fraction, Fraction]:
    """Rational enclosure lo <= sqrt(f) <= hi with hi - lo <= 2**-bits."""
    if f < 0:
        raise NegativeSqrtError("sqrt of negative rational")
    if f == 0:
        return _ZERO, _ZERO
    n, d = f.numerator, f.denominator
    t = (n << (2 * bits)) // d
    r = isqrt(t)
    lo = Fraction(r, 1 << bits)
    if r * r * d == n << (2 * bits):
        return lo, lo
    return lo, Fraction(r + 1, 1 << bits)


def _iv_add(a: tuple[Fraction, Fraction], b: tuple[Fraction, Fraction]) -> tuple[Fraction, Fraction]:
    return a[0] + b[0], a[1] + b[1]


def _iv_mul(a: tuple[Fraction, Fraction], b: tuple[Fraction, Fraction]) -> tuple[Fraction, Fraction]:
    p1 = a[0] * b[0]
    p2 = a[0] * b[1]
    p3 = a[1] * b[0]
    p4 = a[1] * b[1]
    return min(p1, p2, p3, p4), max(p1, p2, p3, p4)


# ---------------------------------------------------------------------------
# Raw nested-pair values.  A value at level 0 is a Fraction; at level k it is
# a pair (p, q) of level-(k-1) values meaning p + q*sqrt(radicands[k-1]).


def _rconst(c: Fraction, k: int):
    if k == 0:
        return c
    lower = _rconst(c, k - 1)
    zero = _rconst(_ZERO, k - 1)
    return (lower, zero)


def _riszero(x, k: int) -> bool:
    if k == 0:
        return x == 0
    return _riszero(x[0], k - 1) and _riszero(x[1], k - 1)


def _radd(x, y, k: int):
    if k == 0:
        return x + y
    return (_radd(x[0], y[0], k - 1), _radd(x[1], y[1], k - 1))


def _rneg(x, k: int):
    if k == 0:
        return -x
    return (_rneg(x[0], k - 1), _rneg(x[1], k - 1))


def _rsub(x, y, k: int):
    if k == 0:
        return x - y
    return (_rsub(x[0], y[0], k - 1), _rsub(x[1], y[1], k - 1))


def _rscale(x, c: Fraction, k: int):
    if k == 0:
        return x * c
    return (_rscale(x[0], c, k - 1), _rscale(x[1], c, k - 1))


def _rmul(x, y, k: int, rads):
    if k == 0:
        return x * y
    p1, q1 = x
    p2, q2 = y
    r = rads[k - 1]
    pp = _rmul(p1, p2, k - 1, rads)
    qq = _rmul(q1, q2, k - 1, rads)
    cross = _radd(
        _rmul(p1, q2, k - 1, rads), _rmul(q1, p2, k - 1, rads), k - 1
    )
    return (_radd(pp, _rmul(qq, r, k - 1, rads), k - 1), cross)


def _rinv(x, k: int, rads):
    if k == 0:
        if x == 0:
            raise ZeroDivisionError("division by zero in tower field")
        return 1 / x
    p, q = x
    if _riszero(q, k - 1):
        return (_rinv(p, k - 1, rads), q)
    r = rads[k - 1]
    den = _rsub(
        _rmul(p, p, k - 1, rads),
        _rmul(_rmul(q, q, k - 1, rads), r, k - 1, rads),
        k - 1,
    )
    iden = _rinv(den, k - 1, rads)
    return (_rmul(p, iden, k - 1, rads), _rneg(_rmul(q, iden, k - 1, rads), k - 1))


def _rsign(x, k: int, rads) -> int:
    if k == 0:
        if x > 0:
            return 1
        if x < 0:
            return -1
        return 0
    p, q = x
    sq = _rsign(q, k - 1, rads)
    if sq == 0:
        return _rsign(p, k - 1, rads)
    sp = _rsign(p, k - 1, rads)
    if sp == 0:
        return sq
    if sp == sq:
        return sp
    # p and q*sqrt(r) pull in opposite directions; compare p**2 with q**2*r.
    d = _rsub(
        _rmul(p, p, k - 1, rads),
        _rmul(_rmul(q, q, k - 1, rads), rads[k - 1], k - 1, rads),
        k - 1,
    )
    sd = _rsign(d, k - 1, rads)
    if sd == 0:
        raise AssertionError("radicand was a perfect square at its own level")
    return sp * sd


def _rasfrac(x, k: int) -> Optional[Fraction]:
    if k == 0:
        return x
    if not _riszero(x[1], k - 1):
        return None
    return _rasfrac(x[0], k - 1)


def _rflatten(x, k: int, out: list[Fraction]) -> None:
    if k == 0:
        out.append(x)
        return
    _rflatten(x[0], k - 1, out)
    _rflatten(x[1], k - 1, out)


def _rhalf(x, k: int):
    return _rscale(x, _HALF, k)


def _rsqrt_try(x, k: int, rads):
    """Return a raw y >= 0 with y*y == x, or None if x is not a square here."""
    if k == 0:
        if x < 0:
            return None
        n, d = x.numerator, x.denominator
        rn, rd = isqrt(n), isqrt(d)
        if rn * rn == n and rd * rd == d:
            return Fraction(rn, rd)
        return None
    p, q = x
    r = rads[k - 1]
    zero = _rconst(_ZERO, k - 1)
    if _riszero(q, k - 1):
        s = _rsqrt_try(p, k - 1, rads)
        if s is not None:
            return (s, zero)
        # x = t*sqrt(r) requires t**2 = p / r
        pr = _rmul(p, _rinv(r, k - 1, rads), k - 1, rads)
        t = _rsqrt_try(pr, k - 1, rads)
        if t is not None:
            return (zero, t)
        return None
    d2 = _rsub(
        _rmul(p, p, k - 1, rads),
        _rmul(_rmul(q, q, k - 1, rads), r, k - 1, rads),
        k - 1,
    )
    if _rsign(d2, k - 1, rads) < 0:
        return None
    s = _rsqrt_try(d2, k - 1, rads)
    if s is None:
        return None
    for c2 in (_rhalf(_radd(p, s, k - 1), k - 1), _rhalf(_rsub(p, s, k - 1), k - 1)):
        if _rsign(c2, k - 1, rads) <= 0:
            continue
        c = _rsqrt_try(c2, k - 1, rads)
        if c is None:
            continue
        dd = _rmul(_rhalf(q, k - 1), _rinv(c, k - 1, rads), k - 1, rads)
        cand = (c, dd)
        if _riszero(_rsub(_rmul(cand, cand, k, rads), x, k), k):
            if _rsign(cand, k, rads) < 0:
                cand = _rneg(cand, k)
            return cand
    return None


def _rinterval(x, k: int, sqrt_ivs) -> tuple[Fraction, Fraction]:
    if k == 0:
        return (x, x)
    p, q = x
    ip = _rinterval(p, k - 1, sqrt_ivs)
    iq = _rinterval(q, k - 1, sqrt_ivs)
    return _iv_add(ip, _iv_mul(iq, sqrt_ivs[k - 1]))


# ---------------------------------------------------------------------------
# Tower contexts and values.


class TowerContext:
    """An interned, immutable list of adjoined radicands.

    ``radicands[i]`` is a raw level-i value; level-(i+1) values are pairs
    over it.  Stored radicands are certified nonnegative and are never
    perfect squares at their own level.
    """

    __slots__ = ("radicands", "_sqrt_cache", "_prefixes")

    _interned: dict[tuple, "TowerContext"] = {}

    def __init__(self, radicands: tuple):
        self.radicands = radicands
        self._sqrt_cache: dict[int, list[tuple[Fraction, Fraction]]] = {}
        self._prefixes: dict[int, TowerContext] = {}

    @classmethod
    def get(cls, radicands: tuple) -> "TowerContext":
        ctx = cls._interned.get(radicands)
        if ctx is None:
            ctx = cls(radicands)
            cls._interned[radicands] = ctx
        return ctx

    @property
    def depth(self) -> int:
        return len(self.radicands)

    def prefix(self, k: int) -> "TowerContext":
        if k == self.depth:
            return self
        ctx = self._prefixes.get(k)
        if ctx is None:
            ctx = TowerContext.get(self.radicands[:k])
            self._prefixes[k] = ctx
        return ctx

    def extended(self, radicand_raw) -> "TowerContext":
        return TowerContext.get(self.radicands + (radicand_raw,))

    def sqrt_enclosures(self, bits: int) -> list[tuple[Fraction, Fraction]]:
        cached = self._sqrt_cache.get(bits)
        if cached is not None:
            return cached
        out: list[tuple[Fraction, Fraction]] = []
        for i, rad in enumerate(self.radicands):
            lo, hi = _rinterval(rad, i, out)
            if lo < 0:
                lo = _ZERO
            slo = fraction_sqrt_bounds(lo, bits)[0]
            shi = fraction_sqrt_bounds(hi, bits)[1]
            out.append((slo, shi))
        self._sqrt_cache[bits] = out
        return out


_BASE_CTX = TowerContext.get(())


class TowerReal:
    """An exact real number living in a square-root tower over Q."""

    __slots__ = ("ctx", "raw", "_sign", "_ivs")

    def __init__(self, ctx: TowerContext, raw):
        k = ctx.depth
        while k > 0 and _riszero(raw[1], k - 1):
            raw = raw[0]
            k -= 1
        self.ctx = ctx.prefix(k)
        self.raw = raw
        self._sign: Optional[int] = None
        self._ivs: dict[int, tuple[Fraction, Fraction]] = {}

    # -- constructors -------------------------------------------------------

    @classmethod
    def from_rational(cls, value: Rationalish) -> "TowerReal":
        return cls(_BASE_CTX, Fraction(value))

    @property
    def depth(self) -> int:
        return self.ctx.depth

    def as_fraction(self) -> Optional[Fraction]:
        return _rasfrac(self.raw, self.depth)

    # -- coercion -----------------------------------------------------------

    @staticmethod
    def _lift_raw(raw, from_depth: int, to_depth: int, ctx: TowerContext):
        for k in range(from_depth, to_depth):
            raw = (raw, _rconst(_ZERO, k))
        return raw

    def _lift_to(self, ctx: TowerContext):
        return TowerReal._lift_raw(self.raw, self.depth, ctx.depth, ctx)

    @staticmethod
    def _merge(a: "TowerReal", b: "TowerReal"):
        ca, cb = a.ctx, b.ctx
        if ca is cb:
            return ca, a.raw, b.raw
        ra, rb = ca.radicands, cb.radicands
        if len(ra) <= len(rb) and rb[: len(ra)] == ra:
            return cb, a._lift_to(cb), b.raw
        if len(rb) < len(ra) and ra[: len(rb)] == rb:
            return ca, a.raw, b._lift_to(ca)
        builder = FieldBuilder(ca)
        b2 = builder.embed(b)
        ctx = builder.ctx
        return (
            ctx,
            TowerReal._lift_raw(a.raw, a.depth, ctx.depth, ctx),
            TowerReal._lift_raw(b2.raw, b2.depth, ctx.depth, ctx),
        )

    def _coerce(self, other) -> Optional[tuple]:
        if isinstance(other, TowerReal):
            return TowerReal._merge(self, other)
        if isinstance(other, (int, Fraction)):
            return self.ctx, self.raw, _rconst(Fraction(other), self.depth)
        return None

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other):
        co = self._coerce(other)
        if co is None:
            return NotImplemented
        ctx, x, y = co
        return TowerReal(ctx, _radd(x, y, ctx.depth))

    __radd__ = __add__

    def __sub__(self, other):
        co = self._coerce(other)
        if co is None:
            return NotImplemented
        ctx, x, y = co
        return TowerReal(ctx, _rsub(x, y, ctx.depth))

    def __rsub__(self, other):
        co = self._coerce(other)
        if co is None:
            return NotImplemented
        ctx, x, y = co
        return TowerReal(ctx, _rsub(y, x, ctx.depth))

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return TowerReal(self.ctx, _rscale(self.raw, Fraction(other), self.depth))
        co = self._coerce(other)
        if co is None:
            return NotImplemented
        ctx, x, y = co
        return TowerReal(ctx, _rmul(x, y, ctx.depth, ctx.radicands))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            f = Fraction(other)
            if f == 0:
                raise ZeroDivisionError("division by zero in tower field")
            return TowerReal(self.ctx, _rscale(self.raw, 1 / f, self.depth))
        co = self._coerce(other)
        if co is None:
            return NotImplemented
        ctx, x, y = co
        if _riszero(y, ctx.depth):
            raise ZeroDivisionError("division by zero in tower field")
        return TowerReal(ctx, _rmul(x, _rinv(y, ctx.depth, ctx.radicands), ctx.depth, ctx.radicands))

    def __rtruediv__(self, other):
        co = self._coerce(other)
        if co is None:
            return NotImplemented
        ctx, x, y = co
        if _riszero(x, ctx.depth):
            raise ZeroDivisionError("division by zero in tower field")
        return TowerReal(ctx, _rmul(y, _rinv(x, ctx.depth, ctx.radicands), ctx.depth, ctx.radicands))

    def __neg__(self):
        return TowerReal(self.ctx, _rneg(self.raw, self.depth))

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        out = TowerReal.from_rational(1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def sqrt(self) -> "TowerReal":
        return sqrt_adjoin(self)

    # -- decisions ----------------------------------------------------------

    def interval(self, bits: int) -> tuple[Fraction, Fraction]:
        cached = self._ivs.get(bits)
        if cached is None:
            cached = _rinterval(self.raw, self.depth, self.ctx.sqrt_enclosures(bits))
            self._ivs[bits] = cached
        return cached

    def enclosure(self, bits: int) -> tuple[Fraction, Fraction]:
        """Interval of width <= 2**-bits (refines until the target is met)."""
        work = bits
        while True:
            lo, hi = self.interval(work)
            if hi - lo <= Fraction(1, 1 << bits):
                return lo, hi
            work = max(2 * work, 64)

    def sign(self) -> int:
        if self._sign is None:
            lo, hi = self.interval(64)
            if lo > 0:
                self._sign = 1
            elif hi < 0:
                self._sign = -1
            else:
                self._sign = _rsign(self.raw, self.depth, self.ctx.radicands)
        return self._sign

    def is_zero(self) -> bool:
        return _riszero(self.raw, self.depth)

    def __bool__(self) -> bool:
        return not self.is_zero()

    def __float__(self) -> float:
        lo, hi = self.interval(64)
        return float((lo + hi) / 2)

    def __eq__(self, other):
        co = self._coerce(other)
        if co is None:
            return NotImplemented
        ctx, x, y = co
        return _riszero(_rsub(x, y, ctx.depth), ctx.depth)

    def __lt__(self, other):
        diff = self - other
        if diff is NotImplemented:
            return NotImplemented
        return diff.sign() < 0

    def __le__(self, other):
        diff = self - other
        if diff is NotImplemented:
            return NotImplemented
        return diff.sign() <= 0

    def __gt__(self, other):
        diff = self - other
        if diff is NotImplemented:
            return NotImplemented
        return diff.sign() > 0

    def __ge__(self, other):
        diff = self - other
        if diff is NotImplemented:
            return NotImplemented
        return diff.sign() >= 0

    def __repr__(self) -> str:
        from .literals import format_number

        return f"TowerReal({format_number(self)})"


def tower_sign(x: TowerReal) -> int:
    """Exact sign of a tower value: -1, 0 or +1."""
    return x.sign()


def exactify(value: Union[TowerReal, Rationalish]) -> TowerReal:
    if isinstance(value, TowerReal):
        return value
    return TowerReal.from_rational(value)


class FieldBuilder:
    """Accumulates one growing tower context; used to keep related values
    (a whole search, a whole JSON file) inside a single shared field."""

    def __init__(self, ctx: TowerContext = _BASE_CTX):
        self.ctx = ctx

    def const(self, value: Rationalish) -> TowerReal:
        return TowerReal(self.ctx, _rconst(Fraction(value), self.ctx.depth))

    def embed(self, value: Union[TowerReal, Rationalish]) -> TowerReal:
        value = exactify(value)
        ra, rb = self.ctx.radicands, value.ctx.radicands
        if rb == ra[: len(rb)]:
            return TowerReal(self.ctx, value._lift_to(self.ctx))

        def go(raw, k: int, src_rads) -> TowerReal:
            if k == 0:
                return self.const(raw)
            p, q = raw
            pv = go(p, k - 1, src_rads)
            qv = go(q, k - 1, src_rads)
            rv = go(src_rads[k - 1], k - 1, src_rads)
            sv = self.sqrt(rv)
            return self.embed(pv + qv * sv)

        return go(value.raw, value.depth, value.ctx.radicands)

    def sqrt(self, value: Union[TowerReal, Rationalish]) -> TowerReal:
        value = self.embed(value)
        sg = value.sign()
        if sg < 0:
            raise NegativeSqrtError("sqrt of a negative tower value")
        if sg == 0:
            return self.const(0)
        k = self.ctx.depth
        rads = self.ctx.radicands
        raw = value._lift_to(self.ctx)
        found = _rsqrt_try(raw, k, rads)
        if found is not None:
            return TowerReal(self.ctx, found)
        fr = _rasfrac(raw, k)
        zero = _rconst(_ZERO, k)
        if fr is not None:
            s, d = squarefree_decompose(fr.numerator * fr.denominator)
            self.ctx = self.ctx.extended(_rconst(Fraction(d), k))
            new_raw = (zero, _rconst(Fraction(s, fr.denominator), k))
        else:
            self.ctx = self.ctx.extended(raw)
            new_raw = (zero, _rconst(_ONE, k))
        return TowerReal(self.ctx, new_raw)


def sqrt_adjoin(value: Union[TowerReal, Rationalish]) -> TowerReal:
    """Exact square root; reuses the existing tower when the argument is a
    perfect square there, otherwise adjoins one new level."""
    value = exactify(value)
    return FieldBuilder(value.ctx).sqrt(value)


# ---------------------------------------------------------------------------
# KElement: the multiquadratic field in squarefree-basis normal form.


def _smallest_prime_factor(n: int) -> int:
    if n % 2 == 0:
        return 2
    p = 3
    while p * p <= n:
        if n % p == 0:
            return p
        p += 2
    return n


class KElement:
    """A finite sum of coeff * sqrt(d) terms with d squarefree, d=1 rational.

    The representation is canonical, so equality and hashing are structural.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Union[dict, Iterable[tuple[int, Rationalish]], None] = None):
        folded: dict[int, Fraction] = {}
        items = terms.items() if isinstance(terms, dict) else (terms or ())
        for d, coeff in items:
            if d < 1:
                raise ValueError("radicands in KElement must be positive integers")
            coeff = Fraction(coeff)
            if coeff == 0:
                continue
            s, sf = squarefree_decompose(d)
            folded[sf] = folded.get(sf, _ZERO) + coeff * s
        self._terms = tuple(sorted((d, c) for d, c in folded.items() if c != 0))

    @classmethod
    def from_rational(cls, value: Rationalish) -> "KElement":
        return cls([(1, Fraction(value))])

    @classmethod
    def sqrt_of(cls, d: int, coeff: Rationalish = 1) -> "KElement":
        return cls([(d, Fraction(coeff))])

    @classmethod
    def zero(cls) -> "KElement":
        return cls()

    @property
    def terms(self) -> tuple[tuple[int, Fraction], ...]:
        return self._terms

    def coefficient(self, d: int) -> Fraction:
        for dd, c in self._terms:
            if dd == d:
                return c
        return _ZERO

    def is_zero(self) -> bool:
        return not self._terms

    def is_rational(self) -> bool:
        return all(d == 1 for d, _ in self._terms)

    def rational_part(self) -> Fraction:
        return self.coefficient(1)

    def _coerce(self, other) -> Optional["KElement"]:
        if isinstance(other, KElement):
            return other
        if isinstance(other, (int, Fraction)):
            return KElement.from_rational(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        acc = {d: c for d, c in self._terms}
        for d, c in o._terms:
            acc[d] = acc.get(d, _ZERO) + c
        return KElement(acc)

    __radd__ = __add__

    def __neg__(self):
        return KElement([(d, -c) for d, c in self._terms])

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        acc: dict[int, Fraction] = {}
        from math import gcd

        for d1, c1 in self._terms:
            for d2, c2 in o._terms:
                g = gcd(d1, d2)
                d = (d1 // g) * (d2 // g)
                acc[d] = acc.get(d, _ZERO) + c1 * c2 * g
        return KElement(acc)

    __rmul__ = __mul__

    def inverse(self) -> "KElement":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in K")
        num = KElement.from_rational(1)
        den = self
        while not den.is_rational():
            # pick a prime appearing in some non-unit radicand and kill it by
            # multiplying with the sign-flipped conjugate
            p = min(
                _smallest_prime_factor(d) for d, _ in den._terms if d > 1
            )
            conj = KElement([(d, -c if d % p == 0 else c) for d, c in den._terms])
            num = num * conj
            den = den * conj
        return num * KElement.from_rational(1 / den.rational_part())

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self._terms == o._terms

    def __hash__(self):
        return hash(self._terms)

    def to_tower(self) -> TowerReal:
        builder = FieldBuilder()
        total = builder.const(0)
        for d, c in self._terms:
            if d == 1:
                total = total + builder.const(c)
            else:
                total = total + builder.const(c) * builder.sqrt(builder.const(d))
        return total

    def __float__(self) -> float:
        return float(self.to_tower())

    def __repr__(self) -> str:
        from .literals import format_k_element

        return f"KElement({format_k_element(self)})"


def tower_to_k(value: TowerReal) -> Optional[KElement]:
    """Convert to the squarefree-basis normal form, or None if the value's
    tower involves a nested (non-rational) radicand."""
    rads = value.ctx.radicands
    ds: list[int] = []
    for i, rad in enumerate(rads):
        f = _rasfrac(rad, i)
        if f is None or f.denominator != 1:
            return None
        ds.append(f.numerator)
    coords: list[Fraction] = []
    _rflatten(value.raw, value.depth, coords)
    terms: list[tuple[int, Fraction]] = []
    for mask, c in enumerate(coords):
        if c == 0:
            continue
        d = 1
        for j, dj in enumerate(ds):
            if mask >> j & 1:
                d *= dj
        terms.append((d, c))
    try:
        return KElement(terms)
    except SquarefreeBoundError:
        return None


def k_membership(value: TowerReal, basis: Iterable[int]) -> Optional[KElement]:
    """Express ``value`` as a rational combination of sqrt(d) for d in
    ``basis`` (1 meaning the rational part), or return None.

    Works by flattening everything into coordinates over the tower's
    product-of-radicals Q-basis and solving the exact linear system.
    """
    basis = sorted({squarefree_decompose(d)[1] for d in basis} | {1})
    builder = FieldBuilder(value.ctx)
    cols: list[TowerReal] = []
    for d in basis:
        if d == 1:
            cols.append(builder.const(1))
        else:
            cols.append(builder.sqrt(builder.const(d)))
    ctx = builder.ctx
    target = builder.embed(value)
    depth = ctx.depth

    def vec(v: TowerReal) -> list[Fraction]:
        out: list[Fraction] = []
        _rflatten(v._lift_to(ctx), depth, out)
        return out

    matrix = [vec(builder.embed(c)) for c in cols]
    rhs = vec(target)
    n_rows = len(rhs)
    n_cols = len(matrix)
    # Gaussian elimination on the (n_rows x n_cols) system A x = rhs with
    # A[:, j] = matrix[j].
    aug = [[matrix[j][i] for j in range(n_cols)] + [rhs[i]] for i in range(n_rows)]
    pivots: list[tuple[int, int]] = []
    row = 0
    for col in range(n_cols):
        sel = None
        for i in range(row, n_rows):
            if aug[i][col] != 0:
                sel = i
                break
        if sel is None:
            continue
        aug[row], aug[sel] = aug[sel], aug[row]
        pv = aug[row][col]
        aug[row] = [v / pv for v in aug[row]]
        for i in range(n_rows):
            if i != row and aug[i][col] != 0:
                f = aug[i][col]
                aug[i] = [a - f * b for a, b in zip(aug[i], aug[row])]
        pivots.append((row, col))
        row += 1
    for i in range(row, n_rows):
        if aug[i][n_cols] != 0:
            return None
    coeffs = {d: _ZERO for d in basis}
    for r, c in pivots:
        coeffs[basis[c]] = aug[r][n_cols]
    result = KElement(list(coeffs.items()))
    # paranoia: confirm the reconstruction
    if not (result.to_tower() - value).is_zero():
        return None
    return result
