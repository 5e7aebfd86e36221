"""Bounded-height integer relation detection with certified answers.

Given real values v1..vn, the engine searches every integer coefficient
vector (c1..cn) with 0 < max|ci| <= height for relations c1*v1+...+cn*vn = 0.
The search is exhaustive and every reported answer carries a guarantee:

* ``FOUND_CERTIFIED``  -- a relation verified by exact field arithmetic
  (only possible when every input is exact).
* ``FOUND_CANDIDATE``  -- a combination indistinguishable from zero at the
  maximum working precision; inputs were numeric, so equality cannot be
  proven, only favored.
* ``NONE_UP_TO_HEIGHT`` -- every combination was certified nonzero.
* ``UNDECIDED``        -- some combination could not be resolved because an
  input cannot be refined (e.g. a bare float); nothing was found either.

The exhaustive pass runs as a vectorized float64 sweep whose rounding error
is bounded statically; only combinations smaller than the threshold survive
to the exact or adaptive-interval stage, so the sweep never discards a true
relation.  The refinement ladder starts at 256 bits (override with the
``EQUICUT_PRECISION_BITS`` environment variable) and doubles up to 4096.
"""

from __future__ import annotations

import enum
import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional, Sequence, Union

import numpy as np

from .exact import (
    FieldBuilder,
    KElement,
    TowerReal,
    _rflatten,
    k_membership,
    sqrt_adjoin,
    squarefree_decompose,
)
from .intervals import NumericReal, RatInterval

__all__ = [
    "RelationResult",
    "RelationStatus",
    "find_angle_relation",
    "find_angle_relation_pi_fractions",
    "find_integer_relation",
    "find_side_relation",
]

DEFAULT_ANGLE_HEIGHT = 12
DEFAULT_SIDE_HEIGHT = 8
DEFAULT_SIDE_BASIS = (1, 2, 3, 5)
DEFAULT_START_BITS = 256
MAX_LADDER_BITS = 4096
_MAX_COMBINATIONS = 300_000_000

Value = Union[TowerReal, NumericReal, Fraction, int, float]


class RelationStatus(enum.Enum):
    FOUND_CERTIFIED = "found_certified"
    FOUND_CANDIDATE = "found_candidate"
    NONE_UP_TO_HEIGHT = "none_up_to_height"
    UNDECIDED = "undecided"


@dataclass
class RelationResult:
    status: RelationStatus
    height: int
    columns: list[str]
    witnesses: list[tuple[int, ...]] = field(default_factory=list)
    candidates: list[tuple[int, ...]] = field(default_factory=list)
    unresolved: list[tuple[int, ...]] = field(default_factory=list)
    memberships: dict[str, KElement] = field(default_factory=dict)
    precision_bits: int = 0

    def to_dict(self) -> dict:
        from .literals import format_k_element

        return {
            "status": self.status.value,
            "height": self.height,
            "columns": list(self.columns),
            "witnesses": [list(w) for w in self.witnesses],
            "candidates": [list(w) for w in self.candidates],
            "unresolved": [list(w) for w in self.unresolved],
            "memberships": {
                k: format_k_element(v) for k, v in self.memberships.items()
            },
            "precision_bits": self.precision_bits,
        }


class _Column:
    """One input value, normalized to a uniform enclosure interface."""

    __slots__ = ("value", "exact", "refinable", "_fixed")

    def __init__(self, value: Value):
        self._fixed: Optional[RatInterval] = None
        if isinstance(value, TowerReal):
            self.value: Union[TowerReal, NumericReal] = value
            self.exact, self.refinable = True, True
        elif isinstance(value, (int, Fraction)):
            self.value = TowerReal.from_rational(value)
            self.exact, self.refinable = True, True
        elif isinstance(value, NumericReal):
            self.value = value
            self.exact, self.refinable = False, True
        elif isinstance(value, float):
            # a bare float is an approximation of unknown provenance: give it
            # a generous fixed uncertainty and mark it unrefinable
            center = Fraction(value)
            slack = abs(center) / (1 << 48) + Fraction(1, 1 << 48)
            self._fixed = RatInterval(center - slack, center + slack)
            self.value = NumericReal(lambda bits: self._fixed)
            self.exact, self.refinable = False, False
        else:
            raise TypeError(f"unsupported value type {type(value).__name__}")

    def enclosure(self, bits: int) -> RatInterval:
        if self._fixed is not None:
            return self._fixed
        if isinstance(self.value, TowerReal):
            lo, hi = self.value.enclosure(bits)
            return RatInterval(lo, hi)
        return self.value.enclosure(bits)


def _canonical(coeffs: tuple[int, ...]) -> Optional[tuple[int, ...]]:
    for c in coeffs:
        if c > 0:
            return coeffs
        if c < 0:
            return None  # the negated twin is reported instead
    return None  # all zero


def _decode(indices: np.ndarray, n: int, height: int) -> list[tuple[int, ...]]:
    base = 2 * height + 1
    out = []
    for idx in indices.tolist():
        digits = []
        for _ in range(n):
            digits.append(idx % base - height)
            idx //= base
        digits.reverse()
        out.append(tuple(digits))
    return out


def _sweep(columns: Sequence[_Column], height: int) -> tuple[list[tuple[int, ...]], Fraction]:
    """Vectorized exhaustive pass.  Returns the surviving coefficient vectors
    (every true relation is guaranteed among them) and the threshold used."""
    n = len(columns)
    if (2 * height + 1) ** n > _MAX_COMBINATIONS:
        raise ValueError("combination space too large for exhaustive search")
    mids: list[Fraction] = []
    errs: list[Fraction] = []
    for col in columns:
        iv = col.enclosure(64)
        mids.append(iv.mid)
        errs.append(iv.width / 2)
    floats = [float(m) for m in mids]
    # static error bound: per-value (enclosure width + float conversion) plus
    # float64 rounding across <= 2n operations at the sum's magnitude
    conv = [abs(Fraction(f) - m) for f, m in zip(floats, mids)]
    magnitude = sum(abs(Fraction(f)) for f in floats) * height + 1
    bound = (
        height * sum(e + c for e, c in zip(errs, conv))
        + Fraction(4 * n) * magnitude / (1 << 52)
    )
    threshold = max(Fraction(1, 10**9), 100 * bound)

    rng = np.arange(-height, height + 1, dtype=np.float64)
    acc = rng * floats[0]
    for f in floats[1:]:
        acc = np.add.outer(acc, rng * f).ravel()
    hits = np.nonzero(np.abs(acc) <= float(threshold))[0]
    decoded = []
    for coeffs in _decode(hits, n, height):
        canon = _canonical(coeffs)
        if canon is not None:
            decoded.append(canon)
    return sorted(set(decoded)), threshold


def _exact_vectors(columns: Sequence[_Column]) -> list[list[Fraction]]:
    builder = FieldBuilder()
    embedded = [builder.embed(col.value) for col in columns]
    ctx = builder.ctx
    vectors = []
    for v in embedded:
        coords: list[Fraction] = []
        _rflatten(v._lift_to(ctx), ctx.depth, coords)
        vectors.append(coords)
    return vectors


def _start_bits(override: Optional[int]) -> int:
    if override is not None:
        return max(64, int(override))
    env = os.environ.get("EQUICUT_PRECISION_BITS")
    if env:
        try:
            return max(64, int(env))
        except ValueError:
            pass
    return DEFAULT_START_BITS


def find_integer_relation(
    values: Sequence[Value],
    height: int,
    *,
    labels: Optional[Sequence[str]] = None,
    mask: Optional[Callable[[tuple[int, ...]], bool]] = None,
    start_bits: Optional[int] = None,
) -> RelationResult:
    """Exhaustively search integer combinations of ``values`` up to
    ``height`` for relations summing to zero."""
    if height < 1:
        raise ValueError("height must be at least 1")
    if not values:
        raise ValueError("need at least one value")
    columns = [_Column(v) for v in values]
    names = list(labels) if labels else [f"v{i}" for i in range(len(columns))]
    if len(names) != len(columns):
        raise ValueError("labels must match values")

    survivors, _ = _sweep(columns, height)
    if mask is not None:
        survivors = [s for s in survivors if mask(s)]

    result = RelationResult(
        status=RelationStatus.NONE_UP_TO_HEIGHT, height=height, columns=names
    )

    if all(col.exact for col in columns):
        vectors = _exact_vectors(columns)
        dim = len(vectors[0]) if vectors else 0
        for coeffs in survivors:
            if all(
                sum(c * vec[i] for c, vec in zip(coeffs, vectors)) == 0
                for i in range(dim)
            ):
                result.witnesses.append(coeffs)
        if result.witnesses:
            result.status = RelationStatus.FOUND_CERTIFIED
        return result

    start = _start_bits(start_bits)
    cap = max(start, MAX_LADDER_BITS)
    rungs = []
    b = start
    while b < cap:
        rungs.append(b)
        b *= 2
    rungs.append(cap)
    result.precision_bits = start

    pending = list(survivors)
    for bits in rungs:
        if not pending:
            break
        result.precision_bits = bits
        ivs = [col.enclosure(bits) for col in columns]
        still = []
        for coeffs in pending:
            total = RatInterval(0)
            for c, iv in zip(coeffs, ivs):
                if c:
                    total = total + iv * c
            if total.contains_zero():
                still.append(coeffs)
        pending = still

    if pending:
        refinable = all(col.refinable for col in columns)
        if refinable:
            result.candidates = pending
            result.status = RelationStatus.FOUND_CANDIDATE
        else:
            result.unresolved = pending
            result.status = RelationStatus.UNDECIDED
    return result


def find_angle_relation(
    alpha: Value,
    beta: Value,
    height: int = DEFAULT_ANGLE_HEIGHT,
    *,
    start_bits: Optional[int] = None,
) -> RelationResult:
    """Relations q1*alpha + q2*beta + q3*pi = 0 with |qi| <= height."""
    from .trispace import pi_numeric

    return find_integer_relation(
        [alpha, beta, pi_numeric()],
        height,
        labels=["alpha", "beta", "pi"],
        start_bits=start_bits,
    )


def find_angle_relation_pi_fractions(
    u: Fraction, v: Fraction, height: int = DEFAULT_ANGLE_HEIGHT
) -> RelationResult:
    """Exact variant of the angle search for angles (u*pi, v*pi): the pi
    factor cancels, leaving integer combinations of rationals."""
    return find_integer_relation(
        [Fraction(u), Fraction(v), Fraction(1)],
        height,
        labels=["alpha", "beta", "pi"],
    )


def find_side_relation(
    a: Value,
    b: Value,
    height: int = DEFAULT_SIDE_HEIGHT,
    basis: Sequence[int] = DEFAULT_SIDE_BASIS,
    *,
    start_bits: Optional[int] = None,
) -> RelationResult:
    """Relations q1*a + q2*b + sum n_d*sqrt(d) = 0 over the squarefree
    ``basis``, requiring (q1, q2) != (0, 0) and all |coefficients| <= height.

    For exact inputs, membership of a side in the multiquadratic field
    spanned by the basis is also decided outright and reported (certified)
    even when no bounded integer witness exists.
    """
    norm_basis = sorted({squarefree_decompose(int(d))[1] for d in basis})
    roots = [
        TowerReal.from_rational(1) if d == 1 else sqrt_adjoin(d) for d in norm_basis
    ]
    labels = ["a", "b"] + [("1" if d == 1 else f"sqrt({d})") for d in norm_basis]
    result = find_integer_relation(
        [a, b, *roots],
        height,
        labels=labels,
        mask=lambda c: c[0] != 0 or c[1] != 0,
        start_bits=start_bits,
    )
    a_col, b_col = _Column(a), _Column(b)
    if a_col.exact and b_col.exact:
        for name, col in (("a", a_col), ("b", b_col)):
            member = k_membership(col.value, norm_basis)
            if member is not None:
                result.memberships[name] = member
        if result.memberships:
            result.status = RelationStatus.FOUND_CERTIFIED
    return result
