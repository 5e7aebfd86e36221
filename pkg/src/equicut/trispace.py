"""Triangle parameter spaces, conversion maps, and seeded samplers.

Triangles are normalized two ways:

* side form -- side lengths (a, b, 1); the pair (a, b) lives in the open
  region cut out by the strict triangle inequalities.
* angle form -- angles (alpha, beta, pi - alpha - beta) with alpha, beta > 0
  and alpha + beta < pi.

Conversions use the law of cosines (exact rational cosines for exact sides)
and the law of sines (rigorous numeric enclosures).  Samplers draw dyadic
rationals with 53 random bits per coordinate from a caller-seeded generator
and reject points outside the open region, so results are reproducible and
every accepted sample satisfies its constraints exactly.

Sampled triangles are returned at the *numeric* tier (``NumericReal``): a
random triangle plays the role of a generic real point, so downstream
relation detection treats it by refinement rather than by field membership.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Union

from .exact import TowerReal, exactify
from .intervals import NumericReal, acos_numeric, pi_interval, sin_numeric

__all__ = [
    "angle_pair_from_fractions",
    "angles_from_sides",
    "cosines_from_sides",
    "in_side_sample_region",
    "is_valid_angle_fractions",
    "is_valid_side_pair",
    "pi_numeric",
    "sample_angle_fractions",
    "sample_angle_triangle",
    "sample_side_fractions",
    "sample_side_triangle",
    "sides_from_angles",
]

ExactValue = Union[TowerReal, Fraction, int]

_SAMPLE_BITS = 53


def pi_numeric() -> NumericReal:
    return NumericReal(lambda bits: pi_interval(bits))


def is_valid_side_pair(a: ExactValue, b: ExactValue) -> bool:
    """Strict triangle inequalities for sides (a, b, 1)."""
    a, b = exactify(a), exactify(b)
    return (
        a.sign() > 0
        and b.sign() > 0
        and (a + b - 1).sign() > 0
        and (a + 1 - b).sign() > 0
        and (b + 1 - a).sign() > 0
    )


def in_side_sample_region(a: Fraction, b: Fraction) -> bool:
    """The sampler's target region: the open unit box above the diagonal.

    Inside it the third side 1 is strictly the longest, and all triangle
    inequalities hold automatically.
    """
    return 0 < a < 1 and 0 < b < 1 and a + b > 1


def is_valid_angle_fractions(u: Fraction, v: Fraction) -> bool:
    """Validity of angles (u*pi, v*pi): strictly positive, summing below pi."""
    return u > 0 and v > 0 and u + v < 1


def _dyadic(rng: random.Random) -> Fraction:
    return Fraction(rng.getrandbits(_SAMPLE_BITS), 1 << _SAMPLE_BITS)


def sample_side_fractions(rng: random.Random) -> tuple[Fraction, Fraction]:
    """Draw (a, b) uniformly from the side sample region (exact dyadics)."""
    while True:
        a, b = _dyadic(rng), _dyadic(rng)
        if in_side_sample_region(a, b):
            return a, b


def sample_side_triangle(rng: random.Random) -> tuple[NumericReal, NumericReal]:
    a, b = sample_side_fractions(rng)
    return NumericReal.from_exact(a), NumericReal.from_exact(b)


def sample_angle_fractions(rng: random.Random) -> tuple[Fraction, Fraction]:
    """Draw (u, v) with angles (u*pi, v*pi) uniform over valid triangles."""
    while True:
        u, v = _dyadic(rng), _dyadic(rng)
        if is_valid_angle_fractions(u, v):
            return u, v


def angle_pair_from_fractions(u: Fraction, v: Fraction) -> tuple[NumericReal, NumericReal]:
    pi = pi_numeric()
    return pi * u, pi * v


def sample_angle_triangle(rng: random.Random) -> tuple[NumericReal, NumericReal]:
    return angle_pair_from_fractions(*sample_angle_fractions(rng))


def cosines_from_sides(
    a: ExactValue, b: ExactValue
) -> tuple[TowerReal, TowerReal, TowerReal]:
    """Exact cosines of the angles opposite sides a, b and 1 respectively,
    by the law of cosines."""
    a, b = exactify(a), exactify(b)
    if not is_valid_side_pair(a, b):
        raise ValueError("side pair violates the triangle inequalities")
    cos_a = (b * b + 1 - a * a) / (2 * b)
    cos_b = (a * a + 1 - b * b) / (2 * a)
    cos_c = (a * a + b * b - 1) / (2 * a * b)
    return cos_a, cos_b, cos_c


def angles_from_sides(
    a: ExactValue, b: ExactValue
) -> tuple[NumericReal, NumericReal, NumericReal]:
    """Angles opposite a, b, 1 as rigorously refinable numeric reals."""
    cos_a, cos_b, cos_c = cosines_from_sides(a, b)
    return (
        acos_numeric(NumericReal.from_exact(cos_a)),
        acos_numeric(NumericReal.from_exact(cos_b)),
        acos_numeric(NumericReal.from_exact(cos_c)),
    )


def sides_from_angles(
    alpha: Union[NumericReal, ExactValue], beta: Union[NumericReal, ExactValue]
) -> tuple[NumericReal, NumericReal]:
    """Sides (a, b) of the triangle with angles (alpha, beta) and third side
    1, by the law of sines: a = sin(alpha)/sin(gamma)."""
    alpha = alpha if isinstance(alpha, NumericReal) else NumericReal.from_exact(alpha)
    beta = beta if isinstance(beta, NumericReal) else NumericReal.from_exact(beta)
    gamma = pi_numeric() - alpha - beta
    sin_gamma = sin_numeric(gamma)
    return sin_numeric(alpha) / sin_gamma, sin_numeric(beta) / sin_gamma
