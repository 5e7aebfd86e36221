"""Triangle dissections into congruent triangular pieces.

Provides the canonical placement of a triangle with unit base, the standard
lattice dissection into n**2 congruent copies, an exact verifier that checks
every defining property of a dissection, a test for whether a dissection is
the standard lattice one, and a JSON interchange format whose coordinates are
canonical number literals.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import isqrt
from typing import List, Sequence, Tuple, Union

from .exact import FieldBuilder, TowerReal, exactify, sqrt_adjoin
from .geom import (
    Location,
    Pt,
    Triangle,
    _SortKey,
    congruent,
    point_in_triangle,
    triangles_interior_disjoint,
)
from .literals import format_number, parse_number
from .trispace import is_valid_side_pair

__all__ = [
    "Dissection",
    "FailureKind",
    "VerificationFailure",
    "VerificationResult",
    "canonical_triangle",
    "standard_dissection",
    "standard_from_region",
    "verify_dissection",
    "is_standard",
    "dissection_to_json",
    "dissection_to_json_str",
    "dissection_from_json",
]

FORMAT_NAME = "equicut-dissection"
FORMAT_VERSION = 1


@dataclass(frozen=True)
class Dissection:
    """A region triangle together with the pieces that are claimed to tile it."""

    region: Triangle
    pieces: Tuple[Triangle, ...]

    def __post_init__(self):
        object.__setattr__(self, "pieces", tuple(self.pieces))

    @property
    def piece_count(self) -> int:
        return len(self.pieces)


def canonical_triangle(
    a: Union[TowerReal, Fraction, int], b: Union[TowerReal, Fraction, int]
) -> Triangle:
    """Place the triangle with sides (a, b, 1) so the unit side runs from
    (0, 0) to (1, 0) and the apex lies in the upper half-plane.

    The apex C satisfies |BC| = a and |AC| = b where A = (0, 0), B = (1, 0).
    """
    a = exactify(a)
    b = exactify(b)
    if not is_valid_side_pair(a, b):
        raise ValueError("side lengths (a, b, 1) do not form a triangle")
    x = (1 + b * b - a * a) / 2
    y = sqrt_adjoin(b * b - x * x)
    zero = TowerReal.from_rational(0)
    one = TowerReal.from_rational(1)
    return Triangle(Pt(zero, zero), Pt(one, zero), Pt(x, y))


def standard_from_region(region: Triangle, n: int) -> Dissection:
    """The standard lattice dissection of ``region`` into n**2 congruent
    pieces: each side is divided into n equal parts and all cut lines run
    parallel to the sides."""
    if n < 1:
        raise ValueError("piece grid order must be at least 1")
    va, vb, vc = region.vertices
    u = (vb - va) / n
    v = (vc - va) / n
    pieces: List[Triangle] = []
    for j in range(n):
        for i in range(n - j):
            p = va + u * i + v * j
            pieces.append(Triangle(p, p + u, p + v))
            if i + j <= n - 2:
                pieces.append(Triangle(p + u, p + u + v, p + v))
    return Dissection(region=region, pieces=tuple(pieces))


def standard_dissection(
    a: Union[TowerReal, Fraction, int], b: Union[TowerReal, Fraction, int], n: int
) -> Dissection:
    """Standard n**2-piece dissection of the canonically placed (a, b, 1)
    triangle."""
    return standard_from_region(canonical_triangle(a, b), n)


class FailureKind(enum.Enum):
    CONGRUENCE_MISMATCH = "congruence_mismatch"
    PIECE_OUTSIDE_REGION = "piece_outside_region"
    PIECE_PAIR_OVERLAP = "piece_pair_overlap"
    AREA_MISMATCH = "area_mismatch"


@dataclass(frozen=True)
class VerificationFailure:
    kind: FailureKind
    pieces: Tuple[int, ...]
    detail: str


@dataclass
class VerificationResult:
    ok: bool
    failures: List[VerificationFailure] = field(default_factory=list)
    pairs_tested: int = 0  # pairs that reached the exact separating-axis test

    def kinds(self) -> set:
        return {f.kind for f in self.failures}


def _bbox(tri: Triangle, bits: int = 32) -> Tuple[Fraction, Fraction, Fraction, Fraction]:
    xs = [v.x.interval(bits) for v in tri.vertices]
    ys = [v.y.interval(bits) for v in tri.vertices]
    return (
        min(lo for lo, _ in xs),
        max(hi for _, hi in xs),
        min(lo for lo, _ in ys),
        max(hi for _, hi in ys),
    )


def _boxes_separated(b1, b2) -> bool:
    # outward-rounded boxes that merely touch still certify interior
    # disjointness: a linear functional is extreme only on the boundary
    return b1[1] <= b2[0] or b2[1] <= b1[0] or b1[3] <= b2[2] or b2[3] <= b1[2]


def verify_dissection(dissection: Dissection) -> VerificationResult:
    """Check all defining properties of a dissection with exact arithmetic.

    A valid dissection has every piece congruent to the first, every piece
    contained in the (convex) region, pairwise interior-disjoint pieces, and
    piece areas summing exactly to the region area; together these force the
    pieces to tile the region without gaps.
    """
    if dissection.region.is_degenerate():
        raise ValueError("region triangle is degenerate")
    if not dissection.pieces:
        raise ValueError("dissection has no pieces")
    pieces = dissection.pieces
    failures: List[VerificationFailure] = []

    ref = pieces[0]
    for i, piece in enumerate(pieces[1:], start=1):
        if not congruent(ref, piece):
            failures.append(
                VerificationFailure(
                    FailureKind.CONGRUENCE_MISMATCH,
                    (0, i),
                    f"piece {i} is not congruent to piece 0",
                )
            )

    for i, piece in enumerate(pieces):
        for v in piece.vertices:
            if point_in_triangle(v, dissection.region) == Location.OUTSIDE:
                failures.append(
                    VerificationFailure(
                        FailureKind.PIECE_OUTSIDE_REGION,
                        (i,),
                        f"a vertex of piece {i} lies outside the region",
                    )
                )
                break

    boxes = [_bbox(p) for p in pieces]
    degenerate = [p.is_degenerate() for p in pieces]
    pairs_tested = 0
    for i in range(len(pieces)):
        if degenerate[i]:
            continue  # empty interior is disjoint from everything
        for j in range(i + 1, len(pieces)):
            if degenerate[j] or _boxes_separated(boxes[i], boxes[j]):
                continue
            pairs_tested += 1
            if not triangles_interior_disjoint(pieces[i], pieces[j]):
                failures.append(
                    VerificationFailure(
                        FailureKind.PIECE_PAIR_OVERLAP,
                        (i, j),
                        f"pieces {i} and {j} have overlapping interiors",
                    )
                )

    total = TowerReal.from_rational(0)
    for piece in pieces:
        area = piece.signed_area()
        if area.sign() < 0:
            area = -area
        total = total + area
    region_area = dissection.region.signed_area()
    if region_area.sign() < 0:
        region_area = -region_area
    if total != region_area:
        failures.append(
            VerificationFailure(
                FailureKind.AREA_MISMATCH,
                tuple(range(len(pieces))),
                f"piece areas sum to {format_number(total)} but the region "
                f"area is {format_number(region_area)}",
            )
        )

    return VerificationResult(ok=not failures, failures=failures, pairs_tested=pairs_tested)


def _vertex_key(p: Pt):
    return (_SortKey(p.x), _SortKey(p.y))


def _triangle_key(tri: Triangle):
    return tuple(sorted(_vertex_key(v) for v in tri.vertices))


def _piece_multiset_key(pieces: Sequence[Triangle]):
    return sorted(_triangle_key(t) for t in pieces)


def is_standard(dissection: Dissection) -> bool:
    """True when the pieces are exactly the standard lattice cells of the
    region (as unordered vertex sets; orientation and listing order are
    ignored).  The lattice is symmetric in the region's vertices, so the
    region's own vertex labelling does not matter."""
    m = len(dissection.pieces)
    n = isqrt(m)
    if n * n != m:
        return False
    std = standard_from_region(dissection.region, n)
    return _piece_multiset_key(dissection.pieces) == _piece_multiset_key(std.pieces)


def _pt_to_json(p: Pt) -> List[str]:
    return [format_number(p.x), format_number(p.y)]


def dissection_to_json(dissection: Dissection) -> dict:
    """JSON-ready dict with every coordinate as a canonical number literal."""
    return {
        "format": FORMAT_NAME,
        "version": FORMAT_VERSION,
        "region": [_pt_to_json(v) for v in dissection.region.vertices],
        "pieces": [
            [_pt_to_json(v) for v in piece.vertices] for piece in dissection.pieces
        ],
    }


def dissection_to_json_str(dissection: Dissection) -> str:
    return json.dumps(dissection_to_json(dissection), indent=2) + "\n"


def _parse_vertex(builder: FieldBuilder, pair) -> Pt:
    if not isinstance(pair, (list, tuple)) or len(pair) != 2:
        raise ValueError("vertex must be a pair of number literals")
    return Pt(
        builder.embed(parse_number(pair[0])), builder.embed(parse_number(pair[1]))
    )


def _parse_triangle(builder: FieldBuilder, verts) -> Triangle:
    if not isinstance(verts, (list, tuple)) or len(verts) != 3:
        raise ValueError("triangle must have exactly three vertices")
    return Triangle(*(_parse_vertex(builder, v) for v in verts))


def dissection_from_json(data: Union[str, dict]) -> Dissection:
    """Parse the JSON interchange form.  All coordinates are embedded into one
    shared field so later exact arithmetic stays in a single tower."""
    if isinstance(data, str):
        data = json.loads(data)
    if not isinstance(data, dict):
        raise ValueError("dissection JSON must be an object")
    if data.get("format") != FORMAT_NAME:
        raise ValueError(f"unrecognized format marker: {data.get('format')!r}")
    version = data.get("version")
    if not isinstance(version, int) or version < 1 or version > FORMAT_VERSION:
        raise ValueError(f"unsupported format version: {version!r}")
    builder = FieldBuilder()
    region = _parse_triangle(builder, data.get("region"))
    raw_pieces = data.get("pieces")
    if not isinstance(raw_pieces, list):
        raise ValueError("pieces must be a list of triangles")
    pieces = tuple(_parse_triangle(builder, p) for p in raw_pieces)
    return Dissection(region=region, pieces=pieces)
