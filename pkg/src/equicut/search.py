"""Exhaustive search for dissections of a triangle into congruent tiles.

Given a region triangle, a tile (a congruence class described by its sorted
side lengths), and a piece count ``m``, :func:`search_dissections` enumerates
every dissection of the region into ``m`` congruent copies of the tile.  The
search runs entirely in exact arithmetic: all candidate vertices live in one
fixed multiquadratic tower field generated up front from the region
coordinates, the tile sides, the tile apex, and nothing else, so no numeric
tolerance ever decides a branch.

The enumeration is a depth-first search on the uncovered region:

* The frontier is the uncovered part of the region, kept as one or more
  counterclockwise polygons with exact vertices and exact cached edge
  lengths.  Collinear edges are merged eagerly, so no interior angle is ever
  exactly straight.
* Each step picks the canonical frontier vertex - the one with the smallest
  interior angle, ties broken by lexicographic (x, y) - and places a tile
  corner there with one side flush along the outgoing boundary edge.  A
  wedge-counting argument shows some piece of every completed dissection
  must sit exactly like that, so trying all 3 corners (times 2 mirror
  orientations when reflections are allowed) loses nothing.
* Sound pruning rules cut branches that provably cannot complete; two of
  them can be toggled off for differential testing, which must only ever
  grow the node count, never change the result set.

``complete=True`` on the outcome certifies the returned list is exhaustive.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple, Union

from .exact import FieldBuilder, TowerReal, exactify, sqrt_adjoin
from .geom import (
    AngleVec,
    Isometry,
    Location,
    Pt,
    Triangle,
    _SortKey,
    point_in_polygon,
    point_on_segment,
)
from .dissect import Dissection, _piece_multiset_key, verify_dissection

__all__ = [
    "CountReport",
    "SearchOutcome",
    "SearchSpec",
    "TileReport",
    "region_symmetries",
    "search_dissections",
    "search_for_count",
    "similar_tile",
]

Sideish = Union[TowerReal, Fraction, int]


@dataclass
class SearchSpec:
    """Everything that defines one search problem.

    ``tile`` is a triple of exact side lengths (any order; it is sorted on
    use).  ``allow_reflections=False`` restricts pieces to the single
    handedness whose counterclockwise side cycle runs in ascending sorted
    order.  ``symmetry_quotient=True`` keeps one representative per orbit of
    the region's symmetry group.  The two ``prune_*`` switches exist for
    differential testing of search soundness; disabling them may only slow
    the search down, never change its results.
    """

    region: Triangle
    tile: Tuple[Sideish, Sideish, Sideish]
    m: int
    allow_reflections: bool = True
    symmetry_quotient: bool = False
    max_nodes: Optional[int] = None
    max_results: Optional[int] = None
    time_budget: Optional[float] = None
    prune_remainder: bool = True
    prune_overshoot: bool = True


@dataclass
class SearchOutcome:
    """Result of one search: the dissections found (canonically ordered),
    whether the enumeration provably covered the whole tree, the number of
    expansion calls, and an optional notice for vacuous cases."""

    dissections: List[Dissection]
    complete: bool
    nodes: int
    note: Optional[str] = None


@dataclass
class TileReport:
    """One tile's labelled outcome inside a :class:`CountReport`."""

    kind: str  # "similar" for the derived 1/sqrt(m) tile, else "supplied"
    sides: Tuple[TowerReal, TowerReal, TowerReal]
    outcome: SearchOutcome


@dataclass
class CountReport:
    """Aggregated outcomes of searching one region for ``m``-piece
    dissections over several candidate tiles."""

    region: Triangle
    m: int
    reports: List[TileReport]

    @property
    def total_dissections(self) -> int:
        return sum(len(r.outcome.dissections) for r in self.reports)

    @property
    def complete(self) -> bool:
        return all(r.outcome.complete for r in self.reports)


# ---------------------------------------------------------------------------
# Frontier polygons.


@dataclass(frozen=True)
class _Poly:
    """A counterclockwise boundary cycle of one uncovered component.

    ``lens[i]`` caches the exact length of the edge from ``verts[i]`` to
    ``verts[i+1]``; lengths always stay inside the search field because new
    edges are tile sides and splits/merges only rescale rationally.  The
    cycle may revisit a pinch vertex, but edges never properly cross.
    """

    verts: Tuple[Pt, ...]
    lens: Tuple[TowerReal, ...]


def _poly_area_sign(verts: Sequence[Pt]) -> int:
    total = TowerReal.from_rational(0)
    n = len(verts)
    for i in range(n):
        total = total + verts[i].cross(verts[(i + 1) % n])
    return total.sign()


def _segment_meets_triangle_interior(p: Pt, q: Pt, tri: Sequence[Pt]) -> bool:
    """True when the open segment (p, q) meets the open triangle interior.

    Clips the segment's parameter interval against the three inward
    half-planes of the counterclockwise triangle.  Interval endpoints are
    kept as (numerator, positive denominator) pairs so the whole test runs
    on sign evaluations without any division.
    """
    zero = TowerReal.from_rational(0)
    one = TowerReal.from_rational(1)
    lo_n, lo_d = zero, one
    hi_n, hi_d = one, one
    for i in range(3):
        e0, e1 = tri[i], tri[(i + 1) % 3]
        ev = e1 - e0
        f0 = ev.cross(p - e0)
        f1 = ev.cross(q - e0)
        s0, s1 = f0.sign(), f1.sign()
        if s0 <= 0 and s1 <= 0:
            return False
        if s0 > 0 and s1 > 0:
            continue
        if s0 > 0:
            n, d = f0, f0 - f1
            if n * hi_d < hi_n * d:
                hi_n, hi_d = n, d
        else:
            n, d = -f0, f1 - f0
            if n * lo_d > lo_n * d:
                lo_n, lo_d = n, d
    return lo_n * hi_d < hi_n * lo_d


def _same_direction(d1: Pt, d2: Pt) -> bool:
    return d1.cross(d2).is_zero() and d1.dot(d2).sign() > 0


def _split_edge(p: Pt, q: Pt, length: TowerReal, candidates: Sequence[Pt]):
    """Split the directed segment (p, q) at every candidate point strictly
    inside it, returning consecutive (start, end, exact length) pieces."""
    inside = []
    for c in candidates:
        if c == p or c == q:
            continue
        if point_on_segment(c, p, q) and all(not (c == s) for s in inside):
            inside.append(c)
    if not inside:
        return [(p, q, length)]
    dvec = q - p
    den = dvec.norm_sq()
    inside.sort(key=lambda c: _SortKey((c - p).dot(dvec)))
    points = [p] + inside + [q]
    pieces = []
    for u, w in zip(points, points[1:]):
        piece_len = length * ((w - u).dot(dvec)) / den
        pieces.append((u, w, piece_len))
    return pieces


def _edge_sort_key(edge):
    u, w, _ = edge
    return (_SortKey(u.x), _SortKey(u.y), _SortKey(w.x), _SortKey(w.y))


def _merge_cycle(segs) -> _Poly:
    """Merge maximal collinear runs of a closed edge cycle into single
    edges and return the resulting counterclockwise polygon."""
    n = len(segs)
    dirs = [w - u for (u, w, _) in segs]
    start = None
    for i in range(n):
        if not _same_direction(dirs[i - 1], dirs[i]):
            start = i
            break
    if start is None:
        raise RuntimeError("boundary cycle degenerated to a line")
    order = list(range(start, n)) + list(range(start))
    runs: List[List[int]] = []
    for idx in order:
        if runs and _same_direction(dirs[runs[-1][-1]], dirs[idx]):
            runs[-1].append(idx)
        else:
            runs.append([idx])
    verts = tuple(segs[r[0]][0] for r in runs)
    lens = []
    for r in runs:
        total = segs[r[0]][2]
        for idx in r[1:]:
            total = total + segs[idx][2]
        lens.append(total)
    if len(verts) < 3:
        raise RuntimeError("boundary cycle with fewer than three corners")
    if _poly_area_sign(verts) <= 0:
        raise RuntimeError("boundary cycle is not counterclockwise")
    return _Poly(verts, tuple(lens))


def _subtract(poly: _Poly, tri: Tuple[Pt, Pt, Pt], tri_lens: Tuple[TowerReal, TowerReal, TowerReal]) -> List[_Poly]:
    """Remove a placed triangle from one frontier polygon.

    Precondition (established by the placement checks): the triangle lies in
    the closure of the polygon and its open interior touches no boundary
    point, so every overlap between a triangle edge and a polygon edge is
    collinear.  Both edge sets are split at each other's vertices into
    atomic pieces that either coincide exactly or share at most endpoints;
    the new boundary keeps the uncovered polygon pieces plus the reversed
    triangle pieces that run through the interior, stitched back into
    counterclockwise cycles by a walk that always takes the sharpest
    available left turn, which keeps pinch wedges apart.
    """
    n = len(poly.verts)
    poly_edges = [
        (poly.verts[i], poly.verts[(i + 1) % n], poly.lens[i]) for i in range(n)
    ]
    tri_edges = [
        (tri[0], tri[1], tri_lens[0]),
        (tri[1], tri[2], tri_lens[1]),
        (tri[2], tri[0], tri_lens[2]),
    ]
    tri_pts = list(tri)
    poly_pts = list(poly.verts)

    kept = []
    for p, q, length in poly_edges:
        for u, w, piece_len in _split_edge(p, q, length, tri_pts):
            mid = (u + w) / 2
            covered = any(point_on_segment(mid, t0, t1) for (t0, t1, _) in tri_edges)
            if not covered:
                kept.append((u, w, piece_len))
    for p, q, length in tri_edges:
        for u, w, piece_len in _split_edge(p, q, length, poly_pts):
            mid = (u + w) / 2
            on_boundary = any(
                point_on_segment(mid, e0, e1) for (e0, e1, _) in poly_edges
            )
            if not on_boundary:
                kept.append((w, u, piece_len))

    if not kept:
        return []

    edges = sorted(kept, key=_edge_sort_key)
    count = len(edges)

    def successor(idx: int) -> int:
        p, q, _ = edges[idx]
        rev = p - q  # points back along the incoming edge
        best = None
        best_angle: Optional[AngleVec] = None
        for jdx in range(count):
            u, w, _ = edges[jdx]
            if not (u == q):
                continue
            g = w - u
            if _same_direction(g, rev):
                raise RuntimeError("dangling boundary edge after subtraction")
            # The region lies in the wedge swept counterclockwise from the
            # outgoing edge to the reversed incoming edge, so the true
            # continuation bounds the smallest such wedge; a straight pass
            # through a pinch vertex would claim a half-plane and swallow
            # the wedge on the other side.
            angle = AngleVec.between(g, rev)
            if best_angle is None or angle < best_angle:
                best, best_angle = jdx, angle
            elif angle == best_angle:
                raise RuntimeError("ambiguous boundary continuation")
        if best is None:
            raise RuntimeError("open boundary chain after subtraction")
        return best

    used = [False] * count
    cycles: List[List[int]] = []
    for start in range(count):
        if used[start]:
            continue
        orbit = [start]
        used[start] = True
        cur = successor(start)
        while cur != start:
            if used[cur]:
                raise RuntimeError("boundary walk revisited an edge")
            used[cur] = True
            orbit.append(cur)
            cur = successor(cur)
        cycles.append(orbit)

    return [_merge_cycle([edges[i] for i in orbit]) for orbit in cycles]


# ---------------------------------------------------------------------------
# Tile geometry inside the fixed search field.


def _heron16(a2: TowerReal, b2: TowerReal, c2: TowerReal) -> TowerReal:
    """16 * (triangle area)^2 from squared side lengths."""
    return 2 * (a2 * b2 + b2 * c2 + c2 * a2) - (a2 * a2 + b2 * b2 + c2 * c2)


class _TileData:
    """Per-corner placement data for the tile, all in the search field.

    Corner ``k`` is the one opposite side ``s[k]``.  For the reference
    (direct) handedness the side leaving corner ``k`` counterclockwise is
    ``s[(k+2) % 3]`` and the side arriving is ``s[(k+1) % 3]``.
    """

    def __init__(self, builder: FieldBuilder, sides: Sequence[TowerReal]):
        self.s = [builder.embed(x) for x in sides]
        sq = [x * x for x in self.s]
        self.heron16 = _heron16(sq[0], sq[1], sq[2])
        if self.heron16.sign() <= 0:
            raise ValueError("tile sides violate the triangle inequality")
        sqrt_h = builder.sqrt(self.heron16)
        one = TowerReal.from_rational(1)
        self.cos = []
        self.sin = []
        self.angles = []
        for k in range(3):
            i, j = (k + 1) % 3, (k + 2) % 3
            denom = 2 * self.s[i] * self.s[j]
            cos_k = (sq[i] + sq[j] - sq[k]) / denom
            sin_k = sqrt_h / denom
            self.cos.append(cos_k)
            self.sin.append(sin_k)
            self.angles.append(AngleVec(cos_k, sin_k, one))
        self.min_angle = min(self.angles)


# ---------------------------------------------------------------------------
# The searcher.


class _Searcher:
    def __init__(self, spec: SearchSpec):
        if spec.m < 1:
            raise ValueError("piece count must be at least 1")
        region = spec.region.oriented()
        if region.is_degenerate():
            raise ValueError("degenerate region")
        self.spec = spec
        builder = FieldBuilder()
        verts = [
            Pt(builder.embed(p.x), builder.embed(p.y)) for p in region.vertices
        ]
        self.region = Triangle(*verts)
        side_sq = [
            (verts[1] - verts[0]).norm_sq(),
            (verts[2] - verts[1]).norm_sq(),
            (verts[0] - verts[2]).norm_sq(),
        ]
        self.side_lens = [builder.sqrt(sq) for sq in side_sq]

        tile_sides = sorted((exactify(x) for x in spec.tile), key=_SortKey)
        if tile_sides[0].sign() <= 0:
            raise ValueError("tile sides must be positive")
        self.note: Optional[str] = None
        self.tile: Optional[_TileData] = None
        try:
            tile = _TileData(builder, tile_sides)
        except ValueError:
            self.note = "tile sides violate the triangle inequality; no dissection can exist"
            return
        area2_region = self.region.signed_area()
        lhs = tile.heron16 * Fraction(spec.m * spec.m)
        rhs = 16 * area2_region * area2_region
        if not (lhs == rhs):
            self.note = (
                "tile area times piece count does not equal the region area; "
                "no dissection can exist"
            )
            return
        self.tile = tile

    def run(self) -> SearchOutcome:
        if self.tile is None:
            return SearchOutcome([], True, 0, note=self.note)
        self.results: List[Dissection] = []
        self.nodes = 0
        self.truncated = False
        self.deadline = (
            time.monotonic() + self.spec.time_budget
            if self.spec.time_budget is not None
            else None
        )
        v = self.region.vertices
        root = _Poly(
            (v[0], v[1], v[2]),
            (self.side_lens[0], self.side_lens[1], self.side_lens[2]),
        )
        self._expand([root], [])
        self.results.sort(key=lambda d: _piece_multiset_key(d.pieces))
        if self.spec.symmetry_quotient:
            self.results = _quotient_by_symmetry(self.region, self.results)
        return SearchOutcome(self.results, not self.truncated, self.nodes)

    # -- node expansion ----------------------------------------------------

    def _expand(self, frontier: List[_Poly], pieces: List[Triangle]) -> None:
        if self.truncated:
            return
        self.nodes += 1
        if self.spec.max_nodes is not None and self.nodes > self.spec.max_nodes:
            self.truncated = True
            return
        if self.deadline is not None and time.monotonic() > self.deadline:
            self.truncated = True
            return
        if not frontier:
            self._emit(pieces)
            return

        pi, vi, phi = self._canonical_vertex(frontier)
        poly = frontier[pi]
        n = len(poly.verts)
        v_at = poly.verts[vi]
        v_next = poly.verts[(vi + 1) % n]
        v_prev = poly.verts[(vi - 1) % n]
        out_len = poly.lens[vi]
        e = (v_next - v_at) / out_len
        prev_vec = v_prev - v_at

        tile = self.tile
        seen: List[Tuple[Pt, Pt]] = []
        for k in range(3):
            i, j = (k + 1) % 3, (k + 2) % 3
            orders = [(tile.s[j], tile.s[i])]
            if self.spec.allow_reflections:
                orders.append((tile.s[i], tile.s[j]))
            theta = tile.angles[k]
            cmp = theta.compare(phi)
            if cmp > 0:
                continue
            d_dir = Pt(
                e.x * tile.cos[k] - e.y * tile.sin[k],
                e.x * tile.sin[k] + e.y * tile.cos[k],
            )
            if cmp < 0 and self.spec.prune_remainder:
                remainder = AngleVec.between(d_dir, prev_vec)
                if remainder < tile.min_angle:
                    continue
            for along_len, other_len in orders:
                if self.truncated:
                    return
                if along_len > out_len and self.spec.prune_overshoot:
                    w_angle = AngleVec.interior(
                        v_at, v_next, poly.verts[(vi + 2) % n]
                    )
                    if not w_angle.is_reflex():
                        continue
                a_pt = v_at + e * along_len
                x_pt = v_at + d_dir * other_len
                if any(a_pt == a2 and x_pt == x2 for (a2, x2) in seen):
                    continue
                seen.append((a_pt, x_pt))
                tri = (v_at, a_pt, x_pt)
                if not self._fits(poly, tri):
                    continue
                new_polys = _subtract(poly, tri, (along_len, tile.s[k], other_len))
                child = frontier[:pi] + new_polys + frontier[pi + 1 :]
                pieces.append(Triangle(*tri))
                self._expand(child, pieces)
                pieces.pop()

    def _canonical_vertex(self, frontier: List[_Poly]):
        best = None
        for pi, poly in enumerate(frontier):
            n = len(poly.verts)
            for vi in range(n):
                angle = AngleVec.interior(
                    poly.verts[(vi - 1) % n],
                    poly.verts[vi],
                    poly.verts[(vi + 1) % n],
                )
                key = (angle, poly.verts[vi].x, poly.verts[vi].y)
                if best is None or _angle_point_less(key, best[0]):
                    best = (key, pi, vi)
        return best[1], best[2], best[0][0]

    def _fits(self, poly: _Poly, tri: Tuple[Pt, Pt, Pt]) -> bool:
        n = len(poly.verts)
        for idx in range(n):
            p, q = poly.verts[idx], poly.verts[(idx + 1) % n]
            if _segment_meets_triangle_interior(p, q, tri):
                return False
        centroid = (tri[0] + tri[1] + tri[2]) / 3
        return point_in_polygon(centroid, poly.verts) is Location.INSIDE

    def _emit(self, pieces: List[Triangle]) -> None:
        if len(pieces) != self.spec.m:
            raise RuntimeError("covered the region with a wrong piece count")
        d = Dissection(self.region, tuple(pieces))
        check = verify_dissection(d)
        if not check.ok:
            raise RuntimeError(
                "search produced an invalid dissection: "
                + ", ".join(sorted(k.value for k in check.kinds()))
            )
        self.results.append(d)
        if (
            self.spec.max_results is not None
            and len(self.results) >= self.spec.max_results
        ):
            self.truncated = True


def _angle_point_less(key_a, key_b) -> bool:
    angle_a, xa, ya = key_a
    angle_b, xb, yb = key_b
    cmp = angle_a.compare(angle_b)
    if cmp != 0:
        return cmp < 0
    if not (xa == xb):
        return xa < xb
    if not (ya == yb):
        return ya < yb
    return False


# ---------------------------------------------------------------------------
# Region symmetries and the quotient of results.


def _isometry_fixing_order(src: Triangle, dst: Triangle) -> Optional[Isometry]:
    """The isometry taking src vertices to dst vertices in order, if any."""
    sv, dv = src.vertices, dst.vertices
    zero = TowerReal.from_rational(0)
    for reflect in (False, True):
        base = [Pt(p.x, -p.y) for p in sv] if reflect else list(sv)
        u = base[1] - base[0]
        w = dv[1] - dv[0]
        usq = u.norm_sq()
        if not (usq == w.norm_sq()):
            continue
        c = u.dot(w) / usq
        s = u.cross(w) / usq
        if not (c * c + s * s == 1):
            continue
        probe = Isometry(c, s, reflect, zero, zero)
        shift = dv[0] - probe.apply(sv[0])
        iso = Isometry(c, s, reflect, shift.x, shift.y)
        if iso.apply(sv[1]) == dv[1] and iso.apply(sv[2]) == dv[2]:
            return iso
    return None


def region_symmetries(region: Triangle) -> List[Isometry]:
    """All isometries mapping the region onto itself (1, 2, or 6 of them)."""
    verts = region.vertices
    out = []
    for perm in itertools.permutations(range(3)):
        dst = Triangle(verts[perm[0]], verts[perm[1]], verts[perm[2]])
        iso = _isometry_fixing_order(region, dst)
        if iso is not None:
            out.append(iso)
    return out


def _quotient_by_symmetry(region: Triangle, results: List[Dissection]) -> List[Dissection]:
    group = region_symmetries(region)
    if len(group) <= 1:
        return results
    kept = []
    seen_keys = []
    for d in results:
        orbit_key = None
        for iso in group:
            moved = [iso.apply_triangle(p) for p in d.pieces]
            key = _piece_multiset_key(moved)
            if orbit_key is None or key < orbit_key:
                orbit_key = key
        if any(orbit_key == k for k in seen_keys):
            continue
        seen_keys.append(orbit_key)
        kept.append(d)
    return kept


# ---------------------------------------------------------------------------
# Public entry points.


def search_dissections(spec: SearchSpec) -> SearchOutcome:
    """Enumerate dissections of ``spec.region`` into ``spec.m`` congruent
    copies of ``spec.tile``.  The tile's area times ``m`` must equal the
    region's area exactly; otherwise the outcome is vacuously empty and says
    so in its note."""
    return _Searcher(spec).run()


def similar_tile(region: Triangle, m: int) -> Tuple[TowerReal, TowerReal, TowerReal]:
    """The sorted side triple of the region shrunk by 1/sqrt(m) - the only
    tile shape a similarity argument permits for *similar* pieces."""
    if m < 1:
        raise ValueError("piece count must be at least 1")
    scale = sqrt_adjoin(Fraction(1, m))
    sides = [s * scale for s in region.side_lengths()]
    sides.sort(key=_SortKey)
    return (sides[0], sides[1], sides[2])


def search_for_count(
    region: Triangle,
    m: int,
    extra_tiles: Sequence[Tuple[Sideish, Sideish, Sideish]] = (),
    **spec_kwargs,
) -> CountReport:
    """Search one region for ``m``-piece dissections.

    Always tries the similar tile (region scaled by 1/sqrt(m)); any
    ``extra_tiles`` are searched as well, each labelled in the report.
    Tiles whose area cannot tile the region exactly come back with a
    vacuous, noted outcome rather than an error.
    """
    similar = similar_tile(region, m)
    jobs: List[Tuple[str, Tuple[TowerReal, TowerReal, TowerReal]]] = [
        ("similar", similar)
    ]
    for raw in extra_tiles:
        sides = sorted((exactify(x) for x in raw), key=_SortKey)
        triple = (sides[0], sides[1], sides[2])
        jobs.append(("supplied", triple))
    reports: List[TileReport] = []
    outcomes: List[Tuple[Tuple[TowerReal, ...], SearchOutcome]] = []
    for kind, triple in jobs:
        previous = next(
            (
                o
                for done, o in outcomes
                if all(a == b for a, b in zip(done, triple))
            ),
            None,
        )
        if previous is not None:
            reports.append(TileReport(kind, triple, previous))
            continue
        outcome = search_dissections(
            SearchSpec(region=region, tile=triple, m=m, **spec_kwargs)
        )
        outcomes.append((triple, outcome))
        reports.append(TileReport(kind, triple, outcome))
    return CountReport(region, m, reports)
