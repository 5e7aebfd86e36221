"""Tests for the exhaustive dissection search.

Every expected dissection below was constructed by hand from elementary
geometry before the search ran, so the searches are checked against
independent oracles:

* right isoceles, m=2: the altitude from the right angle is the only cut
  that makes two congruent halves, so the search must return exactly the
  pieces (A, M, C), (M, B, C) with M = (1/2, 0).
* equilateral, m=3 with the 30-30-120 tile (1/sqrt3, 1/sqrt3, 1): joining
  the circumcenter O = (1/2, sqrt3/6) to the three corners gives three such
  tiles (|OA| = |OB| = |OC| = 1/sqrt3).
* 30-60-90, m=3 with the similar tile: placing a tile with its long leg
  along the short region side splits off (A, D, C) with D = (1/2, sqrt3/6),
  and the leftover isoceles triangle (A, B, D) falls apart along its apex
  altitude through M = (1/2, 0); the three pieces use both mirror
  handednesses, so the search must find nothing without reflections.
* legs 1:2 right triangle, m=5: the altitude from the right angle C to the
  hypotenuse lands at H = (1/5, 0) and cuts off one similar piece of ratio
  1/sqrt5; the remaining triangle (H, B, C) is the region scaled by 2/sqrt5
  and its four-piece midpoint dissection finishes the five.
"""

from fractions import Fraction

import pytest

from equicut.dissect import (
    Dissection,
    _piece_multiset_key,
    canonical_triangle,
    is_standard,
    standard_from_region,
    verify_dissection,
)
from equicut.exact import sqrt_adjoin
from equicut.geom import Pt, Triangle
from equicut.search import (
    SearchSpec,
    region_symmetries,
    search_dissections,
    search_for_count,
    similar_tile,
)

HALF_SQRT2 = sqrt_adjoin(Fraction(1, 2))
SQRT3 = sqrt_adjoin(3)
INV_SQRT3 = sqrt_adjoin(Fraction(1, 3))

RIGHT_ISOCELES = canonical_triangle(HALF_SQRT2, HALF_SQRT2)
EQUILATERAL = canonical_triangle(1, 1)
THIRTY_SIXTY = canonical_triangle(sqrt_adjoin(Fraction(3, 4)), Fraction(1, 2))
LEGS_ONE_TWO = canonical_triangle(
    sqrt_adjoin(Fraction(4, 5)), sqrt_adjoin(Fraction(1, 5))
)
SCALENE = canonical_triangle(Fraction(7, 8), Fraction(3, 4))


def tri(*coords) -> Triangle:
    pts = [Pt(x, y) for (x, y) in coords]
    return Triangle(*pts)


def keys(dissections):
    return [_piece_multiset_key(d.pieces) for d in dissections]


def assert_contains(dissections, pieces):
    want = _piece_multiset_key(pieces)
    assert any(want == k for k in keys(dissections))


class TestSmallOracles:
    def test_right_isoceles_m2_is_exactly_the_altitude_cut(self):
        out = search_dissections(
            SearchSpec(
                region=RIGHT_ISOCELES, tile=similar_tile(RIGHT_ISOCELES, 2), m=2
            )
        )
        assert out.complete
        assert out.note is None
        assert len(out.dissections) == 1
        expected = [
            tri((0, 0), (Fraction(1, 2), 0), (Fraction(1, 2), Fraction(1, 2))),
            tri((Fraction(1, 2), 0), (1, 0), (Fraction(1, 2), Fraction(1, 2))),
        ]
        assert_contains(out.dissections, expected)
        assert out.nodes == 4

    def test_scalene_m2_has_no_dissection(self):
        out = search_dissections(
            SearchSpec(region=SCALENE, tile=similar_tile(SCALENE, 2), m=2)
        )
        assert out.complete
        assert out.dissections == []

    def test_equilateral_m3_with_center_tile(self):
        center_y = SQRT3 / 6
        out = search_dissections(
            SearchSpec(region=EQUILATERAL, tile=(INV_SQRT3, INV_SQRT3, 1), m=3)
        )
        assert out.complete
        assert len(out.dissections) >= 1
        apex = (Fraction(1, 2), SQRT3 / 2)
        center = (Fraction(1, 2), center_y)
        expected = [
            tri((0, 0), (1, 0), center),
            tri((1, 0), apex, center),
            tri((0, 0), center, apex),
        ]
        assert_contains(out.dissections, expected)

    def test_equilateral_m3_with_similar_tile_finds_nothing(self):
        out = search_dissections(
            SearchSpec(region=EQUILATERAL, tile=similar_tile(EQUILATERAL, 3), m=3)
        )
        assert out.complete
        assert out.dissections == []
        assert out.nodes == 2

    def test_thirty_sixty_m3_finds_the_rep3(self):
        out = search_dissections(
            SearchSpec(region=THIRTY_SIXTY, tile=similar_tile(THIRTY_SIXTY, 3), m=3)
        )
        assert out.complete
        assert len(out.dissections) >= 1
        d_pt = (Fraction(1, 2), SQRT3 / 6)
        expected = [
            tri((0, 0), (Fraction(1, 2), 0), d_pt),
            tri((Fraction(1, 2), 0), (1, 0), d_pt),
            tri((0, 0), d_pt, (Fraction(1, 4), SQRT3 / 4)),
        ]
        assert_contains(out.dissections, expected)
        # regression pin: the rep-3 is the only dissection
        assert len(out.dissections) == 1

    def test_thirty_sixty_m3_needs_both_handednesses(self):
        out = search_dissections(
            SearchSpec(
                region=THIRTY_SIXTY,
                tile=similar_tile(THIRTY_SIXTY, 3),
                m=3,
                allow_reflections=False,
            )
        )
        assert out.complete
        assert out.dissections == []

    def test_m1_returns_the_region_itself(self):
        out = search_dissections(
            SearchSpec(region=SCALENE, tile=similar_tile(SCALENE, 1), m=1)
        )
        assert out.complete
        assert len(out.dissections) == 1
        assert_contains(out.dissections, [SCALENE])
        assert out.nodes == 2

    def test_m1_without_reflections_respects_handedness(self):
        # the canonical scalene region has the mirror handedness relative to
        # the ascending reference side cycle, so restricting to one
        # handedness leaves nothing
        out = search_dissections(
            SearchSpec(
                region=SCALENE,
                tile=similar_tile(SCALENE, 1),
                m=1,
                allow_reflections=False,
            )
        )
        assert out.complete
        assert out.dissections == []


class TestRightIsocelesM4:
    def run(self, **kw):
        return search_dissections(
            SearchSpec(
                region=RIGHT_ISOCELES, tile=similar_tile(RIGHT_ISOCELES, 4), m=4, **kw
            )
        )

    def test_finds_standard_and_windmill(self):
        out = self.run()
        assert out.complete
        assert len(out.dissections) == 2
        standards = [d for d in out.dissections if is_standard(d)]
        others = [d for d in out.dissections if not is_standard(d)]
        assert len(standards) == 1 and len(others) == 1
        m = (Fraction(1, 2), 0)
        f1 = (Fraction(1, 4), Fraction(1, 4))
        f2 = (Fraction(3, 4), Fraction(1, 4))
        apex = (Fraction(1, 2), Fraction(1, 2))
        windmill = [
            tri((0, 0), m, f1),
            tri(f1, m, apex),
            tri(m, (1, 0), f2),
            tri(m, f2, apex),
        ]
        assert _piece_multiset_key(others[0].pieces) == _piece_multiset_key(windmill)
        lattice = standard_from_region(RIGHT_ISOCELES, 2)
        assert _piece_multiset_key(standards[0].pieces) == _piece_multiset_key(
            lattice.pieces
        )

    def test_every_result_passes_verification(self):
        out = self.run()
        for d in out.dissections:
            assert d.piece_count == 4
            assert verify_dissection(d).ok

    def test_node_count_regression(self):
        assert self.run().nodes == 12


class TestLegsOneTwoM5:
    def test_rediscovers_the_altitude_plus_midpoint_dissection(self):
        out = search_dissections(
            SearchSpec(region=LEGS_ONE_TWO, tile=similar_tile(LEGS_ONE_TWO, 5), m=5)
        )
        assert out.complete
        assert len(out.dissections) >= 1
        h = (Fraction(1, 5), 0)
        c = (Fraction(1, 5), Fraction(2, 5))
        mid_hb = (Fraction(3, 5), 0)
        mid_hc = (Fraction(1, 5), Fraction(1, 5))
        mid_bc = (Fraction(3, 5), Fraction(1, 5))
        oracle = [
            tri((0, 0), h, c),
            tri(h, mid_hb, mid_hc),
            tri(mid_hb, (1, 0), mid_bc),
            tri(mid_hc, mid_bc, c),
            tri(mid_hb, mid_bc, mid_hc),
        ]
        assert_contains(out.dissections, oracle)
        # regression pins: the middle rectangle splits along either diagonal
        assert len(out.dissections) == 2
        assert out.nodes == 25


class TestScaleneSweep:
    def test_m2_to_m6_only_the_standard_four_piece(self):
        expected_counts = {2: 0, 3: 0, 4: 1, 5: 0, 6: 0}
        expected_nodes = {2: 3, 3: 4, 4: 9, 5: 17, 6: 23}
        for m, want in expected_counts.items():
            out = search_dissections(
                SearchSpec(region=SCALENE, tile=similar_tile(SCALENE, m), m=m)
            )
            assert out.complete, m
            assert len(out.dissections) == want, m
            assert out.nodes == expected_nodes[m], m
            if m == 4:
                assert is_standard(out.dissections[0])


class TestPruningSoundness:
    CASES = [
        (RIGHT_ISOCELES, 4),
        (EQUILATERAL, 3),
        (THIRTY_SIXTY, 3),
        (SCALENE, 4),
    ]

    @pytest.mark.parametrize(
        "toggle",
        [
            {"prune_remainder": False},
            {"prune_overshoot": False},
            {"prune_remainder": False, "prune_overshoot": False},
        ],
    )
    def test_disabling_prunes_never_changes_results(self, toggle):
        for region, m in self.CASES:
            tile = similar_tile(region, m)
            base = search_dissections(SearchSpec(region=region, tile=tile, m=m))
            alt = search_dissections(
                SearchSpec(region=region, tile=tile, m=m, **toggle)
            )
            assert alt.complete and base.complete
            assert keys(alt.dissections) == keys(base.dissections)
            assert alt.nodes >= base.nodes


class TestLimits:
    def test_max_nodes_truncates_and_reports_incomplete(self):
        out = search_dissections(
            SearchSpec(
                region=RIGHT_ISOCELES,
                tile=similar_tile(RIGHT_ISOCELES, 4),
                m=4,
                max_nodes=5,
            )
        )
        assert not out.complete
        assert out.nodes == 6  # the call that tripped the limit is counted

    def test_max_results_stops_after_first_find(self):
        out = search_dissections(
            SearchSpec(
                region=RIGHT_ISOCELES,
                tile=similar_tile(RIGHT_ISOCELES, 4),
                m=4,
                max_results=1,
            )
        )
        assert not out.complete
        assert len(out.dissections) == 1
        assert verify_dissection(out.dissections[0]).ok

    def test_zero_time_budget_stops_immediately(self):
        out = search_dissections(
            SearchSpec(
                region=RIGHT_ISOCELES,
                tile=similar_tile(RIGHT_ISOCELES, 4),
                m=4,
                time_budget=0.0,
            )
        )
        assert not out.complete
        assert out.dissections == []


class TestVacuousCases:
    def test_area_mismatch_is_reported_not_searched(self):
        out = search_dissections(
            SearchSpec(
                region=SCALENE,
                tile=(Fraction(1, 2), Fraction(1, 2), Fraction(1, 2)),
                m=4,
            )
        )
        assert out.complete
        assert out.dissections == []
        assert out.nodes == 0
        assert "does not equal the region area" in out.note

    def test_degenerate_tile_is_reported(self):
        out = search_dissections(
            SearchSpec(
                region=SCALENE,
                tile=(Fraction(1, 10), Fraction(1, 10), Fraction(1, 2)),
                m=4,
            )
        )
        assert out.complete
        assert out.dissections == []
        assert "triangle inequality" in out.note

    def test_nonpositive_m_rejected(self):
        with pytest.raises(ValueError):
            search_dissections(
                SearchSpec(region=SCALENE, tile=similar_tile(SCALENE, 1), m=0)
            )

    def test_nonpositive_tile_side_rejected(self):
        with pytest.raises(ValueError):
            search_dissections(
                SearchSpec(region=SCALENE, tile=(-1, Fraction(1, 2), 1), m=4)
            )


class TestSearchForCount:
    def test_labels_similar_and_supplied_tiles(self):
        report = search_for_count(
            EQUILATERAL, 3, extra_tiles=[(INV_SQRT3, INV_SQRT3, 1)]
        )
        kinds = [r.kind for r in report.reports]
        assert kinds == ["similar", "supplied"]
        assert len(report.reports[0].outcome.dissections) == 0
        assert len(report.reports[1].outcome.dissections) == 1
        assert report.total_dissections == 1
        assert report.complete

    def test_mismatched_extra_tile_is_skipped_with_notice(self):
        report = search_for_count(
            SCALENE, 4, extra_tiles=[(Fraction(1, 2), Fraction(1, 2), Fraction(1, 2))]
        )
        supplied = report.reports[1]
        assert supplied.outcome.dissections == []
        assert "does not equal the region area" in supplied.outcome.note
        assert report.total_dissections == 1  # the similar tile still finds standard

    def test_duplicate_tile_reuses_the_outcome(self):
        report = search_for_count(
            RIGHT_ISOCELES, 4, extra_tiles=[similar_tile(RIGHT_ISOCELES, 4)]
        )
        assert report.reports[0].outcome is report.reports[1].outcome


class TestSymmetry:
    def test_symmetry_group_sizes(self):
        assert len(region_symmetries(SCALENE)) == 1
        assert len(region_symmetries(RIGHT_ISOCELES)) == 2
        assert len(region_symmetries(EQUILATERAL)) == 6

    def test_quotient_keeps_symmetric_dissection(self):
        out = search_dissections(
            SearchSpec(
                region=EQUILATERAL,
                tile=(INV_SQRT3, INV_SQRT3, 1),
                m=3,
                symmetry_quotient=True,
            )
        )
        assert len(out.dissections) == 1

    def test_quotient_never_grows_the_result_list(self):
        plain = search_dissections(
            SearchSpec(region=RIGHT_ISOCELES, tile=similar_tile(RIGHT_ISOCELES, 4), m=4)
        )
        quot = search_dissections(
            SearchSpec(
                region=RIGHT_ISOCELES,
                tile=similar_tile(RIGHT_ISOCELES, 4),
                m=4,
                symmetry_quotient=True,
            )
        )
        assert len(quot.dissections) <= len(plain.dissections)
        for k in keys(quot.dissections):
            assert any(k == k2 for k2 in keys(plain.dissections))


class TestDeterminism:
    def test_repeat_runs_agree_exactly(self):
        spec = lambda: SearchSpec(
            region=LEGS_ONE_TWO, tile=similar_tile(LEGS_ONE_TWO, 5), m=5
        )
        a = search_dissections(spec())
        b = search_dissections(spec())
        assert a.nodes == b.nodes
        assert keys(a.dissections) == keys(b.dissections)
