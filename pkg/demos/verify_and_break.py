#!/usr/bin/env python3
"""Show the dissection verifier catching every standard way a dissection
can be wrong.

A dissection claims: these m triangles are congruent to each other, lie
inside the region, overlap only on boundaries, and fill the whole area.
The verifier checks all four claims with exact arithmetic and reports
every failure, not just the first.  This script takes a correct 4-piece
dissection and breaks it four different ways.

Usage:
    python3 verify_and_break.py
"""

from fractions import Fraction

from equicut.dissect import (
    Dissection,
    canonical_triangle,
    standard_from_region,
    verify_dissection,
)
from equicut.geom import Pt, Triangle

REGION = canonical_triangle(Fraction(7, 8), Fraction(3, 4))


def report(label, dissection):
    result = verify_dissection(dissection)
    print(f"== {label}")
    print(f"   ok: {result.ok}")
    for failure in result.failures:
        pieces = ", ".join(str(p) for p in failure.pieces)
        print(f"   {failure.kind.value} (pieces {pieces}): {failure.detail}")
    print()


def main():
    good = standard_from_region(REGION, 2)
    report("the standard 4-piece dissection (correct)", good)

    # 1. nudge one vertex by 1/1000 -- area and congruence both break
    pieces = list(good.pieces)
    v = pieces[0].vertices
    pieces[0] = Triangle(Pt(v[0].x + Fraction(1, 1000), v[0].y), v[1], v[2])
    report("vertex moved by 1/1000", Dissection(REGION, pieces))

    # 2. delete a piece -- the remaining three no longer fill the area
    report("one piece deleted", Dissection(REGION, list(good.pieces[1:])))

    # 3. swap in a half-size tile -- wrong size, wrong area
    piece = good.pieces[0]
    c = piece.vertices[0]
    shrunk = Triangle(*(Pt(c.x + (p.x - c.x) / 2, c.y + (p.y - c.y) / 2)
                        for p in piece.vertices))
    pieces = [shrunk, *good.pieces[1:]]
    report("one piece replaced by a half-size copy", Dissection(REGION, pieces))

    # 4. duplicate a piece on top of another -- overlap and area excess
    pieces = [good.pieces[0], good.pieces[0], *good.pieces[1:]]
    report("one piece duplicated", Dissection(REGION, pieces))

    print("Every corruption is caught, with all applicable categories listed.")


if __name__ == "__main__":
    main()
