"""Local combinatorial formula for the rational Euler class."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cochains import Cochain
from .complex import Simplex, SurfaceOrientation, verify_closed_oriented_surface
from .errors import ValidationError
from .necklace import Necklace


@dataclass(frozen=True)
class TripleCounts:
    positive: int
    negative: int
    total: int  # #0 * #1 * #2

    @property
    def value(self) -> Fraction:
        return Fraction(self.negative - self.positive, 2 * self.total)


def triple_counts(necklace: Necklace, order: tuple[int, int, int] | None = None) -> TripleCounts:
    """Count multicolored triples by orientation.

    ``order`` lists the triangle's vertices so that they read as local colors
    0, 1, 2 along its orientation; the sorted carrier is used by default.  A
    triple is positive when, going counterclockwise from its 0-bead, its
    1-bead comes before its 2-bead.
    """
    order = tuple(necklace.carrier) if order is None else tuple(order)
    if sorted(order) != list(necklace.carrier) or len(order) != 3:
        raise ValidationError(f"order {order} does not match carrier {necklace.carrier}")
    n = len(necklace)
    pos = {c: [i for i, b in enumerate(necklace.beads) if b.color == c] for c in order}
    c0, c1, c2 = order
    if not all(pos[c] for c in order):
        raise ValidationError("necklace misses a color")
    positive = 0
    for p0 in pos[c0]:
        for p1 in pos[c1]:
            d1 = (p1 - p0) % n
            for p2 in pos[c2]:
                if d1 < (p2 - p0) % n:
                    positive += 1
    total = len(pos[c0]) * len(pos[c1]) * len(pos[c2])
    return TripleCounts(positive, total - positive, total)


def lcf_value(necklace: Necklace, order: tuple[int, int, int] | None = None) -> Fraction:
    """``(#neg - #pos) / (2 #0 #1 #2)`` for a necklace over an oriented triangle."""
    return triple_counts(necklace, order).value


@dataclass(frozen=True)
class LcfResult:
    cochain: Cochain
    counts: dict[Simplex, TripleCounts]

    @property
    def euler_number(self) -> Fraction:
        return self.cochain.total()


def evaluate_lcf(bundle, orientation: SurfaceOrientation | None = None) -> LcfResult:
    """LCF cochain of a bundle on every triangle of its base.

    Triangles are read along ``orientation`` when given, else in sorted order.
    """
    B = bundle.base
    counts = {}
    for t in B.triangles:
        order = orientation.oriented(t) if orientation is not None else t
        counts[t] = triple_counts(bundle.necklaces[t], order)
    values = {t: c.value for t, c in counts.items()}
    return LcfResult(Cochain(B, 2, values, orientation), counts)


def euler_number(bundle) -> int:
    """Sum of LCF values over a closed oriented surface base."""
    orientation = verify_closed_oriented_surface(bundle.base)
    total = evaluate_lcf(bundle, orientation).euler_number
    if total.denominator != 1:
        raise ValidationError(f"LCF sum {total} is not an integer; bundle is inconsistent")
    return int(total)
