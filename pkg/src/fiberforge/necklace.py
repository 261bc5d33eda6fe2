"""Necklaces: cyclic words of globally identified, colored beads.

Counterclockwise is the stored order.  Beads keep their ids under
restriction, so a restriction morphism is a literal subsequence.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Iterable, Mapping, NamedTuple

from .complex import Simplex
from .errors import ValidationError


@dataclass(frozen=True, order=True)
class Bead:
    id: int
    color: int


@dataclass(frozen=True)
class Necklace:
    beads: tuple[Bead, ...]
    carrier: Simplex
    bold: frozenset = field(default=frozenset())

    def __post_init__(self):
        colors = {b.color for b in self.beads}
        if not colors <= set(self.carrier):
            raise ValidationError(f"bead colors {sorted(colors)} outside carrier {self.carrier}")
        missing = set(self.carrier) - colors
        if missing:
            raise ValidationError(f"no bead of color {sorted(missing)} over {self.carrier}")
        if len({b.id for b in self.beads}) != len(self.beads):
            raise ValidationError("repeated bead id in necklace")
        if not self.bold <= {b.id for b in self.beads}:
            raise ValidationError("bold bead not in necklace")

    @classmethod
    def from_word(cls, word: str | Iterable[int], bold: Iterable[int] = (),
                  carrier: Iterable[int] | None = None, ids: Iterable[int] | None = None) -> "Necklace":
        """Build from a color word; bead ids default to positions and ``bold``
        lists positions."""
        colors = [int(c) for c in word]
        ids = list(range(len(colors))) if ids is None else list(ids)
        beads = tuple(Bead(i, c) for i, c in zip(ids, colors))
        carrier = tuple(sorted(set(colors))) if carrier is None else tuple(sorted(carrier))
        return cls(beads, carrier, frozenset(ids[p] for p in bold))

    def __len__(self) -> int:
        return len(self.beads)

    @property
    def ids(self) -> tuple[int, ...]:
        return tuple(b.id for b in self.beads)

    @property
    def colors(self) -> tuple[int, ...]:
        return tuple(b.color for b in self.beads)

    @property
    def word(self) -> str:
        return "".join(map(str, self.colors)) if max(self.carrier) < 10 else str(self.colors)

    def count(self, color: int) -> int:
        return sum(1 for b in self.beads if b.color == color)

    def bold_of(self, color: int) -> Bead | None:
        return next((b for b in self.beads if b.color == color and b.id in self.bold), None)

    @property
    def is_framed(self) -> bool:
        return all(sum(1 for b in self.beads if b.color == c and b.id in self.bold) == 1
                   for c in self.carrier)

    @property
    def is_small(self) -> bool:
        return all(self.count(c) == 2 for c in self.carrier)

    def rotate(self, k: int) -> "Necklace":
        k %= len(self.beads)
        return Necklace(self.beads[k:] + self.beads[:k], self.carrier, self.bold)

    def starting_at(self, bead_id: int) -> "Necklace":
        return self.rotate(self.ids.index(bead_id))

    def same_cycle(self, other: "Necklace") -> bool:
        """Equal as cyclic sequences of beads, with equal framing."""
        if len(self) != len(other) or self.bold != other.bold or self.carrier != other.carrier:
            return False
        if not self.beads:
            return True
        try:
            return other.starting_at(self.beads[0].id).beads == self.beads
        except ValueError:
            return False

    def __str__(self) -> str:
        return " ".join(f"[{b.color}]" if b.id in self.bold else str(b.color) for b in self.beads)


def restrict(necklace: Necklace, face: Iterable[int]) -> Necklace:
    """Delete every bead whose color is not in ``face``."""
    face = tuple(sorted(set(face)))
    if not face or not set(face) <= set(necklace.carrier):
        raise ValidationError(f"{face} is not a face of {necklace.carrier}")
    beads = tuple(b for b in necklace.beads if b.color in face)
    ids = {b.id for b in beads}
    return Necklace(beads, face, frozenset(i for i in necklace.bold if i in ids))


class ClassicalCheck(NamedTuple):
    ok: bool
    reason: str

    def __bool__(self) -> bool:
        return self.ok


def color_changes(necklace: Necklace) -> int:
    c = necklace.colors
    return sum(1 for i in range(len(c)) if c[i] != c[i - 1])


def is_mixed(necklace: Necklace) -> bool:
    """A two-colored necklace is mixed unless its colors form two monochromatic blocks."""
    if len(necklace.carrier) != 2:
        raise ValidationError(f"mixing is defined for two colors, got {necklace.carrier}")
    return color_changes(necklace) > 2


def check_classical(necklace: Necklace) -> ClassicalCheck:
    """At least three beads of every color, and two-colored necklaces mixed."""
    for color in necklace.carrier:
        n = necklace.count(color)
        if n < 3:
            return ClassicalCheck(False, f"only {n} bead(s) of color {color}")
    if len(necklace.carrier) == 2 and not is_mixed(necklace):
        return ClassicalCheck(False, "colors form two monochromatic blocks")
    return ClassicalCheck(True, "")


def check_classical_faces(necklace: Necklace) -> ClassicalCheck:
    """:func:`check_classical` on the necklace and every restriction of it to a face."""
    carrier = necklace.carrier
    for k in range(len(carrier), 0, -1):
        for face in combinations(carrier, k):
            chk = check_classical(restrict(necklace, face))
            if not chk:
                return ClassicalCheck(False, f"over face {face}: {chk.reason}")
    return ClassicalCheck(True, "")


def canonical_form(necklace: Necklace) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Least rotation as ``(color word, bead ids)``; ids break ties."""
    n = len(necklace.beads)
    if n == 0:
        return ((), ())
    rotations = [necklace.rotate(k) for k in range(n)]
    return min((r.colors, r.ids) for r in rotations)


# --- framings ---------------------------------------------------------------

def framing_to_orientation(necklace: Necklace) -> tuple[int, int]:
    """Directed edge ``(i, j)`` induced by the framing of a two-colored necklace.

    ``i -> j`` iff walking counterclockwise from the bold ``i`` bead, the first
    ``j``-colored bead met is the bold one.  ``i`` is tried as the smaller color.
    """
    if len(necklace.carrier) != 2:
        raise ValidationError(f"framing orientation needs two colors, got {necklace.carrier}")
    i, j = necklace.carrier
    bi, bj = necklace.bold_of(i), necklace.bold_of(j)
    if bi is None or bj is None:
        raise ValidationError("necklace is not framed")
    walk = necklace.starting_at(bi.id).beads
    first_j = next(b for b in walk if b.color == j)
    return (i, j) if first_j == bj else (j, i)


def _small_table() -> dict[tuple[int, int, int], Necklace]:
    """Edge signs (01, 12, 20) -> small framed necklace on colors 0, 1, 2.

    Bead ``2c`` is the bold bead of color ``c`` and ``2c + 1`` the other one.
    """
    table: dict[tuple[int, int, int], Necklace] = {}
    for word in ((0, 1, 2), (0, 2, 1)):
        for choice in product((0, 1), repeat=3):
            # choice[c] = which occurrence (first/second) of color c is bold
            ids = []
            for rep in range(2):
                for c in word:
                    ids.append(2 * c + (rep != choice[c]))
            beads = tuple(Bead(i, i // 2) for i in ids)
            neck = Necklace(beads, (0, 1, 2), frozenset((0, 2, 4))).starting_at(0)
            signs = []
            for p, q in ((0, 1), (1, 2), (2, 0)):
                signs.append(1 if framing_to_orientation(restrict(neck, (p, q))) == (p, q) else -1)
            key = tuple(signs)
            if key in table and not table[key].same_cycle(neck):
                raise AssertionError("framed small necklaces are not determined by edge signs")
            table[key] = neck
    return table


_SMALL = _small_table()


def small_framed_necklace(edge_signs: tuple[int, int, int]) -> Necklace:
    """Small symmetric framed necklace on local colors 0, 1, 2.

    ``edge_signs`` are the signs of edges 01, 12, 20: +1 when the edge is
    oriented along the triangle (0->1, 1->2, 2->0).
    """
    key = tuple(int(s) for s in edge_signs)
    if key not in _SMALL:
        raise ValidationError(f"edge signs must be three values +-1, got {edge_signs}")
    return _SMALL[key]


def positive_edge_count(necklace: Necklace, order: tuple[int, int, int]) -> int:
    """Number of edges whose framing orientation follows the cyclic ``order``."""
    x, y, z = order
    return sum(framing_to_orientation(restrict(necklace, (p, q))) == (p, q)
               for p, q in ((x, y), (y, z), (z, x)))


# --- doubling ----------------------------------------------------------------

def double_bead(necklaces: Mapping[Simplex, Necklace], vertex: int, bead_id: int,
                new_id: int | None = None) -> dict[Simplex, Necklace]:
    """Insert a fresh bead right after ``bead_id`` (same color) wherever it occurs."""
    over = necklaces.get((vertex,))
    if over is None or bead_id not in over.ids:
        raise ValidationError(f"bead {bead_id} does not lie over vertex {vertex}")
    if new_id is None:
        new_id = 1 + max(i for n in necklaces.values() for i in n.ids)
    elif any(new_id in n.ids for n in necklaces.values()):
        raise ValidationError(f"bead id {new_id} is already in use")
    fresh = Bead(new_id, vertex)
    out = {}
    for s, n in necklaces.items():
        if bead_id in n.ids:
            k = n.ids.index(bead_id) + 1
            n = Necklace(n.beads[:k] + (fresh,) + n.beads[k:], n.carrier, n.bold)
        out[s] = n
    return out
