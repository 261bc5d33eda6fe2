from itertools import product

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from fiberforge.errors import ValidationError
from fiberforge.lcf import lcf_value
from fiberforge.necklace import (
    Bead,
    Necklace,
    canonical_form,
    check_classical,
    double_bead,
    framing_to_orientation,
    is_mixed,
    positive_edge_count,
    restrict,
    small_framed_necklace,
)

from helpers import necklaces

# the eight framed small necklaces over an oriented triangle: (word, bold positions, value sign)
LEMMA_TABLE = [
    ("012012", (0, 1, 2), -1), ("012012", (0, 1, 5), -1),
    ("012012", (0, 4, 5), -1), ("012012", (0, 2, 4), -1),
    ("021021", (0, 1, 2), 1), ("021021", (0, 1, 5), 1),
    ("021021", (0, 4, 5), 1), ("021021", (0, 2, 4), 1),
]


def test_restrict_examples():
    assert restrict(Necklace.from_word("012012"), (0, 1)).word == "0101"
    assert restrict(Necklace.from_word("021021"), (0, 2)).word == "0202"


def test_restrict_big_necklace_to_023():
    big = Necklace.from_word("001122330123", bold=range(8, 12))
    r = restrict(big, (0, 2, 3))
    assert r.word == "002233023"
    assert [b.id for b in r.beads if b.id in r.bold] == [8, 10, 11]


def test_restrict_rejects_non_faces():
    with pytest.raises(ValidationError):
        restrict(Necklace.from_word("0101"), (0, 2))


def test_mixing():
    assert is_mixed(Necklace.from_word("010111"))
    assert not is_mixed(Necklace.from_word("000111"))
    assert not check_classical(Necklace.from_word("000111"))
    assert check_classical(Necklace.from_word("010101"))


def test_classicality_needs_three_beads():
    chk = check_classical(Necklace.from_word("012012"))
    assert not chk and "only 2" in chk.reason
    assert check_classical(Necklace.from_word("012012012"))


def test_necklace_validation():
    with pytest.raises(ValidationError):
        Necklace.from_word("0101", carrier=(0, 1, 2))
    with pytest.raises(ValidationError):
        Necklace.from_word("0101", ids=[0, 1, 0, 2])
    with pytest.raises(ValidationError):
        Necklace.from_word("012", carrier=(0, 1))


@pytest.mark.parametrize("word,bold,want", [
    ("0101", (0, 1), (0, 1)),
    ("0101", (0, 3), (1, 0)),
    ("1010", (0, 1), (1, 0)),
])
def test_framing_to_orientation(word, bold, want):
    assert framing_to_orientation(Necklace.from_word(word, bold=bold)) == want


def test_bold_012012_orientations():
    n = Necklace.from_word("012012", bold=(0, 1, 2))
    assert framing_to_orientation(restrict(n, (0, 1))) == (0, 1)
    assert framing_to_orientation(restrict(n, (1, 2))) == (1, 2)
    assert framing_to_orientation(restrict(n, (0, 2))) == (0, 2)
    assert positive_edge_count(n, (0, 1, 2)) == 2
    assert lcf_value(n) == -0.25
    assert lcf_value(Necklace.from_word("021021", bold=(0, 1, 2))) == 0.25


@pytest.mark.parametrize("word,bold,sign", LEMMA_TABLE)
def test_lemma_table(word, bold, sign):
    n = Necklace.from_word(word, bold=bold)
    assert n.is_small and n.is_framed
    assert lcf_value(n) * 4 == sign
    odd = positive_edge_count(n, (0, 1, 2)) % 2 == 1
    assert odd == (sign > 0)
    # the table lookup by edge signs returns the same necklace up to bead ids
    signs = tuple(1 if framing_to_orientation(restrict(n, e)) == e else -1
                  for e in ((0, 1), (1, 2), (2, 0)))
    s = small_framed_necklace(signs)
    pattern = lambda m: [(b.color, b.id in m.bold) for b in m.starting_at(m.bold_of(0).id).beads]
    assert pattern(s) == pattern(n)


def test_small_table_is_complete():
    seen = set()
    for signs in product((1, -1), repeat=3):
        n = small_framed_necklace(signs)
        assert n.is_small and n.is_framed
        assert (lcf_value(n) > 0) == (signs.count(1) % 2 == 1)
        seen.add(n.ids)
    assert len(seen) == 8
    with pytest.raises(ValidationError):
        small_framed_necklace((1, 0, 1))


def test_doubling_example():
    neck = {(0,): Necklace.from_word("00", bold=(0,), carrier=(0,), ids=[0, 2]),
            (1,): Necklace.from_word("11", bold=(0,), carrier=(1,), ids=[1, 3]),
            (0, 1): Necklace.from_word("0101", bold=(0, 1))}
    out = double_bead(neck, 0, 0, 4)
    assert out[(0, 1)].word == "00101"
    assert out[(0, 1)].ids == (0, 4, 1, 2, 3)
    assert out[(1,)] == neck[(1,)]
    with pytest.raises(ValidationError):
        double_bead(neck, 0, 0, 3)
    with pytest.raises(ValidationError):
        double_bead(neck, 1, 0)


def test_canonical_form_examples():
    n = Necklace.from_word("021013")
    assert canonical_form(n) == canonical_form(n.rotate(1))
    assert canonical_form(n)[0] == canonical_form(Necklace.from_word("210130"))[0]
    assert canonical_form(Necklace.from_word("0101"))[0] == (0, 1, 0, 1)
    one = Necklace.from_word("0")
    assert canonical_form(one) == ((0,), (0,))


@settings(max_examples=500, deadline=None)
@given(necklaces(), st.integers(0, 20))
def test_canonical_form_rotation_invariant(n, k):
    assert canonical_form(n.rotate(k)) == canonical_form(n)
    assert n.rotate(k).same_cycle(n)


@settings(max_examples=200, deadline=None)
@given(necklaces(colors=(0, 1), min_per_color=1, max_per_color=5))
def test_unmixed_iff_some_rotation_is_sorted(n):
    word = list(n.colors)
    rotations = [word[k:] + word[:k] for k in range(len(word))]
    assert is_mixed(n) == all(r != sorted(r) for r in rotations)


def test_bead_ordering():
    assert Bead(1, 5) < Bead(2, 0)
