import json
from fractions import Fraction

import pytest

from fiberforge import io
from fiberforge.bundle import build_with_euler
from fiberforge.cochains import Cochain
from fiberforge.complex import generate, verify_closed_oriented_surface
from fiberforge.errors import ValidationError
from fiberforge.lcf import evaluate_lcf
from fiberforge.necklace import Necklace
from fiberforge.total_space import reconstruct


def _through_text(data):
    return json.loads(io.dumps(data))


def test_complex_round_trip():
    X = generate("icosahedron")
    assert io.complex_from_json(_through_text(io.complex_to_json(X))) == X


def test_complex_format():
    assert io.complex_to_json(generate("tetrahedron_boundary")) == {
        "vertices": 4, "maximal_simplices": [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]]}


def test_necklace_round_trip():
    n = Necklace.from_word("012012", bold=(0, 4, 5), ids=[7, 3, 1, 0, 2, 9])
    data = io.necklace_to_json(n)
    assert data["beads"][0] == {"id": 7, "color": 0, "bold": True}
    assert io.necklace_from_json(_through_text(data)) == n


def test_bundle_round_trip():
    bundle = build_with_euler(generate("octahedron"), 2)
    data = _through_text(io.bundle_to_json(bundle))
    assert "0,2,4" in data["necklaces"]
    back = io.bundle_from_json(data)
    assert back.base == bundle.base and dict(back.necklaces) == dict(bundle.necklaces)


def test_cochain_round_trip_uses_surface_orientation():
    X = generate("octahedron")
    o = verify_closed_oriented_surface(X)
    c = Cochain.from_values(X, 2, {t: Fraction(i, 4) for i, t in enumerate(X.triangles)}, o)
    data = _through_text(io.cochain_to_json(c))
    assert data["values"]["0,2,4"] == str(c[(0, 2, 4)])
    back = io.cochain_from_json(data, X)
    assert back.sorted_values() == c.sorted_values()


def test_reports():
    bundle = build_with_euler(generate("tetrahedron_boundary"), 1)
    o = verify_closed_oriented_surface(bundle.base)
    rep = io.lcf_to_json(evaluate_lcf(bundle, o))
    assert rep["euler_number"] == "1"
    assert all("/" in v or v.lstrip("-").isdigit() for v in rep["triangles"].values())
    T = io.total_space_to_json(reconstruct(bundle))
    assert T["vertices"] == 12 and len(T["projection"]) == 12


@pytest.mark.parametrize("data", [
    [], {"vertices": 3}, {"vertices": "x", "maximal_simplices": [[0, 1]]},
    {"vertices": 2, "maximal_simplices": [[0, 5]]},
])
def test_bad_complexes(data):
    with pytest.raises(ValidationError):
        io.complex_from_json(data)


def test_bad_keys_and_values():
    X = generate("tetrahedron_boundary")
    with pytest.raises(ValidationError):
        io.parse_key("0,a")
    with pytest.raises(ValidationError):
        io.cochain_from_json({"degree": 2, "values": {"0,1,2": "1/0"}}, X)
    with pytest.raises(ValidationError):
        io.necklace_from_json({"carrier": [0], "beads": [{"color": 0}]})
