"""JSON interchange formats.

Simplices are keyed by comma-joined sorted vertices (``"0,1,2"``) and exact
rationals are written as strings (``"1/4"``, ``"-2"``).
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .bundle import NecklaceBundle
from .cochains import Cochain
from .complex import Simplex, SimplicialComplex, build_complex, is_closed_orientable_surface, \
    verify_closed_oriented_surface
from .errors import ValidationError
from .game import Certificate, GameResult
from .lcf import LcfResult
from .necklace import Bead, Necklace
from .total_space import TotalSpace


def key(simplex: Simplex) -> str:
    return ",".join(map(str, simplex))


def parse_key(text: str) -> Simplex:
    try:
        return tuple(sorted(int(x) for x in text.split(",")))
    except ValueError:
        raise ValidationError(f"bad simplex key {text!r}") from None


def dumps(data: Any) -> str:
    return json.dumps(data, indent=2) + "\n"


def _require(data, *fields):
    if not isinstance(data, dict):
        raise ValidationError(f"expected a JSON object, got {type(data).__name__}")
    missing = [f for f in fields if f not in data]
    if missing:
        raise ValidationError(f"missing field(s) {', '.join(missing)}")


# --- complexes ----------------------------------------------------------------

def complex_to_json(X: SimplicialComplex) -> dict:
    return {"vertices": X.vertex_count, "maximal_simplices": [list(s) for s in X.maximal_simplices]}


def complex_from_json(data: dict) -> SimplicialComplex:
    _require(data, "vertices", "maximal_simplices")
    try:
        return build_complex(data["maximal_simplices"], int(data["vertices"]))
    except (TypeError, ValueError) as exc:
        raise ValidationError(f"malformed complex: {exc}") from None


# --- cochains -------------------------------------------------------------------

def _surface_orientation(X: SimplicialComplex, degree: int):
    if degree == 2 and is_closed_orientable_surface(X):
        return verify_closed_oriented_surface(X)
    return None


def cochain_to_json(c: Cochain) -> dict:
    """Degree-2 values on a closed oriented surface refer to its canonical orientation."""
    c = c.reoriented(_surface_orientation(c.complex, c.degree))
    return {"degree": c.degree, "values": {key(s): str(v) for s, v in sorted(c.values.items())}}


def cochain_from_json(data: dict, X: SimplicialComplex) -> Cochain:
    _require(data, "degree", "values")
    degree = int(data["degree"])
    try:
        values = {parse_key(k): Fraction(v) for k, v in data["values"].items()}
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise ValidationError(f"malformed cochain value: {exc}") from None
    return Cochain.from_values(X, degree, values, _surface_orientation(X, degree))


# --- necklaces and bundles ------------------------------------------------------------

def necklace_to_json(n: Necklace) -> dict:
    return {"carrier": list(n.carrier),
            "beads": [{"id": b.id, "color": b.color, "bold": b.id in n.bold} for b in n.beads]}


def necklace_from_json(data: dict) -> Necklace:
    _require(data, "carrier", "beads")
    try:
        beads = tuple(Bead(int(b["id"]), int(b["color"])) for b in data["beads"])
        bold = frozenset(int(b["id"]) for b in data["beads"] if b.get("bold"))
    except (KeyError, TypeError, ValueError) as exc:
        raise ValidationError(f"malformed bead: {exc}") from None
    return Necklace(beads, tuple(sorted(data["carrier"])), bold)


def bundle_to_json(bundle: NecklaceBundle) -> dict:
    return {"base": complex_to_json(bundle.base),
            "necklaces": {key(s): necklace_to_json(bundle.necklaces[s])
                          for s in bundle.base.sorted_simplices}}


def bundle_from_json(data: dict) -> NecklaceBundle:
    _require(data, "base", "necklaces")
    base = complex_from_json(data["base"])
    neck = {parse_key(k): necklace_from_json(v) for k, v in data["necklaces"].items()}
    return NecklaceBundle(base, neck)


# --- reports ---------------------------------------------------------------

def total_space_to_json(T: TotalSpace) -> dict:
    out = complex_to_json(T.complex)
    out["projection"] = {str(v): p for v, p in sorted(T.projection.items())}
    return out


def lcf_to_json(result: LcfResult) -> dict:
    return {"triangles": {key(t): str(v) for t, v in sorted(result.cochain.values.items())},
            "euler_number": str(result.euler_number)}


def game_to_json(result: GameResult) -> dict:
    return {"best_green": result.best_green, "winning": result.winning,
            "exhaustive": result.exhaustive, "strategy": result.strategy.to_json(),
            "summary": result.summary}


def certificate_to_json(cert: Certificate) -> dict:
    return {"base": complex_to_json(cert.base), "strategy": cert.strategy.to_json(),
            "green": cert.green, "strategy_bound": cert.strategy_bound,
            "euler_bound": cert.euler_bound, "statement": cert.statement}
