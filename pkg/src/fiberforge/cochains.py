"""Quarter-integer cochains, the coboundary, the F / G_a transforms and the
GF(2) orientation solver.

Values are exact fractions.  The +-1 cochains, their coboundaries and F
live on the quarter lattice; LCF cochains of classical bundles need not.
A degree-2 cochain may carry a :class:`SurfaceOrientation`; its
values then refer to that orientation of each triangle instead of the
sorted-tuple orientation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .complex import Simplex, SimplicialComplex, SurfaceOrientation, facets
from .errors import InternalError, ObstructionError, ValidationError


@dataclass(frozen=True)
class Cochain:
    complex: SimplicialComplex = field(repr=False)
    degree: int
    values: Mapping[Simplex, Fraction]
    orientation: SurfaceOrientation | None = field(default=None, repr=False)

    def __post_init__(self):
        if set(self.values) != set(self.complex.simplices_of_dim(self.degree)):
            raise ValidationError(f"cochain must be defined on exactly the {self.degree}-simplices")
        if self.orientation is not None and self.degree != 2:
            raise ValidationError("only degree-2 cochains carry a surface orientation")

    @classmethod
    def from_values(cls, complex_, degree, values: Mapping, orientation=None) -> "Cochain":
        vals = {tuple(sorted(s)): Fraction(v) for s, v in values.items()}
        return cls(complex_, degree, vals, orientation)

    @classmethod
    def from_quarters(cls, complex_, degree, quarters: Mapping, orientation=None) -> "Cochain":
        return cls(complex_, degree, {s: Fraction(q, 4) for s, q in quarters.items()}, orientation)

    @classmethod
    def zero(cls, complex_, degree, orientation=None) -> "Cochain":
        return cls(complex_, degree, {s: Fraction(0) for s in complex_.simplices_of_dim(degree)},
                   orientation)

    def __getitem__(self, simplex) -> Fraction:
        return self.values[tuple(sorted(simplex))]

    @property
    def quarters(self) -> dict[Simplex, int]:
        """Values in units of 1/4; only for cochains on the quarter lattice."""
        out = {}
        for s, v in self.values.items():
            q = v * 4
            if q.denominator != 1:
                raise ValidationError(f"value {v} on {s} is not a multiple of 1/4")
            out[s] = int(q)
        return out

    def total(self) -> Fraction:
        return sum(self.values.values(), Fraction(0))

    def value_set(self) -> set[Fraction]:
        return set(self.values.values())

    def sorted_values(self) -> dict[Simplex, Fraction]:
        """Values relative to the sorted-tuple orientation."""
        if self.orientation is None:
            return dict(self.values)
        return {s: v * self.orientation.sign(s) for s, v in self.values.items()}

    def reoriented(self, orientation: SurfaceOrientation | None) -> "Cochain":
        vals = self.sorted_values()
        if orientation is not None:
            vals = {s: v * orientation.sign(s) for s, v in vals.items()}
        return Cochain(self.complex, self.degree, vals, orientation)

    def __add__(self, other: "Cochain") -> "Cochain":
        other = other.reoriented(self.orientation)
        return Cochain(self.complex, self.degree,
                       {s: v + other.values[s] for s, v in self.values.items()}, self.orientation)

    def __sub__(self, other: "Cochain") -> "Cochain":
        return self + other.scaled(-1)

    def scaled(self, factor) -> "Cochain":
        factor = Fraction(factor)
        return Cochain(self.complex, self.degree,
                       {s: v * factor for s, v in self.values.items()}, self.orientation)


def orientation_cochain(complex_: SimplicialComplex, signs: Mapping[Simplex, int]) -> Cochain:
    """Degree-1 cochain with values +-1; +1 means the edge points low -> high."""
    values = {tuple(sorted(e)): s for e, s in signs.items()}
    if any(v not in (1, -1) for v in values.values()):
        raise ValidationError("orientation cochain values must be +1 or -1")
    return Cochain.from_values(complex_, 1, values)


def is_orientation_cochain(a: Cochain) -> bool:
    return a.degree == 1 and all(abs(v) == 1 for v in a.values.values())


def _require_orientation_cochain(a: Cochain) -> None:
    if not is_orientation_cochain(a):
        raise ValidationError("expected a 1-cochain with values +-1 on every edge")


def coboundary(c: Cochain, orientation: SurfaceOrientation | None = None) -> Cochain:
    """``(dc)(s) = sum_i (-1)^i c(s with vertex i removed)`` on sorted tuples.

    If ``orientation`` is given the resulting 2-cochain is expressed with
    respect to it.
    """
    X = c.complex
    targets = X.simplices_of_dim(c.degree + 1)
    if not targets:
        raise ValidationError(f"complex has no {c.degree + 1}-simplices")
    src = c.sorted_values()
    out = {s: sum(((-1) ** i * src[f] for i, f in enumerate(facets(s))), Fraction(0))
           for s in targets}
    result = Cochain(X, c.degree + 1, out)
    return result.reoriented(orientation) if orientation is not None else result


_F_QUARTERS = {3: 1, -1: 1, -3: -1, 1: -1}


def apply_F(c: Cochain) -> Cochain:
    """Pointwise 3, -1 -> 1/4 and -3, 1 -> -1/4."""
    out = {}
    for s, v in c.values.items():
        if v not in _F_QUARTERS:
            raise ValidationError(f"F is undefined at value {v} on {s}")
        out[s] = Fraction(_F_QUARTERS[int(v)], 4)
    return Cochain(c.complex, c.degree, out, c.orientation)


def g_of_a(a: Cochain, orientation: SurfaceOrientation | None = None) -> Cochain:
    """Integer 2-cochain ``F(da) - 3 da / 4``."""
    _require_orientation_cochain(a)
    da = coboundary(a, orientation)
    g = apply_F(da) - da.scaled(Fraction(3, 4))
    if any(v.denominator != 1 for v in g.values.values()):
        raise InternalError("G_a is not integral")
    return g


# --- GF(2) ------------------------------------------------------------------

def solve_gf2(rows: list[int], rhs: list[int], n_cols: int) -> int:
    """Solve ``rows * x = rhs`` over GF(2); rows and the result are bitmasks.

    Pivots are taken in increasing column order and free variables are set
    to 1.  Raises :class:`InternalError` when the system is inconsistent.
    """
    work = [(r, b & 1) for r, b in zip(rows, rhs)]
    pivot_cols: list[int] = []
    rank = 0
    for col in range(n_cols):
        bit = 1 << col
        p = next((i for i in range(rank, len(work)) if work[i][0] & bit), None)
        if p is None:
            continue
        work[rank], work[p] = work[p], work[rank]
        pr, pb = work[rank]
        for i in range(len(work)):
            if i != rank and work[i][0] & bit:
                work[i] = (work[i][0] ^ pr, work[i][1] ^ pb)
        pivot_cols.append(col)
        rank += 1
    if any(r == 0 and b for r, b in work[rank:]):
        raise InternalError("GF(2) system is inconsistent")
    pivot_set = set(pivot_cols)
    x = sum(1 << c for c in range(n_cols) if c not in pivot_set)
    for col, (r, b) in zip(pivot_cols, work):
        others = (r & ~(1 << col)) & x
        if b ^ (bin(others).count("1") & 1):
            x |= 1 << col
        else:
            x &= ~(1 << col)
    return x


def choose_target_cochain(B: SimplicialComplex, orientation: SurfaceOrientation, euler: int) -> Cochain:
    """+-1/4 cochain summing to ``euler``; the +1/4 values go to the first
    triangles in sorted order."""
    f = len(B.triangles)
    if f < 4 * abs(euler):
        raise ObstructionError(f"f(B)={f} < 4|E|={4 * abs(euler)}")
    if f % 2:
        raise ValidationError(f"odd triangle count {f}; not a closed surface")
    plus = f // 2 + 2 * euler
    q = {t: (1 if i < plus else -1) for i, t in enumerate(B.triangles)}
    return Cochain.from_quarters(B, 2, q, orientation)


def solve_orientation_for_target(B: SimplicialComplex, orientation: SurfaceOrientation,
                                 b: Cochain, sigma0: Simplex | None = None) -> Cochain:
    """Find ``a`` in Or(B) with ``F(da) = b`` on every triangle but ``sigma0``.

    Unknown ``x_e`` is 1 iff ``a(e) = +1``.  A triangle with target +1/4 needs
    an odd number of edges agreeing with its orientation.  When the target
    sums to an integer the solution also matches on ``sigma0``.
    """
    b = b.reoriented(orientation)
    if any(abs(v) != Fraction(1, 4) for v in b.values.values()):
        raise ValidationError("target cochain must take values +-1/4")
    tris = B.triangles
    sigma0 = tris[0] if sigma0 is None else tuple(sorted(sigma0))
    col = {e: i for i, e in enumerate(B.edges)}
    rows, rhs = [], []
    for t in tris:
        if t == sigma0:
            continue
        mask, par = 0, 0
        for e in facets(t):
            mask |= 1 << col[e]
            par ^= orientation.edge_sign(t, e) > 0
        rows.append(mask)
        rhs.append((b.values[t] > 0) ^ 1 ^ par)
    x = solve_gf2(rows, rhs, len(col))
    a = Cochain.from_values(B, 1, {e: 1 if x >> i & 1 else -1 for e, i in col.items()})
    got = apply_F(coboundary(a, orientation))
    must = [t for t in tris if t != sigma0]
    if b.total().denominator == 1:
        must = list(tris)
    bad = [t for t in must if got.values[t] != b.values[t]]
    if bad:
        raise InternalError(f"orientation solve missed target on {bad}")
    return a


def cocycle_defects(c: Cochain) -> list[Simplex]:
    """Simplices of degree ``c.degree + 1`` where ``dc`` is nonzero."""
    if not c.complex.simplices_of_dim(c.degree + 1):
        return []
    dc = coboundary(c)
    return [s for s, v in sorted(dc.values.items()) if v]
