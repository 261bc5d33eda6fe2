"""Necklace bundles and their constructions.

A bundle stores one framed necklace per simplex of the base.  For the
small constructions vertex ``v`` carries bead ``2v`` (bold) and ``2v + 1``;
doubling adds bead ``2 v(B) + v`` right after the bold bead.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from itertools import combinations
from typing import Mapping

from .cochains import (
    Cochain,
    _require_orientation_cochain,
    apply_F,
    choose_target_cochain,
    coboundary,
    cocycle_defects,
    solve_orientation_for_target,
)
from .complex import (
    Simplex,
    SimplicialComplex,
    SurfaceOrientation,
    facets,
    verify_closed_oriented_surface,
)
from .errors import ObstructionError, ValidationError
from .necklace import Bead, Necklace, check_classical, double_bead, restrict, small_framed_necklace


@dataclass(frozen=True)
class NecklaceBundle:
    base: SimplicialComplex
    necklaces: Mapping[Simplex, Necklace]

    def __getitem__(self, simplex) -> Necklace:
        return self.necklaces[tuple(sorted(simplex))]

    @property
    def bead_ids(self) -> list[int]:
        return sorted(i for v in self.base.vertices for i in self.necklaces[(v,)].ids)

    def is_classical(self) -> bool:
        return all(check_classical(n) for n in self.necklaces.values())

    def non_classical(self) -> dict[Simplex, str]:
        out = {}
        for s in self.base.sorted_simplices:
            chk = check_classical(self.necklaces[s])
            if not chk:
                out[s] = chk.reason
        return out


@dataclass(frozen=True)
class Violation:
    simplex: Simplex
    kind: str  # missing | coverage | restriction | framing
    detail: str

    def __str__(self) -> str:
        return f"{self.kind} at {self.simplex}: {self.detail}"


def verify_consistency(bundle: NecklaceBundle) -> list[Violation]:
    """Every face-restriction identity, color coverage and framing; empty when consistent."""
    out: list[Violation] = []
    B = bundle.base
    for s in B.sorted_simplices:
        n = bundle.necklaces.get(s)
        if n is None:
            out.append(Violation(s, "missing", "no necklace"))
            continue
        if n.carrier != s:
            out.append(Violation(s, "coverage", f"carrier {n.carrier} differs from simplex"))
            continue
        colors = set(n.colors)
        if colors != set(s):
            out.append(Violation(s, "coverage", f"colors {sorted(colors)}"))
    for s in B.sorted_simplices:
        if len(s) < 2 or s not in bundle.necklaces or bundle.necklaces[s].carrier != s:
            continue
        for f in facets(s):
            face = bundle.necklaces.get(f)
            if face is None or face.carrier != f:
                continue
            r = restrict(bundle.necklaces[s], f)
            if not _same_ids(r, face):
                out.append(Violation(f, "restriction",
                                     f"restriction of {s} is {r.ids}, stored {face.ids}"))
            elif r.bold != face.bold:
                out.append(Violation(f, "framing",
                                     f"bold beads {sorted(r.bold)} from {s}, stored {sorted(face.bold)}"))
    return out


def _same_ids(a: Necklace, b: Necklace) -> bool:
    if len(a) != len(b):
        return False
    if not a.beads:
        return True
    if a.beads[0].id not in b.ids:
        return False
    return b.starting_at(a.beads[0].id).beads == a.beads


# --- small bundles -------------------------------------------------------------

def _edge_points_up(a: Cochain, p: int, q: int) -> bool:
    """True when ``a`` orients the edge pq as p -> q."""
    return (a.values[tuple(sorted((p, q)))] > 0) == (p < q)


def _small_necklaces(B: SimplicialComplex, a: Cochain, oriented) -> dict[Simplex, Necklace]:
    out: dict[Simplex, Necklace] = {}
    for v in B.vertices:
        out[(v,)] = Necklace((Bead(2 * v, v), Bead(2 * v + 1, v)), (v,), frozenset({2 * v}))
    for i, j in B.edges:
        if not _edge_points_up(a, i, j):
            i, j = j, i
        beads = (Bead(2 * i, i), Bead(2 * j, j), Bead(2 * i + 1, i), Bead(2 * j + 1, j))
        out[tuple(sorted((i, j)))] = Necklace(beads, tuple(sorted((i, j))), frozenset({2 * i, 2 * j}))
    for t in B.triangles:
        p, q, r = oriented(t)
        signs = tuple(1 if _edge_points_up(a, x, y) else -1 for x, y in ((p, q), (q, r), (r, p)))
        local = small_framed_necklace(signs)
        verts = (p, q, r)
        beads = tuple(Bead(2 * verts[b.color] + b.id % 2, verts[b.color]) for b in local.beads)
        out[t] = Necklace(beads, t, frozenset(2 * v for v in t))
    return out


def small_bundle_from_orientation(B: SimplicialComplex, a: Cochain,
                                  orientation: SurfaceOrientation | None = None) -> NecklaceBundle:
    """Small framed bundle over a closed oriented surface whose framings realize ``a``."""
    if orientation is None:
        orientation = verify_closed_oriented_surface(B)
    _require_orientation_cochain(a)
    return NecklaceBundle(B, _small_necklaces(B, a, orientation.oriented))


def small_skeleton_bundle(B: SimplicialComplex, a: Cochain) -> NecklaceBundle:
    """Small framed bundle over the 2-skeleton of any complex, triangles read in sorted order."""
    _require_orientation_cochain(a)
    S = B.skeleton(2)
    return NecklaceBundle(S, _small_necklaces(S, a, lambda t: t))


def double_bold_beads(bundle: NecklaceBundle) -> NecklaceBundle:
    """Double the bold bead over every base vertex (fresh id ``N + v``)."""
    neck = dict(bundle.necklaces)
    offset = 1 + max(bundle.bead_ids)
    for v in bundle.base.vertices:
        bold = neck[(v,)].bold_of(v)
        neck = double_bead(neck, v, bold.id, offset + v)
    return NecklaceBundle(bundle.base, neck)


def build_with_euler(B: SimplicialComplex, euler: int) -> NecklaceBundle:
    """Classical bundle with Euler number ``euler`` over a closed oriented surface.

    Target cochain, GF(2) orientation solve, small bundle, then one doubling
    per vertex: 3 v(B) beads over vertices and 9 beads over each triangle.
    """
    orientation = verify_closed_oriented_surface(B)
    b = choose_target_cochain(B, orientation, euler)
    a = solve_orientation_for_target(B, orientation, b)
    return double_bold_beads(small_bundle_from_orientation(B, a, orientation))


def trivial_bundle(B: SimplicialComplex) -> NecklaceBundle:
    """Restrictions of ``(0,0,1,1,...,N,N,[0],[1],...,[N])`` to every simplex.

    Vertex ``v`` carries beads ``3v, 3v + 1`` and the bold ``3v + 2``.
    """
    order = [Bead(3 * v + k, v) for v in range(B.vertex_count) for k in (0, 1)]
    order += [Bead(3 * v + 2, v) for v in range(B.vertex_count)]
    big = Necklace(tuple(order), tuple(range(B.vertex_count)),
                   frozenset(3 * v + 2 for v in range(B.vertex_count)))
    return NecklaceBundle(B, {s: restrict(big, s) for s in B.sorted_simplices})


# --- general bases ----------------------------------------------------------

def merge_necklaces(simplex: Simplex, face_necklaces: Mapping[Simplex, Necklace]) -> Necklace:
    """The unique necklace over ``simplex`` restricting to the given facet necklaces.

    The bold bead of the least vertex is the anchor; every pair of beads is
    ordered inside a facet containing the anchor color and both bead colors.
    Raises :class:`ObstructionError` when no such necklace exists.
    """
    c0 = simplex[0]
    fs = facets(simplex)
    beads = {b for f in fs for b in face_necklaces[f].beads}
    bold = frozenset(i for f in fs for i in face_necklaces[f].bold)
    anchor = next(face_necklaces[f].bold_of(c0) for f in fs if c0 in f)
    linear = {}
    for f in fs:
        if c0 in f:
            ids = face_necklaces[f].starting_at(anchor.id).ids
            linear[f] = {i: k for k, i in enumerate(ids)}

    def home(x: Bead, y: Bead) -> dict[int, int]:
        need = {c0, x.color, y.color}
        return next(linear[f] for f in fs if c0 in f and need <= set(f))

    rank = {b: 0 for b in beads}
    for x, y in combinations(sorted(beads), 2):
        pos = home(x, y)
        rank[y if pos[x.id] < pos[y.id] else x] += 1
    if sorted(rank.values()) != list(range(len(beads))):
        raise ObstructionError(f"facet necklaces of {simplex} admit no common cyclic order", [simplex])
    merged = Necklace(tuple(sorted(beads, key=rank.__getitem__)), simplex, bold)
    for f in fs:
        r = restrict(merged, f)
        if not _same_ids(r, face_necklaces[f]) or r.bold != face_necklaces[f].bold:
            raise ObstructionError(f"facet necklaces of {simplex} do not extend (mismatch on {f})",
                                   [simplex])
    return merged


def extend_to_skeleton(partial: NecklaceBundle, B: SimplicialComplex) -> NecklaceBundle:
    """Extend a small bundle over the 2-skeleton of ``B`` to all of ``B``.

    A 3-simplex extends iff its face necklaces merge; the other case is the
    Hopf bundle over its boundary and raises :class:`ObstructionError`.
    """
    neck = dict(partial.necklaces)
    for s in B.skeleton(2).sorted_simplices:
        if s not in neck:
            raise ValidationError(f"partial bundle lacks a necklace over {s}")
        if not neck[s].is_small:
            raise ValidationError(f"necklace over {s} is not small symmetric")
    for k in range(3, B.dimension + 1):
        for s in B.simplices_of_dim(k):
            try:
                neck[s] = merge_necklaces(s, neck)
            except ObstructionError as exc:
                if k == 3:
                    raise ObstructionError(
                        f"Hopf obstruction on 3-simplex {s}: the face necklaces form the Hopf "
                        f"bundle over its boundary and do not extend", [s]) from exc
                raise
    return NecklaceBundle(B, neck)


def build_general(B: SimplicialComplex, a: Cochain, check_torsion: bool = False) -> NecklaceBundle:
    """Classical bundle over any complex from an orientation cochain ``a``.

    ``F(da)`` (sorted orientations) must be a cocycle; failures are reported
    per 3-simplex.  With ``check_torsion`` a warning is issued when
    H^2(B; Z) has elements of order two.
    """
    _require_orientation_cochain(a)
    if a.complex != B:
        raise ValidationError("orientation cochain lives on a different complex")
    if B.triangles:
        bad = cocycle_defects(apply_F(coboundary(a)))
        if bad:
            raise ObstructionError(
                f"F(da) is not a cocycle (Hopf obstruction) on 3-simplices {bad}", bad)
    if check_torsion:
        from .homology import h2_has_two_torsion
        if h2_has_two_torsion(B):
            warnings.warn("H^2(B; Z) has elements of order two", stacklevel=2)
    return double_bold_beads(extend_to_skeleton(small_skeleton_bundle(B, a), B))
