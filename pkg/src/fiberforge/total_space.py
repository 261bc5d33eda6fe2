"""Explicit total space of a necklace bundle.

Walking counterclockwise around the necklace over a base simplex, each bead
of color ``c`` advances the fiber cursor over ``c`` by one step.  The
cursors before the step, together with the new vertex over ``c``, span one
top simplex of the preimage of that base simplex.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .bundle import NecklaceBundle
from .complex import (
    FVector,
    Simplex,
    SimplicialComplex,
    build_complex,
    closed_3manifold_problems,
    facets,
    is_closed_orientable_surface,
)
from .errors import NonClassicalError
from .necklace import check_classical


@dataclass(frozen=True)
class TotalSpace:
    complex: SimplicialComplex
    projection: dict[int, int]
    top_simplex_labels: dict[Simplex, tuple[Simplex, int]] = field(repr=False)
    vertex_bead: tuple[int, ...] = field(repr=False)

    def f_vector(self) -> FVector:
        return self.complex.f_vector()

    def over(self, base_simplex: Simplex) -> list[Simplex]:
        """Top simplices emitted over ``base_simplex``."""
        return sorted(s for s, (b, _) in self.top_simplex_labels.items() if b == base_simplex)


def f_vector(T: TotalSpace) -> FVector:
    return T.f_vector()


def _sweep(necklace, succ):
    """Yield ``(bead, state_before, top_simplex)`` around the necklace.

    ``state_before`` maps each color to the current fiber vertex (as bead id).
    """
    # last bead of each color strictly before position 0, cyclically
    last = {b.color: b.id for b in necklace.beads}
    for b in necklace.beads:
        state = {c: succ[c][i] for c, i in last.items()}
        state[b.color] = b.id
        yield b, state, tuple(sorted(set(state.values()) | {succ[b.color][b.id]}))
        last[b.color] = b.id


def _successors(bundle: NecklaceBundle) -> dict[int, dict[int, int]]:
    succ = {}
    for v in bundle.base.vertices:
        ids = bundle.necklaces[(v,)].ids
        succ[v] = {ids[k]: ids[(k + 1) % len(ids)] for k in range(len(ids))}
    return succ


def emitted_simplices(bundle: NecklaceBundle, sigma: Simplex) -> list[tuple[int, tuple[int, ...]]]:
    """``(bead id, vertex tuple)`` for every top simplex over ``sigma``, without
    collision checks; vertices are bead ids and tuples may be degenerate."""
    sigma = tuple(sorted(sigma))
    return [(b.id, top) for b, _, top in _sweep(bundle.necklaces[sigma], _successors(bundle))]


def reconstruct(bundle: NecklaceBundle) -> TotalSpace:
    """Simplicial total space; raises :class:`NonClassicalError` on collisions.

    A collision is a degenerate simplex, two beads emitting the same vertex
    set, or two cursor states over one base simplex spanning the same face.
    """
    B = bundle.base
    succ = _successors(bundle)
    projection_bead = {i: v for v in B.vertices for i in bundle.necklaces[(v,)].ids}
    bead_ids = sorted(projection_bead)
    index = {b: k for k, b in enumerate(bead_ids)}

    labels: dict[Simplex, tuple[Simplex, int]] = {}
    for sigma in B.sorted_simplices:
        necklace = bundle.necklaces[sigma]
        states: dict[frozenset, int] = {}
        for bead, state, top in _sweep(necklace, succ):
            if len(top) != len(sigma) + 1:
                raise NonClassicalError(
                    f"degenerate simplex over {sigma} from bead {bead.id}: fiber over "
                    f"{bead.color} has a single vertex")
            key = frozenset(state.values())
            if key in states:
                raise NonClassicalError(
                    f"beads {states[key]} and {bead.id} over {sigma} pass through the same face")
            states[key] = bead.id
            top_idx = tuple(sorted(index[i] for i in top))
            if top_idx in labels:
                raise NonClassicalError(
                    f"beads {labels[top_idx][1]} and {bead.id} over {sigma} yield the same simplex")
            labels[top_idx] = (sigma, bead.id)
    maximal = [s for s, (sigma, _) in labels.items()]
    E = build_complex(maximal, len(bead_ids))
    projection = {index[b]: v for b, v in projection_bead.items()}
    return TotalSpace(E, projection, labels, tuple(bead_ids))


# --- verification --------------------------------------------------------------

@dataclass
class TriangulationReport:
    checks: dict[str, list[str]]

    @property
    def ok(self) -> bool:
        return all(not v for v in self.checks.values())

    def failures(self) -> list[str]:
        return [f"{k}: {m}" for k, v in self.checks.items() for m in v]


def _image(T: TotalSpace, s: Simplex) -> Simplex:
    return tuple(sorted({T.projection[v] for v in s}))


def _check_projection(T: TotalSpace, B: SimplicialComplex) -> list[str]:
    return [f"{s} maps onto non-simplex {_image(T, s)}"
            for s in T.complex.simplices if _image(T, s) not in B.simplices]


def _check_vertex_fibers(T: TotalSpace, bundle: NecklaceBundle) -> list[str]:
    out = []
    E = T.complex
    for v in bundle.base.vertices:
        verts = {x for x, p in T.projection.items() if p == v}
        edges = [e for e in E.edges if T.projection[e[0]] == v and T.projection[e[1]] == v]
        deg: dict[int, int] = {x: 0 for x in verts}
        for a, b in edges:
            deg[a] += 1
            deg[b] += 1
        n = len(bundle.necklaces[(v,)])
        fiber = build_complex(edges, E.vertex_count)
        if (len(verts) != n or len(edges) != n or any(d != 2 for d in deg.values())
                or len(fiber.components()) != 1):
            out.append(f"fiber over {v} is not a cycle of length {n}")
    return out


def _tops_over(T: TotalSpace, sigma: Simplex) -> list[Simplex]:
    """Simplices of dimension dim(sigma)+1 whose image is sigma, read off the complex."""
    return [s for s in T.complex.simplices_of_dim(len(sigma)) if _image(T, s) == sigma]


def _check_faces(T: TotalSpace, B: SimplicialComplex) -> list[str]:
    out = []
    tops = {sigma: set(_tops_over(T, sigma)) for sigma in B.simplices}
    for sigma in B.simplices:
        emitted = set(T.over(sigma))
        if emitted != tops[sigma]:
            out.append(f"simplices over {sigma} differ from emitted ones")
        for tau in facets(sigma):
            if not tau:
                continue
            from_faces = {f for s in emitted for f in facets(s) if _image(T, f) == tau}
            if from_faces != set(T.over(tau)):
                out.append(f"faces over {tau} inside preimage of {sigma} do not match")
    return out


def extract_necklace(T: TotalSpace, bundle: NecklaceBundle, sigma: Simplex) -> list[int] | None:
    """Bead ids met by the fiber over an interior point of ``sigma``, read off the complex.

    The first step is oriented by the vertex necklace of its doubled color;
    every later step is forced by the shared transversal faces.
    """
    tops = _tops_over(T, sigma)
    if not tops:
        return None
    bead = T.vertex_bead

    def doubled(s):
        by_color: dict[int, list[int]] = {}
        for x in s:
            by_color.setdefault(T.projection[x], []).append(x)
        return next((c, xs) for c, xs in by_color.items() if len(xs) == 2)

    containing: dict[frozenset, list[Simplex]] = {}
    for s in tops:
        _, (x, y) = doubled(s)
        for drop in (x, y):
            containing.setdefault(frozenset(s) - {drop}, []).append(s)
    if any(len(v) != 2 for v in containing.values()):
        return None
    start = tops[0]
    c, (x, y) = doubled(start)
    ids = bundle.necklaces[(c,)].ids
    k = ids.index(bead[x])
    if ids[(k + 1) % len(ids)] != bead[y]:
        x, y = y, x
    seq = []
    s, tail = start, x
    for _ in range(len(tops)):
        seq.append(bead[tail])
        after = frozenset(s) - {tail}
        (s,) = [t for t in containing[after] if t != s]
        _, pair = doubled(s)
        (tail,) = [p for p in pair if p in after]
    return seq if s == start else None


def _check_roundtrip(T: TotalSpace, bundle: NecklaceBundle) -> list[str]:
    out = []
    for sigma in bundle.base.sorted_simplices:
        seq = extract_necklace(T, bundle, sigma)
        want = bundle.necklaces[sigma]
        if seq is None or len(seq) != len(want):
            out.append(f"fiber over {sigma} does not close up")
            continue
        k = want.ids.index(seq[0]) if seq[0] in want.ids else None
        if k is None or list(want.rotate(k).ids) != seq:
            out.append(f"necklace over {sigma} not reproduced: got {seq}")
    return out


def verify_bundle_triangulation(T: TotalSpace, bundle: NecklaceBundle) -> TriangulationReport:
    B = bundle.base
    checks = {
        "projection": _check_projection(T, B),
        "vertex_fibers": _check_vertex_fibers(T, bundle),
        "face_consistency": _check_faces(T, B),
        "necklace_roundtrip": _check_roundtrip(T, bundle),
    }
    if is_closed_orientable_surface(B):
        checks["closed_3_manifold"] = closed_3manifold_problems(T.complex)
    return TriangulationReport(checks)


def classicality_matches(bundle: NecklaceBundle) -> bool:
    """True when reconstruct fails exactly for non-classical bundles."""
    classical = all(check_classical(n) for n in bundle.necklaces.values())
    try:
        reconstruct(bundle)
    except NonClassicalError:
        return not classical
    return classical


def tetrahedra_text(T: TotalSpace) -> str:
    """One maximal simplex per line, vertices separated by spaces."""
    return "".join(" ".join(map(str, s)) + "\n" for s in T.complex.maximal_simplices)
