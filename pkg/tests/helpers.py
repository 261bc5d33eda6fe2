"""Shared generators for the property suites."""

from __future__ import annotations

import random

from hypothesis import strategies as st

from fiberforge.complex import SimplicialComplex, build_complex, generate, seven_vertex_torus, \
    stellar_subdivision
from fiberforge.necklace import Bead, Necklace

SEED_SURFACES = {
    "tetrahedron": lambda: generate("tetrahedron_boundary"),
    "octahedron": lambda: generate("octahedron"),
    "icosahedron": lambda: generate("icosahedron"),
    "torus": seven_vertex_torus,
}


def flip_edge(X: SimplicialComplex, edge) -> SimplicialComplex | None:
    """Replace the two triangles at ``edge`` by the other diagonal, if that stays simplicial."""
    a, b = edge
    t1, t2 = X.cofacets[tuple(edge)]
    c = next(v for v in t1 if v not in edge)
    d = next(v for v in t2 if v not in edge)
    if tuple(sorted((c, d))) in X.simplices:
        return None
    tris = [t for t in X.triangles if t not in (t1, t2)] + [(a, c, d), (b, c, d)]
    return build_complex(tris, X.vertex_count)


def random_surface(rng: random.Random, moves: int = 4) -> SimplicialComplex:
    X = SEED_SURFACES[rng.choice(sorted(SEED_SURFACES))]()
    for _ in range(moves):
        if rng.random() < 0.5:
            X = stellar_subdivision(X, [rng.choice(X.triangles)])
        else:
            Y = flip_edge(X, rng.choice(X.edges))
            X = Y if Y is not None else X
    return X


surfaces = st.builds(random_surface, st.randoms(use_true_random=False),
                     st.integers(min_value=0, max_value=5))


@st.composite
def necklaces(draw, colors=(0, 1, 2), min_per_color=1, max_per_color=4, framed=False):
    """Random necklace on ``colors`` with distinct ids and a random cyclic order."""
    counts = [draw(st.integers(min_per_color, max_per_color)) for _ in colors]
    beads = []
    for c, n in zip(colors, counts):
        beads += [c] * n
    order = draw(st.permutations(beads))
    ids = list(range(len(order)))
    shuffled = draw(st.permutations(ids))
    neck = tuple(Bead(i, c) for i, c in zip(shuffled, order))
    bold = frozenset()
    if framed:
        bold = frozenset(draw(st.sampled_from([b.id for b in neck if b.color == c])) for c in colors)
    return Necklace(neck, tuple(sorted(colors)), bold)


def single_simplex_bundle(necklace: Necklace):
    """Bundle over the full simplex on the necklace's carrier, by restriction."""
    from fiberforge.bundle import NecklaceBundle
    from fiberforge.necklace import restrict
    base = build_complex([necklace.carrier])
    return NecklaceBundle(base, {s: restrict(necklace, s) for s in base.sorted_simplices})
