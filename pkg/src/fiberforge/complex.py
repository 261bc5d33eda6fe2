"""Finite abstract simplicial complexes, example bases and surface checks.

Vertices are dense integers ``0..v-1`` and every simplex is stored as a
sorted tuple, which doubles as its canonical orientation.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations, product
from typing import Iterable, Mapping

from .errors import SurfaceError, ValidationError

Simplex = tuple[int, ...]


class FVector(tuple):
    """Simplex counts per dimension, ``f[k]`` = number of k-simplices."""

    @property
    def euler_characteristic(self) -> int:
        return sum((-1) ** k * n for k, n in enumerate(self))


def _canon(simplex: Iterable[int]) -> Simplex:
    s = tuple(sorted(int(x) for x in simplex))
    if len(set(s)) != len(s):
        raise ValidationError(f"repeated vertex in simplex {tuple(simplex)}")
    if s and s[0] < 0:
        raise ValidationError(f"negative vertex index in {tuple(simplex)}")
    return s


def faces(simplex: Simplex, k: int | None = None) -> list[Simplex]:
    """All nonempty faces of ``simplex`` (of dimension ``k`` if given)."""
    sizes = range(1, len(simplex) + 1) if k is None else [k + 1]
    return [f for n in sizes for f in combinations(simplex, n)]


def facets(simplex: Simplex) -> list[Simplex]:
    """Codimension-one faces; facet ``i`` omits ``simplex[i]``."""
    return [simplex[:i] + simplex[i + 1:] for i in range(len(simplex))]


@dataclass(frozen=True)
class SimplicialComplex:
    vertex_count: int
    simplices: frozenset

    def __post_init__(self):
        for s in self.simplices:
            if any(v >= self.vertex_count for v in s):
                raise ValidationError(f"vertex index out of range in {s}")
            for f in facets(s):
                if f and f not in self.simplices:
                    raise ValidationError(f"face {f} of {s} missing")

    def __contains__(self, simplex) -> bool:
        return tuple(sorted(simplex)) in self.simplices

    def __len__(self) -> int:
        return len(self.simplices)

    @cached_property
    def dimension(self) -> int:
        return max((len(s) for s in self.simplices), default=0) - 1

    @cached_property
    def _by_dim(self) -> dict[int, tuple[Simplex, ...]]:
        out: dict[int, list[Simplex]] = {}
        for s in self.simplices:
            out.setdefault(len(s) - 1, []).append(s)
        return {k: tuple(sorted(v)) for k, v in out.items()}

    def simplices_of_dim(self, k: int) -> tuple[Simplex, ...]:
        return self._by_dim.get(k, ())

    @property
    def vertices(self) -> tuple[int, ...]:
        return tuple(s[0] for s in self.simplices_of_dim(0))

    @property
    def edges(self) -> tuple[Simplex, ...]:
        return self.simplices_of_dim(1)

    @property
    def triangles(self) -> tuple[Simplex, ...]:
        return self.simplices_of_dim(2)

    @cached_property
    def sorted_simplices(self) -> tuple[Simplex, ...]:
        """All simplices ordered by dimension, then lexicographically."""
        return tuple(s for k in range(self.dimension + 1) for s in self.simplices_of_dim(k))

    @cached_property
    def maximal_simplices(self) -> tuple[Simplex, ...]:
        covered = set()
        for s in self.simplices:
            covered.update(facets(s))
        return tuple(s for s in self.sorted_simplices if s not in covered)

    @cached_property
    def cofacets(self) -> dict[Simplex, tuple[Simplex, ...]]:
        """Map each simplex to the simplices having it as a facet."""
        out: dict[Simplex, list[Simplex]] = {s: [] for s in self.simplices}
        for s in self.sorted_simplices:
            if len(s) > 1:
                for f in facets(s):
                    out[f].append(s)
        return {s: tuple(v) for s, v in out.items()}

    def f_vector(self) -> FVector:
        return FVector(len(self.simplices_of_dim(k)) for k in range(self.dimension + 1))

    @property
    def euler_characteristic(self) -> int:
        return self.f_vector().euler_characteristic

    def is_pure(self) -> bool:
        return all(len(s) == self.dimension + 1 for s in self.maximal_simplices)

    def skeleton(self, k: int) -> "SimplicialComplex":
        return SimplicialComplex(
            self.vertex_count, frozenset(s for s in self.simplices if len(s) <= k + 1)
        )

    def link(self, simplex: Iterable[int]) -> "SimplicialComplex":
        """Link of a simplex; vertex labels are kept."""
        sigma = set(simplex)
        out = set()
        for t in self.simplices:
            if sigma <= set(t) and len(t) > len(sigma):
                out.add(tuple(v for v in t if v not in sigma))
        return SimplicialComplex(self.vertex_count, frozenset(out))

    def components(self) -> list[list[int]]:
        """Connected components as sorted vertex lists."""
        adj: dict[int, set[int]] = {v: set() for v in self.vertices}
        for a, b in self.edges:
            adj[a].add(b)
            adj[b].add(a)
        seen: set[int] = set()
        comps = []
        for v in self.vertices:
            if v in seen:
                continue
            comp, stack = [], [v]
            seen.add(v)
            while stack:
                x = stack.pop()
                comp.append(x)
                for y in adj[x]:
                    if y not in seen:
                        seen.add(y)
                        stack.append(y)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) <= 1


def build_complex(maximal_simplices: Iterable[Iterable[int]], vertex_count: int | None = None) -> SimplicialComplex:
    """Downward closure of the given simplices."""
    tops = [_canon(s) for s in maximal_simplices]
    tops = [s for s in tops if s]
    top_index = max((max(s) for s in tops), default=-1)
    if vertex_count is None:
        vertex_count = top_index + 1
    elif vertex_count <= top_index:
        raise ValidationError(f"vertex count {vertex_count} too small for index {top_index}")
    closure: set[Simplex] = set()
    for s in tops:
        if s not in closure:
            closure.update(faces(s))
    return SimplicialComplex(vertex_count, frozenset(closure))


# --- generators ------------------------------------------------------------

def standard_simplex(n: int) -> SimplicialComplex:
    return build_complex([range(n + 1)])


def suspension_ngon(n: int) -> SimplicialComplex:
    if n < 3:
        raise ValidationError(f"n-gon needs n >= 3, got {n}")
    tris = []
    for i in range(n):
        j = (i + 1) % n
        tris += [(i, j, n), (i, j, n + 1)]
    return build_complex(tris)


def stellar_subdivision(complex_: SimplicialComplex, triangles: Iterable[Simplex]) -> SimplicialComplex:
    """Cone each listed maximal triangle off a new center vertex."""
    tops = set(complex_.maximal_simplices)
    nxt = complex_.vertex_count
    for t in triangles:
        t = _canon(t)
        if t not in tops or len(t) != 3:
            raise ValidationError(f"{t} is not a maximal triangle")
        tops.remove(t)
        a, b, c = t
        tops.update([(a, b, nxt), (b, c, nxt), (a, c, nxt)])
        nxt += 1
    return build_complex(sorted(tops), nxt)


def _octahedron() -> SimplicialComplex:
    return build_complex(product((0, 1), (2, 3), (4, 5)))


def _icosahedron() -> SimplicialComplex:
    tris = []
    for i in range(5):
        u, u1 = 1 + i, 1 + (i + 1) % 5
        w, w1 = 6 + i, 6 + (i + 1) % 5
        tris += [(0, u, u1), (u, u1, w), (u1, w, w1), (11, w, w1)]
    return build_complex(tris)


def _subdivided_bipyramid() -> SimplicialComplex:
    bipyramid = suspension_ngon(3)
    return stellar_subdivision(bipyramid, bipyramid.triangles)


PRESETS = (
    "tetrahedron_boundary",
    "octahedron",
    "icosahedron",
    "bipyramid",
    "suspension_ngon",
    "subdivided_bipyramid",
)


def generate(preset: str, n: int | None = None) -> SimplicialComplex:
    """Named example base.  ``bipyramid`` is the suspension of an n-gon (n=3 by default)."""
    if preset == "tetrahedron_boundary":
        return standard_simplex(3).skeleton(2)
    if preset == "octahedron":
        return _octahedron()
    if preset == "icosahedron":
        return _icosahedron()
    if preset == "bipyramid":
        return suspension_ngon(3 if n is None else n)
    if preset == "suspension_ngon":
        if n is None:
            raise ValidationError("suspension_ngon requires n")
        return suspension_ngon(n)
    if preset == "subdivided_bipyramid":
        return _subdivided_bipyramid()
    raise ValidationError(f"unknown preset {preset!r}; choose from {', '.join(PRESETS)}")


def seven_vertex_torus() -> SimplicialComplex:
    return build_complex([(i, (i + 1) % 7, (i + 3) % 7) for i in range(7)]
                         + [(i, (i + 2) % 7, (i + 3) % 7) for i in range(7)])


def six_vertex_rp2() -> SimplicialComplex:
    return build_complex([(0, 1, 2), (0, 2, 3), (0, 3, 4), (0, 4, 5), (0, 5, 1),
                          (1, 2, 4), (2, 3, 5), (3, 4, 1), (4, 5, 2), (5, 1, 3)])


def mobius_band() -> SimplicialComplex:
    return build_complex([(i, (i + 1) % 5, (i + 2) % 5) for i in range(5)])


# --- orientation -----------------------------------------------------------

def orient_pseudomanifold(complex_: SimplicialComplex, dim: int) -> dict[Simplex, int]:
    """Coherent signs (+1 = sorted-tuple orientation) on the top simplices.

    Each component is seeded at its lexicographically least simplex with
    sign +1 and propagated breadth-first across shared facets.
    Raises :class:`SurfaceError` on boundary, branching or non-orientability.
    """
    tops = complex_.simplices_of_dim(dim)
    for f in complex_.simplices_of_dim(dim - 1):
        n = len(complex_.cofacets[f])
        if n == 1:
            raise SurfaceError(f"boundary face {f}: contained in a single {dim}-simplex")
        if n != 2:
            raise SurfaceError(f"non-manifold face {f}: contained in {n} {dim}-simplices")
    signs: dict[Simplex, int] = {}
    for seed in tops:
        if seed in signs:
            continue
        signs[seed] = 1
        queue = deque([seed])
        while queue:
            s = queue.popleft()
            for i, f in enumerate(facets(s)):
                (other,) = [t for t in complex_.cofacets[f] if t != s]
                j = other.index(next(v for v in other if v not in f))
                want = -signs[s] * (-1) ** (i + j)
                if other not in signs:
                    signs[other] = want
                    queue.append(other)
                elif signs[other] != want:
                    raise SurfaceError(f"non-orientable: inconsistent across face {f}")
    return signs


@dataclass(frozen=True)
class SurfaceOrientation:
    """Per-triangle sign: +1 if the sorted tuple is positively oriented."""

    signs: Mapping[Simplex, int]

    def sign(self, triangle: Simplex) -> int:
        return self.signs[triangle]

    def oriented(self, triangle: Simplex) -> Simplex:
        a, b, c = triangle
        return (a, b, c) if self.signs[triangle] > 0 else (a, c, b)

    def edge_sign(self, triangle: Simplex, edge: Simplex) -> int:
        """+1 if the oriented boundary of ``triangle`` runs along ``edge`` from low to high."""
        x, y, z = self.oriented(triangle)
        for p, q in ((x, y), (y, z), (z, x)):
            if {p, q} == set(edge):
                return 1 if p < q else -1
        raise ValidationError(f"{edge} is not an edge of {triangle}")

    def flipped(self) -> "SurfaceOrientation":
        return SurfaceOrientation({t: -s for t, s in self.signs.items()})


def verify_closed_oriented_surface(complex_: SimplicialComplex) -> SurfaceOrientation:
    if complex_.dimension != 2 or not complex_.is_pure():
        raise SurfaceError("not a pure 2-dimensional complex")
    for v in complex_.vertices:
        lk = complex_.link((v,))
        deg = {}
        for a, b in lk.edges:
            deg[a] = deg.get(a, 0) + 1
            deg[b] = deg.get(b, 0) + 1
        if all(d == 2 for d in deg.values()) and not lk.is_connected():
            raise SurfaceError(f"non-manifold vertex {v}: link is not a single cycle")
    return SurfaceOrientation(orient_pseudomanifold(complex_, 2))


def is_closed_orientable_surface(complex_: SimplicialComplex) -> bool:
    try:
        verify_closed_oriented_surface(complex_)
    except SurfaceError:
        return False
    return True


def is_sphere(complex_: SimplicialComplex) -> bool:
    return (is_closed_orientable_surface(complex_) and complex_.is_connected()
            and complex_.euler_characteristic == 2)


def genus(complex_: SimplicialComplex) -> int:
    verify_closed_oriented_surface(complex_)
    return (2 - complex_.euler_characteristic) // 2


def closed_3manifold_problems(complex_: SimplicialComplex) -> list[str]:
    """Combinatorial closed orientable 3-manifold test; empty list means pass."""
    if complex_.dimension != 3 or not complex_.is_pure():
        return ["not a pure 3-dimensional complex"]
    problems = []
    try:
        orient_pseudomanifold(complex_, 3)
    except SurfaceError as exc:
        problems.append(str(exc))
    for e in complex_.edges:
        lk = complex_.link(e)
        if lk.dimension != 1 or not lk.is_connected() or any(
                len(lk.cofacets[(v,)]) != 2 for v in lk.vertices):
            problems.append(f"edge link of {e} is not a cycle")
    for v in complex_.vertices:
        if not is_sphere(complex_.link((v,))):
            problems.append(f"vertex link of {v} is not a 2-sphere")
    return problems
