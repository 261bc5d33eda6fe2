"""Enumeration of triangulated 2-spheres up to isomorphism.

Candidate triangle sets are grown by backtracking: the least edge of degree
one is always closed next, and an unused vertex may only enter as the
smallest unused label.  Completed candidates are filtered (closed surface,
single-cycle links, Euler characteristic 2, connected) and deduplicated by
a canonical labelling.
"""

from __future__ import annotations

from .complex import (
    SimplicialComplex,
    Simplex,
    build_complex,
    is_sphere,
    verify_closed_oriented_surface,
)
from .errors import ValidationError

MAX_ENUMERATION_VERTICES = 8


def _rotation_system(complex_: SimplicialComplex) -> dict[int, dict[int, int]]:
    """For each vertex, the counterclockwise successor map on its neighbours."""
    orientation = verify_closed_oriented_surface(complex_)
    rot: dict[int, dict[int, int]] = {v: {} for v in complex_.vertices}
    for t in complex_.triangles:
        x, y, z = orientation.oriented(t)
        rot[x][y] = z
        rot[y][z] = x
        rot[z][x] = y
    return rot


def _code(triangles, rot, start: int, ref: int, mirror: bool) -> tuple:
    labels = {start: 0}
    order = [start]
    parent = {start: ref}
    i = 0
    while i < len(order):
        x = order[i]
        succ = rot[x]
        if mirror:
            succ = {b: a for a, b in succ.items()}
        y = parent[x]
        for _ in range(len(succ)):
            if y not in labels:
                labels[y] = len(order)
                order.append(y)
                parent[y] = x
            y = succ[y]
        i += 1
    return tuple(sorted(tuple(sorted(labels[v] for v in t)) for t in triangles))


def canonical_form(complex_: SimplicialComplex) -> tuple[tuple[int, ...], ...]:
    """Isomorphism invariant of a connected closed orientable surface.

    The minimum, over every directed edge and both orientations, of the
    sorted triangle list under breadth-first relabelling.  Two surfaces are
    isomorphic iff their canonical forms are equal.
    """
    rot = _rotation_system(complex_)
    tris = complex_.triangles
    best = None
    for u, v in complex_.edges:
        for start, ref in ((u, v), (v, u)):
            for mirror in (False, True):
                code = _code(tris, rot, start, ref, mirror)
                if best is None or code < best:
                    best = code
    return best


def _link_ok(tris_at: list[Simplex], v: int) -> bool:
    """Partial link of ``v`` must be a union of paths, or one closed cycle."""
    adj: dict[int, list[int]] = {}
    for t in tris_at:
        a, b = [x for x in t if x != v]
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)
    if any(len(n) > 2 for n in adj.values()):
        return False
    if all(len(n) == 2 for n in adj.values()):
        return True  # cycles only; connectivity checked on completion
    # a cycle may not coexist with open paths
    seen: set[int] = set()
    for s in adj:
        if s in seen:
            continue
        stack, comp = [s], []
        seen.add(s)
        while stack:
            x = stack.pop()
            comp.append(x)
            for y in adj[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        if all(len(adj[x]) == 2 for x in comp):
            return False
    return True


def _candidates(max_vertices: int):
    """Yield triangle lists of closed pseudo-surfaces grown from (0, 1, 2)."""
    max_tris = 2 * max_vertices - 4
    tris: list[Simplex] = [(0, 1, 2)]
    present = {(0, 1, 2)}
    deg = {(0, 1): 1, (0, 2): 1, (1, 2): 1}
    at: dict[int, list[Simplex]] = {0: [(0, 1, 2)], 1: [(0, 1, 2)], 2: [(0, 1, 2)]}
    used = [3]

    def rec():
        open_edges = [e for e, d in deg.items() if d == 1]
        if not open_edges:
            yield list(tris)
            return
        if len(tris) >= max_tris:
            return
        u, w = min(open_edges)
        thirds = list(range(used[0]))
        if used[0] < max_vertices:
            thirds.append(used[0])
        for x in thirds:
            if x in (u, w):
                continue
            t = tuple(sorted((u, w, x)))
            e1, e2 = tuple(sorted((u, x))), tuple(sorted((w, x)))
            if t in present or deg.get(e1, 0) >= 2 or deg.get(e2, 0) >= 2:
                continue
            fresh = x == used[0]
            tris.append(t)
            present.add(t)
            for e in ((u, w), e1, e2):
                deg[e] = deg.get(e, 0) + 1
            for v in t:
                at.setdefault(v, []).append(t)
            if fresh:
                used[0] += 1
            if all(_link_ok(at[v], v) for v in t):
                yield from rec()
            if fresh:
                used[0] -= 1
            for v in t:
                at[v].pop()
            for e in ((u, w), e1, e2):
                deg[e] -= 1
                if deg[e] == 0:
                    del deg[e]
            present.discard(t)
            tris.pop()

    yield from rec()


def enumerate_spheres(max_vertices: int) -> list[SimplicialComplex]:
    """One representative per isomorphism class of triangulated 2-spheres
    with at most ``max_vertices`` vertices, ordered by vertex count and then
    by canonical form."""
    if max_vertices > MAX_ENUMERATION_VERTICES:
        raise ValidationError(
            f"max_vertices={max_vertices} exceeds the limit {MAX_ENUMERATION_VERTICES}")
    if max_vertices < 4:
        return []
    found: dict[tuple, SimplicialComplex] = {}
    for tris in _candidates(max_vertices):
        X = build_complex(tris)
        if not is_sphere(X):
            continue
        code = canonical_form(X)
        if code not in found:
            found[code] = build_complex(code)
    return [found[c] for c in sorted(found, key=lambda c: (max(max(t) for t in c), c))]
