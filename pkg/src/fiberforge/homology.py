"""Integer simplicial homology through Smith normal form.

Everything is exact Python integers.  :func:`smith_normal_form` is the dense
algorithm with unimodular transforms; :func:`invariant_factors` first strips
unit pivots from a sparse matrix and hands the remainder to it.
"""

from __future__ import annotations

from dataclasses import dataclass

from .complex import SimplicialComplex, facets

Matrix = list[list[int]]


def identity(n: int) -> Matrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(a: Matrix, b: Matrix) -> Matrix:
    if not a:
        return []
    cols = len(b[0]) if b else 0
    return [[sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(cols)]
            for i in range(len(a))]


def smith_normal_form(m: Matrix) -> tuple[list[int], Matrix, Matrix]:
    """Return ``(d, U, V)`` with ``U m V`` diagonal, diagonal ``d`` (length
    ``min(rows, cols)``), ``d[i] | d[i+1]`` and ``U``, ``V`` unimodular.

    Pivots are chosen by least absolute value.
    """
    a = [list(map(int, row)) for row in m]
    rows = len(a)
    cols = len(a[0]) if rows else 0
    U, V = identity(rows), identity(cols)

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for M in (a, V):
            for row in M:
                row[i], row[j] = row[j], row[i]

    def add_row(dst, src, k):  # row_dst += k * row_src
        for M in (a, U):
            rs, rd = M[src], M[dst]
            for c in range(len(rd)):
                if rs[c]:
                    rd[c] += k * rs[c]

    def add_col(dst, src, k):  # col_dst += k * col_src
        for M in (a, V):
            for row in M:
                if row[src]:
                    row[dst] += k * row[src]

    for t in range(min(rows, cols)):
        while True:
            piv = None
            for i in range(t, rows):
                for j in range(t, cols):
                    if a[i][j] and (piv is None or abs(a[i][j]) < abs(a[piv[0]][piv[1]])):
                        piv = (i, j)
            if piv is None:
                break
            swap_rows(t, piv[0])
            swap_cols(t, piv[1])
            p = a[t][t]
            dirty = False
            for i in range(t + 1, rows):
                if a[i][t]:
                    add_row(i, t, -(a[i][t] // p))
                    dirty |= a[i][t] != 0
            for j in range(t + 1, cols):
                if a[t][j]:
                    add_col(j, t, -(a[t][j] // p))
                    dirty |= a[t][j] != 0
            if dirty:
                continue
            bad = next(((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols)
                        if a[i][j] % p), None)
            if bad is None:
                break
            add_row(t, bad[0], 1)
        if piv is None:
            break
        if a[t][t] < 0:
            for M in (a, U):
                M[t] = [-x for x in M[t]]
    d = [a[i][i] for i in range(min(rows, cols))]
    return d, U, V


def invariant_factors(entries: dict[tuple[int, int], int], rows: int, cols: int) -> list[int]:
    """Nonzero invariant factors of a sparse integer matrix, ascending."""
    by_row: dict[int, dict[int, int]] = {}
    by_col: dict[int, set[int]] = {}
    for (i, j), v in entries.items():
        if v:
            by_row.setdefault(i, {})[j] = v
            by_col.setdefault(j, set()).add(i)
    units = 0
    while True:
        best = None
        for i, row in by_row.items():
            for j, v in row.items():
                if v in (1, -1):
                    cost = (len(row) - 1) * (len(by_col[j]) - 1)
                    if best is None or cost < best[0]:
                        best = (cost, i, j)
                    break
            if best is not None and best[0] == 0:
                break
        if best is None:
            break
        _, pi, pj = best
        prow = by_row.pop(pi)
        pv = prow[pj]
        for i in list(by_col[pj]):
            if i == pi:
                continue
            row = by_row[i]
            k = row[pj] * pv  # pv = +-1, so row -= k * prow clears column pj
            for j, v in prow.items():
                nv = row.get(j, 0) - k * v
                if nv:
                    if j not in row:
                        by_col[j].add(i)
                    row[j] = nv
                elif j in row:
                    del row[j]
                    by_col[j].discard(i)
            if not row:
                del by_row[i]
        for j in prow:
            by_col[j].discard(pi)
        del by_col[pj]
        units += 1
    rest_rows = sorted(by_row)
    rest_cols = sorted({j for row in by_row.values() for j in row})
    dense = [[by_row[i].get(j, 0) for j in rest_cols] for i in rest_rows]
    d = smith_normal_form(dense)[0] if dense else []
    return [1] * units + [x for x in d if x]


def boundary_entries(X: SimplicialComplex, k: int) -> tuple[dict[tuple[int, int], int], int, int]:
    """Sparse boundary map C_k -> C_{k-1}, alternating signs on sorted tuples."""
    lower = {s: i for i, s in enumerate(X.simplices_of_dim(k - 1))}
    upper = X.simplices_of_dim(k)
    entries = {}
    for j, s in enumerate(upper):
        for i, f in enumerate(facets(s)):
            entries[(lower[f], j)] = (-1) ** i
    return entries, len(lower), len(upper)


def boundary_matrix(X: SimplicialComplex, k: int) -> Matrix:
    entries, r, c = boundary_entries(X, k)
    m = [[0] * c for _ in range(r)]
    for (i, j), v in entries.items():
        m[i][j] = v
    return m


@dataclass(frozen=True)
class HomologyGroup:
    betti: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        if any(t <= 1 for t in self.torsion) or any(
                b % a for a, b in zip(self.torsion, self.torsion[1:])):
            raise ValueError(f"bad torsion coefficients {self.torsion}")

    @property
    def is_trivial(self) -> bool:
        return self.betti == 0 and not self.torsion

    def __str__(self) -> str:
        parts = []
        if self.betti:
            parts.append("Z" if self.betti == 1 else f"Z^{self.betti}")
        parts += [f"Z/{t}" for t in self.torsion]
        return " + ".join(parts) or "0"

    def to_json(self) -> dict:
        return {"betti": self.betti, "torsion": list(self.torsion)}


def _boundary_factors(X: SimplicialComplex, k: int) -> list[int]:
    if k <= 0 or k > X.dimension:
        return []
    entries, r, c = boundary_entries(X, k)
    return invariant_factors(entries, r, c)


def homology_all(X: SimplicialComplex) -> list[HomologyGroup]:
    """``[H_0, ..., H_dim]`` with integer coefficients."""
    factors = [_boundary_factors(X, k) for k in range(X.dimension + 2)]
    out = []
    for k in range(X.dimension + 1):
        n = len(X.simplices_of_dim(k))
        betti = n - len(factors[k]) - len(factors[k + 1])
        out.append(HomologyGroup(betti, tuple(t for t in factors[k + 1] if t > 1)))
    return out


def homology(X: SimplicialComplex, k: int) -> HomologyGroup:
    if k < 0 or k > X.dimension:
        raise ValueError(f"degree {k} outside 0..{X.dimension}")
    f_k, f_k1 = _boundary_factors(X, k), _boundary_factors(X, k + 1)
    betti = len(X.simplices_of_dim(k)) - len(f_k) - len(f_k1)
    return HomologyGroup(betti, tuple(t for t in f_k1 if t > 1))


def cohomology(X: SimplicialComplex, k: int) -> HomologyGroup:
    """H^k from the cochain complex: the coboundary C^{k-1} -> C^k is the
    transpose of the boundary, so its cokernel torsion comes from the
    invariant factors of the k-th boundary map."""
    if k < 0 or k > X.dimension:
        raise ValueError(f"degree {k} outside 0..{X.dimension}")
    f_k, f_k1 = _boundary_factors(X, k), _boundary_factors(X, k + 1)
    betti = len(X.simplices_of_dim(k)) - len(f_k) - len(f_k1)
    return HomologyGroup(betti, tuple(t for t in f_k if t > 1))


def h2_has_two_torsion(B: SimplicialComplex) -> bool:
    """Whether H^2(B; Z) has an element of order two."""
    if B.dimension < 2:
        return False
    return any(t % 2 == 0 for t in cohomology(B, 2).torsion)
