"""The red/green coloring game on triangulated 2-spheres.

Start by coloring one or two vertices red.  A move picks an edge with both
endpoints uncolored that spans a triangle with a red vertex, colors the edge
and its endpoints red and the triangle green.  A play is winning when at
least f/4 triangles end up green.

"Winning strategy" is read as an optimization (there is no opponent): the
exhaustive solver finds the maximum achievable number of green faces.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from .complex import Simplex, SimplicialComplex, is_sphere
from .errors import ValidationError

Move = tuple[Simplex, Simplex]  # (edge, witness face)

DEFAULT_VERTEX_BUDGET = 14


@dataclass(frozen=True)
class GameState:
    base: SimplicialComplex = field(repr=False)
    red_vertices: frozenset = frozenset()
    red_edges: frozenset = frozenset()
    green_faces: frozenset = frozenset()
    move_log: tuple = ()

    @classmethod
    def start(cls, base: SimplicialComplex, initial) -> "GameState":
        initial = tuple(sorted(set(initial)))
        if len(initial) not in (1, 2) or not set(initial) <= set(base.vertices):
            raise ValidationError(f"initial pick must be one or two vertices, got {initial}")
        return cls(base, frozenset(initial), move_log=(("start", initial),))

    def play(self, edge: Simplex, face: Simplex) -> "GameState":
        edge, face = tuple(sorted(edge)), tuple(sorted(face))
        if (edge, face) not in legal_moves(self):
            raise ValidationError(f"illegal move: edge {edge} with face {face}")
        return GameState(self.base, self.red_vertices | set(edge), self.red_edges | {edge},
                         self.green_faces | {face}, self.move_log + ((edge, face),))

    @property
    def green(self) -> int:
        return len(self.green_faces)


def legal_moves(state: GameState) -> list[Move]:
    """Edges with both ends uncolored lying in a face whose third vertex is red."""
    red = state.red_vertices
    out = []
    for face in state.base.triangles:
        for x in face:
            if x in red:
                edge = tuple(v for v in face if v != x)
                if not red & set(edge):
                    out.append((edge, face))
    return sorted(out)


@dataclass(frozen=True)
class Strategy:
    initial_vertices: tuple[int, ...]
    moves: tuple[Move, ...]

    def to_json(self) -> dict:
        return {"initial_vertices": list(self.initial_vertices),
                "moves": [{"edge": list(e), "face": list(f)} for e, f in self.moves]}

    @classmethod
    def from_json(cls, data: dict) -> "Strategy":
        return cls(tuple(data["initial_vertices"]),
                   tuple((tuple(m["edge"]), tuple(m["face"])) for m in data["moves"]))


def replay(base: SimplicialComplex, strategy: Strategy) -> GameState:
    state = GameState.start(base, strategy.initial_vertices)
    for edge, face in strategy.moves:
        state = state.play(edge, face)
    return state


def is_winning(base: SimplicialComplex, green: int) -> bool:
    return Fraction(green) >= Fraction(len(base.triangles), 4)


@dataclass(frozen=True)
class GameResult:
    best_green: int
    strategy: Strategy
    winning: bool
    exhaustive: bool

    @property
    def summary(self) -> str:
        return f"best green {self.best_green}, {'winning' if self.winning else 'not winning'}"


def _require_sphere(B: SimplicialComplex) -> None:
    if not is_sphere(B):
        raise ValidationError("the coloring game is played on a triangulated 2-sphere")


def _move_table(B: SimplicialComplex) -> list[tuple[int, int, Move]]:
    """(witness mask, edge mask, move) for every potential move, in sorted order."""
    table = []
    for face in B.triangles:
        for x in face:
            edge = tuple(v for v in face if v != x)
            table.append((1 << x, (1 << edge[0]) | (1 << edge[1]), (edge, face)))
    table.sort(key=lambda t: t[2])
    return table


def _exhaustive(B: SimplicialComplex) -> tuple[int, Strategy]:
    table = _move_table(B)

    @lru_cache(maxsize=None)
    def best(mask: int) -> tuple[int, Move | None]:
        top, arg = 0, None
        for wit, em, move in table:
            if mask & wit and not mask & em:
                g = 1 + best(mask | em)[0]
                if g > top:
                    top, arg = g, move
        return top, arg

    n = len(B.vertices)
    ceiling = (n - 1) // 2
    picks = [(v,) for v in B.vertices] + list(combinations(B.vertices, 2))
    result = None
    for pick in picks:
        mask = sum(1 << v for v in pick)
        g = best(mask)[0]
        if result is None or g > result[0]:
            result = (g, pick)
            if g == ceiling:
                break
    g, pick = result
    mask = sum(1 << v for v in pick)
    moves = []
    while True:
        _, move = best(mask)
        if move is None:
            break
        moves.append(move)
        mask |= (1 << move[0][0]) | (1 << move[0][1])
    return g, Strategy(pick, tuple(moves))


def _greedy(B: SimplicialComplex) -> tuple[int, Strategy]:
    """Start at a maximum-degree vertex and prefer edges of its link."""
    degree = {v: len(B.link((v,)).vertices) for v in B.vertices}
    best = None
    for v in sorted(B.vertices, key=lambda x: (-degree[x], x)):
        if best is not None and degree[v] < degree[best[1].initial_vertices[0]]:
            break
        state = GameState.start(B, (v,))
        while True:
            moves = legal_moves(state)
            if not moves:
                break
            edge, face = min(moves, key=lambda m: (v not in m[1], m))
            state = state.play(edge, face)
        strat = Strategy((v,), tuple(m for m in state.move_log[1:]))
        if best is None or state.green > best[0]:
            best = (state.green, strat)
    return best


def solve(B: SimplicialComplex, exhaustive: bool = True,
          vertex_budget: int = DEFAULT_VERTEX_BUDGET) -> GameResult:
    """Maximum green count (exhaustive) or a greedy lower bound."""
    _require_sphere(B)
    if exhaustive:
        if len(B.vertices) > vertex_budget:
            raise ValidationError(
                f"exhaustive search over {len(B.vertices)} vertices exceeds budget {vertex_budget}")
        green, strat = _exhaustive(B)
    else:
        green, strat = _greedy(B)
    return GameResult(green, strat, is_winning(B, green), exhaustive)


@dataclass(frozen=True)
class Certificate:
    base: SimplicialComplex = field(repr=False)
    strategy: Strategy
    green: int
    strategy_bound: int  # f/2 - green
    euler_bound: int

    @property
    def statement(self) -> str:
        return (f"no circle bundle with |E| > {self.euler_bound} admits a classical "
                f"triangulation over this base")


def euler_bound(B: SimplicialComplex, strategy: Strategy) -> Certificate:
    """Certificate that |E| <= floor(f/4) for every classically triangulable bundle."""
    _require_sphere(B)
    state = replay(B, strategy)
    if not is_winning(B, state.green):
        raise ValidationError(
            f"strategy reaches {state.green} green faces, below f/4 = {Fraction(len(B.triangles), 4)}")
    f = len(B.triangles)
    bound = f // 2 - state.green
    if bound != f // 4:
        raise ValidationError(f"bound {bound} differs from floor(f/4) = {f // 4}")
    return Certificate(B, strategy, state.green, bound, f // 4)


@dataclass
class LemmaReport:
    entries: list[tuple[SimplicialComplex, int, int]]  # (sphere, f, best green)

    @property
    def all_winning(self) -> bool:
        return all(is_winning(s, g) for s, _, g in self.entries)


def verify_lemma_win(max_vertices: int) -> LemmaReport:
    from .spheres import enumerate_spheres
    entries = []
    for S in enumerate_spheres(max_vertices):
        entries.append((S, len(S.triangles), solve(S, exhaustive=True).best_green))
    return LemmaReport(entries)
