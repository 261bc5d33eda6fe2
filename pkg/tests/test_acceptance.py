"""Acceptance suite: one group of tests per criterion, summarized by conftest."""

import time
from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from fiberforge.bundle import NecklaceBundle, build_with_euler, extend_to_skeleton, \
    small_bundle_from_orientation, small_skeleton_bundle, trivial_bundle
from fiberforge.cochains import Cochain, apply_F, choose_target_cochain, coboundary, g_of_a, \
    orientation_cochain, solve_orientation_for_target
from fiberforge.complex import generate, standard_simplex, suspension_ngon, \
    verify_closed_oriented_surface
from fiberforge.errors import NonClassicalError, ObstructionError
from fiberforge.game import solve, verify_lemma_win
from fiberforge.homology import homology, homology_all
from fiberforge.lcf import euler_number, evaluate_lcf, lcf_value, triple_counts
from fiberforge.necklace import Necklace, check_classical, check_classical_faces, double_bead, \
    restrict
from fiberforge.spheres import enumerate_spheres
from fiberforge.total_space import classicality_matches, extract_necklace, reconstruct, \
    verify_bundle_triangulation

from helpers import necklaces, single_simplex_bundle, surfaces

PROPERTY = settings(max_examples=500, deadline=None)


def criterion(number, title):
    return pytest.mark.criterion(number, title)


# --- 1 ------------------------------------------------------------------------

@criterion(1, "Hopf fixture")
def test_hopf_fixture():
    start = time.perf_counter()
    B = generate("tetrahedron_boundary")
    bundle = build_with_euler(B, 1)
    T = reconstruct(bundle)
    res = evaluate_lcf(bundle, verify_closed_oriented_surface(B))
    H = homology_all(T.complex)
    elapsed = time.perf_counter() - start
    assert (T.f_vector()[0], T.f_vector()[3]) == (12, 36)
    assert res.cochain.total() == 1 and isinstance(res.cochain.total(), (int, Fraction))
    assert [str(g) for g in H[1:]] == ["0", "0", "Z"]
    assert elapsed < 1.0, elapsed


# --- 2 and 3 ------------------------------------------------------------------

def _bases():
    yield "octahedron", generate("octahedron")
    yield "icosahedron", generate("icosahedron")
    for n in range(3, 9):
        yield f"suspension_{n}", suspension_ngon(n)


@pytest.fixture(scope="module")
def built():
    start = time.perf_counter()
    rows = []
    for name, B in _bases():
        f = len(B.triangles)
        o = verify_closed_oriented_surface(B)
        for e in range(-(f // 4), f // 4 + 1):
            bundle = build_with_euler(B, e)
            rows.append((name, B, e, bundle, reconstruct(bundle), evaluate_lcf(bundle, o)))
    return rows, time.perf_counter() - start


@criterion(2, "vertex and tetrahedron counts")
def test_theorem_counts(built):
    rows, elapsed = built
    assert len(rows) == 52
    for name, B, e, bundle, T, res in rows:
        assert bundle.is_classical(), (name, e)
        fv = T.f_vector()
        assert fv[0] == 3 * len(B.vertices), (name, e)
        assert fv[3] == 9 * len(B.triangles), (name, e)
        assert res.cochain.total() == e, (name, e)
    assert elapsed < 10.0, elapsed


@criterion(3, "Euler number oracle agreement")
def test_euler_number_matches_homology(built):
    rows, _ = built
    for name, _, e, _, T, _ in rows:
        H1 = homology(T.complex, 1)
        if e == 0:
            assert (H1.betti, H1.torsion) == (1, ()), (name, e)
        else:
            want = (abs(e),) if abs(e) > 1 else ()
            assert (H1.betti, H1.torsion) == (0, want), (name, e)


# --- 4 ------------------------------------------------------------------------

@criterion(4, "twelve-triangle spheres with Euler number 3")
def test_twelve_triangle_spheres():
    twelve = [S for S in enumerate_spheres(8) if len(S.triangles) == 12]
    assert len(twelve) == 14
    for S in twelve:
        fv = reconstruct(build_with_euler(S, 3)).f_vector()
        assert (fv[0], fv[3]) == (6 + 6 * 3, 36 * 3)


# --- 5 ------------------------------------------------------------------------

@criterion(5, "obstruction behavior")
def test_bound_error_over_tetrahedron():
    with pytest.raises(ObstructionError, match=r"f\(B\)=4 < 4\|E\|=8"):
        build_with_euler(generate("tetrahedron_boundary"), 2)


@criterion(5, "obstruction behavior")
def test_hopf_obstruction_on_a_tetrahedron():
    X = standard_simplex(3)
    found = 0
    for bits in range(64):
        a = orientation_cochain(X, {e: (1 if bits >> i & 1 else -1)
                                    for i, e in enumerate(X.edges)})
        F = apply_F(coboundary(a))
        boundary = [F[(1, 2, 3)], -F[(0, 2, 3)], F[(0, 1, 3)], -F[(0, 1, 2)]]
        if all(c == Fraction(1, 4) for c in boundary):
            found += 1
            with pytest.raises(ObstructionError, match="Hopf obstruction"):
                extend_to_skeleton(small_skeleton_bundle(X, a), X)
    assert found == 8


# --- 6 ------------------------------------------------------------------------

@criterion(6, "coloring game")
def test_game_suite():
    start = time.perf_counter()
    report = verify_lemma_win(8)
    best = solve(generate("subdivided_bipyramid"))
    elapsed = time.perf_counter() - start
    assert len(report.entries) == 1 + 1 + 2 + 5 + 14
    assert report.all_winning
    assert best.best_green == 4 and 4 * best.best_green < 18
    assert not best.winning
    assert elapsed < 60.0, elapsed


# --- 7 ------------------------------------------------------------------------

@criterion(7, "property suites")
@PROPERTY
@given(necklaces(colors=(0, 1, 2, 3), framed=True), st.data())
def test_restriction_is_functorial(n, data):
    sigma = (0, 1, 2, 3)
    k = data.draw(st.integers(1, 3))
    tau = data.draw(st.sampled_from(list(combinations(sigma, k))))
    rho = data.draw(st.sampled_from([r for j in range(1, k + 1) for r in combinations(tau, j)]))
    assert restrict(restrict(n, tau), rho) == restrict(n, rho)
    assert restrict(n, sigma) == n


@criterion(7, "property suites")
@PROPERTY
@given(surfaces, st.randoms(use_true_random=False))
def test_dd_is_zero_on_surfaces(X, rng):
    c = Cochain.from_values(X, 0, {v: rng.randint(-5, 5) for v in X.simplices_of_dim(0)})
    assert coboundary(coboundary(c)).value_set() == {0}


@criterion(7, "property suites")
@PROPERTY
@given(st.integers(2, 5), st.data())
def test_dd_is_zero_on_simplices(n, data):
    k = data.draw(st.integers(0, n - 2))
    rng = data.draw(st.randoms(use_true_random=False))
    X = standard_simplex(n)
    c = Cochain.from_values(X, k, {s: rng.randint(-3, 3) for s in X.simplices_of_dim(k)})
    assert coboundary(coboundary(c)).value_set() == {0}


@criterion(7, "property suites")
@PROPERTY
@given(surfaces, st.randoms(use_true_random=False))
def test_G_a_values(X, rng):
    a = orientation_cochain(X, {e: rng.choice((1, -1)) for e in X.edges})
    assert coboundary(a).value_set() <= {-3, -1, 1, 3}
    assert g_of_a(a).value_set() <= {-2, -1, 1, 2}
    assert g_of_a(a, verify_closed_oriented_surface(X)).value_set() <= {-2, -1, 1, 2}


@criterion(7, "property suites")
@PROPERTY
@given(necklaces(max_per_color=5))
def test_lcf_bound_and_strictness(n):
    v = lcf_value(n)
    c = triple_counts(n)
    assert c.positive + c.negative == c.total
    assert abs(v) <= Fraction(1, 2)
    if check_classical_faces(n):
        assert abs(v) < Fraction(1, 2)


@criterion(7, "property suites")
@PROPERTY
@given(surfaces, st.data())
def test_doubling_keeps_euler_number(X, data):
    o = verify_closed_oriented_surface(X)
    f = len(X.triangles)
    e = data.draw(st.integers(-(f // 4), f // 4))
    a = solve_orientation_for_target(X, o, choose_target_cochain(X, o, e))
    small = small_bundle_from_orientation(X, a, o)
    before = evaluate_lcf(small, o).cochain
    v = data.draw(st.sampled_from(X.vertices))
    bead = data.draw(st.sampled_from(small.necklaces[(v,)].ids))
    doubled = NecklaceBundle(X, double_bead(small.necklaces, v, bead))
    after = evaluate_lcf(doubled, o).cochain
    assert after.total() == before.total() == e == euler_number(doubled)
    for t in X.triangles:
        if v not in t:
            assert after.values[t] == before.values[t]


classical_necklaces = st.integers(1, 3).flatmap(
    lambda k: necklaces(colors=tuple(range(k + 1)), min_per_color=3, max_per_color=5))


@criterion(7, "property suites")
@PROPERTY
@given(classical_necklaces)
def test_face_consistency_and_round_trip(n):
    bundle = single_simplex_bundle(n)
    assume(bundle.is_classical())
    T = reconstruct(bundle)
    report = verify_bundle_triangulation(T, bundle)
    assert report.ok, report.failures()
    for s in bundle.base.sorted_simplices:
        want = bundle.necklaces[s]
        by_id = {b.id: b for b in want.beads}
        seq = extract_necklace(T, bundle, s)
        assert want.same_cycle(Necklace(tuple(by_id[i] for i in seq), s, want.bold))


@criterion(7, "property suites")
@PROPERTY
@given(st.integers(1, 3).flatmap(
    lambda k: necklaces(colors=tuple(range(k + 1)), min_per_color=1, max_per_color=4)))
def test_collision_iff_not_classical(n):
    bundle = single_simplex_bundle(n)
    classical = all(check_classical(m) for m in bundle.necklaces.values())
    assert classicality_matches(bundle)
    try:
        reconstruct(bundle)
        collided = False
    except NonClassicalError:
        collided = True
    assert collided == (not classical)


# --- 8 ------------------------------------------------------------------------

@criterion(8, "trivial bundle homology")
def test_trivial_bundle_homology():
    T = reconstruct(trivial_bundle(generate("octahedron")))
    assert [str(g) for g in homology_all(T.complex)] == ["Z", "Z", "Z", "Z"]
