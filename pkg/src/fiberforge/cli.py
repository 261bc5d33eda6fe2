"""``fiberforge`` command line.

Every verb reads JSON (from a file, a preset name or stdin) and writes JSON
(to ``-o`` or stdout), so verbs can be chained with pipes::

    fiberforge gen --preset tetrahedron_boundary | fiberforge build --euler 1 \\
        | fiberforge total-space --check

Exit status is 0 on success, 2 on invalid input and 3 on a mathematical
obstruction.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import io
from .bundle import NecklaceBundle, build_general, build_with_euler, trivial_bundle, \
    verify_consistency
from .complex import PRESETS, SimplicialComplex, generate, is_closed_orientable_surface, \
    verify_closed_oriented_surface
from .errors import FiberforgeError, ObstructionError, ValidationError
from .game import euler_bound, solve
from .homology import homology, homology_all
from .lcf import evaluate_lcf
from .spheres import enumerate_spheres
from .total_space import TotalSpace, reconstruct, verify_bundle_triangulation

# FIBERFORGE_SEED is accepted in the environment but unused: every algorithm is deterministic.


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ValidationError(f"{self.prog}: {message}")


# --- input/output ----------------------------------------------------------------

def _read_json(source: str | None, what: str):
    try:
        if source in (None, "-"):
            text = sys.stdin.read()
        else:
            text = Path(source).read_text()
    except OSError as exc:
        raise ValidationError(f"cannot read {what}: {exc}") from None
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ValidationError(f"malformed JSON for {what}: {exc}") from None


def _load_complex(source: str | None) -> SimplicialComplex:
    if source in PRESETS and not Path(source).exists():
        return generate(source)
    return io.complex_from_json(_read_json(source, "complex"))


def _load_bundle(source: str | None, check: bool = True) -> NecklaceBundle:
    bundle = io.bundle_from_json(_read_json(source, "bundle"))
    if check:
        bad = verify_consistency(bundle)
        if bad:
            raise ValidationError(f"inconsistent bundle: {bad[0].kind} at {bad[0].simplex}: "
                                  f"{bad[0].detail} ({len(bad)} violation(s))")
    return bundle


def _emit(data, out: str | None) -> None:
    text = io.dumps(data)
    if out in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


# --- verbs ---------------------------------------------------------------------------

def _gen(args) -> int:
    _emit(io.complex_to_json(generate(args.preset, args.n)), args.output)
    return 0


def _build(args) -> int:
    _emit(io.bundle_to_json(build_with_euler(_load_complex(args.base), args.euler)), args.output)
    return 0


def _trivial(args) -> int:
    _emit(io.bundle_to_json(trivial_bundle(_load_complex(args.base))), args.output)
    return 0


def _general(args) -> int:
    B = _load_complex(args.base)
    a = io.cochain_from_json(_read_json(args.orientation, "orientation cochain"), B)
    _emit(io.bundle_to_json(build_general(B, a)), args.output)
    return 0


def _euler(args) -> int:
    bundle = _load_bundle(args.bundle)
    orientation = None
    if is_closed_orientable_surface(bundle.base):
        orientation = verify_closed_oriented_surface(bundle.base)
    _emit(io.lcf_to_json(evaluate_lcf(bundle, orientation)), None)
    return 0


def _summary(T: TotalSpace) -> str:
    f = T.f_vector()
    top = {3: "tetrahedra", 2: "triangles", 1: "edges"}.get(len(f) - 1, f"{len(f) - 1}-simplices")
    h1 = homology(T.complex, 1) if T.complex.dimension >= 1 else None
    h1_text = "H1 trivial" if h1 is None or h1.is_trivial else f"H1 = {h1}"
    return f"{f[0]} vertices, {f[-1]} {top}, {h1_text}"


def _total_space(args) -> int:
    bundle = _load_bundle(args.bundle)
    T = reconstruct(bundle)
    if args.output is not None or not args.check:
        _emit(io.total_space_to_json(T), args.output)
    if not args.check:
        return 0
    report = verify_bundle_triangulation(T, bundle)
    if not report.ok:
        raise ValidationError("total space check failed: " + "; ".join(report.failures()))
    print(_summary(T))
    return 0


def _homology(args) -> int:
    X = _load_complex(args.complex)
    if args.dim is None:
        data = [g.to_json() for g in homology_all(X)]
    else:
        try:
            data = homology(X, args.dim).to_json()
        except ValueError as exc:
            raise ValidationError(str(exc)) from None
    _emit(data, None)
    return 0


def _game(args) -> int:
    B = _load_complex(args.base)
    result = solve(B, exhaustive=args.exhaustive)
    data = io.game_to_json(result)
    if args.certify:
        data["certificate"] = io.certificate_to_json(euler_bound(B, result.strategy))
    _emit(data, None)
    return 0


def _verify(args) -> int:
    bundle = _load_bundle(args.bundle, check=False)
    violations = [f"{v.kind} at {v.simplex}: {v.detail}" for v in verify_consistency(bundle)]
    bad = [io.key(s) for s in bundle.non_classical()] if not violations else []
    data = {"consistent": not violations, "violations": violations,
            "classical": not violations and not bad, "non_classical": bad}
    if not violations and not bad:
        report = verify_bundle_triangulation(reconstruct(bundle), bundle)
        data["triangulation"] = report.checks
        data["ok"] = report.ok
    else:
        data["ok"] = False
    _emit(data, None)
    return 0 if data["ok"] else 2


def _enumerate(args) -> int:
    spheres = enumerate_spheres(args.max_vertices)
    out = Path(args.output)
    out.mkdir(parents=True, exist_ok=True)
    counts: dict[int, int] = {}
    for S in spheres:
        v = len(S.vertices)
        counts[v] = counts.get(v, 0) + 1
        (out / f"sphere_v{v:02d}_{counts[v]:03d}.json").write_text(io.dumps(io.complex_to_json(S)))
    _emit({"total": len(spheres), "by_vertices": {str(k): n for k, n in sorted(counts.items())}},
          None)
    return 0


# --- entry point ------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="fiberforge", description="Triangulated circle bundles over surfaces.")
    p.add_argument("--json-errors", action="store_true", help="report errors as JSON on stderr")
    sub = p.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    g = sub.add_parser("gen", help="generate a preset base")
    g.add_argument("--preset", required=True, choices=PRESETS)
    g.add_argument("-n", type=int)
    g.add_argument("-o", "--output")
    g.set_defaults(func=_gen)

    b = sub.add_parser("build", help="bundle over a surface with a given Euler number")
    b.add_argument("--base", help="complex JSON file or preset name (stdin if omitted)")
    b.add_argument("--euler", type=int, required=True)
    b.add_argument("-o", "--output")
    b.set_defaults(func=_build)

    t = sub.add_parser("trivial", help="trivial bundle B x S^1")
    t.add_argument("--base")
    t.add_argument("-o", "--output")
    t.set_defaults(func=_trivial)

    gl = sub.add_parser("general", help="bundle from an orientation cocycle")
    gl.add_argument("--base")
    gl.add_argument("--orientation", required=True)
    gl.add_argument("-o", "--output")
    gl.set_defaults(func=_general)

    e = sub.add_parser("euler", help="local formula report")
    e.add_argument("--bundle")
    e.set_defaults(func=_euler)

    ts = sub.add_parser("total-space", help="reconstruct the total space")
    ts.add_argument("--bundle")
    ts.add_argument("-o", "--output")
    ts.add_argument("--check", action="store_true")
    ts.set_defaults(func=_total_space)

    h = sub.add_parser("homology", help="integer homology of a complex")
    h.add_argument("--complex")
    h.add_argument("--dim", type=int)
    h.set_defaults(func=_homology)

    gm = sub.add_parser("game", help="coloring game on a sphere")
    gm.add_argument("--base")
    gm.add_argument("--exhaustive", action="store_true")
    gm.add_argument("--certify", action="store_true")
    gm.set_defaults(func=_game)

    v = sub.add_parser("verify", help="check a bundle end to end")
    v.add_argument("--bundle")
    v.set_defaults(func=_verify)

    en = sub.add_parser("enumerate-spheres", help="write all small triangulated spheres")
    en.add_argument("--max-vertices", type=int, required=True)
    en.add_argument("-o", "--output", required=True)
    en.set_defaults(func=_enumerate)
    return p


def _report(exc: FiberforgeError, status: int, as_json: bool) -> None:
    if as_json:
        payload = {"error": type(exc).__name__, "message": str(exc), "exit_status": status}
        if isinstance(exc, ObstructionError) and exc.simplices:
            payload["simplices"] = [list(s) for s in exc.simplices]
        sys.stderr.write(json.dumps(payload) + "\n")
    else:
        sys.stderr.write(f"error: {exc}\n")


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    as_json = "--json-errors" in argv
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except ObstructionError as exc:
        _report(exc, 3, as_json)
        return 3
    except ValidationError as exc:
        _report(exc, 2, as_json)
        return 2


if __name__ == "__main__":
    sys.exit(main())
