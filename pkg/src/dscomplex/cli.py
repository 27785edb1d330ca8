"""Command line front end.

Every subcommand reads a complex as ``{"facets": [...]}`` JSON (from
``-i FILE`` or standard input) and writes JSON with sorted keys to standard
output or ``-o FILE``.  Exit codes: 0 success, 1 usage or input error,
2 a law check came back false.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from contextlib import contextmanager
from importlib import resources

from .core import Complex, ComplexError, closure, euler_characteristic, load_complex, skeleton_graph

EXIT_OK, EXIT_USAGE, EXIT_VERIFY = 0, 1, 2


class UsageError(Exception):
    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        raise UsageError("usage", message)


def _budget(args) -> int:
    if getattr(args, "budget", None) is not None:
        return args.budget
    env = os.environ.get("DSCOMPLEX_BUDGET")
    if env:
        try:
            return int(env)
        except ValueError:
            raise UsageError("bad-budget", f"DSCOMPLEX_BUDGET={env!r} is not an integer") from None
    return 20000


def _read_json(path: str | None):
    try:
        if path in (None, "-"):
            return json.load(sys.stdin)
        with open(path) as fh:
            return json.load(fh)
    except json.JSONDecodeError as e:
        raise UsageError("malformed-json", str(e)) from None
    except OSError as e:
        raise UsageError("io", str(e)) from None


def _complex(path: str | None) -> Complex:
    data = _read_json(path)
    try:
        return load_complex(data)
    except ComplexError as e:
        raise UsageError("bad-complex", str(e)) from None


def _cx(G: Complex) -> dict:
    return G.to_json()


@contextmanager
def _timer(store: dict, key: str):
    t = time.perf_counter()
    yield
    store[key] = round(time.perf_counter() - t, 6)


def _frac(x):
    from fractions import Fraction

    if isinstance(x, Fraction):
        return int(x) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    return x


def cmd_new(args):
    try:
        facets = json.loads(args.facets)
        return _cx(closure(facets)), True
    except (json.JSONDecodeError, TypeError) as e:
        raise UsageError("malformed-json", str(e)) from None


def cmd_example(args):
    from .library import example

    try:
        return _cx(example(args.name)), True
    except KeyError as e:
        raise UsageError("unknown-example", str(e.args[0])) from None


def cmd_join(args):
    from .build import join

    return _cx(join(_complex(args.a), _complex(args.b))), True


def cmd_suspend(args):
    from .build import cone, suspension

    G = _complex(args.input)
    return _cx(cone(G) if args.cone else suspension(G)), True


def cmd_product(args):
    from .build import cartesian_product

    try:
        return _cx(cartesian_product(_complex(args.a), _complex(args.b))), True
    except ComplexError as e:
        raise UsageError("bad-complex", str(e)) from None


def _simplex_arg(s: str | None):
    if s is None:
        return None
    try:
        return [int(v) for v in s.split(",")]
    except ValueError:
        raise UsageError("bad-simplex", f"expected comma separated integers, got {s!r}") from None


def cmd_connected_sum(args):
    from .build import connected_sum

    try:
        G = connected_sum(_complex(args.a), _complex(args.b), _simplex_arg(args.x), _simplex_arg(args.y))
    except ComplexError as e:
        raise UsageError("dimension-mismatch" if "dimension" in str(e) else "bad-facet", str(e)) from None
    return _cx(G), True


def cmd_refine(args):
    from .build import edge_refinement

    try:
        return _cx(edge_refinement(_complex(args.input), _simplex_arg(args.edge))), True
    except ComplexError as e:
        raise UsageError("bad-edge", str(e)) from None


def cmd_barycentric(args):
    from .build import barycentric_refinement

    return _cx(barycentric_refinement(_complex(args.input))), True


def cmd_level_set(args):
    from .levelsets import VertexFunction, level_complex, verify_level_theorem

    G = _complex(args.input)
    try:
        raw = json.loads(args.values)
        g = VertexFunction({int(k): int(v) for k, v in raw.items()}, args.k)
        g.check_total(G)
    except (json.JSONDecodeError, AttributeError, ValueError) as e:
        raise UsageError("bad-values", str(e)) from None
    L = level_complex(G, g)
    rep = verify_level_theorem(G, g)
    return {"level_complex": _cx(L), "f": list(L.f_vector), "classification": rep.to_json()}, rep.holds


def _valuation_table(f: tuple[int, ...], q: int) -> dict:
    from .valuations import ds_symmetry_test, f_polynomial, h_vector, x_valuation, y_valuation

    fp = tuple(f) + (0,) * (q + 1 - len(f))
    out = {
        "f": list(f),
        "q": q,
        "euler": sum((-1) ** i * v for i, v in enumerate(f)),
        "f_polynomial": [_frac(c) for c in f_polynomial(f).coefficients],
        "X": {str(k): x_valuation(k, q)(fp) for k in range(q)},
        "Y": {str(k): y_valuation(k, q)(fp) for k in range(q + 1)},
        "Y_vectors": {str(k): list(y_valuation(k, q).coeffs) for k in range(q + 1)},
    }
    if f:
        out["h"] = list(h_vector(f))
        out["ds_symmetric"] = ds_symmetry_test(f)
    return out


def cmd_invariants(args):
    if args.fvector is not None:
        try:
            f = tuple(int(v) for v in args.fvector.split(",") if v.strip())
        except ValueError:
            raise UsageError("bad-fvector", f"cannot parse {args.fvector!r}") from None
        q = len(f) - 1 if args.q is None else args.q
        if q < len(f) - 1:
            raise UsageError("dimension-mismatch", f"--q {q} is below the f-vector length")
        return _valuation_table(f, q), True
    G = _complex(args.input)
    q = G.dim if args.q is None else args.q
    if q < G.dim:
        raise UsageError("dimension-mismatch", f"--q {q} is below the complex dimension {G.dim}")
    out = _valuation_table(G.f_vector, q)
    from .valuations import functional_gauss_bonnet_check

    out["functional_gauss_bonnet"] = functional_gauss_bonnet_check(G)
    return out, out["functional_gauss_bonnet"]


PREDICATES = ("ds-sphere", "ds-manifold", "ds-variety", "manifold", "sphere", "contractible", "boundary")


def cmd_check(args):
    from . import classify as C

    G = _complex(args.input)
    q = G.dim if args.q is None else args.q
    cache = C.ClassificationCache()
    budget = C.Budget(limit=_budget(args))
    p = args.predicate
    out: dict = {"predicate": p, "q": q}
    if p == "ds-sphere":
        out["verdict"] = C.is_ds_sphere(G, q, cache)
    elif p == "ds-manifold":
        out["verdict"] = C.is_ds_manifold(G, q, cache)
    elif p == "ds-variety":
        out["verdict"] = C.is_ds_variety(G, q, cache)
    elif p == "manifold":
        out["verdict"] = C.is_manifold(G, q, cache, budget)
    elif p == "sphere":
        out["verdict"] = C.is_sphere(G, q, cache, budget)
    elif p == "contractible":
        out["verdict"] = C.is_contractible(G, cache, budget)
    else:
        B = C.boundary(G, q, cache)
        out["boundary"] = _cx(B)
        out["verdict"] = C.is_ds_manifold_with_boundary(G, q, cache)
    out["verdict_text"] = {True: "true", False: "false", None: "unknown"}[out["verdict"]]
    out["stats"] = {**C.stats(cache), "budget": budget.limit, "budget_used": budget.used}
    return out, True


def cmd_cohomology(args):
    from .cohomology import betti_vector, exterior_derivative, quadratic_betti, wu_characteristic

    G = _complex(args.input)
    if not G.simplices:
        raise UsageError("void", "cohomology of the void complex is not defined")
    d = exterior_derivative(G)
    b = betti_vector(G)
    chi = euler_characteristic(G)
    out = {"betti": list(b), "euler": chi, "d_squared_zero": d.square_is_zero()}
    ok = out["d_squared_zero"] and sum((-1) ** p * v for p, v in enumerate(b)) == chi
    if args.wu:
        out["wu"] = {str(m): wu_characteristic(G, m) for m in range(1, args.wu + 1)}
    if args.quadratic:
        qb = quadratic_betti(G)
        out["quadratic_betti"] = list(qb)
        out["wu2"] = wu_characteristic(G, 2)
    out["laws_ok"] = ok
    return out, ok


def cmd_connection(args):
    from .connection import green_function, green_star_check, unimodularity_check

    G = _complex(args.input)
    if not G.simplices:
        raise UsageError("void", "connection Laplacian of the void complex is empty")
    rep = unimodularity_check(G)
    out = rep.to_json()
    ok = rep.ok
    if args.green:
        g = green_function(G)
        out["green"] = [[_frac(v) for v in row] for row in g]
        out["green_star"] = green_star_check(G)
        ok = ok and out["green_star"]
    return out, ok


def cmd_coloring(args):
    from .coloring import chromatic_bound_check, dual_graph, dual_regularity_check

    G = _complex(args.input)
    if not G.simplices:
        raise UsageError("void", "coloring of the void complex")
    budget = args.exact_budget if args.exact_budget is not None else _budget(args) * 10
    D = dual_graph(G)
    reg = dual_regularity_check(G)
    rep = chromatic_bound_check(G, budget)
    out = {
        "dual": {"vertices": D.n, "edges": len(D.edges), **reg.to_json()},
        "skeleton": {"vertices": skeleton_graph(G).n, "edges": len(skeleton_graph(G).edges)},
        "chromatic": rep.to_json(),
    }
    ok = (not reg.precondition or reg.ok) and (not rep.precondition or rep.ok)
    return out, ok


def cmd_corpus(args):
    from .corpus import corpus_runner, failures

    reports = corpus_runner(args.seed, args.n, shipped=args.all_laws, timings=args.timings)
    bad = failures(reports)
    for ident, law in bad:
        print(f"law violated: {law} on {ident}", file=sys.stderr)
    out = {"seed": args.seed, "n": args.n, "reports": reports, "all_pass": not bad, "failures": [list(b) for b in bad]}
    return out, not bad


def cmd_fixtures(args):
    from .valuations import y_valuation

    data = json.loads(resources.files("dscomplex").joinpath("fixtures/fvectors.json").read_text())
    rows = []
    ok = True
    for fx in data["fixtures"]:
        y = y_valuation(fx["y_k"], fx["q"])
        val = y(fx["f"])
        good = (val == 0) == fx["expect_zero"]
        ok = ok and good
        rows.append({"name": fx["name"], "y": list(y.coeffs), "dot": val, "expect_zero": fx["expect_zero"], "ok": good})
    return {"fixtures": rows}, ok


def build_parser() -> argparse.ArgumentParser:
    def common(parser, suppress: bool):
        d = (lambda v: argparse.SUPPRESS) if suppress else (lambda v: v)
        parser.add_argument("-o", "--output", default=d(None), help="write JSON here instead of standard output")
        parser.add_argument("--budget", type=int, default=d(None), help="search budget (default: DSCOMPLEX_BUDGET or 20000)")
        parser.add_argument("--timings", action="store_true", default=d(False), help="add wall-clock timings")

    # the shared flags work before or after the subcommand
    shared = _Parser(add_help=False)
    common(shared, True)
    p = _Parser(prog="dscomplex", description=__doc__.splitlines()[0])
    common(p, False)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    _add = sub.add_parser
    sub.add_parser = lambda *a, **kw: _add(*a, parents=[shared], **kw)

    def with_input(sp):
        sp.add_argument("-i", "--input", help="complex JSON file (default: standard input)")
        return sp

    sp = sub.add_parser("new", help="closure of a facet list")
    sp.add_argument("facets", help='JSON list, e.g. "[[1,2,3],[2,3,4]]"')
    sp.set_defaults(fn=cmd_new)

    sp = sub.add_parser("example", help="a named library complex")
    sp.add_argument("name")
    sp.set_defaults(fn=cmd_example)

    for name, fn, text in (("join", cmd_join, "join of two complex files"), ("product", cmd_product, "Cartesian product of two complex files")):
        sp = sub.add_parser(name, help=text)
        sp.add_argument("a")
        sp.add_argument("b")
        sp.set_defaults(fn=fn)

    sp = with_input(sub.add_parser("suspend", help="suspension or cone"))
    sp.add_argument("--cone", action="store_true", help="cone instead of suspension")
    sp.set_defaults(fn=cmd_suspend)

    sp = sub.add_parser("connected-sum", help="remove a facet from each and glue along the boundaries")
    sp.add_argument("a")
    sp.add_argument("b")
    sp.add_argument("--x", help="facet of A, comma separated")
    sp.add_argument("--y", help="facet of B, comma separated")
    sp.set_defaults(fn=cmd_connected_sum)

    sp = with_input(sub.add_parser("refine", help="edge refinement"))
    sp.add_argument("--edge", required=True, help="a,b")
    sp.set_defaults(fn=cmd_refine)

    with_input(sub.add_parser("barycentric", help="barycentric refinement")).set_defaults(fn=cmd_barycentric)

    sp = with_input(sub.add_parser("level-set", help="level set of a vertex function"))
    sp.add_argument("--values", required=True, help='JSON map vertex -> value, e.g. {"0": 1, "1": 0}')
    sp.add_argument("--k", type=int, default=1)
    sp.set_defaults(fn=cmd_level_set)

    sp = with_input(sub.add_parser("invariants", help="f-vector, valuations and h-vector"))
    sp.add_argument("--fvector", help="evaluate on a raw f-vector instead of a complex")
    sp.add_argument("--q", type=int)
    sp.set_defaults(fn=cmd_invariants)

    sp = with_input(sub.add_parser("check", help="decide a classification predicate"))
    sp.add_argument("--predicate", required=True, choices=PREDICATES)
    sp.add_argument("--q", type=int)
    sp.set_defaults(fn=cmd_check)

    sp = with_input(sub.add_parser("cohomology", help="Betti numbers and Wu characteristics"))
    sp.add_argument("--quadratic", action="store_true")
    sp.add_argument("--wu", type=int, metavar="M", help="report w_1..w_M")
    sp.set_defaults(fn=cmd_cohomology)

    sp = with_input(sub.add_parser("connection", help="connection Laplacian determinant and Green function"))
    sp.add_argument("--green", action="store_true")
    sp.set_defaults(fn=cmd_connection)

    sp = with_input(sub.add_parser("coloring", help="dual graph and chromatic bound"))
    sp.add_argument("--exact-budget", type=int)
    sp.set_defaults(fn=cmd_coloring)

    sp = sub.add_parser("corpus", help="universal laws on seeded random complexes")
    sp.add_argument("--all-laws", action="store_true", help="also run the shipped example complexes")
    sp.add_argument("--seed", type=int, default=1)
    sp.add_argument("--n", type=int, default=50)
    sp.set_defaults(fn=cmd_corpus)

    sub.add_parser("fixtures", help="valuations on the bundled f-vector fixtures").set_defaults(fn=cmd_fixtures)
    return p


def _emit(obj, path: str | None) -> None:
    text = json.dumps(obj, sort_keys=True) + "\n"
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def run(argv: list[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        timings: dict = {}
        with _timer(timings, "total"):
            out, ok = args.fn(args)
        if args.timings and isinstance(out, dict):
            out = {**out, "timings": timings}
        _emit(out, args.output)
        return EXIT_OK if ok else EXIT_VERIFY
    except UsageError as e:
        sys.stderr.write(json.dumps({"error": {"code": e.code, "message": str(e)}}, sort_keys=True) + "\n")
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
