"""Command-line front end: ``treehopf <command> ...``."""

from __future__ import annotations

import argparse
import json
import sys
from typing import Any, Sequence

from .algebra import Element, render_combination, render_scalar
from .forest import (
    CAP_ENV,
    DEFAULT_CAP,
    DEFAULT_DECOR,
    Forest,
    ParseError,
    ResourceCapError,
    compare_forests,
    enumerate_forests,
    enumerate_trees,
    forest_key,
    infer_decor,
    mirror,
    parse_forest,
    parse_tree,
    render_forest,
    render_tree,
)

EXIT_OK, EXIT_USAGE, EXIT_CAP, EXIT_DISAGREE = 0, 1, 2, 3

EPILOG = f"""\
exit codes: 0 success; 1 parse or usage error; 2 resource cap exceeded;
3 cross-validation disagreement or invariant failure.

environment: {CAP_ENV} caps the number of items (forests, cuts, matrix
entries, ...) a single computation may enumerate (default {DEFAULT_CAP}).
"""


class UsageError(Exception):
    pass


class Disagreement(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(f"{self.prog}: {message}")


class Output:
    def __init__(self, fmt: str, decor: tuple[str, ...] | None):
        self.fmt = fmt
        self.decor = decor
        self.lines: list[str] = []

    def text(self, line: str) -> None:
        self.lines.append(line)

    def emit(self, text: str | list[str], data: Any) -> None:
        if self.fmt == "json":
            self.lines.append(json.dumps(data, ensure_ascii=False, indent=2))
        elif isinstance(text, list):
            self.lines.extend(text)
        else:
            self.lines.append(text)


def _decor_list(text: str | None) -> tuple[str, ...] | None:
    if text is None:
        return None
    tokens = tuple(t.strip() for t in text.split(",") if t.strip())
    if not tokens or len(set(tokens)) != len(tokens):
        raise UsageError("decoration tokens must be non-empty and unique")
    return tokens


def _forest(text: str, out: Output) -> Forest:
    return parse_forest(text, out.decor)


def _ebasis_json(coeffs: dict, render) -> dict:
    return {
        "basis": "e",
        "terms": [{"coeff": render_scalar(c), "forest": render(k)} for k, c in coeffs],
    }


def _matrix_lines(basis: list[Forest], m: list[list[int]]) -> list[str]:
    width = max(len(str(x)) for row in m for x in row)
    lines = [f"# {i + 1}: {render_forest(f)}" for i, f in enumerate(basis)]
    lines.extend(" ".join(str(x).rjust(width) for x in row) for row in m)
    return lines


# -- commands -------------------------------------------------------------------------


def cmd_enum(args, out: Output) -> int:
    decor = out.decor or DEFAULT_DECOR
    if args.kind == "trees":
        items = [render_tree(t) for t in enumerate_trees(args.n, decor)]
    else:
        items = [render_forest(f) for f in enumerate_forests(args.n, decor)]
    out.emit(items, items)
    return EXIT_OK


def cmd_coproduct(args, out: Output) -> int:
    from .hopf import coproduct_forest

    t = coproduct_forest(_forest(args.forest, out))
    out.emit(t.render(out.decor), t.to_json(out.decor))
    return EXIT_OK


def cmd_coproduct_fr(args, out: Output) -> int:
    from .frabetti import coproduct_fr_cuts, coproduct_fr_recursive

    f = _forest(args.forest, out)
    t = coproduct_fr_cuts(f)
    if t != coproduct_fr_recursive(Element.of(f)):
        raise Disagreement("cut enumeration and recursion disagree")
    out.emit(t.render(out.decor), t.to_json(out.decor))
    return EXIT_OK


def _compare_methods(results: dict[str, Any], render, to_json, out: Output) -> int:
    values = list(results.values())
    agree = all(v == values[0] for v in values[1:])
    if out.fmt == "json":
        out.emit("", {"agree": agree, "methods": {k: to_json(v) for k, v in results.items()}})
    elif agree:
        out.text(render(values[0]))
    else:
        for k, v in results.items():
            out.text(f"{k}: {render(v)}")
    if not agree:
        raise Disagreement("methods disagree")
    return EXIT_OK


def cmd_antipode(args, out: Output) -> int:
    from .hopf import antipode_cuts, antipode_recursive

    f = _forest(args.forest, out)
    methods = {"rec": lambda: antipode_recursive(Element.of(f)), "cuts": lambda: antipode_cuts(f)}
    chosen = ["rec", "cuts"] if args.method == "both" else [args.method]
    results = {k: methods[k]() for k in chosen}
    return _compare_methods(
        results, lambda x: x.render(out.decor), lambda x: x.to_json(out.decor), out
    )


def cmd_pair(args, out: Output) -> int:
    from .pairing import pair_combinatorial, pair_forests

    f, g = _forest(args.left, out), _forest(args.right, out)
    methods = {"rec": lambda: pair_forests(f, g), "comb": lambda: pair_combinatorial(f, g)}
    chosen = ["rec", "comb"] if args.method == "both" else [args.method]
    results = {k: methods[k]() for k in chosen}
    return _compare_methods(results, str, str, out)


def cmd_gram(args, out: Output) -> int:
    from .pairing import gram_inverse, gram_matrix

    decor = out.decor or DEFAULT_DECOR
    basis, m = (gram_inverse if args.inverse else gram_matrix)(args.n, decor)
    out.emit(
        _matrix_lines(basis, m),
        {"basis": [render_forest(f) for f in basis], "matrix": [[str(x) for x in r] for r in m]},
    )
    return EXIT_OK


def cmd_dual_basis(args, out: Output) -> int:
    from .pairing import dual_basis

    decor = out.decor or DEFAULT_DECOR
    duals = dual_basis(args.n, decor)
    lines, data = [], []
    for f in enumerate_forests(args.n, decor):
        lines.append(f"e[{render_forest(f)}] = {duals[f].render(decor)}")
        data.append({"forest": render_forest(f), "dual": duals[f].to_json(decor)})
    out.emit(lines, data)
    return EXIT_OK


def cmd_dual(args, out: Output) -> int:
    from .pairing import dual

    x = dual(_forest(args.forest, out), out.decor)
    out.emit(x.render(out.decor), x.to_json(out.decor))
    return EXIT_OK


def cmd_mirror(args, out: Output) -> int:
    m = mirror(_forest(args.forest, out))
    out.emit(render_forest(m), {"forest": render_forest(m)})
    return EXIT_OK


def cmd_order(args, out: Output) -> int:
    f, g = _forest(args.left, out), _forest(args.right, out)
    decor = out.decor or infer_decor([f, g])
    c = compare_forests(f, g, decor)
    out.emit({-1: "<", 0: "=", 1: ">"}[c], {"cmp": c})
    return EXIT_OK


def cmd_bracket(args, out: Output) -> int:
    from .liealg import bracket_cuts, bracket_graft

    t1, t2 = parse_tree(args.left, out.decor), parse_tree(args.right, out.decor)
    decor = out.decor or infer_decor([(t1, t2)])

    def ordered(b: dict) -> list:
        return sorted(b.items(), key=lambda kv: forest_key((kv[0],), decor))

    def render(b: dict) -> str:
        return render_combination([(f"e[{render_tree(t)}]", c) for t, c in ordered(b)])

    methods = {"cuts": lambda: bracket_cuts(t1, t2), "graft": lambda: bracket_graft(t1, t2)}
    chosen = ["cuts", "graft"] if args.method == "both" else [args.method]
    results = {k: methods[k]() for k in chosen}
    return _compare_methods(results, render, lambda b: _ebasis_json(ordered(b), render_tree), out)


def cmd_cm(args, out: Output) -> int:
    from . import cm

    if args.what in ("u", "v", "z", "w"):
        x = getattr(cm, args.what)(args.n)
        out.emit(x.render(), x.to_json())
        return EXIT_OK
    lines, data, ok = [], {}, True
    for kind in ("u", "v"):
        for which, label in (("delta", "Δ̃"), ("fr", "Δ̃_Fr")):
            formula = cm.cm_coproduct_formula(kind, which, args.n)
            match = cm.evaluate_vtensor(formula) == cm.brute_reduced(kind, which, args.n)
            ok &= match
            lines.append(
                f"{label}({kind}{args.n}) = {cm.render_vtensor(formula)}"
                + ("" if match else "   [MISMATCH with brute force]")
            )
            data[f"{which}:{kind}"] = {
                "agree": match,
                "terms": [
                    {
                        "coeff": render_scalar(c),
                        "left": [list(p) for p in a],
                        "right": [list(p) for p in b],
                    }
                    for (a, b), c in sorted(formula.items())
                ],
            }
    out.emit(lines, data)
    if not ok:
        raise Disagreement("closed form disagrees with brute force")
    return EXIT_OK


def cmd_shuffle(args, out: Output) -> int:
    from .shuffle import parse_word, shuffle

    x = shuffle(parse_word(args.left), parse_word(args.right))
    out.emit(x.render(), x.to_json())
    return EXIT_OK


def cmd_project(args, out: Output) -> int:
    from .nonplanar import project

    g = project(_forest(args.forest, out))
    out.emit(render_forest(g), {"forest": render_forest(g)})
    return EXIT_OK


def cmd_graft_average(args, out: Output) -> int:
    from .nonplanar import graft_average, project

    x = graft_average(project(_forest(args.left, out)), project(_forest(args.right, out)))
    out.emit(x.render(out.decor), x.to_json(out.decor))
    return EXIT_OK


def cmd_series(args, out: Output) -> int:
    from . import series

    if args.what == "tau":
        if args.k is None:
            raise UsageError("series tau needs -k")
        ks = range(1, args.k + 1) if args.all else [args.k]
        vals = {k: series.tau(k) for k in ks}
        out.emit(
            [f"{k} {v}" if args.all else str(v) for k, v in vals.items()],
            {str(k): str(v) for k, v in vals.items()},
        )
    elif args.what == "dims":
        if args.n is None:
            raise UsageError("series dims needs -n")
        r, p = series.dims(args.n, args.d)
        out.emit(f"r_{args.n} = {r}, p_{args.n} = {p}", {"r": str(r), "p": str(p)})
    else:
        if args.grades is None:
            raise UsageError("series tv needs --grades")
        try:
            grades = [int(x) for x in args.grades.split(",")]
        except ValueError as exc:
            raise UsageError(f"bad --grades: {exc}") from exc
        tv = series.tv_series(grades, args.order)
        lines = ["R: " + " ".join(render_scalar(c) for c in tv.r.coeffs), "H[n][m]:"]
        lines.extend(" ".join(render_scalar(c) for c in row) for row in tv.h)
        out.emit(lines, tv.to_json())
    return EXIT_OK


def cmd_selfcheck(args, out: Output) -> int:
    from .checks import run_suite

    results = run_suite(args.max_weight)
    passed = sum(ok for _, ok, _ in results)
    lines = [f"selfcheck --max-weight {args.max_weight}"]
    for name, ok, note in results:
        lines.append(f"{'PASS' if ok else 'FAIL'}  {name}" + (f"  ({note})" if note else ""))
    lines.append(f"{passed}/{len(results)} checks passed")
    out.emit(
        lines,
        {
            "max_weight": args.max_weight,
            "checks": [{"name": n, "ok": ok, "note": note} for n, ok, note in results],
            "passed": passed,
            "total": len(results),
        },
    )
    if passed != len(results):
        raise Disagreement("selfcheck failed")
    return EXIT_OK


# -- argument parsing -------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default=None, help="output format")
    common.add_argument("-D", "--decor", default=None, help="comma-separated decoration set, in order")

    p = _Parser(
        prog="treehopf",
        description="Planar rooted forests: Hopf algebra structure, pairing, dual basis and friends.",
        epilog=EPILOG,
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    p.add_argument("--format", dest="format_main", choices=("text", "json"), default=None)
    p.add_argument("-D", "--decor", dest="decor_main", default=None)
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name: str, fn, help_text: str):
        sp = sub.add_parser(name, parents=[common], help=help_text, description=help_text)
        sp.set_defaults(fn=fn)
        return sp

    sp = add("enum", cmd_enum, "list trees or forests of weight N in ascending order")
    sp.add_argument("kind", choices=("trees", "forests"))
    sp.add_argument("-n", type=int, required=True)

    add("coproduct", cmd_coproduct, "coproduct by admissible cuts").add_argument("forest")
    add("coproduct-fr", cmd_coproduct_fr, "coproduct by left-admissible cuts").add_argument("forest")

    sp = add("antipode", cmd_antipode, "antipode of a forest")
    sp.add_argument("forest")
    sp.add_argument("--method", choices=("rec", "cuts", "both"), default="rec")

    sp = add("pair", cmd_pair, "Hopf pairing of two forests")
    sp.add_argument("left")
    sp.add_argument("right")
    sp.add_argument("--method", choices=("rec", "comb", "both"), default="rec")

    sp = add("gram", cmd_gram, "Gram matrix of the pairing in weight N")
    sp.add_argument("-n", type=int, required=True)
    sp.add_argument("--inverse", action="store_true", help="print the inverse instead")

    sp = add("dual-basis", cmd_dual_basis, "every e_F of weight N")
    sp.add_argument("-n", type=int, required=True)
    add("dual", cmd_dual, "the dual basis element e_F").add_argument("forest")
    add("mirror", cmd_mirror, "the involution m").add_argument("forest")

    sp = add("order", cmd_order, "compare two forests in the total order")
    sp.add_argument("left")
    sp.add_argument("right")

    sp = add("bracket", cmd_bracket, "Lie bracket [e_t1, e_t2] in the e basis")
    sp.add_argument("left")
    sp.add_argument("right")
    sp.add_argument("--method", choices=("cuts", "graft", "both"), default="cuts")

    sp = add("cm", cmd_cm, "u_n, v_n, z_n, w_n or the closed-form coproducts")
    sp.add_argument("what", choices=("u", "v", "z", "w", "delta"))
    sp.add_argument("-n", type=int, required=True)

    sp = add("shuffle", cmd_shuffle, "shuffle product of two words")
    sp.add_argument("left")
    sp.add_argument("right")

    add("project", cmd_project, "canonical unordered forest").add_argument("forest")
    sp = add("graft-average", cmd_graft_average, "grafting average F ⊤̄ G of unordered forests")
    sp.add_argument("left")
    sp.add_argument("right")

    sp = add("series", cmd_series, "tree counts, dimensions and tensor-coalgebra series")
    sp.add_argument("what", choices=("tau", "dims", "tv"))
    sp.add_argument("-k", type=int, help="index for tau")
    sp.add_argument("--all", action="store_true", help="tau: print τ_1..τ_k")
    sp.add_argument("-n", type=int, help="weight for dims")
    sp.add_argument("-d", type=int, default=1, help="number of decorations for dims")
    sp.add_argument("--grades", help="tv: comma-separated dim V_0, dim V_1, ... (V_0 = 0)")
    sp.add_argument("--order", type=int, default=8, help="tv: truncation order")

    sp = add("selfcheck", cmd_selfcheck, "run the invariant suite and print a pass/fail table")
    sp.add_argument("--max-weight", type=int, default=4)
    return p


def _positive(name: str, value: int | None) -> None:
    if value is not None and value < 0:
        raise UsageError(f"{name} must be non-negative")


def main(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        for name in ("n", "k", "max_weight", "order"):
            _positive(name, getattr(args, name, None))
        fmt = args.format or args.format_main or "text"
        out = Output(fmt, _decor_list(args.decor or args.decor_main))
        code = args.fn(args, out)
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    except UsageError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_USAGE
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceCapError as exc:
        print(f"resource cap: {exc}", file=sys.stderr)
        return EXIT_CAP
    except Disagreement as exc:
        for line in out.lines:
            print(line)
        print(f"disagreement: {exc}", file=sys.stderr)
        return EXIT_DISAGREE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    for line in out.lines:
        print(line)
    return code


if __name__ == "__main__":
    sys.exit(main())
