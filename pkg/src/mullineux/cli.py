"""Command-line entry point: ``mullineux <command> ...``."""
from __future__ import annotations

import argparse
import json
import sys
from concurrent.futures import ThreadPoolExecutor

from . import cores, fixed_points, js_construction as jsc, partitions as parts, signatures as sig, symbols as sym
from .verify import SUITES, VerificationReport, run_suite

SCHEMA = 1


class UsageError(Exception):
    pass


def _dump(obj) -> str:
    return json.dumps(obj, ensure_ascii=False, sort_keys=False)


def _shape_json(shape):
    return None if shape is None else shape.to_dict()


def _guard(fn):
    # non p-regular input: report the failure per field instead of aborting
    try:
        return fn()
    except (ValueError, sym.InvalidSymbol) as exc:
        return {"error": str(exc)}


def analyze_report(lam: parts.Partition, p: int) -> dict:
    regular = parts.is_p_regular(lam, p)
    core = cores.p_core(lam, p)
    out = {
        "schema": SCHEMA,
        "partition": list(lam.parts),
        "exponential": parts.format_exponential(lam),
        "p": p,
        "n": lam.n,
        "p_regular": regular,
        "residue_diagram": [list(row) for row in parts.residue_diagram(lam, p)],
        "content": list(parts.content(lam, p)),
        "n_vector": list(cores.n_vector_of(lam, p)),
        "core": list(core.parts),
        "core_shape": _shape_json(cores.core_shape_of(core)),
        "weight": cores.weight(lam, p),
        "node_sequence": str(sig.node_sequence(lam, p)),
    }

    def symbols_part():
        G = sym.mullineux_symbol(lam, p)
        return G, sym.residue_symbol(G, p)

    sy = _guard(symbols_part) if lam else (sym.MullineuxSymbol(()), sym.ResidueSymbol(()))
    if isinstance(sy, dict):
        for key in ("mullineux_symbol", "residue_symbol", "mullineux_sequence", "normal", "js", "mullineux_image", "fixed"):
            out[key] = sy
        return out
    G, R = sy
    out["mullineux_symbol"] = G.to_dict()
    out["residue_symbol"] = R.to_dict()
    M = sig.mullineux_sequence(lam, p)
    out["mullineux_sequence"] = str(M)
    rep = sig.analyze(sig.node_sequence(lam, p), p)
    blk = sig.normal_nodes_block(lam, p)
    removable = parts.removable_nodes(lam)
    out["normal"] = {
        "sequence_indices": rep.normal_indices,
        "good_sequence_indices": rep.good_indices,
        "blocks": list(blk.normal),
        "good_blocks": list(blk.good),
        "nodes": [list(removable[i - 1]) for i in blk.normal],
        "good_nodes": [list(removable[i - 1]) for i in blk.good],
    }
    if lam:
        js = jsc.is_js(lam, p)
        out["js"] = js
        out["type"] = jsc.js_type(lam, p) if js else None
    else:
        out["js"] = False
        out["type"] = None
    image = sym.mullineux_conjugate(lam, p) if lam else lam
    out["mullineux_image"] = list(image.parts)
    out["fixed"] = image == lam
    out["fixed_js"] = bool(out["js"]) and out["fixed"]
    return out


def _parse_lambda(text):
    try:
        return parts.parse_partition(text)
    except ValueError as exc:
        raise UsageError(f"bad partition {text!r}: {exc}") from None


def _parse_p_list(text):
    try:
        ps = [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise UsageError(f"bad prime list {text!r}") from None
    if not ps or any(p < 2 for p in ps):
        raise UsageError("every p must be at least 2")
    return ps


def _parse_rect(text):
    if text is None or text.strip().lower() in ("", "empty", "0"):
        return cores.EMPTY
    try:
        l, a = (int(t) for t in text.split(","))
    except ValueError:
        raise UsageError(f"core must be 'L,A' or 'empty', got {text!r}") from None
    return cores.CoreShape(l, a)


def cmd_analyze(args):
    lam = _parse_lambda(args.partition)
    print(_dump(analyze_report(lam, args.p)))
    return 0


def cmd_mullineux(args):
    lam = _parse_lambda(args.partition)
    if not parts.is_p_regular(lam, args.p):
        raise UsageError(f"{lam} is not {args.p}-regular")
    image = sym.mullineux_conjugate(lam, args.p) if lam else lam
    if args.format == "text":
        print(parts.format_exponential(image) or "()")
    else:
        G = sym.mullineux_symbol(lam, args.p) if lam else sym.MullineuxSymbol(())
        print(_dump({
            "schema": SCHEMA,
            "partition": list(lam.parts),
            "image": list(image.parts),
            "symbol": G.to_dict(),
            "image_symbol": sym.mullineux_map_G(G, args.p).to_dict() if lam else G.to_dict(),
            "fixed": image == lam,
        }))
    return 0


def cmd_graph(args):
    if args.p <= 2:
        raise UsageError("graphs need p > 2")
    if args.fixed:
        g = fixed_points.build_fixed_graph(args.p)
    else:
        if args.alpha is None:
            raise UsageError("--alpha is required unless --fixed is given")
        g = jsc.build_js_graph(args.alpha % args.p, args.p)
    print(g.to_dot() if args.format == "dot" else g.to_json())
    return 0


def _witness_out(lam, args):
    if args.format == "text":
        return parts.format_exponential(lam) or "()"
    return _dump(list(lam.parts))


def cmd_js_witness(args):
    shape = _parse_rect(args.core)
    if args.weight < 0:
        raise UsageError("weight must be nonnegative")
    if not shape.is_empty and not shape.is_p_core(args.p):
        raise UsageError(f"{shape!r} is not a {args.p}-core")
    print(_witness_out(jsc.js_witness(shape, args.weight, args.p), args))
    return 0


def cmd_fixed_witness(args):
    j = args.core
    if j < 0 or 2 * j - 1 >= args.p:
        raise UsageError(f"({j}^{j}) is not a {args.p}-core")
    if args.weight < 0 or args.weight % 2:
        raise UsageError("weight must be even and nonnegative")
    shape = cores.EMPTY if j == 0 else cores.CoreShape(j, j)
    try:
        lam = fixed_points.fixed_witness(args.weight, shape, args.p)
    except fixed_points.Infeasible:
        print("infeasible")
        return 0
    print(_witness_out(lam, args))
    return 0


def cmd_verify(args):
    ps = _parse_p_list(args.p)
    if args.suite != "all" and args.suite not in SUITES:
        raise UsageError(f"unknown suite {args.suite}")
    if args.suite not in ("roundtrip", "peaks") and any(p <= 2 for p in ps):
        raise UsageError(f"suite {args.suite} needs p > 2")
    if args.jobs > 1:
        # one task per p; counts merge associatively, the first counterexample follows p order
        with ThreadPoolExecutor(args.jobs) as pool:
            parts_ = list(pool.map(lambda p: run_suite(args.suite, [p], args.nmax), ps))
        rep = VerificationReport(args.suite, ps, args.nmax)
        for r in parts_:
            rep.merge(r)
    else:
        rep = run_suite(args.suite, ps, args.nmax)
    if args.format == "text":
        for name, (ok, bad) in sorted(rep.counts.items()):
            print(f"{'PASS' if bad == 0 else 'FAIL'} {name}: {ok} passed, {bad} failed")
        if rep.counterexample:
            print("counterexample:", _dump(rep.counterexample))
    else:
        print(rep.to_json())
    return 0 if rep.passed else 1


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="mullineux", description="Mullineux symbols, residue symbols and JS-partitions.")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    a = sub.add_parser("analyze", help="everything about one partition, as JSON")
    a.add_argument("--p", type=int, required=True)
    a.add_argument("partition", help='e.g. "6,6,5,4" or "6^2,5,4"')
    a.set_defaults(func=cmd_analyze)

    m = sub.add_parser("mullineux", help="Mullineux image of a p-regular partition")
    m.add_argument("--p", type=int, required=True)
    m.add_argument("--format", choices=("json", "text"), default="json")
    m.add_argument("partition")
    m.set_defaults(func=cmd_mullineux)

    g = sub.add_parser("graph", help="JS construction graph")
    g.add_argument("--p", type=int, required=True)
    g.add_argument("--alpha", type=int)
    g.add_argument("--fixed", action="store_true", help="the subgraph for Mullineux-fixed JS-partitions")
    g.add_argument("--format", choices=("dot", "json"), default="dot")
    g.set_defaults(func=cmd_graph)

    w = sub.add_parser("js-witness", help="JS-partition with a given rectangular core and weight")
    w.add_argument("--p", type=int, required=True)
    w.add_argument("--weight", type=int, required=True)
    w.add_argument("--core", default="empty", help="'L,A' for the rectangle (L^A), or 'empty'")
    w.add_argument("--format", choices=("json", "text"), default="json")
    w.set_defaults(func=cmd_js_witness)

    f = sub.add_parser("fixed-witness", help="Mullineux-fixed JS-partition with core (J^J) and weight W")
    f.add_argument("--p", type=int, required=True)
    f.add_argument("--weight", type=int, required=True)
    f.add_argument("--core", type=int, default=0, help="side J of the square core (0 for empty)")
    f.add_argument("--format", choices=("json", "text"), default="json")
    f.set_defaults(func=cmd_fixed_witness)

    v = sub.add_parser("verify", help="exhaustive verification suites")
    v.add_argument("suite", choices=SUITES + ("all",))
    v.add_argument("--p", default="3,5,7", help="comma-separated list")
    v.add_argument("--nmax", type=int, default=12)
    v.add_argument("--jobs", type=int, default=1)
    v.add_argument("--format", choices=("json", "text"), default="json")
    v.set_defaults(func=cmd_verify)
    return ap


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        if getattr(args, "p", None) is not None and isinstance(args.p, int) and args.p < 2:
            raise UsageError("p must be at least 2")
        return args.func(args)
    except UsageError as exc:
        print(f"mullineux: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
