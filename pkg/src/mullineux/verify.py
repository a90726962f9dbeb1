"""Exhaustive verification suites over all p-regular partitions up to a size bound."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Callable

from . import cores, fixed_points, js_construction as jsc, partitions as parts, signatures as sig, symbols as sym

SUITES = ("roundtrip", "peaks", "js-equiv", "cores", "weights", "fixed")


@dataclass
class VerificationReport:
    suite: str
    p_list: list[int]
    nmax: int
    counts: dict[str, list[int]] = field(default_factory=dict)
    counterexample: dict | None = None

    def check(self, name: str, ok: bool, **context):
        pf = self.counts.setdefault(name, [0, 0])
        if ok:
            pf[0] += 1
        else:
            pf[1] += 1
            if self.counterexample is None:
                self.counterexample = {"property": name, **{k: str(v) for k, v in context.items()}}

    @property
    def failures(self) -> int:
        return sum(f for _, f in self.counts.values())

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def merge(self, other: "VerificationReport"):
        for name, (ok, bad) in other.counts.items():
            pf = self.counts.setdefault(name, [0, 0])
            pf[0] += ok
            pf[1] += bad
        if self.counterexample is None:
            self.counterexample = other.counterexample

    def to_dict(self) -> dict:
        return {
            "schema": 1,
            "suite": self.suite,
            "p": self.p_list,
            "nmax": self.nmax,
            "properties": {k: {"pass": v[0], "fail": v[1]} for k, v in sorted(self.counts.items())},
            "passed": self.passed,
            "counterexample": self.counterexample,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False)


def _regular(p, nmax):
    return parts.enumerate_p_regular_upto(nmax, p, nmin=1)


def suite_roundtrip(rep: VerificationReport, p: int, nmax: int):
    for lam in _regular(p, nmax):
        G = sym.mullineux_symbol(lam, p)
        R = sym.residue_symbol(G, p)
        rep.check("symbol-inequalities", not sym.symbol_violations(G, p), lam=lam, p=p, G=G)
        rep.check("partition_of_symbol", sym.partition_of_symbol(G, p) == lam, lam=lam, p=p)
        rep.check("reconstruct_mullineux", sym.reconstruct_mullineux(R, p) == G, lam=lam, p=p)
        GM = sym.mullineux_map_G(G, p)
        rep.check("involution", sym.mullineux_map_G(GM, p) == G and GM.top == G.top, lam=lam, p=p)
        rep.check("map-commutes", sym.residue_symbol(GM, p) == sym.mullineux_map_R(R, p), lam=lam, p=p)
        rep.check("n-vector", sym.n_vector_from_residue_symbol(R, p) == cores.n_vector_of(lam, p), lam=lam, p=p)
        fixed_by_symbol = GM == G
        rep.check("fixed-criteria", fixed_by_symbol == sym.is_mullineux_fixed(lam, p), lam=lam, p=p)


def suite_peaks(rep: VerificationReport, p: int, nmax: int):
    for lam in _regular(p, nmax):
        N = sig.node_sequence(lam, p)
        M = sig.mullineux_sequence(lam, p)
        rn, rm = sig.analyze(N, p), sig.analyze(M, p)
        blk = sig.normal_nodes_block(lam, p)
        rep.check("peak-equality", rn.peaks == rm.peaks, lam=lam, p=p, N=N, M=M)
        block_normal = {blk.residues[i - 1] for i in blk.normal}
        block_good = {blk.residues[i - 1] for i in blk.good}
        rep.check("normal-residues", rn.normal_residues() == rm.normal_residues() == block_normal, lam=lam, p=p)
        rep.check("good-residues", rn.good_residues() == rm.good_residues() == block_good, lam=lam, p=p)
        heights_seq = sorted((rn.residues[i], rn.heights[i]) for i in rn.normal_indices)
        heights_blk = sorted((blk.residues[i - 1], blk.heights[i]) for i in blk.normal)
        rep.check("normal-heights", heights_seq == heights_blk, lam=lam, p=p)
        one_good = all(sum(1 for i in rn.good_indices if rn.residues[i] == a) == (1 if rn.peaks[a] > 0 else 0) for a in range(p))
        rep.check("one-good-per-residue", one_good, lam=lam, p=p)


def suite_js_equiv(rep: VerificationReport, p: int, nmax: int):
    graphs = {a: jsc.build_js_graph(a, p) for a in range(p)}
    found = {a: set() for a in range(p)}
    for lam in _regular(p, nmax):
        by_def = jsc.is_js(lam, p)
        by_seq, seq_type = jsc.js_by_sequence(lam, p)
        blk = sig.normal_nodes_block(lam, p)
        rep.check("js-three-way", by_def == by_seq == (len(blk.normal) == 1), lam=lam, p=p)
        if not by_def:
            continue
        alpha = jsc.js_type(lam, p)
        rep.check("js-type", seq_type == alpha == blk.residues[blk.good[0] - 1], lam=lam, p=p)
        R = sym.residue_symbol_of(lam, p)
        found[alpha].add(R)
        try:
            jsc.classify_end_values(R, alpha, p)
            jsc.collapse_singular_runs(R, alpha, p)
            ok = True
        except jsc.NotJS:
            ok = False
        rep.check("end-values", ok, lam=lam, p=p, R=R)
        prefix_ok = all(
            jsc.is_js(sym.partition_of_residue_symbol(sym.ResidueSymbol(R.columns[:k]), p), p)
            for k in range(1, len(R))
        )
        rep.check("prefix-closure", prefix_ok, lam=lam, p=p)
    for a in range(p):
        generated = set()
        for path, G in jsc.walk_symbols(graphs[a], nmax):
            try:
                sym.partition_of_symbol(G, p)
                generated.add(path.residue_symbol())
            except sym.InvalidSymbol:
                rep.check("graph-realizable", False, p=p, alpha=a, path=path.columns)
        rep.check("construction-complete", generated == found[a], p=p, alpha=a,
                  missing=sorted(found[a] - generated, key=str)[:3], extra=sorted(generated - found[a], key=str)[:3])


def suite_cores(rep: VerificationReport, p: int, nmax: int):
    for lam in _regular(p, nmax):
        core = cores.p_core(lam, p)
        rep.check("core-n-vector", cores.n_vector_of(core, p) == cores.n_vector_of(lam, p), lam=lam, p=p)
        if not jsc.is_js(lam, p):
            continue
        alpha = jsc.js_type(lam, p)
        shape = cores.core_shape_of(core)
        rep.check("rectangular-core", shape is not None and (shape.is_empty or (shape.l - shape.a) % p == alpha), lam=lam, p=p)
        R = sym.residue_symbol_of(lam, p)
        rep.check("core-final-column", jsc.js_core_at_column(R.columns[-1], alpha, p) == shape, lam=lam, p=p)
        rep.check("core-length", jsc.js_core_from_length(lam, p) == shape, lam=lam, p=p)


def suite_weights(rep: VerificationReport, p: int, nmax: int):
    graphs = {a: jsc.build_js_graph(a, p) for a in range(p)}
    for lam in _regular(p, nmax):
        if not jsc.is_js(lam, p):
            continue
        alpha = jsc.js_type(lam, p)
        G = sym.mullineux_symbol(lam, p)
        R = sym.residue_symbol(G, p)
        path = jsc.path_of_symbol(R, p)
        rep.check("weight-formula", jsc.weight_of_path(path, graphs[alpha]) == cores.weight(lam, p), lam=lam, p=p)
        tops = list(reversed(G.top))
        for i in range(1, len(R)):
            src, dst = path.columns[i - 1], path.columns[i]
            actual = tops[i] // p - tops[i - 1] // p
            rep.check("edge-level", actual == jsc.edge_d(src, dst, alpha, p), lam=lam, p=p, edge=(src, dst))


def suite_fixed(rep: VerificationReport, p: int, nmax: int):
    graph = fixed_points.build_fixed_graph(p)
    fixed = set()
    for lam in _regular(p, nmax):
        if sym.is_mullineux_fixed(lam, p):
            rep.check("even-weight", cores.weight(lam, p) % 2 == 0, lam=lam, p=p)
        if not fixed_points.is_fixed_js(lam, p):
            continue
        R = sym.residue_symbol_of(lam, p)
        fixed.add(R)
        rep.check("type-0", jsc.js_type(lam, p) == 0, lam=lam, p=p)
        shape = cores.core_shape_of(cores.p_core(lam, p))
        rep.check("square-core", fixed_points.fixed_core(R.columns[-1], p) == shape and shape.l == shape.a, lam=lam, p=p)
    generated = {path.residue_symbol() for path, _ in jsc.walk_symbols(graph, nmax)}
    rep.check("fixed-characterization", generated == fixed, p=p)
    for w in range(0, 11, 2):
        for j in range(0, (p + 1) // 2):
            mu = cores.EMPTY if j == 0 else cores.CoreShape(j, j)
            exceptional = w == 2 and 2 * j == p - 1
            try:
                lam = fixed_points.fixed_witness(w, mu, p)
            except fixed_points.Infeasible:
                rep.check("witness", exceptional, p=p, w=w, core=mu)
                continue
            if not lam:
                rep.check("witness", w == 0 and mu.is_empty, p=p, w=w, core=mu)
                continue
            ok = (
                not exceptional
                and fixed_points.is_fixed_js(lam, p)
                and cores.core_shape_of(cores.p_core(lam, p)) == mu
                and cores.weight(lam, p) == w
            )
            rep.check("witness", ok, p=p, w=w, core=mu, lam=lam)
    j = (p - 1) // 2
    target = cores.CoreShape(j, j).as_partition()
    none_exists = not any(
        fixed_points.is_fixed_js(lam, p) and cores.p_core(lam, p) == target
        for lam in parts.enumerate_p_regular(j * j + 2 * p, p)
    )
    rep.check("exception-exhaustive", none_exists, p=p)


_RUNNERS: dict[str, Callable] = {
    "roundtrip": suite_roundtrip,
    "peaks": suite_peaks,
    "js-equiv": suite_js_equiv,
    "cores": suite_cores,
    "weights": suite_weights,
    "fixed": suite_fixed,
}


def run_suite(suite: str, p_list, nmax: int) -> VerificationReport:
    p_list = list(p_list)
    if suite == "all":
        rep = VerificationReport("all", p_list, nmax)
        for name in SUITES:
            rep.merge(run_suite(name, p_list, nmax))
        return rep
    if suite not in _RUNNERS:
        raise ValueError(f"unknown suite {suite!r}")
    rep = VerificationReport(suite, p_list, nmax)
    for p in p_list:
        if p <= 2 and suite in ("js-equiv", "cores", "weights", "fixed"):
            raise ValueError(f"suite {suite} needs p > 2")
        _RUNNERS[suite](rep, p, nmax)
    return rep
