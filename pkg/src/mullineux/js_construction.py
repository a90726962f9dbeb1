"""Jantzen-Seitz partitions and the graph that generates their residue symbols.

A JS-partition of type alpha has exactly one normal node, of residue alpha.
Its residue symbol is a walk in a small directed graph on residue columns;
walking the graph also tracks the p-core (read off the final column) and the
weight (via per-edge labels ``(d, e)``).
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterator, NamedTuple

from .cores import EMPTY, CoreShape, classify_rect_nvector, rect_n_vector
from .partitions import Partition, is_p_regular
from .signatures import analyze, end_values, mullineux_sequence, sequence_of_residue_symbol
from .symbols import (
    MullineuxSymbol,
    ResidueSymbol,
    base_column,
    is_singular_column,
    next_column,
    mullineux_symbol,
    partition_of_symbol,
)


class NotJS(ValueError):
    pass


class JSColumn(NamedTuple):
    x: int
    y: int

    def is_singular(self, p: int) -> bool:
        return is_singular_column(self.x, self.y, p)

    def label(self) -> str:
        return f"{self.x}/{self.y}"


def _col(x: int, y: int, p: int) -> JSColumn:
    return JSColumn(x % p, y % p)


def _require_nonempty_regular(lam: Partition, p: int):
    if not lam:
        raise ValueError("the empty partition has no JS type")
    if not is_p_regular(lam, p):
        raise ValueError(f"{lam!r} is not {p}-regular")


def is_js(lam: Partition, p: int) -> bool:
    _require_nonempty_regular(lam, p)
    b = lam.blocks
    return all((b[i][0] - b[i + 1][0] + b[i][1] + b[i + 1][1]) % p == 0 for i in range(len(b) - 1))


def js_type(lam: Partition, p: int) -> int:
    _require_nonempty_regular(lam, p)
    l1, a1 = lam.blocks[0]
    return (l1 - a1) % p


def js_by_sequence(lam: Partition, p: int) -> tuple[bool, int | None]:
    """JS test on M(lambda): sigma stays <= 1 for one residue and <= 0 for all others."""
    _require_nonempty_regular(lam, p)
    pk = analyze(mullineux_sequence(lam, p), p).peaks
    positive = [b for b in range(p) if pk[b] > 0]
    if len(positive) == 1 and pk[positive[0]] == 1:
        return True, positive[0]
    return False, None


# -- construction rules --------------------------------------------------------


def start_columns(alpha: int, p: int) -> list[tuple[JSColumn, int]]:
    """Admissible first columns with their weight label d_0 (1 on a singular start)."""
    if p <= 2:
        raise ValueError("the JS construction needs p > 2")
    alpha %= p
    cols = []
    if alpha != 1:
        cols.append(_col(0, alpha, p))
    cols.append(_col(alpha, 0, p))
    if alpha != 0:
        cols.append(_col(alpha, alpha + 1, p))
    out, seen = [], set()
    for c in cols:
        if c not in seen:
            seen.add(c)
            out.append((c, 0 if not c.is_singular(p) else 1))
    return out


def js_extensions(col, alpha: int, p: int) -> list[JSColumn]:
    y = col[1]
    out = []
    if (2 * y - alpha - 3) % p:
        out.append(_col(alpha + 1 - y, y - 1, p))
    if (2 * y - alpha - 1) % p:
        out.append(_col(y - 1, alpha + 1 - y, p))
    out.append(_col(y - 1, y, p))
    out.append(_col(alpha + 1 - y, alpha + 2 - y, p))
    return list(dict.fromkeys(out))


# -- end value vectors -----------------------------------------------------------


@dataclass(frozen=True)
class EndValueVector:
    """``v0 = -e_0``; ``v(alpha, beta) = e_alpha - e_beta - e_{alpha-beta}``; ``w(alpha) = e_alpha - 2 e_half``."""

    kind: str
    alpha: int
    beta: int | None = None

    def vector(self, p: int) -> tuple[int, ...]:
        v = [0] * p
        if self.kind == "v0":
            v[0] = -1
        elif self.kind == "v":
            v[self.alpha % p] += 1
            v[self.beta % p] -= 1
            v[(self.alpha - self.beta) % p] -= 1
        elif self.kind == "w":
            v[self.alpha % p] += 1
            v[self.beta % p] -= 2
        else:
            raise ValueError(self.kind)
        return tuple(v)

    def allowed_last_y(self, p: int) -> set[int]:
        if self.kind == "v0":
            return {1 % p, (self.alpha + 1) % p}
        if self.kind == "v":
            return {(1 + self.beta) % p, (self.alpha + 1 - self.beta) % p}
        return {(self.beta + 1) % p}

    def __str__(self):
        if self.kind == "v0":
            return "v_0"
        if self.kind == "v":
            return f"v_{{{self.alpha},{self.beta}}}"
        return f"w_{self.alpha}"


def classify_end_vector(sigma, alpha: int, p: int) -> EndValueVector:
    sigma = tuple(sigma)
    alpha %= p
    v0 = EndValueVector("v0", alpha)
    if sigma == v0.vector(p):
        return v0
    for beta in range(p):
        if beta in (0, alpha):
            continue
        cand = EndValueVector("v", alpha, min(beta, (alpha - beta) % p))
        if cand.vector(p) == sigma:
            if (2 * beta - alpha) % p == 0:
                return EndValueVector("w", alpha, beta)
            return cand
    raise NotJS(f"end value vector {sigma} is none of v_0, v_(alpha,beta), w_alpha for alpha={alpha}")


def classify_end_values(R: ResidueSymbol, alpha: int, p: int) -> EndValueVector:
    """Classify the end values of M for a type-``alpha`` JS symbol and check the last y."""
    if not len(R):
        raise ValueError("empty residue symbol")
    ev = classify_end_vector(end_values(sequence_of_residue_symbol(R, p), p), alpha, p)
    if R.y[-1] % p not in ev.allowed_last_y(p):
        raise NotJS(f"last y={R.y[-1]} not allowed for {ev}")
    return ev


def collapse_singular_runs(R: ResidueSymbol, alpha: int, p: int) -> ResidueSymbol:
    """Drop singular columns, checking how the surviving regular columns link up."""
    alpha %= p
    regular = [(x % p, y % p) for x, y in R if not is_singular_column(x, y, p)]
    if regular and len(R) and is_singular_column(*R.columns[0], p):
        if regular[0] not in {(alpha, 0), (0, alpha)}:
            raise NotJS(f"first regular column {regular[0]} after singular start")
    for (_, yl), nxt in zip(regular, regular[1:]):
        allowed = {((alpha + 1 - yl) % p, (yl - 1) % p), ((yl - 1) % p, (alpha + 1 - yl) % p)}
        if nxt not in allowed:
            raise NotJS(f"regular column {nxt} cannot follow a column with y={yl}")
    return ResidueSymbol(tuple(regular))


# -- cores -------------------------------------------------------------------


def js_core_at_column(col, alpha: int, p: int) -> CoreShape:
    """p-core of a type-``alpha`` JS partition whose residue symbol ends in ``col``.

    ``l = 0`` gives the empty core; ``1 <= l <= alpha/2`` a tall rectangle with
    ``p + l - alpha`` rows; ``alpha < l < (p+1+alpha)/2`` a wide one with ``l - alpha`` rows.
    """
    alpha %= p
    x, y = col[0] % p, col[1] % p
    found = set()
    for l in range(p):
        pairs = [
            (l - 1, alpha - l + 1),
            (alpha - l - 1, l + 1),
            (l, l + 1),
            (alpha - l, alpha - l + 1),
        ]
        if not any(((px - x) % p, (py - y) % p) == (0, 0) for px, py in pairs):
            continue
        if l == 0:
            found.add(EMPTY)
        elif 2 * l <= alpha:
            found.add(CoreShape(l, p + l - alpha))
        elif alpha + 1 <= l and 2 * l < p + 1 + alpha:
            found.add(CoreShape(l, l - alpha))
    if len(found) != 1:
        raise NotJS(f"column {col} does not determine a core for type {alpha} (candidates {found})")
    return found.pop()


def js_nvector_from_length(length: int, alpha: int, p: int) -> tuple[int, ...]:
    """n-vector of a type-``alpha`` JS partition with ``length`` rows."""
    r = length % p
    alpha %= p
    if 2 * r <= p - alpha:
        s, wide = r, True
    elif r <= p - alpha:
        s, wide = p - alpha - r, True
    elif 2 * r <= 2 * p - alpha:
        s, wide = r - (p - alpha), False
    else:
        s, wide = p - r, False
    if s == 0:
        return (0,) * p
    shape = CoreShape(alpha + s, s) if wide else CoreShape(s, p - alpha + s)
    return rect_n_vector(shape, p)


def js_core_from_length(lam: Partition, p: int) -> CoreShape:
    if not is_js(lam, p):
        raise NotJS(f"{lam!r} is not a JS-partition for p={p}")
    return classify_rect_nvector(js_nvector_from_length(len(lam), js_type(lam, p), p), p)


# -- labels -------------------------------------------------------------------


def edge_d(src, dst, alpha: int, p: int) -> int:
    """Increase of the p-level of the rim length along ``src -> dst``."""
    if _col(*dst, p) not in js_extensions(src, alpha, p):
        raise ValueError(f"{src} -> {dst} is not an edge for type {alpha}")
    (x1, y1), (x, y) = src, dst
    t = (x - y + 1) % p
    t1 = (x1 - y1 + 1) % p
    s = (y1 - y) % p
    if t1 and t:
        return (t1 + 2 * s) // p
    if t1:
        return (t1 + s + p) // p
    return (p - 1 + s - t) // p


def edge_e(src, dst, alpha: int, p: int) -> int:
    return int(js_core_at_column(dst, alpha, p).size < js_core_at_column(src, alpha, p).size)


# -- graph ---------------------------------------------------------------------


@dataclass
class JSGraph:
    alpha: int
    p: int
    starts: dict = field(default_factory=dict)
    edges: dict = field(default_factory=dict)
    vertices: list = field(default_factory=list)
    fixed: bool = False

    def successors(self, col) -> list[JSColumn]:
        return [dst for (src, dst) in self.edges if src == col]

    def singular_vertices(self) -> list[JSColumn]:
        return [v for v in self.vertices if v.is_singular(self.p)]

    def to_dict(self) -> dict:
        return {
            "alpha": self.alpha,
            "p": self.p,
            "fixed": self.fixed,
            "vertices": [
                {"x": v.x, "y": v.y, "singular": v.is_singular(self.p), "core": js_core_at_column(v, self.alpha, self.p).to_dict()}
                for v in self.vertices
            ],
            "starts": [{"x": v.x, "y": v.y, "d0": d0} for v, d0 in self.starts.items()],
            "edges": [
                {"from": [s.x, s.y], "to": [t.x, t.y], "d": d, "e": e}
                for (s, t), (d, e) in self.edges.items()
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def to_dot(self) -> str:
        name = "fixed_js" if self.fixed else f"js_type_{self.alpha}"
        lines = [f"digraph {name}_p{self.p} {{"]
        for v in self.vertices:
            label = v.label()
            attrs = [f'label="{label}"']
            if v in self.starts:
                attrs = [f'label="{label}\\nd0={self.starts[v]}"', "peripheries=2"]
            if v.is_singular(self.p):
                attrs.append("shape=box")
            lines.append(f'  "{label}" [{", ".join(attrs)}];')
        for (s, t), (d, e) in self.edges.items():
            lines.append(f'  "{s.label()}" -> "{t.label()}" [label="{d},{e}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def _close_graph(graph: JSGraph, extend) -> JSGraph:
    todo = list(graph.starts)
    seen = set(todo)
    while todo:
        v = todo.pop(0)
        for w in extend(v):
            graph.edges[(v, w)] = (edge_d(v, w, graph.alpha, graph.p), edge_e(v, w, graph.alpha, graph.p))
            if w not in seen:
                seen.add(w)
                todo.append(w)
    graph.vertices = sorted(seen)
    return graph


def build_js_graph(alpha: int, p: int) -> JSGraph:
    alpha %= p
    g = JSGraph(alpha, p, starts=dict(start_columns(alpha, p)))
    return _close_graph(g, lambda v: js_extensions(v, alpha, p))


@dataclass(frozen=True)
class JSPath:
    """A start vertex followed by the vertices visited along edges."""

    columns: tuple[JSColumn, ...]

    @property
    def k(self) -> int:
        return len(self.columns) - 1

    def residue_symbol(self) -> ResidueSymbol:
        return ResidueSymbol(tuple(self.columns))

    def labels(self, graph: JSGraph) -> tuple[list[int], list[int]]:
        cols = self.columns
        if cols[0] not in graph.starts:
            raise ValueError(f"{cols[0]} is not a start vertex")
        d = [graph.starts[cols[0]]]
        e = []
        for s, t in zip(cols, cols[1:]):
            if (s, t) not in graph.edges:
                raise ValueError(f"{s} -> {t} is not an edge of the graph")
            dd, ee = graph.edges[(s, t)]
            d.append(dd)
            e.append(ee)
        return d, e


def weight_of_path(path: JSPath, graph: JSGraph) -> int:
    d, e = path.labels(graph)
    k = path.k
    return sum((k + 1 - i) * d[i] for i in range(k + 1)) + sum(e)


def path_of_symbol(R: ResidueSymbol, p: int) -> JSPath:
    return JSPath(tuple(_col(x, y, p) for x, y in R))


def walk_symbols(graph: JSGraph, nmax: int) -> Iterator[tuple[JSPath, MullineuxSymbol]]:
    """Every path whose reconstructed Mullineux symbol has total size at most ``nmax``.

    Extending a residue symbol prepends one Mullineux column with positive rim
    length, so the size bound prunes the walk.
    """
    p = graph.p

    def go(cols, gcols, n):
        yield JSPath(tuple(cols)), MullineuxSymbol(tuple(reversed(gcols)))
        for w in graph.successors(cols[-1]):
            a, r = next_column(gcols[-1], w.x, w.y, p)
            if n + a <= nmax:
                yield from go(cols + [w], gcols + [(a, r)], n + a)

    for s in graph.starts:
        a, r = base_column(s.x, s.y, p)
        if a <= nmax:
            yield from go([s], [(a, r)], a)


# -- existence -------------------------------------------------------------------


def js_witness(mu: CoreShape, w: int, p: int) -> Partition:
    """A JS-partition with p-core ``mu`` and weight ``w``."""
    if w < 0:
        raise ValueError("weight must be non-negative")
    if not mu.is_p_core(p):
        raise ValueError(f"{mu!r} is not a {p}-core")
    if mu.is_empty:
        return Partition((p * w,) if w else ())
    # the closed form (l+a-1-2i, a-i) only covers a <= l, so strip the rectangle itself
    rect = mullineux_symbol(mu.as_partition(), p).columns
    G = MullineuxSymbol(tuple([(p, mu.a)] * w) + tuple(rect))
    return partition_of_symbol(G, p)
