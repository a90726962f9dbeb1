"""JS-partitions fixed by the Mullineux map.

They are all of type 0, and their residue symbols are the walks from ``0/0`` in
the subgraph of the type-0 graph on columns with ``x + y = delta``. In that
subgraph the only singular column is ``0/1``.
"""
from __future__ import annotations

from .cores import EMPTY, CoreShape
from .js_construction import JSColumn, JSGraph, _close_graph, is_js, js_core_at_column, js_extensions
from .partitions import EMPTY_PARTITION, Partition, is_p_regular
from .symbols import ResidueSymbol, is_fixed_residue_symbol, is_mullineux_fixed, partition_of_residue_symbol

FIXED_START = JSColumn(0, 0)
SINGULAR_FIXED = JSColumn(0, 1)


class Infeasible(Exception):
    """No Mullineux-fixed JS-partition has the requested core and weight."""


def _require_odd_p(p):
    if p <= 2:
        raise ValueError("Mullineux-fixed JS-partitions are studied for p > 2")


def is_fixed_column(col, p: int) -> bool:
    return is_fixed_residue_symbol(ResidueSymbol((tuple(col),)), p)


def is_fixed_js(lam: Partition, p: int) -> bool:
    _require_odd_p(p)
    if not is_p_regular(lam, p):
        raise ValueError(f"{lam!r} is not {p}-regular")
    return bool(lam) and is_js(lam, p) and is_mullineux_fixed(lam, p)


def fixed_extensions(col, p: int) -> list[JSColumn]:
    y = col[1]
    out = [JSColumn((1 - y) % p, (y - 1) % p), JSColumn((y - 1) % p, (1 - y) % p)]
    if y % p == 1:
        out.append(SINGULAR_FIXED)
    # a "regular" move can land on a singular column, which is never fixed
    return [c for c in dict.fromkeys(out) if is_fixed_column(c, p)]


def build_fixed_graph(p: int) -> JSGraph:
    _require_odd_p(p)
    g = JSGraph(0, p, starts={FIXED_START: 0}, fixed=True)
    return _close_graph(g, lambda v: fixed_extensions(v, p))


def fixed_core(col, p: int) -> CoreShape:
    """Square or empty p-core at the end of a walk in the fixed graph."""
    if not is_fixed_column(col, p):
        raise ValueError(f"{col} is not a column of a Mullineux-fixed JS symbol")
    shape = js_core_at_column(col, 0, p)
    assert shape.l == shape.a
    return shape


def _vertex(a: int, p: int) -> JSColumn:
    # shorthand used for walks: a stands for the column a / -a
    return JSColumn(a % p, -a % p)


def fixed_witness_path(w: int, mu: CoreShape, p: int) -> list[JSColumn]:
    """Walk in the fixed graph ending at core ``mu`` with weight ``w``."""
    _require_odd_p(p)
    if w < 0 or w % 2:
        raise ValueError("Mullineux-fixed partitions have even weight")
    if not mu.is_empty and (mu.l != mu.a or 2 * mu.l - 1 >= p):
        raise ValueError(f"{mu!r} is not a square {p}-core")
    v = lambda a: _vertex(a, p)
    if mu.is_empty:
        if w == 0:
            return []
        if w == 2:
            return [v(0), v(-1)]
        m = (w - 2) // 2
        return [v(0), v(-1)] + [SINGULAR_FIXED] * m
    j = mu.l
    up_to = lambda top: [v(i) for i in range(top + 1)]
    if w == 0:
        return up_to(j - 1)
    if w == 2:
        if j == (p - 1) // 2:
            raise Infeasible(f"no Mullineux-fixed JS-partition of weight 2 with core ({j}^{j}) for p={p}")
        return up_to(j) + [v(-(j + 1))]
    if w <= 2 * j + 2:
        i = j + 1 - w // 2
        return up_to(i) + [v(-(i + 1))] + [v(k) for k in range(i, j)]
    m = (w - 2 * j - 2) // 2
    return [v(0), v(-1)] + [SINGULAR_FIXED] * m + up_to(j - 1)


def fixed_witness(w: int, mu: CoreShape, p: int) -> Partition:
    """A Mullineux-fixed JS-partition of weight ``w`` and p-core ``mu``.

    Raises ``Infeasible`` in the single exceptional case w = 2, mu = ((p-1)/2)^((p-1)/2).
    """
    path = fixed_witness_path(w, mu, p)
    if not path:
        return EMPTY_PARTITION
    return partition_of_residue_symbol(ResidueSymbol(tuple(path)), p)


__all__ = [
    "EMPTY",
    "Infeasible",
    "build_fixed_graph",
    "fixed_core",
    "fixed_extensions",
    "fixed_witness",
    "fixed_witness_path",
    "is_fixed_column",
    "is_fixed_js",
]
