"""Mullineux symbols, residue symbols and the Mullineux map.

A Mullineux symbol lists ``(a_i, r_i)`` for successive p-rim strippings, largest
partition first. The residue symbol reverses the order and keeps only
``x = a - r`` and ``y = 1 - r`` modulo p.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable

from .cores import strip_p_rim
from .partitions import EMPTY_PARTITION, Partition, is_p_regular


class InvalidSymbol(ValueError):
    pass


@dataclass(frozen=True)
class MullineuxSymbol:
    columns: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "columns", tuple((int(a), int(r)) for a, r in self.columns))

    @property
    def top(self) -> tuple[int, ...]:
        return tuple(a for a, _ in self.columns)

    @property
    def bottom(self) -> tuple[int, ...]:
        return tuple(r for _, r in self.columns)

    @property
    def n(self) -> int:
        return sum(self.top)

    def __len__(self):
        return len(self.columns)

    def __iter__(self):
        return iter(self.columns)

    def to_dict(self) -> dict:
        return {"top": list(self.top), "bottom": list(self.bottom)}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, d: dict) -> "MullineuxSymbol":
        if len(d["top"]) != len(d["bottom"]):
            raise ValueError("top and bottom rows differ in length")
        return cls(tuple(zip(d["top"], d["bottom"])))

    def __str__(self):
        return "(" + " ".join(map(str, self.top)) + " // " + " ".join(map(str, self.bottom)) + ")"


@dataclass(frozen=True)
class ResidueSymbol:
    columns: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "columns", tuple((int(x), int(y)) for x, y in self.columns))

    @property
    def x(self) -> tuple[int, ...]:
        return tuple(c[0] for c in self.columns)

    @property
    def y(self) -> tuple[int, ...]:
        return tuple(c[1] for c in self.columns)

    def __len__(self):
        return len(self.columns)

    def __iter__(self):
        return iter(self.columns)

    def to_dict(self) -> dict:
        return {"x": list(self.x), "y": list(self.y)}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, d: dict) -> "ResidueSymbol":
        if len(d["x"]) != len(d["y"]):
            raise ValueError("x and y rows differ in length")
        return cls(tuple(zip(d["x"], d["y"])))

    def __str__(self):
        return "{" + " ".join(map(str, self.x)) + " // " + " ".join(map(str, self.y)) + "}"


def is_singular_column(x: int, y: int, p: int) -> bool:
    return (x + 1 - y) % p == 0


def mullineux_symbol(lam: Partition, p: int) -> MullineuxSymbol:
    if not lam:
        raise ValueError("the empty partition has no Mullineux symbol")
    if not is_p_regular(lam, p):
        raise ValueError(f"{lam!r} is not {p}-regular")
    cols = []
    while lam:
        lam, a, r = strip_p_rim(lam, p)
        cols.append((a, r))
    return MullineuxSymbol(tuple(cols))


def residue_symbol(G: MullineuxSymbol, p: int) -> ResidueSymbol:
    return ResidueSymbol(tuple(((a - r) % p, (1 - r) % p) for a, r in reversed(G.columns)))


def residue_symbol_of(lam: Partition, p: int) -> ResidueSymbol:
    return residue_symbol(mullineux_symbol(lam, p), p)


def column_pair_ok(prev: tuple[int, int], nxt: tuple[int, int], p: int) -> bool:
    """Inequalities between a column and the one after it (the smaller partition).

    The row bound uses the singularity of the larger column, the rim-length
    bound that of the smaller one.
    """
    (a, r), (a2, r2) = prev, nxt
    eps = 0 if a % p == 0 else 1
    eps2 = 0 if a2 % p == 0 else 1
    dr = r - r2
    return eps <= dr < p + eps and dr + eps2 <= a - a2 < p + dr + eps2


def symbol_violations(G: MullineuxSymbol, p: int) -> list[str]:
    problems = []
    cols = G.columns
    for i, (a, r) in enumerate(cols):
        if a < 1 or r < 1:
            problems.append(f"column {i + 1} has a non-positive entry")
    for i in range(len(cols) - 1):
        if not column_pair_ok(cols[i], cols[i + 1], p):
            problems.append(f"columns {i + 1},{i + 2} violate the consecutive-column inequalities")
    if cols and cols[-1][1] > cols[-1][0]:
        problems.append("last column has more rows than rim nodes")
    return problems


def _attach_rim(mu: tuple[int, ...], a: int, r: int, p: int) -> list[tuple[int, ...]]:
    """All partitions with ``r`` rows whose p-rim has ``a`` nodes and leaves ``mu``.

    Rows are filled top-down while replaying the segment bookkeeping of the rim
    walk: a row whose segment does not close forces the next row's length.
    """
    if len(mu) > r or a < r:
        return []
    mu = tuple(mu) + (0,) * (r - len(mu))
    found = []

    def go(j, lam, q, used, exact, upper):
        left = r - j
        if used + left > a:
            return
        if exact is not None:
            choices = [exact]
        else:
            hi = min(upper, mu[j] + q)
            choices = range(hi, mu[j], -1)
        for lj in choices:
            k = lj - mu[j]
            if k < 1 or k > q or (j and lj > lam[-1]) or lj > upper:
                continue
            if j == r - 1:
                if used + k == a and (mu[j] == 0 or k == q):
                    found.append(tuple(lam) + (lj,))
                continue
            if k < q:
                go(j + 1, lam + [lj], q - k, used + k, mu[j] + 1, lj)
            else:
                go(j + 1, lam + [lj], p, used + k, None, min(lj, mu[j] + 1))

    go(0, [], p, 0, None, mu[0] + p)
    return found


def partition_of_symbol(G: MullineuxSymbol, p: int) -> Partition:
    """The unique p-regular partition with Mullineux symbol ``G``."""
    if not G.columns:
        raise InvalidSymbol("empty symbol")
    candidates = {EMPTY_PARTITION}
    for a, r in reversed(G.columns):
        nxt = set()
        for mu in candidates:
            for parts in _attach_rim(mu.parts, a, r, p):
                lam = Partition(parts)
                if is_p_regular(lam, p) and strip_p_rim(lam, p) == (mu, a, r):
                    nxt.add(lam)
        if not nxt:
            raise InvalidSymbol(f"column ({a}, {r}) cannot be attached; {G} is not realizable for p={p}")
        candidates = nxt
    if len(candidates) != 1:
        raise InvalidSymbol(f"{G} is realized by several partitions: {sorted(candidates)}")
    (lam,) = candidates
    return lam


def base_column(x: int, y: int, p: int) -> tuple[int, int]:
    """The Mullineux column of the last (innermost) stripping, a hook partition."""
    r = (1 - y) % p or p
    a = r + x % p
    if r == p and x % p == 0:
        raise InvalidSymbol("{0 // 1} is not the residue symbol of a p-regular partition")
    return a, r


def next_column(prev: tuple[int, int], x: int, y: int, p: int) -> tuple[int, int]:
    """The column preceding ``prev`` in the Mullineux symbol for residues ``(x, y)``.

    The differences of rows and of rim lengths each lie in a half-open window of
    width p, so the residues pin them down.
    """
    a2, r2 = prev
    eps = 0 if is_singular_column(x, y, p) else 1
    dr = eps + ((1 - y) - r2 - eps) % p
    r = r2 + dr
    lo = dr + (0 if a2 % p == 0 else 1)
    da = lo + ((x + r) - a2 - lo) % p
    return a2 + da, r


def mullineux_from_residues(R: ResidueSymbol | Iterable[tuple[int, int]], p: int) -> MullineuxSymbol:
    """Window reconstruction only, with no realizability check."""
    cols: list[tuple[int, int]] = []
    for x, y in R:
        cols.append(base_column(x, y, p) if not cols else next_column(cols[-1], x, y, p))
    return MullineuxSymbol(tuple(reversed(cols)))


def reconstruct_mullineux(R: ResidueSymbol, p: int) -> MullineuxSymbol:
    G = mullineux_from_residues(R, p)
    if residue_symbol(G, p) != ResidueSymbol(tuple((x % p, y % p) for x, y in R)):
        raise InvalidSymbol(f"{R} does not reduce back to itself")
    partition_of_symbol(G, p)
    return G


def partition_of_residue_symbol(R: ResidueSymbol, p: int) -> Partition:
    return partition_of_symbol(reconstruct_mullineux(R, p), p)


def mullineux_map_G(G: MullineuxSymbol, p: int) -> MullineuxSymbol:
    return MullineuxSymbol(tuple((a, a - r + (0 if a % p == 0 else 1)) for a, r in G.columns))


def mullineux_map_R(R: ResidueSymbol, p: int) -> ResidueSymbol:
    cols = []
    for x, y in R.columns:
        delta = 1 if is_singular_column(x, y, p) else 0
        cols.append(((delta - y) % p, (delta - x) % p))
    return ResidueSymbol(tuple(cols))


def mullineux_conjugate(lam: Partition, p: int) -> Partition:
    if not lam:
        return lam
    return partition_of_symbol(mullineux_map_G(mullineux_symbol(lam, p), p), p)


def n_vector_from_residue_symbol(R: ResidueSymbol, p: int) -> tuple[int, ...]:
    v = [0] * p
    for x, y in R.columns:
        v[x % p] += 1
        v[(y - 1) % p] -= 1
    return tuple(v)


def is_fixed_residue_symbol(R: ResidueSymbol, p: int) -> bool:
    return all((x + y - (1 if is_singular_column(x, y, p) else 0)) % p == 0 for x, y in R.columns)


def is_mullineux_fixed(lam: Partition, p: int) -> bool:
    if not is_p_regular(lam, p):
        raise ValueError(f"{lam!r} is not {p}-regular")
    if not lam:
        return True
    return is_fixed_residue_symbol(residue_symbol_of(lam, p), p)
