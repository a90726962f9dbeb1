"""p-rims, p-cores, weights and n-vectors.

The p-core is computed on the abacus. Rectangular cores ``(l^a)`` get their own
small type because they are the only cores JS-partitions can have.
"""
from __future__ import annotations

import json
from dataclasses import dataclass

from .partitions import EMPTY_PARTITION, Node, Partition, content, is_p_regular


@dataclass(frozen=True, order=True)
class CoreShape:
    """Empty, or the rectangle with ``l`` columns and ``a`` rows."""

    l: int = 0
    a: int = 0

    def __post_init__(self):
        if (self.l == 0) != (self.a == 0) or self.l < 0 or self.a < 0:
            raise ValueError(f"invalid core shape ({self.l}, {self.a})")

    @classmethod
    def rect(cls, l: int, a: int) -> "CoreShape":
        if l < 1 or a < 1:
            raise ValueError("rectangle sides must be positive")
        return cls(l, a)

    @property
    def is_empty(self) -> bool:
        return self.l == 0

    @property
    def size(self) -> int:
        return self.l * self.a

    def is_p_core(self, p: int) -> bool:
        return self.is_empty or self.l + self.a - 1 < p

    def as_partition(self) -> Partition:
        return Partition((self.l,) * self.a)

    def to_dict(self) -> dict:
        if self.is_empty:
            return {"kind": "empty"}
        return {"kind": "rect", "l": self.l, "a": self.a}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_dict(cls, d: dict) -> "CoreShape":
        if d["kind"] == "empty":
            return EMPTY
        return cls.rect(d["l"], d["a"])

    def __repr__(self):
        return "Empty" if self.is_empty else f"Rect({self.l}, {self.a})"


EMPTY = CoreShape()


def _rim_removal(parts: tuple[int, ...], p: int) -> list[int]:
    """Number of p-rim nodes in each row.

    The rim is walked from the end of the first row towards the bottom-left.
    A segment takes at most p rim nodes; when it closes, the next one starts
    at the last node of the following row. The walk stops in the final row.
    """
    k = len(parts)
    removed = []
    q = p
    for j in range(k):
        h = parts[j] - parts[j + 1] + 1 if j < k - 1 else parts[j]
        removed.append(min(h, q))
        q = p if h >= q else q - h
    return removed


def _require_regular(lam: Partition, p: int):
    if not lam:
        raise ValueError("the p-rim of the empty partition is undefined")
    if not is_p_regular(lam, p):
        raise ValueError(f"{lam!r} is not {p}-regular")


def p_rim(lam: Partition, p: int) -> list[Node]:
    _require_regular(lam, p)
    nodes = []
    for i, (row, k) in enumerate(zip(lam.parts, _rim_removal(lam.parts, p)), start=1):
        nodes.extend(Node(i, c) for c in range(row, row - k, -1))
    return nodes


def strip_p_rim(lam: Partition, p: int) -> tuple[Partition, int, int]:
    """Remove the p-rim; return ``(remaining, rim length, number of rows)``."""
    _require_regular(lam, p)
    removed = _rim_removal(lam.parts, p)
    rest = tuple(x - k for x, k in zip(lam.parts, removed) if x > k)
    return Partition(rest), sum(removed), len(lam)


def beta_set(lam: Partition, length: int | None = None) -> list[int]:
    k = len(lam) if length is None else length
    parts = list(lam.parts) + [0] * (k - len(lam))
    return [parts[i] + k - 1 - i for i in range(k)]


def partition_from_beta_set(beads) -> Partition:
    beads = sorted(beads, reverse=True)
    k = len(beads)
    return Partition(tuple(x for x in (beads[i] - (k - 1 - i) for i in range(k)) if x > 0))


def p_core(lam: Partition, p: int) -> Partition:
    """Slide every bead up its runner on the p-abacus."""
    beads = beta_set(lam)
    runners = [0] * p
    for b in beads:
        runners[b % p] += 1
    core_beads = [r + p * level for r in range(p) for level in range(runners[r])]
    return partition_from_beta_set(core_beads)


def weight(lam: Partition, p: int) -> int:
    diff = lam.n - p_core(lam, p).n
    assert diff % p == 0
    return diff // p


def n_vector_from_content(c) -> tuple[int, ...]:
    p = len(c)
    return tuple(c[i] - c[(i + 1) % p] for i in range(p))


def n_vector_of(lam: Partition, p: int) -> tuple[int, ...]:
    return n_vector_from_content(content(lam, p))


def rect_n_vector(shape: CoreShape, p: int) -> tuple[int, ...]:
    """n-vector of a rectangular p-core without building its diagram.

    Wide rectangles (a <= l) carry +1 on residues l-a..l-1 and -1 on p-a..p-1.
    Tall ones are obtained by conjugating, which maps n_i to -n_{p-1-i}.
    """
    if not shape.is_p_core(p):
        raise ValueError(f"{shape!r} is not a {p}-core")
    v = [0] * p
    if shape.is_empty:
        return tuple(v)
    l, a = shape.l, shape.a
    if a <= l:
        for r in range(l - a, l):
            v[r % p] += 1
        for r in range(p - a, p):
            v[r] -= 1
        return tuple(v)
    w = rect_n_vector(CoreShape(a, l), p)
    return tuple(-w[p - 1 - i] for i in range(p))


def classify_rect_nvector(v, p: int) -> CoreShape:
    """The rectangular (or empty) p-core whose n-vector is ``v``."""
    v = tuple(v)
    if len(v) != p or sum(v) != 0:
        raise ValueError(f"not an n-vector for p={p}: {v}")
    if not any(v):
        return EMPTY
    for l in range(1, p):
        for a in range(1, p - l + 1):
            shape = CoreShape(l, a)
            if rect_n_vector(shape, p) == v:
                return shape
    raise ValueError(f"{v} is not the n-vector of a rectangular {p}-core")


def core_shape_of(lam: Partition) -> CoreShape | None:
    """Read a partition as a rectangle, if it is one."""
    if not lam:
        return EMPTY
    if len(lam.blocks) == 1:
        l, a = lam.blocks[0]
        return CoreShape(l, a)
    return None


__all__ = [
    "CoreShape",
    "EMPTY",
    "EMPTY_PARTITION",
    "p_rim",
    "strip_p_rim",
    "p_core",
    "weight",
    "n_vector_of",
    "n_vector_from_content",
    "rect_n_vector",
    "classify_rect_nvector",
    "beta_set",
    "partition_from_beta_set",
    "core_shape_of",
]
