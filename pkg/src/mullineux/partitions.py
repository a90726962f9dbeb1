"""Integer partitions, Young diagram nodes and p-residues.

Rows and columns are 1-based. Residues are always reduced into ``range(p)``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterator, NamedTuple, Sequence


class Node(NamedTuple):
    row: int
    col: int


@dataclass(frozen=True, order=True)
class Partition:
    """A weakly decreasing tuple of positive parts."""

    parts: tuple[int, ...] = ()

    def __post_init__(self):
        parts = tuple(int(x) for x in self.parts)
        if any(x < 1 for x in parts):
            raise ValueError(f"parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts must be weakly decreasing: {parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def n(self) -> int:
        return sum(self.parts)

    def __len__(self):
        return len(self.parts)

    def __iter__(self):
        return iter(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __bool__(self):
        return bool(self.parts)

    def __repr__(self):
        return f"Partition({list(self.parts)})"

    def __str__(self):
        return format_exponential(self)

    @property
    def blocks(self) -> tuple[tuple[int, int], ...]:
        """Exponential form as ``((l_1, a_1), ..., (l_t, a_t))`` with l_1 > ... > l_t."""
        out: list[list[int]] = []
        for x in self.parts:
            if out and out[-1][0] == x:
                out[-1][1] += 1
            else:
                out.append([x, 1])
        return tuple((l, a) for l, a in out)

    @classmethod
    def from_blocks(cls, blocks: Sequence[tuple[int, int]]) -> "Partition":
        parts: list[int] = []
        for l, a in blocks:
            parts.extend([l] * a)
        return cls(tuple(parts))

    def nodes(self) -> Iterator[Node]:
        for i, row in enumerate(self.parts, start=1):
            for j in range(1, row + 1):
                yield Node(i, j)

    def __contains__(self, node) -> bool:
        i, j = node
        return 1 <= i <= len(self.parts) and 1 <= j <= self.parts[i - 1]

    def to_json(self) -> str:
        return json.dumps(list(self.parts))

    @classmethod
    def from_json(cls, text: str) -> "Partition":
        return cls(tuple(json.loads(text)))


EMPTY_PARTITION = Partition(())


def make_partition(parts: Sequence[int]) -> Partition:
    return Partition(tuple(parts))


def parse_partition(text: str) -> Partition:
    """Parse ``"6,6,5,4"`` or the exponential form ``"5^2,4,1^3"``.

    A JSON array literal is accepted as well; an empty string is the empty partition.
    """
    text = text.strip()
    if text.startswith("["):
        return Partition(tuple(json.loads(text)))
    parts: list[int] = []
    for token in filter(None, (t.strip() for t in text.split(","))):
        if "^" in token:
            base, exp = token.split("^")
            parts.extend([int(base)] * int(exp))
        else:
            parts.append(int(token))
    return Partition(tuple(parts))


def format_exponential(lam: Partition) -> str:
    if not lam:
        return "()"
    items = [str(l) if a == 1 else f"{l}^{a}" for l, a in lam.blocks]
    return "(" + ", ".join(items) + ")"


def is_p_regular(lam: Partition, p: int) -> bool:
    if p < 2:
        raise ValueError("p must be at least 2")
    return all(a < p for _, a in lam.blocks)


def node_residue(node: Node | tuple[int, int], p: int) -> int:
    i, j = node
    return (j - i) % p


def residue_diagram(lam: Partition, p: int) -> list[list[int]]:
    return [[(j - i) % p for j in range(1, row + 1)] for i, row in enumerate(lam.parts, start=1)]


def removable_nodes(lam: Partition) -> list[Node]:
    # One removable node per block: the last cell of the block's last row.
    out = []
    row = 0
    for l, a in lam.blocks:
        row += a
        out.append(Node(row, l))
    return out


def indent_nodes(lam: Partition) -> list[Node]:
    # One indent node at the start of each block, plus one below the diagram.
    out = []
    row = 1
    for l, a in lam.blocks:
        out.append(Node(row, l + 1))
        row += a
    out.append(Node(row, 1))
    return out


def content(lam: Partition, p: int) -> tuple[int, ...]:
    counts = [0] * p
    for i, row in enumerate(lam.parts, start=1):
        for j in range(1, row + 1):
            counts[(j - i) % p] += 1
    return tuple(counts)


def _check_blocks(lam: Partition, i: int, j: int) -> tuple[tuple[int, int], ...]:
    blocks = lam.blocks
    if not 1 <= i <= j <= len(blocks):
        raise IndexError(f"block indices must satisfy 1 <= i <= j <= {len(blocks)}, got ({i}, {j})")
    return blocks


def beta(lam: Partition, i: int, j: int, p: int) -> int:
    """Hook-path length from the indent node of block ``i`` to the removable node of block ``j``, mod p."""
    blocks = _check_blocks(lam, i, j)
    total = blocks[i - 1][0] - blocks[j - 1][0] + sum(a for _, a in blocks[i - 1 : j])
    return total % p


def gamma(lam: Partition, i: int, j: int, p: int) -> int:
    blocks = _check_blocks(lam, i, j)
    total = blocks[i - 1][0] - blocks[j - 1][0] + sum(a for _, a in blocks[i:j])
    return total % p


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return lam
    return Partition(tuple(sum(1 for x in lam.parts if x >= j) for j in range(1, lam.parts[0] + 1)))


def enumerate_p_regular(n: int, p: int) -> Iterator[Partition]:
    """All p-regular partitions of ``n`` in lexicographically decreasing order."""
    if n < 0 or p < 2:
        raise ValueError("need n >= 0 and p >= 2")

    def gen(rest, maxpart):
        if rest == 0:
            yield ()
            return
        for first in range(min(rest, maxpart), 0, -1):
            for mult in range(min(p - 1, rest // first), 0, -1):
                for tail in gen(rest - first * mult, first - 1):
                    yield (first,) * mult + tail

    for parts in gen(n, n):
        yield Partition(parts)


def enumerate_p_regular_upto(nmax: int, p: int, nmin: int = 0) -> Iterator[Partition]:
    for n in range(nmin, nmax + 1):
        yield from enumerate_p_regular(n, p)
