"""Signature sequences and normal/good nodes.

Two independent routes to normality are provided: the prefix-sum records of
a signature sequence (``analyze``), and the block-wise distinct representative
condition solved as a bipartite matching (``normal_nodes_block``).
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import maximum_bipartite_matching

from .partitions import Partition, beta, gamma, indent_nodes, is_p_regular, node_residue, removable_nodes
from .symbols import residue_symbol_of

MINUS = "−"


@dataclass(frozen=True)
class SignatureSequence:
    """Entries ``(residue, sign)`` with sign +1 or -1."""

    entries: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        entries = tuple((int(c), int(e)) for c, e in self.entries)
        if any(e not in (1, -1) for _, e in entries):
            raise ValueError("signs must be +1 or -1")
        object.__setattr__(self, "entries", entries)

    def __len__(self):
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def __getitem__(self, i):
        return self.entries[i]

    def __str__(self):
        return " ".join(f"{c}{'+' if e > 0 else MINUS}" for c, e in self.entries)

    @classmethod
    def parse(cls, text: str, p: int | None = None) -> "SignatureSequence":
        """Read the ``"1+ 2- 0-"`` text form; both ASCII and Unicode minus work."""
        entries = []
        for tok in text.replace(MINUS, "-").split():
            sign = {"+": 1, "-": -1}[tok[-1]]
            res = int(tok[:-1])
            entries.append((res % p if p else res, sign))
        return cls(tuple(entries))

    def to_list(self) -> list[dict]:
        return [{"res": c, "sign": "+" if e > 0 else MINUS} for c, e in self.entries]

    def to_json(self) -> str:
        return json.dumps(self.to_list(), ensure_ascii=False)

    @classmethod
    def from_list(cls, items) -> "SignatureSequence":
        return cls(tuple((d["res"], 1 if d["sign"] == "+" else -1) for d in items))


def sigma(X: SignatureSequence, alpha: int, i: int) -> int:
    if not 0 <= i < len(X):
        raise IndexError(f"index {i} out of range for a sequence of length {len(X)}")
    return sum(e for c, e in X.entries[: i + 1] if c == alpha)


def prefix_sums(X: SignatureSequence, p: int) -> list[list[int]]:
    """``sums[alpha][i]`` is sigma_alpha(i)."""
    sums = [[0] * len(X) for _ in range(p)]
    running = [0] * p
    for i, (c, e) in enumerate(X.entries):
        running[c % p] += e
        for a in range(p):
            sums[a][i] = running[a]
    return sums


def peaks(X: SignatureSequence, p: int, empty_prefix: bool = True) -> tuple[int, ...]:
    """Maximum of sigma_alpha over all prefixes.

    The empty prefix (value 0) counts by default, so peaks are never negative.
    With ``empty_prefix=False`` only indices 0..s are used, and a residue whose
    first entry is ``-`` gets a negative peak; the two sequences N and M then
    disagree on such residues.
    """
    sums = prefix_sums(X, p)
    floor = [0] if empty_prefix else []
    return tuple(max(floor + row) if (row or floor) else 0 for row in sums)


def end_values(X: SignatureSequence, p: int) -> tuple[int, ...]:
    sums = prefix_sums(X, p)
    return tuple(row[-1] if row else 0 for row in sums)


@dataclass
class NormalityReport:
    normal: list[bool]
    good: list[bool]
    heights: dict[int, int]
    peaks: tuple[int, ...]
    end_values: tuple[int, ...]
    residues: list[int] = field(default_factory=list)

    @property
    def normal_indices(self) -> list[int]:
        return [i for i, f in enumerate(self.normal) if f]

    @property
    def good_indices(self) -> list[int]:
        return [i for i, f in enumerate(self.good) if f]

    def normal_residues(self) -> set[int]:
        return {self.residues[i] for i in self.normal_indices}

    def good_residues(self) -> set[int]:
        return {self.residues[i] for i in self.good_indices}


def analyze(X: SignatureSequence, p: int) -> NormalityReport:
    s = len(X)
    normal = [False] * s
    good = [False] * s
    heights = {}
    best = [0] * p  # running maximum of sigma over earlier indices, floored at 0
    running = [0] * p
    for i, (c, e) in enumerate(X.entries):
        c %= p
        running[c] += e
        if e > 0 and running[c] > best[c]:
            normal[i] = True
            heights[i] = running[c]
        best[c] = max(best[c], running[c])
    pk = peaks(X, p)
    seen = set()
    for i in range(s):
        c = X.entries[i][0] % p
        if normal[i] and c not in seen and heights[i] == pk[c]:
            good[i] = True
            seen.add(c)
    return NormalityReport(normal, good, heights, pk, end_values(X, p), [c % p for c, _ in X.entries])


def node_sequence(lam: Partition, p: int) -> SignatureSequence:
    """Removable (+) and indent (-) node residues, read row by row, left to right."""
    nodes = [(nd, 1) for nd in removable_nodes(lam)] + [(nd, -1) for nd in indent_nodes(lam)]
    nodes.sort(key=lambda t: (t[0].row, t[0].col))
    return SignatureSequence(tuple((node_residue(nd, p), e) for nd, e in nodes))


def mullineux_sequence(lam: Partition, p: int) -> SignatureSequence:
    if not is_p_regular(lam, p):
        raise ValueError(f"{lam!r} is not {p}-regular")
    return sequence_of_residue_symbol(residue_symbol_of(lam, p) if lam else (), p)


@dataclass(frozen=True)
class BlockNormality:
    normal: tuple[int, ...]
    good: tuple[int, ...]
    residues: tuple[int, ...]
    heights: dict = field(default_factory=dict, compare=False)


def _has_system_of_representatives(lam: Partition, i: int, p: int) -> bool:
    M = [j for j in range(1, i) if beta(lam, j, i, p) == 0]
    if not M:
        return True
    cands = list(range(1, i))
    rows, cols = [], []
    for r, j in enumerate(M):
        for c, d in enumerate(cands):
            if j < d < i and beta(lam, j, d, p) == 0:
                rows.append(r)
                cols.append(c)
    if len(rows) < len(M):
        return False
    graph = csr_matrix((np.ones(len(rows)), (rows, cols)), shape=(len(M), len(cands)))
    match = maximum_bipartite_matching(graph, perm_type="column")
    return bool(np.all(match >= 0))


def normal_nodes_block(lam: Partition, p: int) -> BlockNormality:
    """Normal and good corner blocks (1-based) from the exponential form."""
    if not is_p_regular(lam, p):
        raise ValueError(f"{lam!r} is not {p}-regular")
    t = len(lam.blocks)
    res = tuple(node_residue(nd, p) for nd in removable_nodes(lam))
    normal = tuple(i for i in range(1, t + 1) if _has_system_of_representatives(lam, i, p))
    good = tuple(i for i in normal if all(gamma(lam, i, k, p) != 0 for k in normal if k > i))
    # height of a normal block: normal blocks of the same residue at or above it
    heights = {i: sum(1 for k in normal if k <= i and res[k - 1] == res[i - 1]) for i in normal}
    return BlockNormality(normal, good, res, heights)


def sequence_of_residue_symbol(R, p: int) -> SignatureSequence:
    """M(lambda) built straight from a residue symbol."""
    entries = [(0, -1)]
    for x, y in R:
        entries += [(x % p, 1), ((x + 1) % p, -1), (y % p, 1), ((y - 1) % p, -1)]
    return SignatureSequence(tuple(entries))
