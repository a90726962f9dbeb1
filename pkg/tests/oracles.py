"""Slow, direct implementations used as oracles. They share no code with the package."""
from functools import lru_cache


def regular(parts, p):
    parts = list(parts)
    return all(parts.count(v) < p for v in set(parts))


def rim_cells(parts):
    # rim from the end of row 1 down to the start of the last row
    cells = []
    k = len(parts)
    for i in range(k):
        lo = parts[i + 1] if i + 1 < k else 1
        lo = max(lo, 1)
        for j in range(parts[i], lo - 1, -1):
            cells.append((i + 1, j))
    return cells


def p_rim_cells(parts, p):
    parts = list(parts)
    rim = rim_cells(parts)
    pos = {c: n for n, c in enumerate(rim)}
    out = []
    n = 0
    while n < len(rim):
        seg = rim[n:n + p]
        out.extend(seg)
        last_row = seg[-1][0]
        if len(seg) < p or last_row >= len(parts):
            break
        # the next segment starts at the end of the row below
        n = pos[(last_row + 1, parts[last_row])]
    return out


def mullineux_symbol_walk(parts, p):
    parts = list(parts)
    top, bottom = [], []
    while parts:
        cells = p_rim_cells(parts, p)
        top.append(len(cells))
        bottom.append(len(parts))
        for i, _ in cells:
            parts[i - 1] -= 1
        assert all(parts[i] >= parts[i + 1] for i in range(len(parts) - 1))
        parts = [v for v in parts if v]
    return top, bottom


def _hook_removals(parts, p):
    # all partitions obtained by removing one rim p-hook
    parts = list(parts)
    k = len(parts)
    conj = [sum(1 for v in parts if v >= j) for j in range(1, (parts[0] if parts else 0) + 1)]
    for i in range(1, k + 1):
        for j in range(1, parts[i - 1] + 1):
            hook = parts[i - 1] - j + conj[j - 1] - i + 1
            if hook != p:
                continue
            L = conj[j - 1]
            new = parts[:]
            for r in range(i, L):
                new[r - 1] = parts[r] - 1
            new[L - 1] = j - 1
            yield tuple(v for v in new if v)


@lru_cache(maxsize=None)
def all_cores(parts, p):
    """Set of partitions reachable by stripping p-hooks until none remains."""
    nxt = set(_hook_removals(parts, p))
    if not nxt:
        return frozenset([parts])
    out = set()
    for q in nxt:
        out |= all_cores(q, p)
    return frozenset(out)


def addable(parts):
    parts = list(parts)
    out = []
    for i in range(len(parts) + 1):
        prev = parts[i - 1] if i > 0 else float("inf")
        cur = parts[i] if i < len(parts) else 0
        if cur < prev:
            out.append((i + 1, cur + 1))
    return out


def removable(parts):
    parts = list(parts)
    return [(i + 1, v) for i, v in enumerate(parts) if i + 1 == len(parts) or parts[i + 1] < v]


def normal_cells(parts, p):
    """Removable A of residue i is normal when, going up from A, removable
    i-nodes never fall behind addable i-nodes."""
    res = lambda c: (c[1] - c[0]) % p
    rem, add = removable(parts), addable(parts)
    out = []
    for A in rem:
        i = res(A)
        above = sorted([(c, +1) for c in rem if res(c) == i and c[0] < A[0]]
                       + [(c, -1) for c in add if res(c) == i and c[0] < A[0]], key=lambda t: -t[0][0])
        bal, ok = 0, True
        for _, s in above:
            bal += s
            if bal < 0:
                ok = False
                break
        if ok:
            out.append(A)
    return out


def good_cells(parts, p):
    res = lambda c: (c[1] - c[0]) % p
    best = {}
    for A in normal_cells(parts, p):
        i = res(A)
        if i not in best or A[0] > best[i][0]:
            best[i] = A
    return sorted(best.values())


def cogood_cell(parts, p, i):
    """Highest addable i-node B with, going down from B, addable i-nodes never behind removable ones."""
    res = lambda c: (c[1] - c[0]) % p
    rem, add = removable(parts), addable(parts)
    conormal = []
    for B in add:
        if res(B) != i:
            continue
        below = sorted([(c, +1) for c in add if res(c) == i and c[0] > B[0]]
                       + [(c, -1) for c in rem if res(c) == i and c[0] > B[0]], key=lambda t: t[0][0])
        bal, ok = 0, True
        for _, s in below:
            bal += s
            if bal < 0:
                ok = False
                break
        if ok:
            conormal.append(B)
    return min(conormal) if conormal else None


@lru_cache(maxsize=None)
def mullineux_by_good_nodes(parts, p):
    """Remove a good node of residue i, map the rest, add the co-good node of residue -i."""
    if not parts:
        return ()
    A = good_cells(parts, p)[0]
    i = (A[1] - A[0]) % p
    smaller = list(parts)
    smaller[A[0] - 1] -= 1
    image = list(mullineux_by_good_nodes(tuple(v for v in smaller if v), p))
    B = cogood_cell(tuple(image), p, (-i) % p)
    if B[0] > len(image):
        image.append(1)
    else:
        image[B[0] - 1] += 1
    return tuple(image)


def js_by_definition(parts, p):
    """Direct check of l_i - l_{i+1} + a_i + a_{i+1} = 0 mod p on the block form."""
    blocks = []
    for v in parts:
        if blocks and blocks[-1][0] == v:
            blocks[-1][1] += 1
        else:
            blocks.append([v, 1])
    return all((blocks[i][0] - blocks[i + 1][0] + blocks[i][1] + blocks[i + 1][1]) % p == 0
               for i in range(len(blocks) - 1))
