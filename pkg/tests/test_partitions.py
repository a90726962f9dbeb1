import json

import pytest
from hypothesis import given
from sympy.utilities.iterables import partitions as sympy_partitions

from mullineux.partitions import (
    EMPTY_PARTITION,
    Node,
    Partition,
    beta,
    conjugate,
    content,
    enumerate_p_regular,
    enumerate_p_regular_upto,
    format_exponential,
    gamma,
    indent_nodes,
    is_p_regular,
    make_partition,
    node_residue,
    parse_partition,
    removable_nodes,
    residue_diagram,
)
from strategies import partitions

BIG = make_partition([12, 7, 7, 5, 5, 5, 3, 1, 1, 1])


def test_make_partition():
    lam = make_partition([6, 6, 5, 4])
    assert lam.n == 21 and len(lam) == 4
    assert make_partition([]).n == 0 and not make_partition([])
    assert make_partition([5, 5, 4, 1, 1, 1]).blocks == ((5, 2), (4, 1), (1, 3))
    assert format_exponential(make_partition([5, 5, 4, 1, 1, 1])) == "(5^2, 4, 1^3)"


@pytest.mark.parametrize("bad", [[1, 2], [3, 0], [-1], [2, 2, 3]])
def test_make_partition_rejects(bad):
    with pytest.raises(ValueError):
        make_partition(bad)


def test_parse():
    assert parse_partition("5^2,4,1^3").parts == (5, 5, 4, 1, 1, 1)
    assert parse_partition("6,6,5,4") == parse_partition("[6,6,5,4]") == parse_partition("6^2, 5, 4")
    assert parse_partition("") == EMPTY_PARTITION
    with pytest.raises(ValueError):
        parse_partition("3,x")
    with pytest.raises(ValueError):
        parse_partition("1,2")


def test_json_round_trip():
    lam = make_partition([6, 6, 5, 4])
    assert json.loads(lam.to_json()) == [6, 6, 5, 4]
    assert Partition.from_json(lam.to_json()) == lam


@given(partitions())
def test_blocks_round_trip(lam):
    assert Partition.from_blocks(lam.blocks) == lam
    assert sum(l * a for l, a in lam.blocks) == lam.n
    ls = [l for l, _ in lam.blocks]
    assert ls == sorted(set(ls), reverse=True)


def test_is_p_regular():
    assert is_p_regular(make_partition([5, 5, 4, 1, 1, 1]), 5)
    assert not is_p_regular(make_partition([1] * 5), 5)
    assert is_p_regular(EMPTY_PARTITION, 2)
    with pytest.raises(ValueError):
        is_p_regular(EMPTY_PARTITION, 1)


def test_node_residue_and_diagram():
    assert node_residue(Node(1, 1), 5) == 0
    assert node_residue(Node(2, 1), 5) == 4
    assert node_residue(Node(4, 4), 5) == 0
    assert residue_diagram(make_partition([6, 6, 5, 4]), 5) == [
        [0, 1, 2, 3, 4, 0], [4, 0, 1, 2, 3, 4], [3, 4, 0, 1, 2], [2, 3, 4, 0]]


def test_removable_indent():
    sq = make_partition([2, 2])
    assert removable_nodes(sq) == [Node(2, 2)]
    assert indent_nodes(sq) == [Node(1, 3), Node(3, 1)]
    assert removable_nodes(EMPTY_PARTITION) == []
    assert indent_nodes(EMPTY_PARTITION) == [Node(1, 1)]
    assert len(removable_nodes(BIG)) == 5 and len(indent_nodes(BIG)) == 6
    assert [node_residue(a, 5) for a in removable_nodes(BIG)] == [1, 4, 4, 1, 1]


def _is_partition(parts):
    return all(parts[i] >= parts[i + 1] for i in range(len(parts) - 1))


@given(partitions())
def test_removable_indent_by_scan(lam):
    # every cell is tried directly
    rows = list(lam.parts)
    rem, ind = [], []
    for i in range(len(rows) + 1):
        for j in range(1, (rows[0] if rows else 0) + 2):
            grid = rows + [0]
            if i < len(rows) and j == grid[i]:
                grid[i] -= 1
                if _is_partition(grid):
                    rem.append(Node(i + 1, j))
            grid = rows + [0]
            if j == grid[i] + 1:
                grid[i] += 1
                if _is_partition(grid):
                    ind.append(Node(i + 1, j))
    assert removable_nodes(lam) == rem
    assert indent_nodes(lam) == ind
    assert len(rem) == len(lam.blocks) and len(ind) == len(lam.blocks) + 1


def test_content():
    assert content(make_partition([6, 6, 5, 4]), 5) == (5, 3, 4, 4, 5)
    assert content(EMPTY_PARTITION, 4) == (0, 0, 0, 0)
    assert content(make_partition([1]), 3) == (1, 0, 0)


@given(partitions())
def test_content_conjugation(lam):
    for p in (3, 5):
        c, cc = content(lam, p), content(conjugate(lam), p)
        assert sum(c) == lam.n
        assert all(cc[i] == c[(-i) % p] for i in range(p))


def test_beta_gamma():
    assert beta(BIG, 1, 2, 5) == 3
    assert gamma(BIG, 2, 2, 5) == 0
    with pytest.raises(IndexError):
        beta(make_partition([2, 2]), 1, 2, 5)
    with pytest.raises(IndexError):
        gamma(BIG, 3, 2, 5)


@given(partitions())
def test_beta_gamma_as_residues(lam):
    t = len(lam.blocks)
    rem, ind = removable_nodes(lam), indent_nodes(lam)
    starts = [nd for nd in ind[:t]]
    for p in (3, 5, 7):
        for i in range(1, t + 1):
            for j in range(i, t + 1):
                same_ir = node_residue(starts[i - 1], p) == node_residue(rem[j - 1], p)
                assert (beta(lam, i, j, p) == 0) == same_ir
                same_rr = node_residue(rem[i - 1], p) == node_residue(rem[j - 1], p)
                assert (gamma(lam, i, j, p) == 0) == same_rr


def test_conjugate():
    assert conjugate(make_partition([3, 1])).parts == (2, 1, 1)
    assert conjugate(make_partition([4, 4, 4])).parts == (3, 3, 3, 3)


@given(partitions())
def test_conjugate_involution(lam):
    assert conjugate(conjugate(lam)) == lam
    assert conjugate(lam).n == lam.n


def test_enumerate_small():
    assert list(enumerate_p_regular(0, 3)) == [EMPTY_PARTITION]
    assert [x.parts for x in enumerate_p_regular(3, 2)] == [(3,), (2, 1)]


@pytest.mark.parametrize("n,p", [(10, 5), (12, 2), (14, 3), (9, 7), (16, 4)])
def test_enumerate_against_sympy(n, p):
    ours = list(enumerate_p_regular(n, p))
    expected = set()
    for d in sympy_partitions(n):
        if all(m < p for m in d.values()):
            expected.add(tuple(sorted((k for k, m in d.items() for _ in range(m)), reverse=True)))
    assert len(ours) == len(expected)
    assert {x.parts for x in ours} == expected
    assert [x.parts for x in ours] == sorted(expected, reverse=True)


def test_enumerate_upto():
    sizes = [lam.n for lam in enumerate_p_regular_upto(6, 3)]
    assert sizes == sorted(sizes)
    assert sum(1 for _ in enumerate_p_regular_upto(6, 3, nmin=6)) == sum(1 for _ in enumerate_p_regular(6, 3))
