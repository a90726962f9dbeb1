import json

import pytest
from hypothesis import given

import oracles
from mullineux.partitions import EMPTY_PARTITION, enumerate_p_regular, enumerate_p_regular_upto, make_partition
from mullineux.symbols import (
    InvalidSymbol,
    MullineuxSymbol,
    ResidueSymbol,
    column_pair_ok,
    is_fixed_residue_symbol,
    is_mullineux_fixed,
    is_singular_column,
    mullineux_conjugate,
    mullineux_map_G,
    mullineux_map_R,
    mullineux_symbol,
    n_vector_from_residue_symbol,
    partition_of_residue_symbol,
    partition_of_symbol,
    reconstruct_mullineux,
    residue_symbol,
    residue_symbol_of,
    symbol_violations,
)
from mullineux.cores import n_vector_of
from strategies import regular_partitions

SQ = make_partition([2, 2])
G_SQ = MullineuxSymbol(((3, 2), (1, 1)))
R_SQ = ResidueSymbol(((0, 0), (1, 4)))


def test_mullineux_symbol_examples():
    assert mullineux_symbol(SQ, 5) == G_SQ
    assert str(G_SQ) == "(3 1 // 2 1)"
    assert mullineux_symbol(make_partition([1]), 3).columns == ((1, 1),)
    with pytest.raises(ValueError):
        mullineux_symbol(make_partition([1, 1, 1]), 3)
    with pytest.raises(ValueError):
        mullineux_symbol(EMPTY_PARTITION, 3)


@pytest.mark.parametrize("p", [3, 5, 7])
def test_rectangle_symbols(p):
    # wide rectangles have symbol (l+a-1, l+a-3, ..., l-a+1 // a, ..., 1)
    for l in range(1, p + 1):
        for a in range(1, min(l, p - 1) + 1):
            G = mullineux_symbol(make_partition([l] * a), p)
            if l + a - 1 < p:
                assert G.top == tuple(l + a - 1 - 2 * i for i in range(a))
                assert G.bottom == tuple(a - i for i in range(a))


def test_symbols_against_rim_walk():
    for p in (2, 3, 5, 7):
        for lam in enumerate_p_regular_upto(16, p, nmin=1):
            top, bottom = oracles.mullineux_symbol_walk(lam.parts, p)
            G = mullineux_symbol(lam, p)
            assert (list(G.top), list(G.bottom)) == (top, bottom)


def test_partition_of_symbol_examples():
    assert partition_of_symbol(G_SQ, 5) == SQ
    assert partition_of_symbol(MullineuxSymbol(((1, 1),)), 5) == make_partition([1])
    G = MullineuxSymbol(((9, 5), (1, 1)))
    brute = [lam for lam in enumerate_p_regular(10, 5) if mullineux_symbol(lam, 5) == G]
    assert len(brute) == 1
    assert partition_of_symbol(G, 5) == brute[0]
    with pytest.raises(InvalidSymbol):
        partition_of_symbol(MullineuxSymbol(((2, 2), (0, 1))), 3)


@pytest.mark.parametrize("p", [3, 5])
def test_partition_of_symbol_exhaustive_n10(p):
    seen = {}
    for lam in enumerate_p_regular(10, p):
        G = mullineux_symbol(lam, p)
        assert G not in seen
        seen[G] = lam
        assert partition_of_symbol(G, p) == lam


def test_residue_symbol_examples():
    assert residue_symbol(G_SQ, 5) == R_SQ
    assert residue_symbol(MullineuxSymbol(((1, 1),)), 5) == ResidueSymbol(((0, 0),))
    x, y = residue_symbol(MullineuxSymbol(((5, 3),)), 5).columns[0]
    assert (x + 1) % 5 == y and is_singular_column(x, y, 5)
    assert str(R_SQ) == "{0 1 // 0 4}"


def test_json_forms():
    assert json.loads(json.dumps(G_SQ.to_dict())) == {"top": [3, 1], "bottom": [2, 1]}
    assert R_SQ.to_dict() == {"x": [0, 1], "y": [0, 4]}
    assert MullineuxSymbol.from_dict(G_SQ.to_dict()) == G_SQ
    assert ResidueSymbol.from_dict(R_SQ.to_dict()) == R_SQ


def test_reconstruct_examples():
    assert reconstruct_mullineux(R_SQ, 5) == G_SQ
    assert reconstruct_mullineux(ResidueSymbol(((0, 0), (4, 1))), 5) == MullineuxSymbol(((9, 5), (1, 1)))
    assert reconstruct_mullineux(ResidueSymbol(((0, 0),)), 5) == MullineuxSymbol(((1, 1),))
    with pytest.raises(InvalidSymbol):
        reconstruct_mullineux(ResidueSymbol(((0, 1),)), 5)


def test_map_examples():
    assert mullineux_map_G(G_SQ, 5) == G_SQ
    one = MullineuxSymbol(((1, 1),))
    assert mullineux_map_G(one, 3) == one
    assert mullineux_map_R(R_SQ, 5) == R_SQ
    for x in range(5):
        mx, my = mullineux_map_R(ResidueSymbol(((x, x + 1),)), 5).columns[0]
        assert (mx + 1) % 5 == my


def test_n_vector_from_residue_symbol():
    assert n_vector_from_residue_symbol(R_SQ, 5) == (1, 1, 0, -1, -1)
    assert n_vector_from_residue_symbol(ResidueSymbol(()), 5) == (0,) * 5


def test_fixed_examples():
    assert is_mullineux_fixed(SQ, 5)
    assert not is_mullineux_fixed(make_partition([2]), 5)
    assert mullineux_conjugate(make_partition([2]), 5) == make_partition([1, 1])
    assert is_fixed_residue_symbol(R_SQ, 5)
    for lam in enumerate_p_regular_upto(12, 2, nmin=1):
        assert is_mullineux_fixed(lam, 2)


def test_mullineux_map_against_good_nodes():
    for p in (2, 3, 5, 7):
        for lam in enumerate_p_regular_upto(14, p, nmin=1):
            assert mullineux_conjugate(lam, p).parts == oracles.mullineux_by_good_nodes(lam.parts, p)


@pytest.mark.parametrize("p", [3, 5, 7])
def test_exhaustive_symbol_properties(p):
    for lam in enumerate_p_regular_upto(18, p, nmin=1):
        G = mullineux_symbol(lam, p)
        R = residue_symbol(G, p)
        assert not symbol_violations(G, p)
        assert G.bottom[-1] <= G.top[-1]
        assert partition_of_symbol(G, p) == lam
        assert reconstruct_mullineux(R, p) == G
        assert partition_of_residue_symbol(R, p) == lam
        GM = mullineux_map_G(G, p)
        assert GM.top == G.top and mullineux_map_G(GM, p) == G
        assert residue_symbol(GM, p) == mullineux_map_R(R, p)
        assert n_vector_from_residue_symbol(R, p) == n_vector_of(lam, p)
        assert (GM == G) == is_fixed_residue_symbol(R, p)


def test_column_pair_rule():
    # (5,3) then (2,1) at p=5: dr = 2 and da = 3
    assert column_pair_ok((5, 3), (2, 1), 5)
    assert not column_pair_ok((5, 3), (5, 1), 5)


@given(regular_partitions(3, max_part=15))
def test_random_round_trip(lam):
    G = mullineux_symbol(lam, 3)
    assert partition_of_symbol(G, 3) == lam
    assert mullineux_conjugate(mullineux_conjugate(lam, 3), 3) == lam
    assert residue_symbol_of(lam, 3) == residue_symbol(G, 3)
