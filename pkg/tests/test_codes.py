import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lcdeg.codes import (
    BinaryMatrix,
    circulant,
    format_matrix,
    gadget_code_search,
    gadget_distance,
    gf2_mul,
    in_column_space,
    invert,
    kernel_dim,
    min_distance,
    min_distance_by_support,
    mul_bits,
    parse_matrix,
    rank,
    read_matrix,
    systematic_form,
)
from lcdeg.errors import CapExceeded, InputError
from lcdeg.locmindeg import delta_loc_bipartite
from lcdeg.reduction import gadget_graph

HAMMING = BinaryMatrix.from_lists([
    [1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1],
    [1, 1, 0, 1], [1, 0, 1, 1], [0, 1, 1, 1],
])


@st.composite
def matrices(draw, max_rows=9, max_cols=5):
    cols = draw(st.integers(1, max_cols))
    rows = draw(st.integers(1, max_rows))
    data = draw(st.lists(st.integers(0, (1 << cols) - 1), min_size=rows, max_size=rows))
    return BinaryMatrix(rows, cols, tuple(data))


def test_gf2_mul_examples():
    assert gf2_mul(BinaryMatrix.from_lists([[1, 1], [0, 1]]), [1, 1]) == (0, 1)
    assert gf2_mul(BinaryMatrix.identity(3), [1, 0, 1]) == (1, 0, 1)
    assert gf2_mul(BinaryMatrix.zeros(2, 2), [1, 1]) == (0, 0)
    with pytest.raises(InputError):
        gf2_mul(BinaryMatrix.identity(3), [1, 0])


def test_matrix_validation():
    with pytest.raises(InputError):
        BinaryMatrix.from_lists([[1, 0], [1]])
    with pytest.raises(InputError):
        BinaryMatrix.from_lists([[2]])
    with pytest.raises(InputError):
        BinaryMatrix(1, 0, (0,))
    assert BinaryMatrix(0, 3, ()).rows == 0


def test_rank_and_kernel():
    assert rank(HAMMING) == 4 and kernel_dim(HAMMING) == 0
    ones = BinaryMatrix.from_lists([[1, 1]] * 3)
    assert rank(ones) == 1 and kernel_dim(ones) == 1
    m = BinaryMatrix.from_lists([[1, 1], [1, 1], [0, 0]])
    assert kernel_dim(m) == 1


def test_invert():
    m = BinaryMatrix.from_lists([[1, 1, 0], [0, 1, 1], [0, 0, 1]])
    assert m.matmul(invert(m)) == BinaryMatrix.identity(3)
    with pytest.raises(InputError):
        invert(BinaryMatrix.from_lists([[1, 1], [1, 1]]))


def test_systematic_form_examples():
    sf = systematic_form(HAMMING)
    assert sf.aprime.to_lists() == [[1, 1, 0, 1], [1, 0, 1, 1], [0, 1, 1, 1]]
    assert sf.row_order == tuple(range(7))
    with pytest.raises(InputError, match="nonzero kernel"):
        systematic_form(BinaryMatrix.from_lists([[1, 1]] * 3))


def _codewords(a):
    return {mul_bits(a, x) for x in range(1 << a.cols)}


def _permuted(a, order):
    return BinaryMatrix(a.rows, a.cols, tuple(a.data[i] for i in order))


@settings(max_examples=200, deadline=None)
@given(matrices(max_rows=10, max_cols=5))
def test_systematic_form_preserves_code(a):
    if kernel_dim(a) > 0:
        with pytest.raises(InputError):
            systematic_form(a)
        return
    sf = systematic_form(a)
    k = a.cols
    top = BinaryMatrix.identity(k).stack(sf.aprime)
    # same code after the coordinate permutation
    assert _codewords(top) == _codewords(_permuted(a, sf.row_order))
    assert _permuted(a, sf.row_order).matmul(sf.transform) == top
    for x in range(1 << k):
        assert mul_bits(_permuted(a, sf.row_order), sf.message_for(x)) == mul_bits(top, x)


def test_systematic_form_exhaustive_small():
    # every full-rank 3x2 and 4x2 matrix
    for rows in (3, 4):
        for data in itertools.product(range(4), repeat=rows):
            a = BinaryMatrix(rows, 2, data)
            if kernel_dim(a):
                continue
            sf = systematic_form(a)
            top = BinaryMatrix.identity(2).stack(sf.aprime)
            assert _codewords(top) == _codewords(_permuted(a, sf.row_order))


def test_min_distance_examples():
    md = min_distance(HAMMING)
    assert md.value == 3 and md.kernel_dim == 0
    assert bin(mul_bits(HAMMING, md.witness)).count("1") == 3
    assert min_distance(BinaryMatrix.from_lists([[1], [1]])).value == 2
    sing = min_distance(BinaryMatrix.from_lists([[1, 1]] * 3))
    assert sing.value == 0 and sing.witness and mul_bits(BinaryMatrix.from_lists([[1, 1]] * 3), sing.witness) == 0
    with pytest.raises(CapExceeded):
        min_distance(BinaryMatrix.identity(25))
    assert min_distance(BinaryMatrix.identity(6), cap=6).value == 1


@settings(max_examples=200, deadline=None)
@given(matrices(max_rows=10, max_cols=6))
def test_min_distance_matches_support_oracle(a):
    md = min_distance(a)
    assert md.value == min_distance_by_support(a)
    if md.kernel_dim == 0:
        assert bin(mul_bits(a, md.witness)).count("1") == md.value


def test_witness_bits():
    md = min_distance(HAMMING)
    bits = md.witness_bits(4)
    assert sum(b << j for j, b in enumerate(bits)) == md.witness


def test_in_column_space():
    assert in_column_space(HAMMING, mul_bits(HAMMING, 0b1011))
    assert not in_column_space(HAMMING, 1)


def test_circulant():
    c = circulant(0b0011, 4)
    assert c.to_lists() == [[1, 1, 0, 0], [0, 1, 1, 0], [0, 0, 1, 1], [1, 0, 0, 1]]


def test_gadget_search_examples():
    b = gadget_code_search(1, 2, 10, seed=0)
    assert b is not None and b.to_lists() == [[1]]
    b = gadget_code_search(10, 5, 20_000, seed=1)
    assert b is not None and gadget_distance(b) >= 5
    assert gadget_code_search(10, 5, 20_000, seed=1) == b
    # a [4, 2] code has distance at most 2
    assert gadget_code_search(2, 4, 200, seed=0) is None
    b = gadget_code_search(10, 6, 10_000, seed=0, family="circulant")
    assert b is not None and gadget_distance(b) == 6


def test_gadget_search_errors():
    with pytest.raises(InputError):
        gadget_code_search(0, 2, 1, 0)
    with pytest.raises(InputError):
        gadget_code_search(3, 0, 1, 0)
    with pytest.raises(InputError):
        gadget_code_search(3, 2, 1, 0, family="other")


def test_gadget_link_to_delta_loc():
    rng = random.Random(11)
    for _ in range(40):
        side = rng.randint(1, 12)
        b = BinaryMatrix(side, side, tuple(rng.getrandbits(side) for _ in range(side)))
        assert delta_loc_bipartite(gadget_graph(b)).value + 1 == gadget_distance(b)


def test_matrix_io(tmp_path):
    text = format_matrix(HAMMING)
    assert text.splitlines()[:2] == ["7 4", "1000"]
    assert parse_matrix(text) == HAMMING
    path = tmp_path / "m.txt"
    path.write_text("# comment\n" + text)
    assert read_matrix(path) == HAMMING


@pytest.mark.parametrize("text", ["", "2\n", "2 2\n10\n", "1 2\n1x\n", "1 2\n101\n"])
def test_matrix_parse_errors(text):
    with pytest.raises(InputError):
        parse_matrix(text)
