from fractions import Fraction

import pytest

from sequence_graphs.errors import InvalidParam, OutOfRange
from sequence_graphs.sequences import radical_inverse, vdc_prefix, vdc_successor_bits


def test_binary_eight_terms() -> None:
    seq = vdc_prefix(2, 8)
    assert [term.value for term in seq.terms] == [
        Fraction(n, 8) for n in (0, 4, 2, 6, 1, 5, 3, 7)
    ]
    assert seq.pi == (0, 4, 2, 6, 1, 5, 3, 7)


def test_ternary_nine_terms() -> None:
    seq = vdc_prefix(3, 9)
    assert [term.value for term in seq.terms] == [
        Fraction(n, 9) for n in (0, 3, 6, 1, 4, 7, 2, 5, 8)
    ]
    assert seq.pi == (0, 3, 6, 1, 4, 7, 2, 5, 8)


def test_single_term() -> None:
    assert vdc_prefix(2, 1).pi == (0,)


def test_radical_inverse() -> None:
    assert radical_inverse(0) == 0
    assert radical_inverse(6) == Fraction(3, 8)
    assert radical_inverse(5, 3) == Fraction(7, 9)


def test_invalid_arguments() -> None:
    with pytest.raises(InvalidParam):
        vdc_prefix(1, 4)
    with pytest.raises(InvalidParam):
        vdc_prefix(2, 0)
    with pytest.raises(OutOfRange):
        vdc_successor_bits(4, 1)


def test_successor_bits_examples() -> None:
    assert vdc_successor_bits(0, 1) == 2
    assert vdc_successor_bits(3, 1) == 0
    assert vdc_successor_bits(1, 2) == 9
    assert [vdc_successor_bits(i, 1) for i in range(4)] == [2, 3, 1, 0]


@pytest.mark.parametrize("m", [1, 2, 3, 4])
def test_successor_bits_match_sorting(m: int) -> None:
    seq = vdc_prefix(2, 4**m)
    assert tuple(vdc_successor_bits(i, m) for i in range(4**m)) == seq.successor_map()


@pytest.mark.slow
@pytest.mark.parametrize("m", [5, 6])
def test_successor_bits_match_sorting_large(m: int) -> None:
    seq = vdc_prefix(2, 4**m)
    assert tuple(vdc_successor_bits(i, m) for i in range(4**m)) == seq.successor_map()
