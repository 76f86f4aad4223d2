from fractions import Fraction

import pytest
from gmpy2 import mpfr

from sequence_graphs.errors import (
    InvalidParam,
    InvalidPermutation,
    LengthsNotNormalized,
    NonpositiveLength,
    OutOfDomain,
)
from sequence_graphs.iet import (
    IETConvention,
    iet_apply,
    iet_new,
    iet_preset,
    kronecker_iet,
)
from sequence_graphs.precision_utils import parse_real, working_precision

DYADIC_POINTS = [Fraction(j, 64) for j in range(64)]


def test_identity() -> None:
    T = iet_new((1,), (1,))
    assert T.k == 1
    for x in DYADIC_POINTS:
        assert T(x) == x


def test_two_interval_rotation_as_written() -> None:
    T = iet_new((2, 1), ("0.25", "0.75"))
    assert T.breakpoints == (0, mpfr("0.25"))
    assert T.images == (mpfr("0.75"), 0)
    assert T(Fraction(1, 8)) == mpfr("0.875")
    assert T(Fraction(1, 2)) == mpfr("0.25")


def test_two_interval_rotation_transposed() -> None:
    T = iet_new((2, 1), ("0.25", "0.75"), convention=IETConvention.TRANSPOSED)
    assert T(Fraction(1, 8)) == mpfr("0.375")
    assert T(Fraction(13, 16)) == mpfr("0.0625")


def test_rotation_has_two_displacements() -> None:
    T = kronecker_iet(parse_real("golden"))
    with working_precision(T.precision_bits):
        shifts = {
            round(float(iet_apply(T, Fraction(j, 1000)) - Fraction(j, 1000)), 9)
            for j in range(1000)
        }
    assert len(shifts) == 2
    low, high = sorted(shifts)
    assert round(high - low, 9) == 1


def test_conventions_are_mutually_inverse() -> None:
    T = iet_new((3, 1, 4, 2), ("1/8", "1/4", "1/2", "1/8"))
    back = T.with_convention(IETConvention.TRANSPOSED)
    for x in DYADIC_POINTS:
        assert back(T(x)) == x
        assert T(back(x)) == x


def test_inverse_spec() -> None:
    T = iet_new((3, 1, 4, 2), ("1/8", "1/4", "1/2", "1/8"))
    inverse = T.inverse()
    assert inverse.perm == (2, 4, 1, 3)
    for x in DYADIC_POINTS:
        assert inverse(T(x)) == x


def test_example_four_starts_at_first_image() -> None:
    T = iet_preset("example-4")
    assert T.perm == (3, 1, 4, 2)
    assert T(0) == T.images[0]
    assert 0 < T.images[0] < 1


def test_convention_other() -> None:
    assert IETConvention.AS_WRITTEN.other is IETConvention.TRANSPOSED
    assert IETConvention.TRANSPOSED.other is IETConvention.AS_WRITTEN


def test_invalid_permutations() -> None:
    with pytest.raises(InvalidPermutation):
        iet_new((1, 1), ("0.5", "0.5"))
    with pytest.raises(InvalidPermutation):
        iet_new((), ())
    with pytest.raises(InvalidPermutation):
        iet_new((0, 1), ("0.5", "0.5"))


def test_invalid_lengths() -> None:
    with pytest.raises(InvalidParam):
        iet_new((2, 1), ("1",))
    with pytest.raises(NonpositiveLength):
        iet_new((2, 1), ("0", "1"))
    with pytest.raises(LengthsNotNormalized):
        iet_new((2, 1), ("0.5", "0.6"))


def test_out_of_domain() -> None:
    T = iet_new((2, 1), ("0.25", "0.75"))
    with pytest.raises(OutOfDomain):
        T(1)
    with pytest.raises(OutOfDomain):
        T(Fraction(-1, 4))


def test_describe() -> None:
    T = iet_new((2, 1), ("0.25", "0.75"))
    description = T.describe()
    assert description["permutation"] == [2, 1]
    assert description["convention"] == "as-written"
    assert description["lengths"][0].startswith("0.25000")
