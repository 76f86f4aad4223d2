import pytest

from sequence_graphs.errors import InvalidParam
from sequence_graphs.families import SequenceFamily, SequenceSpec
from sequence_graphs.iet import kronecker_iet
from sequence_graphs.precision_utils import parse_real


def test_from_label() -> None:
    assert SequenceFamily.from_label("vdc") is SequenceFamily.VDC
    assert SequenceFamily.from_label(" Kronecker ") is SequenceFamily.KRONECKER
    assert SequenceFamily.IET.label == "iet"
    with pytest.raises(InvalidParam):
        SequenceFamily.from_label("halton")


def test_prefixes() -> None:
    assert SequenceSpec(SequenceFamily.KRONECKER).prefix(8).pi == (0, 5, 2, 7, 4, 1, 6, 3)
    assert SequenceSpec(SequenceFamily.VDC).prefix(8).pi == (0, 4, 2, 6, 1, 5, 3, 7)
    assert SequenceSpec(SequenceFamily.VDC, base=3).prefix(3).pi == (0, 1, 2)


def test_iet_family() -> None:
    spec = SequenceSpec(SequenceFamily.IET, iet=kronecker_iet(parse_real("golden")))
    assert spec.prefix(8).pi == (0, 5, 2, 7, 4, 1, 6, 3)
    assert spec.describe()["family"] == "iet"
    assert spec.describe()["permutation"] == [2, 1]
    with pytest.raises(InvalidParam):
        SequenceSpec(SequenceFamily.IET).prefix(4)


def test_describe() -> None:
    assert SequenceSpec(SequenceFamily.KRONECKER, theta="sqrt2").describe() == {
        "family": "kronecker",
        "theta": "sqrt2",
    }
    assert SequenceSpec(SequenceFamily.VDC, base=5).describe() == {
        "family": "vdc",
        "base": 5,
    }
