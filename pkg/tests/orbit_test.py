from collections.abc import Callable
from fractions import Fraction

import pytest
from gmpy2 import mpfr

from sequence_graphs.errors import InvalidParam, OrbitRevisit
from sequence_graphs.graphs import build_graph
from sequence_graphs.iet import (
    DyadicOdometer,
    IETConvention,
    iet_new,
    iet_orbit,
    iet_preset,
    kronecker_iet,
    matching_convention,
    orbit_prefix,
    orbit_sequence,
    verify_evolution,
)
from sequence_graphs.precision_utils import parse_real
from sequence_graphs.sequences import SortedSequence, vdc_prefix

Prefix = Callable[[int], SortedSequence]


def test_identity_revisits_immediately() -> None:
    report = iet_orbit(iet_new((1,), (1,)), mpfr(0), 5)
    assert report.revisit_index == 1
    assert not report.distinct_ok
    with pytest.raises(OrbitRevisit):
        orbit_sequence(report)


def test_identity_with_two_intervals() -> None:
    with pytest.raises(OrbitRevisit):
        orbit_prefix(iet_new((1, 2), ("0.5", "0.5")), 3)


def test_nonpositive_count_rejected() -> None:
    with pytest.raises(InvalidParam):
        iet_orbit(DyadicOdometer(), Fraction(0), 0)


def test_odometer_orbit_is_van_der_corput() -> None:
    report = iet_orbit(DyadicOdometer(), Fraction(0), 8)
    assert report.distinct_ok
    assert report.N == 8
    assert list(report.points) == [term.value for term in vdc_prefix(2, 8).terms]


def test_tolerance_controls_revisits() -> None:
    report = iet_orbit(DyadicOdometer(), Fraction(0), 8, tolerance=Fraction(1, 2))
    assert report.revisit_index == 2


def test_golden_rotation_orbit_matches_kronecker(golden_prefix: Prefix) -> None:
    T = kronecker_iet(parse_real("golden"))
    report = iet_orbit(T, 0, 8)
    expected = golden_prefix(8)
    assert report.distinct_ok
    for point, term in zip(report.points, expected.terms, strict=True):
        assert abs(point - term.value) < mpfr(2) ** -100


def test_golden_rotation_graph_matches_kronecker(golden_prefix: Prefix) -> None:
    T = kronecker_iet(parse_real("golden"))
    assert build_graph(orbit_prefix(T, 100)) == build_graph(golden_prefix(100))


def test_evolution_of_van_der_corput() -> None:
    assert verify_evolution(vdc_prefix(2, 64), DyadicOdometer())
    assert not verify_evolution(vdc_prefix(3, 64), DyadicOdometer())


@pytest.mark.slow
def test_evolution_of_van_der_corput_long() -> None:
    assert verify_evolution(vdc_prefix(2, 4096), DyadicOdometer())


def test_evolution_of_kronecker(golden_prefix: Prefix) -> None:
    seq = golden_prefix(1000)
    as_written = kronecker_iet(parse_real("golden"), convention=IETConvention.AS_WRITTEN)
    assert verify_evolution(seq, as_written, mpfr(2) ** -64)
    assert not verify_evolution(seq, as_written, any_convention=False)
    assert matching_convention(seq, as_written) is IETConvention.TRANSPOSED
    transposed = as_written.with_convention(IETConvention.TRANSPOSED)
    assert verify_evolution(seq, transposed, any_convention=False)


def test_kronecker_is_not_the_identity(golden_prefix: Prefix) -> None:
    assert not verify_evolution(golden_prefix(20), iet_new((1,), (1,)))


@pytest.mark.parametrize("name", ["example-4", "example-6"])
def test_example_orbits_have_few_gaps(name: str) -> None:
    T = iet_preset(name)
    seq = orbit_prefix(T, 1000)
    gaps = {s - i for i, s in enumerate(seq.successor_map())}
    assert len(gaps) <= T.k + 2
