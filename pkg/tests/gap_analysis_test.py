import random
from collections.abc import Callable
from fractions import Fraction

import gmpy2
import pytest

from sequence_graphs.errors import InvalidParam
from sequence_graphs.gap_analysis import (
    GapRun,
    _insertion_neighbours,
    circulant_check,
    gap_count,
    gap_profile,
    growth_ratios,
    is_nice_N,
    next_nice_N,
    nice_N_scan,
    three_gap_sweep,
    value_gaps,
    verify_three_gap,
)
from sequence_graphs.graphs import build_graph
from sequence_graphs.sequences import (
    KroneckerParams,
    SortedSequence,
    kronecker_prefix,
    vdc_prefix,
)

Prefix = Callable[[int], SortedSequence]

FIBONACCI = [2, 3, 5, 8, 13, 21, 34, 55, 89]


def test_profile_golden_eight(golden_prefix: Prefix) -> None:
    profile = gap_profile(golden_prefix(8))
    assert profile.gaps == (GapRun(5, 0, 3), GapRun(-3, 3, 8))
    assert profile.values == (5, -3)
    assert all(value % 8 == 5 for value in profile.values)
    assert (profile.pi1, profile.piN1) == (5, 3)


def test_profile_golden_six(golden_prefix: Prefix) -> None:
    profile = gap_profile(golden_prefix(6))
    assert profile.gaps == (GapRun(5, 0, 1), GapRun(2, 1, 3), GapRun(-3, 3, 6))
    document = profile.to_json()
    assert document["gaps"] == [5, 2, -3]
    assert document["distinct_count"] == 3
    assert document["runs"][1] == {"value": 2, "lo": 1, "hi": 3}


def test_profile_needs_two_terms(golden_prefix: Prefix) -> None:
    with pytest.raises(InvalidParam):
        gap_profile(golden_prefix(1))
    with pytest.raises(InvalidParam):
        is_nice_N(golden_prefix(1))
    assert verify_three_gap(golden_prefix(1))


def test_nice(golden_prefix: Prefix) -> None:
    assert is_nice_N(golden_prefix(8))
    assert not is_nice_N(golden_prefix(6))
    assert is_nice_N(golden_prefix(2))


def test_three_gap_golden(golden_prefix: Prefix) -> None:
    seq = golden_prefix(300)
    assert all(verify_three_gap(seq.prefix(N)) for N in range(2, 301))


def test_three_gap_sqrt2() -> None:
    seq = kronecker_prefix(KroneckerParams.from_text("sqrt2"), 1000)
    assert verify_three_gap(seq)
    assert gap_profile(seq).distinct_count <= 3


def test_van_der_corput_breaks_three_gap() -> None:
    seq = vdc_prefix(2, 16)
    assert gap_count(seq) > 3
    assert not verify_three_gap(seq)


def _random_thetas(count: int, seed: int = 20240607) -> list[str]:
    rng = random.Random(seed)
    return ["0." + "".join(rng.choices("0123456789", k=40)) for _ in range(count)]


def test_insertion_neighbours() -> None:
    seq = vdc_prefix(2, 16)
    pred, succ = _insertion_neighbours(seq)
    for n in range(1, 16):
        head = seq.prefix(n + 1)
        assert succ[n] == head.successor(n)
        assert head.successor(pred[n]) == n


def test_three_gap_sweep_agrees_with_direct_check(golden_prefix: Prefix) -> None:
    assert three_gap_sweep("golden", 300) == []
    seq = golden_prefix(300)
    assert all(verify_three_gap(seq.prefix(N)) for N in range(2, 301, 7))
    with pytest.raises(InvalidParam):
        three_gap_sweep("golden", 1)


@pytest.mark.parametrize("theta", ["golden", "sqrt2", *_random_thetas(20)])
def test_three_gap_sweep(theta: str) -> None:
    assert three_gap_sweep(theta, 10_000) == []


@pytest.mark.slow
@pytest.mark.parametrize("theta", ["golden", "sqrt2", "pi", "0.1234567891011121314"])
def test_three_gap_positions(theta: str) -> None:
    seq = kronecker_prefix(KroneckerParams.from_text(theta), 10_000)
    for N in range(2, 10_001, 37):
        prefix = seq.prefix(N)
        assert verify_three_gap(prefix)
        assert gap_count(prefix) <= 3


def test_scan_golden() -> None:
    assert nice_N_scan("golden", 8) == [2, 3, 5, 8]
    assert nice_N_scan("golden", 2) == [2]
    nice = nice_N_scan("golden", 100)
    assert set(FIBONACCI) <= set(nice)
    assert growth_ratios(nice)[-1] >= 1.3


def test_scan_agrees_with_direct_check(golden_prefix: Prefix) -> None:
    seq = golden_prefix(200)
    direct = [N for N in range(2, 201) if is_nice_N(seq.prefix(N))]
    assert nice_N_scan("golden", 200) == direct


def test_scan_sqrt2() -> None:
    assert nice_N_scan(KroneckerParams.from_text("sqrt2"), 1000)
    with pytest.raises(InvalidParam):
        nice_N_scan("sqrt2", 1)


def test_next_nice() -> None:
    assert next_nice_N("golden", 6) == 8
    assert next_nice_N("golden", 8) == 13
    assert next_nice_N("golden", 90) == 144


def test_growth_ratios() -> None:
    assert growth_ratios([2, 4, 6]) == [2.0, 1.5]
    assert growth_ratios([2]) == []


def test_circulant(golden_prefix: Prefix) -> None:
    seq = golden_prefix(8)
    connection_set = circulant_check(build_graph(seq), seq)
    assert connection_set is not None
    assert connection_set.connections == (1, 5)
    assert not connection_set.degenerate

    seq = golden_prefix(6)
    assert circulant_check(build_graph(seq), seq) is None


def test_circulant_degenerate(golden_prefix: Prefix) -> None:
    seq = golden_prefix(2)
    connection_set = circulant_check(build_graph(seq), seq)
    assert connection_set is not None
    assert connection_set.connections == (1,)
    assert connection_set.multiplicity == 2
    assert connection_set.to_json()["degenerate"]

    seq = golden_prefix(3)
    assert circulant_check(build_graph(seq), seq).degenerate


def test_circulant_for_every_nice_n() -> None:
    for theta in ("golden", "sqrt2"):
        seq = kronecker_prefix(KroneckerParams.from_text(theta), 2000)
        for N in nice_N_scan(theta, 2000):
            prefix = seq.prefix(N)
            connection_set = circulant_check(build_graph(prefix), prefix)
            assert connection_set is not None
            assert connection_set.c == prefix.pi[1]


def test_value_gaps(golden_prefix: Prefix) -> None:
    assert len(value_gaps(golden_prefix(8))) == 2
    assert len(value_gaps(golden_prefix(6))) == 3
    assert value_gaps(vdc_prefix(2, 16)) == (Fraction(1, 16),)


def test_value_gaps_ignore_ambient_precision(golden_prefix: Prefix) -> None:
    seq = golden_prefix(8)
    with gmpy2.local_context(gmpy2.get_context(), precision=24):
        assert len(value_gaps(seq)) == 2
    for N in (13, 21, 34, 55):
        assert len(value_gaps(golden_prefix(N))) == 2
    assert all(len(value_gaps(golden_prefix(N))) <= 3 for N in range(2, 120))
