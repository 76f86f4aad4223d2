from collections.abc import Callable

import pytest

from sequence_graphs.embedding import (
    DartOrder,
    RotationSystem,
    canonical_rotation,
    face_trace,
    torus_embedding,
    torus_rotation_system,
)
from sequence_graphs.errors import (
    DegenerateConnectionSet,
    DegenerateGraph,
    InvalidParam,
    InvalidRotation,
)
from sequence_graphs.gap_analysis import nice_N_scan
from sequence_graphs.graphs import build_graph, g_prime
from sequence_graphs.iet import iet_preset, orbit_prefix
from sequence_graphs.sequences import (
    KroneckerParams,
    SortedSequence,
    kronecker_prefix,
    vdc_prefix,
)

Prefix = Callable[[int], SortedSequence]


def test_single_loop_is_a_sphere() -> None:
    rs = RotationSystem((0,), ((0, 0),), {0: (0, 1)})
    report = face_trace(rs)
    assert (report.V, report.E, report.F) == (1, 1, 2)
    assert report.euler_characteristic == 2
    assert report.genus == 0


def test_isolated_vertex_counts_one_face() -> None:
    rs = RotationSystem((0, 1), ((0, 0),), {0: (0, 1)})
    report = face_trace(rs)
    assert report.components == 2
    assert report.euler_characteristic == 4
    assert report.genus == 0


@pytest.mark.parametrize(("N", "c"), [(8, 5), (5, 2), (13, 8), (21, 13)])
def test_torus(N: int, c: int) -> None:
    report = face_trace(torus_rotation_system(N, c))
    assert report.euler_characteristic == 0
    assert report.genus == 1
    assert report.face_lengths() == {4: N}


def test_degenerate_connection_set() -> None:
    with pytest.raises(DegenerateConnectionSet):
        torus_rotation_system(3, 1)
    with pytest.raises(DegenerateConnectionSet):
        torus_rotation_system(3, 2)
    report = face_trace(torus_rotation_system(3, 2, allow_degenerate=True))
    assert report.genus == 1


def test_invalid_circulants() -> None:
    with pytest.raises(InvalidParam):
        torus_rotation_system(1, 1)
    with pytest.raises(InvalidParam):
        torus_rotation_system(8, 16)


def test_torus_embedding() -> None:
    embedding = torus_embedding(8, 5)
    assert embedding.order is DartOrder.STANDARD
    assert embedding.faces.genus == 1
    document = embedding.to_json()
    assert document["order"] == "standard"
    assert document["faces"]["F"] == 8


def test_every_nice_n_embeds_in_the_torus() -> None:
    for theta in ("golden", "sqrt2"):
        seq = kronecker_prefix(KroneckerParams.from_text(theta), 2000)
        for N in nice_N_scan(theta, 2000):
            if N < 3:  # noqa: PLR2004
                continue
            c = seq.prefix(N).pi[1]
            assert torus_embedding(N, c).faces.genus == 1


def test_validate() -> None:
    edges = ((0, 1),)
    with pytest.raises(InvalidRotation):
        RotationSystem((0, 1), edges, {0: (1,), 1: (0,)}).validate()
    with pytest.raises(InvalidRotation):
        RotationSystem((0, 1), edges, {0: (0,), 1: ()}).validate()
    with pytest.raises(InvalidRotation):
        RotationSystem((0, 1), edges, {0: (0, 0), 1: (1,)}).validate()
    with pytest.raises(InvalidRotation):
        RotationSystem((0, 1), edges, {0: (0, 4), 1: (1,)}).validate()


def test_canonical_rotation_of_a_nice_kronecker_graph(golden_prefix: Prefix) -> None:
    graph = build_graph(golden_prefix(8)).to_multigraph()
    report = face_trace(canonical_rotation(graph))
    assert report.genus == 1


def test_canonical_rotation_small_graphs(golden_prefix: Prefix) -> None:
    report = face_trace(canonical_rotation(build_graph(vdc_prefix(2, 3)).to_multigraph()))
    assert (report.V, report.E) == (3, 6)
    with pytest.raises(DegenerateGraph):
        canonical_rotation(build_graph(golden_prefix(2)).to_multigraph())


def test_canonical_rotation_skips_the_deleted_edge() -> None:
    graph = g_prime(vdc_prefix(2, 256))
    first = face_trace(canonical_rotation(graph))
    second = face_trace(canonical_rotation(g_prime(vdc_prefix(2, 256))))
    assert first.E == 511
    assert first.components == 1
    assert first.genus == second.genus
    assert first.genus >= 0


@pytest.mark.parametrize("name", ["example-4", "example-6"])
def test_example_iets_report_a_genus(name: str) -> None:
    graph = g_prime(orbit_prefix(iet_preset(name), 1000))
    report = face_trace(canonical_rotation(graph))
    assert report.E == 1999
    assert report.genus >= 0
