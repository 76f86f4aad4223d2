from __future__ import annotations

import pytest

from sequence_graphs.sequences import KroneckerParams, SortedSequence, kronecker_prefix


@pytest.fixture(scope="session")
def golden() -> KroneckerParams:
    return KroneckerParams.from_text("golden")


@pytest.fixture(scope="session")
def golden_prefix(golden: KroneckerParams):  # noqa: ANN201
    def prefix(N: int) -> SortedSequence:
        return kronecker_prefix(golden, N)

    return prefix
