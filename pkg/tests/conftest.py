from __future__ import annotations

import pytest

from kneserhom import KneserGraph, build


@pytest.fixture(scope="session")
def kn21() -> KneserGraph:
    return build(2, 1)


@pytest.fixture(scope="session")
def kn31() -> KneserGraph:
    return build(3, 1)


@pytest.fixture(scope="session")
def kn41() -> KneserGraph:
    return build(4, 1)


@pytest.fixture(scope="session")
def kn42() -> KneserGraph:
    return build(4, 2)


@pytest.fixture(scope="session")
def kn52() -> KneserGraph:
    return build(5, 2)


# Betti tables of R/I for small graphs, frozen from the exhaustive
# Hochster-formula oracle over GF(2) and re-checked in characteristic 0.
FROZEN_TABLES = {
    (2, 1): {(0, 0): 1, (1, 2): 2, (2, 4): 1},
    (3, 1): {(0, 0): 1, (1, 2): 6, (2, 3): 6, (2, 4): 3, (3, 5): 6, (4, 6): 2},
    (4, 1): {(0, 0): 1, (1, 2): 12, (2, 3): 24, (2, 4): 6, (3, 4): 14,
             (3, 5): 24, (4, 6): 32, (5, 7): 16, (6, 8): 3},
    (4, 2): {(0, 0): 1, (1, 2): 6, (2, 4): 15, (3, 6): 20, (4, 8): 15,
             (5, 10): 6, (6, 12): 1},
}
