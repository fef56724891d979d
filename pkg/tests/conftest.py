from __future__ import annotations

import pytest

from bellshift import build_bell_binomial, build_binomials, build_stirling

# B_0..B_12, frozen from exhaustive set-partition enumeration
BELL_SMALL = (1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975, 678570, 4213597)


@pytest.fixture(scope="session")
def bell300():
    return build_bell_binomial(300)


@pytest.fixture(scope="session")
def bell2000():
    return build_bell_binomial(2000)


@pytest.fixture(scope="session")
def stirling50():
    return build_stirling(50)


@pytest.fixture(scope="session")
def binom300():
    return build_binomials(300)
