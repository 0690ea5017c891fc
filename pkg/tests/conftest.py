from __future__ import annotations

import os

import numpy as np
import pytest
from hypothesis import HealthCheck, settings, strategies as st

from tourwidth.digraph import build
from tourwidth.generators import quadratic_residue, transitive

settings.register_profile(
    "default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow]
)
settings.register_profile("thorough", deadline=None, max_examples=500)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))


@st.composite
def semicomplete(draw, min_n: int = 0, max_n: int = 8, tournament: bool = False):
    """Every unordered pair gets one of three orientations: forward, backward or both."""
    n = draw(st.integers(min_n, max_n))
    m = np.zeros((n, n), dtype=bool)
    choices = (0, 1) if tournament else (0, 1, 2)
    for i in range(n):
        for j in range(i + 1, n):
            c = draw(st.sampled_from(choices))
            if c in (0, 2):
                m[i, j] = True
            if c in (1, 2):
                m[j, i] = True
    return build(n, m)


@pytest.fixture
def triangle():
    # a -> b -> c -> a with a, b, c = 0, 1, 2
    return build(3, [[0, 1, 0], [0, 0, 1], [1, 0, 0]])


@pytest.fixture
def tt3():
    return transitive(3)


@pytest.fixture
def qr7():
    return quadratic_residue(7)
