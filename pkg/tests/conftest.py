import pytest

from cycleq.class_graph import build_gamma


@pytest.fixture(scope="session")
def gamma():
    """Graph cache shared across the sweeping tests."""
    cache = {}

    def get(n):
        if n not in cache:
            cache[n] = build_gamma(n)
        return cache[n]

    return get
