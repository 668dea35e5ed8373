import numpy as np
import pytest

from dalpha.enumeration import enumerate_connected
from dalpha.families import complete
from dalpha.families import cycle
from dalpha.families import path
from dalpha.families import star
from dalpha.families import star_plus
from dalpha.families import turan

NAMED_GRAPHS = {
    "path6": path(6),
    "cycle7": cycle(7),
    "star6": star(6),
    "star_plus7": star_plus(7),
    "turan73": turan(7, 3),
    "complete5": complete(5),
}


@pytest.fixture(scope="session")
def connected_suite():
    """Every connected graph on 3 to 7 vertices, up to isomorphism."""
    return [g for n in range(3, 8) for g in enumerate_connected(n)]


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


@pytest.fixture(params=sorted(NAMED_GRAPHS))
def named_graph(request):
    return NAMED_GRAPHS[request.param]
