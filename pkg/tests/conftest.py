"""Shared fixtures: named diagrams, a pairwise-odd 3-component instance,
and the seeded random corpus used by the property and acceptance tests."""

import random

import pytest

import regionchange as rc

TREFOIL_PD = "X 1 4 2 5\nX 3 6 4 1\nX 5 2 6 3\n"
HOPF_PD = "X 4 1 3 2\nX 2 3 1 4\n"
UNKNOT1_PD = "X 1 2 2 1\n"
T24_PD = "X 1 5 2 6\nX 6 2 7 3\nX 3 7 4 8\nX 8 4 5 1\n"
CHAIN3_PD = "X 1 3 2 4\nX 4 2 5 1\nX 7 5 8 6\nX 6 8 3 7\n"

# Triangle with every edge doubled: a 6-crossing plane graph whose medial
# is a 3-component diagram with all three pairwise linking numbers odd.
DOUBLED_TRIANGLE_ROT = (
    ((4, 1), (5, 1), (0, 0), (1, 0)),
    ((1, 1), (0, 1), (2, 0), (3, 0)),
    ((3, 1), (2, 1), (5, 0), (4, 0)),
)


def doubled_triangle() -> rc.SignedPlaneGraph:
    return rc.SignedPlaneGraph(
        3,
        ((0, 1), (0, 1), (1, 2), (1, 2), (2, 0), (2, 0)),
        (1,) * 6,
        DOUBLED_TRIANGLE_ROT,
    )


@pytest.fixture
def trefoil():
    return rc.parse_pd(TREFOIL_PD)


@pytest.fixture
def hopf():
    return rc.parse_pd(HOPF_PD)


@pytest.fixture
def unknot1():
    return rc.parse_pd(UNKNOT1_PD)


@pytest.fixture
def t24():
    return rc.parse_pd(T24_PD)


@pytest.fixture
def chain3():
    return rc.parse_pd(CHAIN3_PD)


@pytest.fixture(scope="session")
def corpus():
    """Seeded random diagrams of assorted sizes, plus the named fixtures."""
    rng = random.Random(20240817)
    diagrams = [
        rc.parse_pd(TREFOIL_PD),
        rc.parse_pd(HOPF_PD),
        rc.parse_pd(UNKNOT1_PD),
        rc.parse_pd(T24_PD),
        rc.parse_pd(CHAIN3_PD),
        rc.medial_diagram(doubled_triangle()),
    ]
    for _ in range(120):
        diagrams.append(rc.random_diagram(rng, rng.randint(1, 12)))
    return diagrams
