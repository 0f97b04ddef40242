import pytest

from pyordramsey import Color, FunctionFamily, PairLabeling, TripleColoring, TwoColoring

from .settings import PROFILE, settings

settings.load_profile(PROFILE)

# chi_0 and chi_1 on eleven blocks, with the forest they determine
ELEVEN_CHI0 = [7, 2, 3, 4, 2, 5, 6, 5, 9, 7, 10]
ELEVEN_CHI1 = [2, 2, 1, 3, 1, 5, 4, 3, 7, 6, 4]
ELEVEN_PARENTS = {
    1: None,
    2: 1,
    3: 2,
    4: 1,
    5: 4,
    6: 1,
    7: 6,
    8: 6,
    9: None,
    10: 9,
    11: 10,
}


@pytest.fixture
def eleven_chi() -> FunctionFamily:
    """Two labeling functions on eleven blocks."""
    return FunctionFamily.from_lists([ELEVEN_CHI0, ELEVEN_CHI1], n_values=10)


@pytest.fixture
def all_blue_5() -> TwoColoring:
    """All-blue K_5."""
    return TwoColoring.monochromatic(5, Color.BLUE)


@pytest.fixture
def all_red_6() -> TwoColoring:
    """All-red K_6."""
    return TwoColoring.monochromatic(6, Color.RED)


@pytest.fixture
def pentagon() -> TwoColoring:
    """Blue 5-cycle 1-2-3-4-5-1, red diagonals: no monochromatic triangle."""
    return TwoColoring.from_blue_pairs(5, [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)])


@pytest.fixture
def constant_labels() -> PairLabeling:
    """Eight vertices, every pair labelled 1 out of 2."""
    return PairLabeling.constant(8, n_colors=2)


@pytest.fixture
def all_blue_triples() -> TripleColoring:
    """All-blue complete 3-uniform hypergraph on six vertices."""
    return TripleColoring.monochromatic(6, Color.BLUE)
