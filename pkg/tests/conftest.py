import pytest

from curvebracket.surface import SurfaceSymbol
from curvebracket.words import canonical_cyclic, parse_word


@pytest.fixture(scope="session")
def torus():
    """Once-punctured torus: genus 1, one boundary circle."""
    return SurfaceSymbol(2, parse_word("abAB"))


@pytest.fixture(scope="session")
def pants():
    """Pair of pants: genus 0, three boundary circles."""
    return SurfaceSymbol(2, parse_word("aAbB"))


@pytest.fixture(scope="session")
def genus1b2():
    """Genus 1 with two boundary circles, rank 3."""
    return SurfaceSymbol(3, parse_word("abABcC"))


@pytest.fixture(scope="session")
def annulus():
    return SurfaceSymbol(1, parse_word("aA"))


def cls(text):
    return canonical_cyclic(parse_word(text))
