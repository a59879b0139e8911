import pathlib

import pytest
from hypothesis import settings

from nulltree.tree import parse_tree

FIXTURES = pathlib.Path(__file__).resolve().parent.parent / "fixtures"

settings.register_profile("suite", max_examples=40, deadline=None)
settings.load_profile("suite")


def load_fixture(name: str):
    return parse_tree((FIXTURES / name).read_text())


@pytest.fixture
def broom6():
    """Star at 1 (leaves 2,3,4) with the path 1-5-6; nullity 2, not an S-tree."""
    return load_fixture("broom6.txt")


@pytest.fixture
def double_broom8():
    """Leaves 2,3,4 at vertex 1 and 7,8 at vertex 6, path 1-5-6; an S-tree."""
    return load_fixture("double_broom8.txt")


@pytest.fixture
def domination16():
    """S-tree with core {1..7} and support {8..16}."""
    return load_fixture("domination16.txt")


@pytest.fixture
def composite18():
    """Three S-parts, two N-parts, four connection edges."""
    return load_fixture("composite18.txt")
