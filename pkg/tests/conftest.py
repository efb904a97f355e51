import sys
from pathlib import Path

import pytest

from arboreal.classify import SeparatedPair, build_splitting
from arboreal.graphs import SimpleGraph
from arboreal.words import INFINITY, Presentation

sys.path.insert(0, str(Path(__file__).parent))

FIXTURES = Path(__file__).parent.parent / "fixtures"


@pytest.fixture
def fixtures_dir():
    return FIXTURES


def p3_graph():
    return SimpleGraph("abc", [("a", "b"), ("b", "c")])


def p4_graph():
    return SimpleGraph("abcd", [("a", "b"), ("b", "c"), ("c", "d")])


def fig2_graph():
    return SimpleGraph(
        "abcdef",
        [
            ("a", "b"), ("a", "c"), ("b", "c"),
            ("d", "e"), ("a", "e"), ("b", "e"),
            ("d", "f"), ("a", "f"), ("c", "f"),
        ],
    )


@pytest.fixture
def p3_raag():
    g = p3_graph()
    return Presentation(g, {v: INFINITY for v in g.vertices})


@pytest.fixture
def p4_racg():
    g = p4_graph()
    return Presentation(g, {v: 2 for v in g.vertices})


@pytest.fixture
def o2_racg():
    return Presentation(SimpleGraph("ab"), {"a": 2, "b": 2})


@pytest.fixture
def z2_z3():
    return Presentation(SimpleGraph("ab"), {"a": 2, "b": 3})


@pytest.fixture
def z2_z5():
    return Presentation(SimpleGraph("ab"), {"a": 2, "b": 5})


@pytest.fixture
def fig2_raag():
    g = fig2_graph()
    return Presentation(g, {v: INFINITY for v in g.vertices})


@pytest.fixture
def p4_splitting(p4_racg):
    """The splitting over the distance-3 pair (a, d): N = {}, |G_N| = 1."""
    return build_splitting(p4_racg, SeparatedPair("a", "d", (), 1))
