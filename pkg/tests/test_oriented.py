import itertools

import pytest
from hypothesis import given, strategies as st

from agenda_control.errors import InputError
from agenda_control.oriented import OrientedGraph, mcgarvey_election
from agenda_control.reductions import mcgarvey_election as exported


def test_empty_graph_gives_no_votes():
    e = mcgarvey_election(OrientedGraph(("x", "y")))
    assert e.n == 0 and e.ties("x", "y")


def test_single_arc():
    e = mcgarvey_election(OrientedGraph(("x", "y", "z"), frozenset({("x", "y")})))
    assert e.n == 2 and e.beats("x", "y")
    assert e.ties("x", "z") and e.ties("y", "z")


def test_bad_graphs():
    with pytest.raises(InputError):
        OrientedGraph(("a", "b"), frozenset({("a", "b"), ("b", "a")}))
    with pytest.raises(InputError):
        OrientedGraph(("a",), frozenset({("a", "a")}))


def test_reexported():
    assert exported is mcgarvey_election


@st.composite
def oriented(draw, max_v=5):
    n = draw(st.integers(1, max_v))
    vs = [f"v{i}" for i in range(n)]
    arcs = set()
    for a, b in itertools.combinations(vs, 2):
        pick = draw(st.integers(0, 2))
        if pick == 1:
            arcs.add((a, b))
        elif pick == 2:
            arcs.add((b, a))
    return OrientedGraph(tuple(vs), frozenset(arcs))


@given(oriented())
def test_mcgarvey_reconstructs(g):
    e = mcgarvey_election(g)
    assert OrientedGraph.of(e) == g
    assert e.n == 2 * len(g.arcs)
