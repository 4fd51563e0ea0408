import random

import pytest

from agenda_control import io_formats
from agenda_control.errors import InputError
from agenda_control.generate import random_reduction_source
from agenda_control.graphs import BipartiteGraph, Graph, GraphInstance, solve_graph
from agenda_control.oriented import OrientedGraph
from agenda_control.procedures import winner
from agenda_control.reductions import VERIFY_CAPS, CATALOG, build_reduction, copy_name, verify_reduction
from agenda_control.solvers import brute_force_solve, check_solution
from agenda_control.solvers.dispatch import ROUTING_TABLE

EDGE = GraphInstance("rbds", BipartiteGraph(("r",), ("b",), frozenset({("r", "b")})), 1)
TRIANGLE = GraphInstance("clique", Graph(("u", "v", "w"), frozenset({("u", "v"), ("v", "w"), ("u", "w")})), 2)
LIFTABLE = [t for t, e in CATALOG.items() if e.family != "successive"]


def n_votes(vs):
    return sum(v.count for v in vs)


def test_catalog_has_22_entries():
    assert len(CATALOG) == 22
    assert {e.family for e in CATALOG.values()} == {"amendment", "m-h-amendment", "successive"}


def test_ccav_amd_single_edge():
    t = build_reduction("ccav_amd", EDGE)
    assert set(t.registered) == {"p", "q", "r"}
    assert tuple(t.agenda) == ("q", "r", "p")
    assert n_votes(t.registered_votes) == 4
    assert n_votes(t.unregistered_votes) == 1
    assert t.problem == "CCAV" and t.k_av == 1
    assert verify_reduction("ccav_amd", EDGE).agree


def test_ccdc_succ_clique_triangle():
    t = build_reduction("ccdc_succ_clique", TRIANGLE)
    assert len(t.registered) == 4
    assert n_votes(t.registered_votes) == 5
    assert t.k_dc == 2 and tuple(t.agenda)[0] == "p"
    rep = verify_reduction("ccdc_succ_clique", TRIANGLE)
    assert rep.agree and rep.source_answer


def test_ordered_blocks_for_h2():
    t = build_reduction("ccav_amd", EDGE, h=2)
    assert tuple(t.agenda) == ("q", "r", copy_name("r", 1), "p")
    for v in t.registered_votes + t.unregistered_votes:
        i = v.order.index("r")
        assert v.order[i + 1] == "r__1"
    assert t.procedure.h == 2
    assert verify_reduction("ccav_amd", EDGE, h=2).agree


def test_empty_edge_rbds_rejected():
    src = GraphInstance("rbds", BipartiteGraph(("r",), ("b",), frozenset()), 1)
    with pytest.raises(InputError) as exc:
        build_reduction("ccav_amd", src)
    assert exc.value.code == "E_PRECONDITION"


def test_wrong_source_problem_rejected():
    with pytest.raises(InputError):
        build_reduction("ccav_amd", TRIANGLE)


def test_successive_rejects_h():
    with pytest.raises(InputError):
        build_reduction("ccdc_succ_clique", TRIANGLE, h=2)


def test_unknown_tag():
    with pytest.raises(InputError):
        build_reduction("nope", EDGE)


def test_reserved_ids_rejected():
    src = GraphInstance("rbds", BipartiteGraph(("p",), ("b",), frozenset({("p", "b")})), 1)
    with pytest.raises(InputError):
        build_reduction("ccav_amd", src)


def test_ccac_mh_uses_majority_graph():
    rng = random.Random(4)
    src = random_reduction_source(rng, "ccac_mh", size=3, max_kappa=3)
    t = build_reduction("ccac_mh", src, h=2)
    assert n_votes(t.registered_votes) <= 2 * len(OrientedGraph.of(t.election()).arcs)


@pytest.mark.parametrize("tag", sorted(CATALOG))
def test_reduction_fuzz(tag):
    rng = random.Random(f"fuzz-{tag}")
    hs = (1,) if CATALOG[tag].family == "successive" else (1, 2)
    for i in range(12):
        src = random_reduction_source(rng, tag, size=4, max_kappa=3)
        h = hs[i % len(hs)]
        seed = rng.randrange(1000)
        rep = verify_reduction(tag, src, h=h, seed=seed)
        assert rep.agree, (tag, src, h)
        if rep.target_answer:
            check_solution(build_reduction(tag, src, h=h, seed=seed), rep.target_solution)


@pytest.mark.parametrize("tag", sorted(CATALOG))
def test_target_routes_to_the_procedure_family(tag):
    src = random_reduction_source(random.Random(tag), tag, size=3, max_kappa=3)
    t = build_reduction(tag, src)
    assert (t.procedure.family, t.problem) in ROUTING_TABLE
    assert t.distinguished == "p"


@pytest.mark.parametrize("tag", ["ccav_amd", "ccdv_amd", "ccdc_succ_clique", "dcdv_mh", "ccac_succ"])
def test_budget_mutation_is_caught(tag):
    # an off-by-one budget must break agreement on at least one source
    rng = random.Random(f"mut-{tag}")
    caught = False
    for _ in range(60):
        src = random_reduction_source(rng, tag, size=4, max_kappa=3)
        t = build_reduction(tag, src)
        key = "k_" + t.problem[2:].lower()
        truth = solve_graph(src) is not None
        for delta in (-1, 1):
            k = getattr(t, key) + delta
            if k < 0:
                continue
            if brute_force_solve(t.replace(**{key: k}), caps=VERIFY_CAPS).decision != truth:
                caught = True
        if caught:
            break
    assert caught


@pytest.mark.parametrize("tag", sorted(CATALOG))
def test_serialization_round_trip(tag):
    src = random_reduction_source(random.Random(f"io-{tag}"), tag, size=3, max_kappa=3)
    h = 1 if CATALOG[tag].family == "successive" else 2
    t = build_reduction(tag, src, h=h)
    back = io_formats.parse(io_formats.serialize(t))
    assert io_formats.serialize(back) == io_formats.serialize(t)
    e1, e2 = t.election(), back.election()
    assert winner(e1, t.agenda, t.procedure, t.registered) == winner(e2, back.agenda, back.procedure,
                                                                      back.registered)


def test_seed_only_moves_free_positions():
    src = random_reduction_source(random.Random(9), "dcdv_mh_dual", size=4, max_kappa=3)
    base = build_reduction("dcdv_mh_dual", src)
    for seed in range(5):
        t = build_reduction("dcdv_mh_dual", src, seed=seed)
        assert tuple(t.agenda)[0] == tuple(base.agenda)[0] == "q"
        assert set(t.agenda) == set(base.agenda)
        assert t.registered_votes == base.registered_votes
