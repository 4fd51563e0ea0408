import itertools
import random

import pytest

from agenda_control.election import Agenda, Election
from agenda_control.errors import InputError, ResourceError
from agenda_control.generate import random_instance
from agenda_control.oriented import OrientedGraph, mcgarvey_election
from agenda_control.procedures import ProcedureSpec, winner
from agenda_control.solvers import (Caps, ControlInstance, ExactEditInstance, MGCEVInstance,
                                    NotApplicable, brute_force_solve, check_solution)
from agenda_control.solvers import amendment, successive, votes
from agenda_control.solvers.instance import simulate

from conftest import CYCLE4_VOTES, SPLIT_VOTES
from solver_cases import CASES, ORACLE_CAPS, run_cases

DEL_B = dict(candidates="abpq", votes=["a q b p", "q b p a", "p b a q"], agenda="a q b p", distinguished="p")


def del_b(k=1, procedure="amendment h=m-2"):
    return ControlInstance.make("CCDC", k=k, procedure=procedure, **DEL_B)


def votes_of(arcs, cands):
    return [(v.order, v.count) for v in mcgarvey_election(OrientedGraph(tuple(cands), frozenset(arcs))).votes]


# ---------------------------------------------------------------- brute force

def test_delete_b_unique_witness():
    sol = brute_force_solve(del_b())
    assert sol.decision and sol.deleted_candidates == ("b",)
    e = del_b().election()
    spec = ProcedureSpec.relative(2)
    for c in "aq":
        assert winner(e, Agenda("a q b p"), spec, set("abpq") - {c}) != "p"
    assert winner(e, Agenda("a q b p"), spec) == "q"


def test_delete_b_consistent_agendas():
    # q wins the full election, deleting b makes p win, deleting a or q does not;
    # four agendas fit these outcomes and the fixture uses one of them
    e = Election("abpq", DEL_B["votes"])
    spec = ProcedureSpec.relative(2)
    hits = []
    for order in itertools.permutations("abpq"):
        ag = Agenda(order)
        if (winner(e, ag, spec) == "q" and winner(e, ag, spec, set("apq")) == "p"
                and winner(e, ag, spec, set("bpq")) != "p" and winner(e, ag, spec, set("abp")) != "p"):
            hits.append("".join(order))
    assert hits == ["abqp", "aqbp", "aqpb", "baqp"]
    for order in hits:
        inst = ControlInstance.make("CCDC", "abpq", DEL_B["votes"], list(order), "p", k=1, procedure=spec)
        assert brute_force_solve(inst).deleted_candidates == ("b",)


def test_goal_already_met_gives_empty_witness():
    inst = ControlInstance.make("CCDC", "abcd", CYCLE4_VOTES, "a b c d", "d", k=0)
    sol = brute_force_solve(inst)
    assert sol.decision and sol.size == 0


def test_brute_caps():
    inst = ControlInstance.make("CCDC", "abcdefgh", [], "a b c d e f g h", "a", k=1)
    with pytest.raises(ResourceError):
        brute_force_solve(inst, caps=Caps(m=4, n=4, k=4))


def test_parallel_matches_serial():
    rng = random.Random(5)
    for _ in range(40):
        inst = random_instance(rng, "MULTIMODE", 5, 5, max_k=2)
        assert brute_force_solve(inst, jobs=3) == brute_force_solve(inst)


# ---------------------------------------------------------------- first position and amendment DPs

def test_first_position_immunity():
    inst = ControlInstance.make("DCDC", "abc", SPLIT_VOTES and ["a b c", "a c b", "b a c"], "a b c", "a", k=2)
    assert not amendment.solve_first_position(inst).decision


def test_first_position_tie_forces_deletion():
    inst = ControlInstance.make("CCDC", "pr", ["p r", "r p"], "p r", "p", k=1)
    sol = amendment.solve_first_position(inst)
    assert sol.decision and sol.deleted_candidates == ("r",)


def test_first_position_not_applicable():
    inst = ControlInstance.make("CCDC", "pr", ["p r"], "r p", "p", k=1)
    with pytest.raises(NotApplicable):
        amendment.solve_first_position(inst)


def test_ccac_amendment_hand_instance():
    # q beats p, p beats d, d beats q
    vs = votes_of({("q", "p"), ("p", "d"), ("d", "q")}, "dpq")
    inst = ControlInstance.make("CCAC", ["q", "p"], vs, "q d p", "p", k=1, unregistered=["d"])
    sol = amendment.solve_ccac_amendment(inst)
    assert sol.decision and sol.added_candidates == ("d",)
    assert simulate(inst, sol) == "p"


def test_ccac_amendment_nothing_to_add():
    inst = ControlInstance.make("CCAC", "pq", ["p q"], "q p", "p", k=0)
    assert amendment.solve_ccac_amendment(inst).decision


def test_ccdc_amendment_cycle4():
    inst = ControlInstance.make("CCDC", "abcd", CYCLE4_VOTES, "a b c d", "d", k=0)
    assert amendment.solve_ccdc_amendment(inst).decision


def test_dcac_amendment_hand_instance():
    # p beats c; d ties p and comes after p
    vs = votes_of({("p", "c")}, "cdp")
    inst = ControlInstance.make("DCAC", "pc", vs, "p c d", "p", k=1, unregistered=["d"])
    sol = amendment.solve_dcac_dcdc_amendment(inst)
    assert sol.decision and sol.added_candidates == ("d",)


def test_full_amendment_rules_reject_relative_two():
    with pytest.raises(NotApplicable):
        amendment.solve_ccdc_full_amendment(del_b())


def test_full_amendment_rules_on_delete_b_election():
    inst = del_b(k=2, procedure="amendment h=m-1")
    assert amendment.solve_ccdc_full_amendment(inst).decision == brute_force_solve(inst).decision


def test_dcac_m_minus_h_single_addition():
    vs = votes_of({("p", "c")}, "cdp")
    inst = ControlInstance.make("DCAC", "pc", vs, "p c d", "p", k=1, unregistered=["d"],
                                procedure="amendment h=m-1")
    sol = amendment.solve_dcac_m_minus_h(inst)
    assert sol.decision and sol.added_candidates == ("d",)


def test_ccac_m_minus_h_hand_instance():
    # agenda (r, p, d): r beats p, d beats r, p beats d
    vs = votes_of({("r", "p"), ("d", "r"), ("p", "d")}, "dpr")
    inst = ControlInstance.make("CCAC", "pr", vs, "r p d", "p", k=1, unregistered=["d"],
                                procedure="amendment h=m-1")
    sol = amendment.solve_ccac_m_minus_h_fpt(inst)
    assert sol.decision and sol.added_candidates == ("d",)


# ---------------------------------------------------------------- voter control

def test_mgcev_current_graph():
    e = Election("abc", ["a b c", "b c a", "c a b", "a c b"])
    target = OrientedGraph.of(e)
    inst = MGCEVInstance(e.candidates, e.votes, (), target, len(e.votes), 0)
    kept, added = votes.solve_mgcev(inst)
    assert list(kept) == [1, 1, 1, 1]


def test_mgcev_parity():
    e = Election("abc", ["a b c", "b c a", "c a b"])
    inst = MGCEVInstance(e.candidates, e.votes, (), OrientedGraph(("a", "b", "c")), 3, 0)
    assert votes.solve_mgcev(inst) is None


def test_mgcev_cap():
    cands = "abcdef"
    inst = MGCEVInstance(tuple(cands), (), (), OrientedGraph(tuple(cands)), 0, 0)
    with pytest.raises(ResourceError):
        votes.solve_mgcev(inst)


def test_mgcev_exhaustive_three_candidates():
    cands = ("a", "b", "c")
    orders = list(itertools.permutations(cands))
    rng = random.Random(3)
    V = [(orders[rng.randrange(6)], 1) for _ in range(4)]
    W = [(orders[rng.randrange(6)], 1) for _ in range(3)]
    for arcs_pick in itertools.product((0, 1, 2), repeat=3):
        arcs = set()
        for (x, y), pick in zip(itertools.combinations(cands, 2), arcs_pick):
            if pick == 1:
                arcs.add((x, y))
            elif pick == 2:
                arcs.add((y, x))
        target = OrientedGraph(cands, frozenset(arcs))
        for k in range(5):
            for k2 in range(4):
                inst = MGCEVInstance(cands, V, W, target, k, k2)
                got = votes.solve_mgcev(inst)
                want = any(
                    OrientedGraph.of(Election(cands, [V[i][0] for i in S] + [W[j][0] for j in T])) == target
                    for S in itertools.combinations(range(4), k) for T in itertools.combinations(range(3), k2))
                assert (got is not None) == want
                if got is not None:
                    kept, added = got
                    chosen = [V[i][0] for i, c in enumerate(kept) for _ in range(c)]
                    chosen += [W[i][0] for i, c in enumerate(added) for _ in range(c)]
                    assert OrientedGraph.of(Election(cands, chosen)) == target


def test_eccev_split_keep_all():
    inst = ExactEditInstance("abcd", "b", Agenda("a b c d"), SPLIT_VOTES, (), 3, 0, "constructive",
                             ProcedureSpec.successive())
    kept, added = votes.solve_eccev_successive(inst)
    assert list(kept) == [1, 1, 1]


def test_edcev_successive_p_first():
    # half of the selectable votes rank a successor above p
    inst = ExactEditInstance("pa", "p", Agenda("p a"), ["p a", "a p"], (), 2, 0, "destructive",
                             ProcedureSpec.successive())
    assert votes.solve_edcev_successive(inst) is not None


def test_edcev_h_amendment_p_first_tie_by_adding():
    inst = ExactEditInstance("pa", "p", Agenda("p a"), ["p a"], ["a p"], 1, 1, "destructive",
                             ProcedureSpec.amendment(1))
    got = votes.solve_edcev_h_amendment(inst)
    assert got is not None and votes.check_exact(inst, *got)


# ---------------------------------------------------------------- successive enumerations

def test_ccdc_successive_split():
    inst = ControlInstance.make("CCDC", "abcd", SPLIT_VOTES, "a b c d", "a", k=1,
                                procedure="successive")
    assert successive.solve_ccdc_successive_fpt(inst).decision == brute_force_solve(inst).decision


def test_dcac_successive_dominating_predecessor():
    inst = ControlInstance.make("DCAC", ["p", "c"], ["d p c", "d c p", "p d c"], "d p c", "p", k=1,
                                procedure="successive", unregistered=["d"])
    sol = successive.solve_dcac_successive_fpt(inst)
    assert sol.decision and sol.added_candidates == ("d",)


# ---------------------------------------------------------------- against the oracle

@pytest.mark.parametrize("name", sorted(CASES))
def test_solver_matches_oracle(name):
    checked, bad = run_cases(name, 120, seed=1)
    assert checked == 120 and not bad, bad[:1]


def test_ccac_amendment_positive_additions():
    # stratified: only instances whose minimum witness adds a candidate
    rng = random.Random(11)
    found = 0
    while found < 25:
        inst = random_instance(rng, "CCAC", rng.randint(4, 7), rng.choice([3, 5, 7]), max_k=3)
        ref = brute_force_solve(inst, caps=ORACLE_CAPS)
        if not ref.decision or ref.size == 0:
            continue
        found += 1
        sol = amendment.solve_ccac_amendment(inst)
        assert sol.decision and sol.size == ref.size
        check_solution(inst, sol)


@pytest.mark.parametrize("problem", ["CCAV", "CCDV", "CCAC", "CCDC", "MULTIMODE"])
def test_constructive_monotone_in_budget(problem):
    rng = random.Random(problem)
    spec = ProcedureSpec.amendment(1)
    for _ in range(60):
        inst = random_instance(rng, problem, 4, 4, procedure=spec, max_k=2)
        if not inst.constructive:
            continue
        sol = brute_force_solve(inst)
        if sol.decision:
            bumped = {f: getattr(inst, f) + 1 for f in ("k_av", "k_dv", "k_ac", "k_dc")
                      if getattr(inst, f) or problem == "MULTIMODE"}
            bigger = inst.replace(**bumped) if bumped else inst
            assert brute_force_solve(bigger).decision


def test_check_solution_catches_bad_witness():
    from agenda_control.errors import InvariantError
    from agenda_control.solvers.instance import yes
    with pytest.raises(InvariantError):
        check_solution(del_b(), yes("x", deleted_candidates=["a"]))
    with pytest.raises(InvariantError):
        check_solution(del_b(), yes("x", deleted_candidates=["p"]))


def test_instance_validation():
    with pytest.raises(InputError) as exc:
        ControlInstance.make("CCAV", "ab", ["a b c"], "a b c", "a", k=1, unregistered=["c"])
    assert exc.value.code == "E_BUDGET_SHAPE"
    with pytest.raises(InputError):
        ControlInstance.make("CCDC", "ab", ["a b"], "a b", "z", k=1)
    with pytest.raises(InputError):
        ControlInstance.make("CCDC", "ab", ["a b"], "a", "a", k=1)
