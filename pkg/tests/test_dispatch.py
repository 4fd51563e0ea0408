import pathlib
import random

import pytest

from agenda_control.errors import ResourceError
from agenda_control.generate import random_instance
from agenda_control.procedures import ProcedureSpec
from agenda_control.solvers import Caps, ControlInstance, brute_force_solve, check_solution, dispatch_solve
from agenda_control.solvers.dispatch import BRUTE, ROUTING_TABLE, SOLVERS, route, routing_rows

SNAPSHOT = pathlib.Path(__file__).parent / "snapshots" / "routing.txt"

PROCS = [ProcedureSpec.amendment(1), ProcedureSpec.amendment(2), ProcedureSpec.relative(1),
         ProcedureSpec.relative(2), ProcedureSpec.successive()]
SINGLE = ["CCAV", "CCDV", "CCAC", "CCDC", "DCAV", "DCDV", "DCAC", "DCDC"]


def snapshot_lines():
    return [" | ".join(r) for r in routing_rows()]


def test_routing_snapshot():
    assert snapshot_lines() == SNAPSHOT.read_text().splitlines()


def test_routing_covers_every_cell():
    families = {"amendment", "h-amendment", "full-amendment", "m-h-amendment", "successive"}
    assert set(ROUTING_TABLE) == {(f, p) for f in families for p in SINGLE}


def test_tractable_cells_have_solvers():
    for family, problem, pos, complexity, solver in routing_rows():
        tractable = complexity.startswith(("P", "FPT"))
        assert tractable == (solver != BRUTE) or complexity.startswith("immune"), (family, problem, pos)
        if solver != BRUTE:
            assert solver in SOLVERS


def test_every_solver_is_routed():
    used = {r[4] for r in routing_rows()}
    assert set(SOLVERS) <= used


def test_delete_b_is_open_cell():
    inst = ControlInstance.make("CCDC", "abpq", ["a q b p", "q b p a", "p b a q"], "a q b p", "p", k=1,
                                procedure="amendment h=m-2")
    assert route(inst).is_open
    sol = dispatch_solve(inst)
    assert sol.decision and sol.deleted_candidates == ("b",)
    assert sol.algorithm == "brute-force (OPEN cell)"


def test_ccac_with_p_first_is_immune():
    inst = ControlInstance.make("CCAC", "pa", ["a p b", "a b p"], "p a b", "p", k=1, unregistered=["b"],
                                procedure="amendment h=2")
    sol = dispatch_solve(inst)
    assert not sol.decision and sol.algorithm == "first-position (immune)"


def test_successive_dcdc_p_first_immunity():
    inst = ControlInstance.make("DCDC", "pab", ["p a b", "p b a", "a p b"], "p a b", "p", k=2,
                                procedure="successive")
    sol = dispatch_solve(inst)
    assert sol.algorithm == "immunity" and not sol.decision


def test_hard_cell_beyond_caps_names_complexity():
    cands = [chr(ord("a") + i) for i in range(9)]
    inst = ControlInstance.make("CCDV", cands, [" ".join(cands)] * 3, " ".join(cands), "b", k=1)
    with pytest.raises(ResourceError, match="W\\[2\\]-hard"):
        dispatch_solve(inst, caps=Caps(m=7, n=8, k=4))


def test_dedicated_solver_ignores_brute_caps():
    cands = [chr(ord("a") + i) for i in range(9)]
    inst = ControlInstance.make("CCDC", cands, [" ".join(cands)] * 3, " ".join(cands), "i", k=8)
    sol = dispatch_solve(inst, caps=Caps(m=3, n=3, k=1))
    assert sol.decision and sol.algorithm == "ccdc-amendment-dp"
    check_solution(inst, sol)


def test_dispatch_matches_brute_force():
    rng = random.Random(11)
    for _ in range(400):
        inst = random_instance(rng, rng.choice(SINGLE + ["MULTIMODE"]), rng.randint(2, 5), rng.randint(1, 5),
                               procedure=rng.choice(PROCS), max_k=2,
                               p_index=0 if rng.random() < 0.3 else None)
        sol = dispatch_solve(inst)
        ref = brute_force_solve(inst)
        assert sol.decision == ref.decision, inst
        if sol.decision:
            check_solution(inst, sol)


def test_monotone_in_budget():
    rng = random.Random(12)
    for _ in range(150):
        problem = rng.choice(SINGLE)
        inst = random_instance(rng, problem, rng.randint(2, 5), rng.randint(1, 5),
                               procedure=rng.choice(PROCS), max_k=2)
        key = "k_" + problem[2:].lower()
        if dispatch_solve(inst).decision:
            assert dispatch_solve(inst.replace(**{key: getattr(inst, key) + 1})).decision
