"""
Routing from (procedure family, problem, position of p) to the most specific exact solver.

Each cell names the known complexity and the solver that serves it. Hard
and open cells are served by brute force only, and dispatch refuses them
when the instance is beyond the brute-force caps.
"""

from dataclasses import dataclass

from ..errors import ResourceError
from ..procedures import winner
from . import amendment, successive, votes
from .brute import brute_force_solve, check_caps
from .instance import Caps, no, yes

BRUTE = "brute-force"

SOLVERS = {
    "first-position": amendment.solve_first_position,
    "ccac-amendment-dp": amendment.solve_ccac_amendment,
    "ccdc-amendment-dp": amendment.solve_ccdc_amendment,
    "turing-reduction-to-amendment-dp": amendment.solve_dcac_dcdc_amendment,
    "ccdc-full-amendment-rules": amendment.solve_ccdc_full_amendment,
    "dcdc-full-amendment-rules": amendment.solve_dcdc_full_amendment,
    "dcac-m-h-enumeration": amendment.solve_dcac_m_minus_h,
    "ccac-m-h-rbds": amendment.solve_ccac_m_minus_h_fpt,
    "edcev-configurations+mgcev-ilp": votes.solve_voter_control_edcev_h_amendment,
    "eccev-signature-ilp": votes.solve_voter_control_eccev_successive,
    "edcev-successive-greedy": votes.solve_voter_control_edcev_successive,
    "ccdc-successive-enumeration": successive.solve_ccdc_successive_fpt,
    "dcac-successive-enumeration": successive.solve_dcac_successive_fpt,
}


@dataclass(frozen=True)
class Route:
    """One routing decision: the complexity of the cell and the solver serving it."""

    complexity: str
    solver: str

    @property
    def dedicated(self):
        return self.solver != BRUTE

    @property
    def is_open(self):
        return self.complexity == "OPEN"


def _r(complexity, solver=BRUTE):
    return Route(complexity, solver)


IMMUNE = _r("immune when p is first", "first-position")
OPEN = _r("OPEN")

# (family, problem) -> (route when p heads the agenda, route otherwise)
ROUTING_TABLE = {
    ("amendment", "CCAV"): (_r("W[1]-hard"), _r("W[2]-hard")),
    ("amendment", "CCDV"): (_r("W[1]-hard"), _r("W[2]-hard")),
    ("amendment", "CCAC"): (IMMUNE, _r("P", "ccac-amendment-dp")),
    ("amendment", "CCDC"): (_r("P", "ccdc-amendment-dp"), _r("P", "ccdc-amendment-dp")),
    ("amendment", "DCAV"): (_r("FPT in predecessors of p", "edcev-configurations+mgcev-ilp"),) * 2,
    ("amendment", "DCDV"): (_r("FPT in predecessors of p", "edcev-configurations+mgcev-ilp"),) * 2,
    ("amendment", "DCAC"): (_r("P", "turing-reduction-to-amendment-dp"),) * 2,
    ("amendment", "DCDC"): (IMMUNE, _r("P", "turing-reduction-to-amendment-dp")),

    ("h-amendment", "CCAV"): (_r("W[1]-hard"), _r("W[2]-hard")),
    ("h-amendment", "CCDV"): (_r("W[1]-hard"), _r("W[2]-hard")),
    ("h-amendment", "CCAC"): (IMMUNE, OPEN),
    ("h-amendment", "CCDC"): (_r("P", "first-position"), OPEN),
    ("h-amendment", "DCAV"): (_r("FPT in predecessors of p", "edcev-configurations+mgcev-ilp"),) * 2,
    ("h-amendment", "DCDV"): (_r("FPT in predecessors of p", "edcev-configurations+mgcev-ilp"),) * 2,
    ("h-amendment", "DCAC"): (_r("P", "first-position"), OPEN),
    ("h-amendment", "DCDC"): (IMMUNE, OPEN),

    ("full-amendment", "CCAV"): (_r("W[1]-hard"), _r("W[1]-hard")),
    ("full-amendment", "CCDV"): (_r("W[1]-hard"), _r("W[2]-hard")),
    ("full-amendment", "CCAC"): (IMMUNE, _r("FPT in predecessors of p", "ccac-m-h-rbds")),
    ("full-amendment", "CCDC"): (_r("P", "ccdc-full-amendment-rules"),) * 2,
    ("full-amendment", "DCAV"): (_r("P", "first-position"), _r("W[1]-hard")),
    ("full-amendment", "DCDV"): (_r("P", "first-position"), _r("W[2]-hard")),
    ("full-amendment", "DCAC"): (_r("P", "dcac-m-h-enumeration"),) * 2,
    ("full-amendment", "DCDC"): (IMMUNE, _r("P", "dcdc-full-amendment-rules")),

    ("m-h-amendment", "CCAV"): (_r("W[1]-hard"), _r("W[1]-hard")),
    ("m-h-amendment", "CCDV"): (_r("W[1]-hard"), _r("W[2]-hard")),
    ("m-h-amendment", "CCAC"): (_r("FPT in predecessors of p", "ccac-m-h-rbds"),) * 2,
    ("m-h-amendment", "CCDC"): (_r("P", "first-position"), OPEN),
    ("m-h-amendment", "DCAV"): (_r("P", "first-position"), _r("W[1]-hard")),
    ("m-h-amendment", "DCDV"): (_r("P", "first-position"), _r("W[2]-hard")),
    ("m-h-amendment", "DCAC"): (_r("P", "dcac-m-h-enumeration"),) * 2,
    ("m-h-amendment", "DCDC"): (_r("P", "first-position"), OPEN),

    ("successive", "CCAV"): (_r("FPT in predecessors of p", "eccev-signature-ilp"),) * 2,
    ("successive", "CCDV"): (_r("FPT in predecessors of p", "eccev-signature-ilp"),) * 2,
    ("successive", "CCAC"): (_r("immune when p is first"), _r("W[2]-hard")),
    ("successive", "CCDC"): (_r("FPT in successors of p", "ccdc-successive-enumeration"),) * 2,
    ("successive", "DCAV"): (_r("P", "edcev-successive-greedy"),) * 2,
    ("successive", "DCDV"): (_r("P", "edcev-successive-greedy"),) * 2,
    ("successive", "DCAC"): (_r("FPT in successors of p", "dcac-successive-enumeration"),) * 2,
    ("successive", "DCDC"): (_r("immune when p is first"), _r("W[1]-hard")),
}


def p_first(instance):
    """Whether p heads the agenda among all candidates that can ever take part."""
    return instance.agenda.sort(instance.universe)[0] == instance.distinguished


def route(instance):
    if instance.problem == "MULTIMODE":
        return _r("multimode")
    first, other = ROUTING_TABLE[instance.procedure.family, instance.problem]
    return first if p_first(instance) else other


def _immune(instance):
    # successive: p first wins iff it dominates everyone, which adding rivals
    # cannot create and deleting rivals cannot destroy
    e = instance.election()
    wins = winner(e, instance.agenda, instance.procedure, instance.registered) == instance.distinguished
    name = "immunity"
    if wins == instance.constructive:
        return yes(name, minimal=True)
    return no(name)


def dispatch_solve(instance, caps=None, jobs=1):
    """Solve with the routed solver; hard and open cells fall to brute force within caps."""
    caps = caps or Caps.from_env()
    r = route(instance)
    if r.dedicated:
        try:
            sol = SOLVERS[r.solver](instance)
            return sol.with_algorithm(sol.algorithm, rationale=r.complexity)
        except ResourceError:
            # a dedicated solver hit its own cap; brute force may still fit
            pass
    elif r.complexity == "immune when p is first":
        return _immune(instance).with_algorithm("immunity", rationale=r.complexity)
    try:
        check_caps(instance, caps)
    except ResourceError as exc:
        raise ResourceError(f"{instance.problem} under {instance.procedure} is {r.complexity} here "
                            f"and only brute force applies: {exc}") from None
    sol = brute_force_solve(instance, caps=caps, jobs=jobs)
    tag = "OPEN cell" if r.is_open else f"{r.complexity} cell" if not r.dedicated else "fallback"
    return sol.with_algorithm(f"{BRUTE} ({tag})", rationale=r.complexity)


def routing_rows():
    """Flattened routing table for display and snapshots."""
    rows = []
    for (family, problem), (first, other) in ROUTING_TABLE.items():
        rows.append((family, problem, "p first", first.complexity, first.solver))
        rows.append((family, problem, "p not first", other.complexity, other.solver))
    return rows


__all__ = ["Route", "ROUTING_TABLE", "SOLVERS", "dispatch_solve", "route", "routing_rows", "p_first"]
