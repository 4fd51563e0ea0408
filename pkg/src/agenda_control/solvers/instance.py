"""
Control instances, solutions, and witness re-simulation.

Vote witnesses refer to vote groups by their 0-based index in the instance's
registered (for deletions) or unregistered (for additions) vote list, together
with how many copies of that group are used.
"""

import os
from dataclasses import dataclass, field

from ..election import Agenda, Election, as_vote, check_candidate_id
from ..errors import InputError, InvariantError
from ..procedures import ProcedureSpec, winner

CONSTRUCTIVE = "constructive"
DESTRUCTIVE = "destructive"
PROBLEMS = ("CCAV", "CCDV", "CCAC", "CCDC", "DCAV", "DCDV", "DCAC", "DCDC", "MULTIMODE")

# budgets allowed to be nonzero, and whether D and W may be nonempty
_SHAPES = {
    "AV": ({"av"}, False, True),
    "DV": ({"dv"}, False, False),
    "AC": ({"ac"}, True, False),
    "DC": ({"dc"}, False, False),
}


@dataclass(frozen=True)
class Caps:
    """Size limits for exhaustive search."""

    m: int = 7
    n: int = 8
    k: int = 4

    @classmethod
    def from_env(cls, default=None):
        base = default or cls()
        text = os.environ.get("AGENDA_CONTROL_CAPS", "").strip()
        if not text:
            return base
        vals = {"m": base.m, "n": base.n, "k": base.k}
        for part in text.split(","):
            key, _, val = part.partition("=")
            key = key.strip()
            if key not in vals or not val.strip().isdigit():
                raise InputError(f"bad AGENDA_CONTROL_CAPS entry {part!r}", code="E_CAPS")
            vals[key] = int(val)
        return cls(**vals)


def _votes(vs):
    return tuple(as_vote(v) for v in vs)


@dataclass(frozen=True)
class ControlInstance:
    """Multimode control input.

    Single-mode problems (``CCAV`` ... ``DCDC``) are the multimode problem with
    the budget, unregistered-candidate and unregistered-vote restrictions of
    their row in the standard table of shapes.
    """

    problem: str
    procedure: ProcedureSpec
    registered: tuple
    distinguished: str
    agenda: Agenda
    registered_votes: tuple = ()
    unregistered: tuple = ()
    unregistered_votes: tuple = ()
    k_av: int = 0
    k_dv: int = 0
    k_ac: int = 0
    k_dc: int = 0
    goal: str = None

    def __post_init__(self):
        if self.problem not in PROBLEMS:
            raise InputError(f"unknown problem {self.problem!r}", code="E_PROBLEM")
        object.__setattr__(self, "registered", tuple(sorted(self.registered)))
        object.__setattr__(self, "unregistered", tuple(sorted(self.unregistered)))
        object.__setattr__(self, "registered_votes", _votes(self.registered_votes))
        object.__setattr__(self, "unregistered_votes", _votes(self.unregistered_votes))
        if not isinstance(self.agenda, Agenda):
            object.__setattr__(self, "agenda", Agenda(self.agenda))
        goal = self.goal
        if self.problem != "MULTIMODE":
            implied = CONSTRUCTIVE if self.problem.startswith("CC") else DESTRUCTIVE
            if goal is not None and goal != implied:
                raise InputError(f"{self.problem} is {implied}", code="E_GOAL")
            goal = implied
        if goal not in (CONSTRUCTIVE, DESTRUCTIVE):
            raise InputError("goal must be constructive or destructive", code="E_GOAL")
        object.__setattr__(self, "goal", goal)
        self._validate()

    def _validate(self):
        C, D = self.registered, self.unregistered
        for c in C + D:
            check_candidate_id(c)
        if len(set(C + D)) != len(C) + len(D):
            raise InputError("duplicate candidate across registered/unregistered sets",
                             code="E_DUPLICATE_CANDIDATE")
        if self.distinguished not in C:
            raise InputError("the distinguished candidate must be registered", code="E_DISTINGUISHED")
        universe = set(C) | set(D)
        if not self.agenda.covers(universe):
            raise InputError("agenda must cover registered and unregistered candidates", code="E_AGENDA")
        for v in self.registered_votes + self.unregistered_votes:
            if len(v.order) != len(universe) or set(v.order) != universe:
                raise InputError(f"vote {'>'.join(v.order)} is not over the candidate universe",
                                 code="E_VOTE_UNIVERSE")
        budgets = {"av": self.k_av, "dv": self.k_dv, "ac": self.k_ac, "dc": self.k_dc}
        for key, val in budgets.items():
            if not isinstance(val, int) or val < 0:
                raise InputError(f"budget {key} must be a nonnegative integer", code="E_BUDGET")
        if self.problem == "MULTIMODE":
            return
        allowed, d_ok, w_ok = _SHAPES[self.problem[2:]]
        for key, val in budgets.items():
            if key not in allowed and val != 0:
                raise InputError(f"{self.problem} requires budget {key}=0", code="E_BUDGET_SHAPE")
        if D and not d_ok:
            raise InputError(f"{self.problem} admits no unregistered candidates", code="E_BUDGET_SHAPE")
        if self.unregistered_votes and not w_ok:
            raise InputError(f"{self.problem} admits no unregistered votes", code="E_BUDGET_SHAPE")

    @classmethod
    def make(cls, problem, candidates, votes, agenda, distinguished, k=0, procedure=None,
             unregistered=(), unregistered_votes=(), goal=None):
        """Convenience constructor for single-mode problems: ``k`` goes to the problem's budget."""
        procedure = procedure or ProcedureSpec.amendment(1)
        if isinstance(procedure, str):
            procedure = ProcedureSpec.parse(procedure)
        kw = {}
        if problem != "MULTIMODE":
            kw["k_" + problem[2:].lower()] = k
        return cls(problem, procedure, tuple(candidates), distinguished, Agenda(agenda),
                   tuple(votes), tuple(unregistered), tuple(unregistered_votes), goal=goal, **kw)

    @property
    def universe(self):
        return self.registered + self.unregistered

    @property
    def constructive(self):
        return self.goal == CONSTRUCTIVE

    def replace(self, **changes):
        data = {f: getattr(self, f) for f in self.__dataclass_fields__}
        data.update(changes)
        return ControlInstance(**data)

    def election(self, deleted_votes=None, added_votes=None):
        """Election over C ∪ D with the given vote edits applied."""
        votes = []
        dv = dict(deleted_votes or ())
        av = dict(added_votes or ())
        for i, v in enumerate(self.registered_votes):
            keep = v.count - dv.get(i, 0)
            if keep:
                votes.append((v.order, keep))
        for i, v in enumerate(self.unregistered_votes):
            if av.get(i, 0):
                votes.append((v.order, av[i]))
        return Election(self.universe, votes)

    def goal_met(self, w):
        return (w == self.distinguished) == self.constructive


@dataclass(frozen=True)
class Solution:
    """Decision plus witness.

    ``deleted_votes`` and ``added_votes`` are tuples of ``(group index, count)``.
    """

    decision: bool
    deleted_candidates: tuple = ()
    added_candidates: tuple = ()
    deleted_votes: tuple = ()
    added_votes: tuple = ()
    minimal: bool = False
    algorithm: str = ""
    rationale: str = field(default="", compare=False)

    @property
    def size(self):
        return (len(self.deleted_candidates) + len(self.added_candidates)
                + sum(c for _, c in self.deleted_votes) + sum(c for _, c in self.added_votes))

    def witness_lines(self):
        lines = [f"delete-candidate {c}" for c in self.deleted_candidates]
        lines += [f"add-candidate {c}" for c in self.added_candidates]
        lines += [f"delete-vote {i} {n}" for i, n in self.deleted_votes]
        lines += [f"add-vote {i} {n}" for i, n in self.added_votes]
        return lines

    def with_algorithm(self, algorithm, rationale=""):
        return Solution(self.decision, self.deleted_candidates, self.added_candidates,
                        self.deleted_votes, self.added_votes, self.minimal, algorithm, rationale)


def no(algorithm, minimal=True):
    return Solution(False, minimal=minimal, algorithm=algorithm)


def yes(algorithm, deleted_candidates=(), added_candidates=(), deleted_votes=(), added_votes=(),
        minimal=False):
    return Solution(True, tuple(sorted(deleted_candidates)), tuple(sorted(added_candidates)),
                    _norm_counts(deleted_votes), _norm_counts(added_votes), minimal, algorithm)


def _norm_counts(pairs):
    if isinstance(pairs, dict):
        pairs = pairs.items()
    return tuple(sorted((i, c) for i, c in pairs if c))


def final_candidates(instance, solution):
    gone = set(solution.deleted_candidates)
    return [c for c in instance.registered if c not in gone] + list(solution.added_candidates)


def simulate(instance, solution):
    """Winner of the edited election."""
    election = instance.election(solution.deleted_votes, solution.added_votes)
    return winner(election, instance.agenda, instance.procedure, final_candidates(instance, solution))


def check_solution(instance, solution):
    """Raise :class:`InvariantError` unless a YES witness respects budgets and achieves the goal."""
    if not solution.decision:
        return
    dc, ac = solution.deleted_candidates, solution.added_candidates
    if instance.distinguished in dc:
        raise InvariantError("witness deletes the distinguished candidate")
    if not set(dc) <= set(instance.registered) or not set(ac) <= set(instance.unregistered):
        raise InvariantError("witness edits candidates outside their pools")
    for pairs, pool, budget, name in ((solution.deleted_votes, instance.registered_votes, instance.k_dv, "dv"),
                                      (solution.added_votes, instance.unregistered_votes, instance.k_av, "av")):
        for i, c in pairs:
            if not 0 <= i < len(pool) or not 0 < c <= pool[i].count:
                raise InvariantError(f"witness uses vote group {i} out of range")
        if sum(c for _, c in pairs) > budget:
            raise InvariantError(f"witness exceeds budget {name}")
    if len(dc) > instance.k_dc or len(ac) > instance.k_ac:
        raise InvariantError("witness exceeds a candidate budget")
    w = simulate(instance, solution)
    if not instance.goal_met(w):
        raise InvariantError(f"witness does not achieve the goal (winner {w})")


@dataclass(frozen=True)
class ExactEditInstance:
    """Choose exactly ``k`` of the registered and ``k2`` of the unregistered voters.

    Candidates are fixed. Solvers return ``(kept, added)`` count tuples aligned
    with ``registered_votes`` and ``unregistered_votes``.
    """

    candidates: tuple
    distinguished: str
    agenda: Agenda
    registered_votes: tuple
    unregistered_votes: tuple
    k: int
    k2: int
    goal: str
    procedure: ProcedureSpec

    def __post_init__(self):
        object.__setattr__(self, "registered_votes", _votes(self.registered_votes))
        object.__setattr__(self, "unregistered_votes", _votes(self.unregistered_votes))
        if not 0 <= self.k <= sum(v.count for v in self.registered_votes):
            raise InputError("k must lie between 0 and |V|", code="E_BUDGET")
        if not 0 <= self.k2 <= sum(v.count for v in self.unregistered_votes):
            raise InputError("k' must lie between 0 and |W|", code="E_BUDGET")

    def election(self, kept, added):
        votes = [(v.order, c) for v, c in zip(self.registered_votes, kept) if c]
        votes += [(v.order, c) for v, c in zip(self.unregistered_votes, added) if c]
        return Election(self.candidates, votes)

    def goal_met(self, kept, added):
        w = winner(self.election(kept, added), self.agenda, self.procedure, self.candidates)
        return (w == self.distinguished) == (self.goal == CONSTRUCTIVE)


@dataclass(frozen=True)
class MGCEVInstance:
    """Choose exactly ``k`` registered and ``k2`` unregistered voters realising ``target``."""

    candidates: tuple
    registered_votes: tuple
    unregistered_votes: tuple
    target: object
    k: int
    k2: int

    def __post_init__(self):
        object.__setattr__(self, "registered_votes", _votes(self.registered_votes))
        object.__setattr__(self, "unregistered_votes", _votes(self.unregistered_votes))
        if set(self.target.vertices) != set(self.candidates):
            raise InputError("target graph must be over the candidate set", code="E_TARGET")
        if not 0 <= self.k <= sum(v.count for v in self.registered_votes):
            raise InputError("k must lie between 0 and |V|", code="E_BUDGET")
        if not 0 <= self.k2 <= sum(v.count for v in self.unregistered_votes):
            raise InputError("k' must lie between 0 and |W|", code="E_BUDGET")


class NotApplicable(InputError):
    """A dedicated solver's precondition does not hold for this instance."""

    def __init__(self, message):
        super().__init__(message, code="E_NOT_APPLICABLE")
