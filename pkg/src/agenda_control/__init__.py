"""Agenda-based voting procedures, their control problems, and exact solvers."""

from .election import Agenda, Election, Vote, condorcet_winner, majority_dominates, pairwise_support
from .errors import AgendaControlError, InputError, InvariantError, ResourceError
from .procedures import ProcedureSpec, evaluate, winner
from .solvers import Caps, ControlInstance, Solution, brute_force_solve, dispatch_solve

__version__ = "0.1.0"

__all__ = [
    "Agenda", "AgendaControlError", "Caps", "ControlInstance", "Election", "InputError",
    "InvariantError", "ProcedureSpec", "ResourceError", "Solution", "Vote", "brute_force_solve",
    "condorcet_winner", "dispatch_solve", "evaluate", "majority_dominates", "pairwise_support",
    "winner",
]
