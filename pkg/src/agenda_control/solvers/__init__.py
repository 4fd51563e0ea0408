"""Exact solvers for the eight control problems and their multimode combination."""

from .brute import brute_force_solve
from .dispatch import ROUTING_TABLE, dispatch_solve, route, routing_rows
from .instance import (CONSTRUCTIVE, DESTRUCTIVE, PROBLEMS, Caps, ControlInstance, ExactEditInstance,
                       MGCEVInstance, NotApplicable, Solution, check_solution)

__all__ = [
    "CONSTRUCTIVE", "DESTRUCTIVE", "PROBLEMS", "Caps", "ControlInstance", "ExactEditInstance",
    "MGCEVInstance", "NotApplicable", "ROUTING_TABLE", "Solution", "brute_force_solve",
    "check_solution", "dispatch_solve", "route", "routing_rows",
]
