"""
Exact search over bounded integer programs.

Variables are assigned depth-first in declaration order. At each node the
feasible range of the next variable is narrowed by interval reasoning over
every constraint, using precomputed suffix bounds of the unassigned variables.
"""

from dataclasses import dataclass, field
from fractions import Fraction

from .errors import InputError, ResourceError

DEFAULT_NODE_BUDGET = 2_000_000
MAX_VARIABLES = 10_000

_RELATIONS = ("<", "<=", "=", ">=", ">")


def _as_fraction(rhs):
    if isinstance(rhs, tuple):
        num, den = rhs
        if den == 0:
            raise InputError("zero denominator in constraint", code="E_ILP")
        return Fraction(num, den)
    return Fraction(rhs)


@dataclass
class IntegerProgram:
    """Bounded integer variables, linear constraints and an optional objective.

    Attributes
    ----------
    variables : list of (name, lower, upper)
    constraints : list of (coefficients, relation, rhs)
        ``coefficients`` maps variable names to integers, ``relation`` is one of
        ``<, <=, =, >=, >`` and ``rhs`` is an int, a Fraction or a
        ``(numerator, denominator)`` pair.
    objective : (coefficients, "min" | "max") or None
    """

    variables: list = field(default_factory=list)
    constraints: list = field(default_factory=list)
    objective: tuple = None

    def add_variable(self, name, lower, upper):
        if lower < 0 or lower > upper:
            raise InputError(f"bad bounds for {name}: [{lower}, {upper}]", code="E_ILP")
        if any(v[0] == name for v in self.variables):
            raise InputError(f"duplicate variable {name}", code="E_ILP")
        self.variables.append((name, lower, upper))
        return name

    def add_constraint(self, coefs, relation, rhs):
        if relation not in _RELATIONS:
            raise InputError(f"unknown relation {relation!r}", code="E_ILP")
        self.constraints.append((dict(coefs), relation, rhs))

    def set_objective(self, coefs, sense="min"):
        if sense not in ("min", "max"):
            raise InputError(f"unknown objective sense {sense!r}", code="E_ILP")
        self.objective = (dict(coefs), sense)

    def check(self, assignment):
        """Independent re-check of an assignment against bounds and constraints."""
        for name, lo, hi in self.variables:
            if not lo <= assignment.get(name, lo - 1) <= hi:
                return False
        for coefs, rel, rhs in self.constraints:
            lhs = sum(c * assignment[v] for v, c in coefs.items())
            r = _as_fraction(rhs)
            ok = {"<": lhs < r, "<=": lhs <= r, "=": lhs == r, ">=": lhs >= r, ">": lhs > r}[rel]
            if not ok:
                return False
        return True


class _Compiled:
    """Integer rows ``lb <= sum(coef * x) <= ub`` with suffix bounds."""

    def __init__(self, program):
        if len(program.variables) > MAX_VARIABLES:
            raise ResourceError(f"{len(program.variables)} variables exceed the cap of {MAX_VARIABLES}")
        self.names = [v[0] for v in program.variables]
        index = {n: i for i, n in enumerate(self.names)}
        self.lo = [v[1] for v in program.variables]
        self.hi = [v[2] for v in program.variables]
        nv = len(self.names)
        rows = []
        for coefs, rel, rhs in program.constraints:
            r = _as_fraction(rhs)
            dense = [0] * nv
            for name, c in coefs.items():
                if name not in index:
                    raise InputError(f"constraint names undeclared variable {name}", code="E_ILP")
                dense[index[name]] += c * r.denominator
            num = r.numerator
            lb, ub = None, None
            if rel == "<":
                ub = num - 1
            elif rel == "<=":
                ub = num
            elif rel == "=":
                lb = ub = num
            elif rel == ">=":
                lb = num
            else:
                lb = num + 1
            rows.append((dense, lb, ub))
        self.rows = rows
        # suffix_min[r][i]: least contribution of variables i.. of row r
        self.suffix = []
        for dense, _, _ in rows:
            smin = [0] * (nv + 1)
            smax = [0] * (nv + 1)
            for i in range(nv - 1, -1, -1):
                a, b = dense[i] * self.lo[i], dense[i] * self.hi[i]
                smin[i] = smin[i + 1] + min(a, b)
                smax[i] = smax[i + 1] + max(a, b)
            self.suffix.append((smin, smax))
        self.var_rows = [[r for r, (dense, _, _) in enumerate(rows) if dense[i]] for i in range(nv)]
        self.obj = None
        if program.objective is not None:
            coefs, sense = program.objective
            sign = 1 if sense == "min" else -1
            dense = [0] * nv
            for name, c in coefs.items():
                if name not in index:
                    raise InputError(f"objective names undeclared variable {name}", code="E_ILP")
                dense[index[name]] += sign * c
            omin = [0] * (nv + 1)
            for i in range(nv - 1, -1, -1):
                omin[i] = omin[i + 1] + min(dense[i] * self.lo[i], dense[i] * self.hi[i])
            self.obj = (dense, omin, sign)

    def _range(self, i, sums):
        lo, hi = self.lo[i], self.hi[i]
        for r in self.var_rows[i]:
            dense, lb, ub = self.rows[r]
            c = dense[i]
            smin, smax = self.suffix[r]
            s = sums[r]
            # c*x must lie in [lb - s - smax[i+1], ub - s - smin[i+1]]
            low = None if lb is None else lb - s - smax[i + 1]
            high = None if ub is None else ub - s - smin[i + 1]
            if c > 0:
                if low is not None:
                    lo = max(lo, -((-low) // c))
                if high is not None:
                    hi = min(hi, high // c)
            else:
                if low is not None:
                    hi = min(hi, low // c)
                if high is not None:
                    lo = max(lo, -((-high) // c))
            if lo > hi:
                return lo, hi
        return lo, hi

    def search(self, budget, optimize):
        nv = len(self.names)
        sums = [0] * len(self.rows)
        for r, (dense, lb, ub) in enumerate(self.rows):
            smin, smax = self.suffix[r]
            if (ub is not None and smin[0] > ub) or (lb is not None and smax[0] < lb):
                return None
        values = [0] * nv
        best = [None, None]
        nodes = [0]

        def rec(i, obj_sum):
            nodes[0] += 1
            if nodes[0] > budget:
                raise ResourceError(f"integer search exceeded its node budget of {budget}")
            if optimize and best[1] is not None:
                if obj_sum + self.obj[1][i] >= best[1]:
                    return False
            if i == nv:
                if optimize:
                    best[0], best[1] = list(values), obj_sum
                    return False
                best[0] = list(values)
                return True
            lo, hi = self._range(i, sums)
            if lo > hi:
                return False
            vals = range(lo, hi + 1)
            oc = self.obj[0][i] if optimize else 0
            if oc < 0:
                vals = reversed(vals)
            for x in vals:
                values[i] = x
                for r in self.var_rows[i]:
                    sums[r] += self.rows[r][0][i] * x
                done = rec(i + 1, obj_sum + oc * x)
                for r in self.var_rows[i]:
                    sums[r] -= self.rows[r][0][i] * x
                if done:
                    return True
            return False

        rec(0, 0)
        if best[0] is None:
            return None
        return dict(zip(self.names, best[0])), best[1]


def solve_feasibility(program, budget=DEFAULT_NODE_BUDGET):
    """Return some assignment satisfying the program, or ``None``."""
    res = _Compiled(program).search(budget, optimize=False)
    return None if res is None else res[0]


def solve_minimize(program, budget=DEFAULT_NODE_BUDGET):
    """Return ``(assignment, objective value)`` optimising the objective, or ``None``."""
    if program.objective is None:
        raise InputError("solve_minimize needs an objective", code="E_ILP")
    comp = _Compiled(program)
    res = comp.search(budget, optimize=True)
    if res is None:
        return None
    assignment, val = res
    return assignment, val * comp.obj[2]
