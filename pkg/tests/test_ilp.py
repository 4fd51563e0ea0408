import itertools
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from agenda_control.errors import InputError, ResourceError
from agenda_control.ilp import IntegerProgram, solve_feasibility, solve_minimize


def test_small_feasible():
    prog = IntegerProgram()
    x, y = prog.add_variable("x", 0, 3), prog.add_variable("y", 0, 3)
    prog.add_constraint({x: 1, y: 1}, "=", 3)
    prog.add_constraint({x: 1}, ">", (3, 2))
    sol = solve_feasibility(prog)
    assert sol is not None and prog.check(sol)
    assert sol["x"] + sol["y"] == 3 and sol["x"] >= 2


def test_infeasible():
    prog = IntegerProgram()
    prog.add_variable("x", 0, 1)
    prog.add_constraint({"x": 1}, "=", 2)
    assert solve_feasibility(prog) is None


def test_minimize():
    prog = IntegerProgram()
    prog.add_variable("x", 0, 5)
    prog.add_constraint({"x": 1}, ">=", 2)
    prog.set_objective({"x": 1})
    assert solve_minimize(prog) == ({"x": 2}, 2)

    prog = IntegerProgram()
    prog.add_variable("x", 0, 5)
    prog.add_variable("y", 0, 5)
    prog.add_constraint({"x": 1, "y": 1}, ">=", 3)
    prog.set_objective({"x": 1, "y": 1})
    assert solve_minimize(prog)[1] == 3


def test_maximize():
    prog = IntegerProgram()
    prog.add_variable("x", 0, 4)
    prog.add_constraint({"x": 2}, "<", 7)
    prog.set_objective({"x": 1}, "max")
    assert solve_minimize(prog) == ({"x": 3}, 3)


def test_bad_programs():
    prog = IntegerProgram()
    with pytest.raises(InputError):
        prog.add_variable("x", 3, 1)
    prog.add_variable("x", 0, 1)
    with pytest.raises(InputError):
        prog.add_variable("x", 0, 1)
    with pytest.raises(InputError):
        prog.add_constraint({"x": 1}, "!=", 0)
    with pytest.raises(InputError):
        solve_minimize(prog)


def test_node_budget():
    prog = IntegerProgram()
    for i in range(12):
        prog.add_variable(f"x{i}", 0, 1)
    # parity makes it infeasible but interval reasoning cannot see that
    prog.add_constraint({f"x{i}": 2 for i in range(12)}, "=", 11)
    with pytest.raises(ResourceError):
        solve_feasibility(prog, budget=10)


def brute(variables, constraints):
    names = [v[0] for v in variables]
    for vals in itertools.product(*(range(lo, hi + 1) for _, lo, hi in variables)):
        a = dict(zip(names, vals))
        ok = True
        for coefs, rel, rhs in constraints:
            lhs = sum(c * a[v] for v, c in coefs.items())
            r = Fraction(*rhs) if isinstance(rhs, tuple) else rhs
            ok = ok and {"<": lhs < r, "<=": lhs <= r, "=": lhs == r, ">=": lhs >= r, ">": lhs > r}[rel]
        if ok:
            return a
    return None


@st.composite
def programs(draw):
    nv = draw(st.integers(1, 4))
    variables = [(f"v{i}", lo, lo + draw(st.integers(0, 3))) for i, lo in
                 enumerate(draw(st.lists(st.integers(0, 2), min_size=nv, max_size=nv)))]
    cons = []
    for _ in range(draw(st.integers(0, 3))):
        coefs = {name: draw(st.integers(-3, 3)) for name, _, _ in variables}
        rel = draw(st.sampled_from(["<", "<=", "=", ">=", ">"]))
        rhs = (draw(st.integers(-10, 20)), draw(st.integers(1, 2)))
        cons.append((coefs, rel, rhs))
    return variables, cons


@given(programs())
def test_feasibility_matches_enumeration(pc):
    variables, cons = pc
    prog = IntegerProgram()
    for v in variables:
        prog.add_variable(*v)
    for c in cons:
        prog.add_constraint(*c)
    got = solve_feasibility(prog)
    want = brute(variables, cons)
    assert (got is None) == (want is None)
    if got is not None:
        assert prog.check(got)
