"""
Voter-control solvers built on exact-size vote selection.

The exact-edit problems choose exactly ``k`` registered and ``k2``
unregistered voters. Standard voter control reduces to them by sweeping the
sizes: adding voters keeps all of V and tries ``k2 = 0, 1, ...``; deleting
voters keeps ``|V|, |V| - 1, ...`` voters. The first success is a minimum
witness.
"""

from ..errors import InputError, ResourceError
from ..ilp import IntegerProgram, solve_feasibility
from ..procedures import resolve_h, run_amendment
from .instance import DESTRUCTIVE, CONSTRUCTIVE, ExactEditInstance, NotApplicable, no, yes

MGCEV_CAP_M = 5
CONFIG_CAP = 100_000
SIGNATURE_CAP = 10


def _classes(votes, key):
    """Group vote groups by ``key(order)``: ``{key: [(group index, count), ...]}``."""
    out = {}
    for i, v in enumerate(votes):
        out.setdefault(key(v.order), []).append((i, v.count))
    return out


def _distribute(classes, counts, size):
    """Turn per-class counts back into per-group counts, lowest group index first."""
    res = [0] * size
    for key, members in classes.items():
        left = counts.get(key, 0)
        for i, c in members:
            take = min(c, left)
            res[i] = take
            left -= take
    return tuple(res)


def _restricted(cands):
    keep = set(cands)
    return lambda order: tuple(c for c in order if c in keep)


def _pair_program(vcls, wcls, constraints, k, k2):
    """ILP over per-order counts subject to pairwise majority constraints.

    ``constraints`` is a list of ``(a, b, relation)``: the number of chosen
    voters ranking ``a`` above ``b`` stands in ``relation`` to ``(k + k2) / 2``.
    """
    prog = IntegerProgram()
    xs, ys = {}, {}
    for j, (order, members) in enumerate(sorted(vcls.items())):
        xs[order] = prog.add_variable(f"x{j}", 0, sum(c for _, c in members))
    for j, (order, members) in enumerate(sorted(wcls.items())):
        ys[order] = prog.add_variable(f"y{j}", 0, sum(c for _, c in members))
    prog.add_constraint({v: 1 for v in xs.values()}, "=", k)
    prog.add_constraint({v: 1 for v in ys.values()}, "=", k2)
    half = (k + k2, 2)
    for a, b, rel in constraints:
        coefs = {}
        for table in (xs, ys):
            for order, var in table.items():
                if order.index(a) < order.index(b):
                    coefs[var] = 1
        prog.add_constraint(coefs, rel, half)
    return prog, xs, ys


def _solve_pattern(cands, V, W, constraints, k, k2):
    key = _restricted(cands)
    vcls, wcls = _classes(V, key), _classes(W, key)
    prog, xs, ys = _pair_program(vcls, wcls, constraints, k, k2)
    sol = solve_feasibility(prog)
    if sol is None:
        return None
    kept = _distribute(vcls, {o: sol[v] for o, v in xs.items()}, len(V))
    added = _distribute(wcls, {o: sol[v] for o, v in ys.items()}, len(W))
    return kept, added


def solve_mgcev(instance, cap_m=MGCEV_CAP_M):
    """Pick exactly ``k`` registered and ``k2`` unregistered voters whose majority graph is the target.

    Returns
    -------
    (kept, added) or None
        Per-group counts aligned with the registered and unregistered votes.
    """
    if len(instance.candidates) > cap_m:
        raise ResourceError(f"MGCEV is capped at m={cap_m} candidates")
    g = instance.target
    cons = []
    for i, a in enumerate(g.vertices):
        for b in g.vertices[i + 1:]:
            cons.append((a, b, ">" if g.beats(a, b) else "<" if g.beats(b, a) else "="))
    return _solve_pattern(instance.candidates, instance.registered_votes,
                          instance.unregistered_votes, cons, instance.k, instance.k2)


class _Unknown(Exception):
    pass


class _PairRanges:
    """Individually achievable range of ``n(a, b)`` among the chosen voters, per pair."""

    def __init__(self, V, W, k, k2):
        self.V, self.W, self.k, self.k2 = V, W, k, k2
        self.cache = {}

    def __call__(self, a, b):
        if (a, b) not in self.cache:
            va = sum(v.count for v in self.V if v.order.index(a) < v.order.index(b))
            wa = sum(w.count for w in self.W if w.order.index(a) < w.order.index(b))
            vb = sum(v.count for v in self.V) - va
            wb = sum(w.count for w in self.W) - wa
            self.cache[a, b] = (max(0, self.k - vb) + max(0, self.k2 - wb),
                                min(self.k, va) + min(self.k2, wa))
        return self.cache[a, b]


def _doubled_window(rel, n):
    """Allowed values of ``2 * n(a, b)`` for ``relation`` against ``n / 2``, as a closed interval."""
    return {">": (n + 1, 2 * n), ">=": (n, 2 * n), "<": (0, n - 1), "<=": (0, n), "=": (n, n)}[rel]


def _pair_feasible(rng, rels, n):
    lo, hi = rng
    wlo, whi = 2 * lo, 2 * hi
    for rel in rels:
        a, b = _doubled_window(rel, n)
        wlo, whi = max(wlo, a), min(whi, b)
    if wlo > whi:
        return False
    # need an even value in the window
    return wlo % 2 == 0 or wlo + 1 <= whi


def _leaves(order, step, ranges, n):
    """All decision-tree leaves of the elimination process over ``order``.

    Only pairs the process actually queries get branched on. Each branch
    adds ``beats`` or ``not beats`` as a linear constraint, so every leaf is
    a (constraints, winner) pattern. Branches whose pair is infeasible in
    isolation are cut.
    """
    out = []

    def explore(cons):
        def beats(x, y):
            a, b = (x, y) if x < y else (y, x)
            key = (a, b)
            if key not in known:
                raise _Unknown(x, y)
            return known[key](x, y)

        known = {}
        by_pair = {}
        for a, b, rel in cons:
            by_pair.setdefault((a, b), []).append(rel)
        for pair, rels in by_pair.items():
            known[pair] = _decider(rels, n)
        try:
            w = run_amendment(order, step, beats)[0]
        except _Unknown as exc:
            x, y = exc.args
            a, b = (x, y) if x < y else (y, x)
            yes_rel, no_rel = (">", "<=") if x == a else ("<", ">=")
            for rel in (yes_rel, no_rel):
                if _pair_feasible(ranges(a, b), by_pair.get((a, b), []) + [rel], n):
                    explore(cons + [(a, b, rel)])
            return
        out.append((cons, w))

    explore([])
    return out


def _decider(rels, n):
    """Answer ``beats`` queries for a pair from its constraints, raising ``_Unknown`` when undetermined."""
    lo, hi = 0, 2 * n
    for rel in rels:
        a, b = _doubled_window(rel, n)
        lo, hi = max(lo, a), min(hi, b)

    def decide(x, y):
        first = x < y
        if first:
            if lo > n:
                return True
            if hi <= n:
                return False
        else:
            if hi < n:
                return True
            if lo >= n:
                return False
        raise _Unknown(x, y)
    return decide


def solve_edcev_h_amendment(instance):
    """Exact destructive voter selection under the absolute h-amendment procedure.

    Only the agenda prefix up to ``l + h + 1`` (``l`` = number of predecessors
    of ``p``) decides whether ``p`` survives; after that ``p`` must beat every
    later candidate. So either the prefix's majority relation does not elect
    ``p``, or it does and some later ``q`` keeps ``p`` from beating it. Each
    way the prefix can resolve is a pattern of pairwise constraints, checked
    by the MGCEV program on the restricted election.
    """
    spec = instance.procedure
    if spec.is_successive or spec.is_relative or instance.goal != DESTRUCTIVE:
        raise NotApplicable("needs the destructive goal and an absolute h-amendment procedure")
    agenda = instance.agenda.restrict(instance.candidates)
    p = instance.distinguished
    V, W, k, k2 = instance.registered_votes, instance.unregistered_votes, instance.k, instance.k2
    n = k + k2
    ranges = _PairRanges(V, W, k, k2)
    ell = agenda.index(p)
    lp = min(ell + spec.h + 1, len(agenda))
    prefix = agenda.order[:lp]
    leaves = _leaves(prefix, resolve_h(spec, lp), ranges, n)
    if len(leaves) > CONFIG_CAP:
        raise ResourceError(f"{len(leaves)} prefix patterns exceed the cap of {CONFIG_CAP}")
    winning = []
    for cons, w in leaves:
        if w != p:
            res = _solve_pattern(prefix, V, W, cons, k, k2)
            if res is not None:
                return res
        else:
            winning.append(cons)
    for q in agenda.order[lp:]:
        a, b = min(p, q), max(p, q)
        extra = (a, b, "<=" if a == p else ">=")
        if not _pair_feasible(ranges(a, b), [extra[2]], n):
            continue
        for cons in winning:
            res = _solve_pattern(prefix + (q,), V, W, cons + [extra], k, k2)
            if res is not None:
                return res
    return None


def _signature(agenda, ell):
    """Bit i is 1 iff the i-th agenda candidate is ranked below one of its successors."""
    heads = agenda.order[:ell]

    def sig(order):
        rank = {c: i for i, c in enumerate(order)}
        bits = []
        for i, c in enumerate(heads):
            succ = agenda.order[i + 1:]
            bits.append(int(any(rank[s] < rank[c] for s in succ)))
        return tuple(bits)
    return sig


def solve_eccev_successive(instance):
    """Exact constructive voter selection under the successive procedure, as an ILP over signature classes."""
    if not instance.procedure.is_successive or instance.goal != CONSTRUCTIVE:
        raise NotApplicable("needs the constructive goal and the successive procedure")
    agenda = instance.agenda.restrict(instance.candidates)
    p = instance.distinguished
    ell = agenda.position(p)
    if ell > SIGNATURE_CAP:
        raise ResourceError(f"p has {ell - 1} predecessors; signature ILP capped at {SIGNATURE_CAP - 1}")
    V, W, k, k2 = instance.registered_votes, instance.unregistered_votes, instance.k, instance.k2
    key = _signature(agenda, ell)
    vcls, wcls = _classes(V, key), _classes(W, key)
    prog = IntegerProgram()
    xs = {s: prog.add_variable(f"x{''.join(map(str, s))}", 0, sum(c for _, c in m))
          for s, m in sorted(vcls.items())}
    ys = {s: prog.add_variable(f"y{''.join(map(str, s))}", 0, sum(c for _, c in m))
          for s, m in sorted(wcls.items())}
    prog.add_constraint({v: 1 for v in xs.values()}, "=", k)
    prog.add_constraint({v: 1 for v in ys.values()}, "=", k2)
    half = (k + k2, 2)
    for i in range(ell):
        coefs = {var: 1 for table in (xs, ys) for s, var in table.items() if s[i]}
        if i < ell - 1:
            prog.add_constraint(coefs, ">=", half)
        elif ell < len(agenda):
            # p must dominate its successors; a last-placed p dominates the empty set
            prog.add_constraint(coefs, "<", half)
    sol = solve_feasibility(prog)
    if sol is None:
        return None
    kept = _distribute(vcls, {s: sol[v] for s, v in xs.items()}, len(V))
    added = _distribute(wcls, {s: sol[v] for s, v in ys.items()}, len(W))
    return kept, added


def _greedy(votes, good, want):
    """Pick ``want`` voters, taking those with ``good(order)`` first. Returns counts and good total."""
    counts = [0] * len(votes)
    left = want
    got = 0
    for prefer in (True, False):
        for i, v in enumerate(votes):
            if left == 0:
                break
            if bool(good(v.order)) == prefer:
                take = min(v.count - counts[i], left)
                counts[i] += take
                left -= take
                if prefer:
                    got += take
    return tuple(counts), got


def _ranks_above(c, others):
    others = set(others)

    def test(order):
        for x in order:
            if x == c:
                return True
            if x in others:
                return False
        return False
    return test


def solve_edcev_successive(instance):
    """Exact destructive voter selection under the successive procedure by greedy selection.

    ``p`` loses iff it fails to dominate its successors or some predecessor
    dominates its own successors. Each alternative is maximised greedily.
    """
    if not instance.procedure.is_successive or instance.goal != DESTRUCTIVE:
        raise NotApplicable("needs the destructive goal and the successive procedure")
    agenda = instance.agenda.restrict(instance.candidates)
    p = instance.distinguished
    V, W, k, k2 = instance.registered_votes, instance.unregistered_votes, instance.k, instance.k2
    n = k + k2
    succ = agenda.successors(p)
    if succ:
        top = _ranks_above(p, succ)
        kept, bad_v = _greedy(V, lambda o: not top(o), k)
        added, bad_w = _greedy(W, lambda o: not top(o), k2)
        if 2 * (n - bad_v - bad_w) <= n:
            return kept, added
    for i, c in enumerate(agenda.order[:agenda.index(p)]):
        top = _ranks_above(c, agenda.order[i + 1:])
        kept, gv = _greedy(V, top, k)
        added, gw = _greedy(W, top, k2)
        if 2 * (gv + gw) > n:
            return kept, added
    return None


def _exact_sweep(instance, exact_solver, name):
    """Solve standard voter control through exact-size subproblems, smallest edit first."""
    if instance.problem not in ("CCAV", "CCDV", "DCAV", "DCDV"):
        raise NotApplicable(f"{name} serves voter control only")
    V, W = instance.registered_votes, instance.unregistered_votes
    nv = sum(v.count for v in V)
    nw = sum(w.count for w in W)
    adding = instance.problem.endswith("AV")
    budget = min(instance.k_av, nw) if adding else min(instance.k_dv, nv)
    for e in range(budget + 1):
        k, k2 = (nv, e) if adding else (nv - e, 0)
        ex = ExactEditInstance(instance.registered, instance.distinguished, instance.agenda, V, W,
                               k, k2, instance.goal, instance.procedure)
        res = exact_solver(ex)
        if res is not None:
            kept, added = res
            deleted = [(i, v.count - c) for i, (v, c) in enumerate(zip(V, kept))]
            return yes(name, deleted_votes=deleted, added_votes=list(enumerate(added)), minimal=True)
    return no(name)


def solve_voter_control_edcev_h_amendment(instance):
    """DCAV / DCDV under absolute h-amendment via exact destructive selection."""
    if instance.problem not in ("DCAV", "DCDV"):
        raise NotApplicable("destructive voter control only")
    return _exact_sweep(instance, solve_edcev_h_amendment, "edcev-configurations+mgcev-ilp")


def solve_voter_control_eccev_successive(instance):
    """CCAV / CCDV under successive via the signature ILP."""
    if instance.problem not in ("CCAV", "CCDV"):
        raise NotApplicable("constructive voter control only")
    return _exact_sweep(instance, solve_eccev_successive, "eccev-signature-ilp")


def solve_voter_control_edcev_successive(instance):
    """DCAV / DCDV under successive via the greedy."""
    if instance.problem not in ("DCAV", "DCDV"):
        raise NotApplicable("destructive voter control only")
    return _exact_sweep(instance, solve_edcev_successive, "edcev-successive-greedy")


def check_exact(instance, kept, added):
    """Raise ``InputError`` if counts are out of range; return whether the goal is met."""
    for votes, counts, total in ((instance.registered_votes, kept, instance.k),
                                 (instance.unregistered_votes, added, instance.k2)):
        if len(counts) != len(votes) or any(not 0 <= c <= v.count for v, c in zip(votes, counts)):
            raise InputError("count vector out of range", code="E_WITNESS")
        if sum(counts) != total:
            raise InputError("count vector has the wrong total", code="E_WITNESS")
    return instance.goal_met(kept, added)
