"""Exhaustive multimode search: the ground-truth oracle for every solver."""

from concurrent.futures import ThreadPoolExecutor
from itertools import combinations

from ..errors import ResourceError
from ..procedures import winner
from .instance import Caps, no, yes

ALGORITHM = "brute-force"
DEFAULT_POINT_BUDGET = 3_000_000


def _subsets_by_size(pool, limit):
    return [list(combinations(pool, s)) for s in range(min(limit, len(pool)) + 1)]


def _count_vectors(mults, total):
    """All vectors ``x`` with ``0 <= x[i] <= mults[i]`` and ``sum(x) == total``; low indices used first."""
    out = []
    n = len(mults)
    suffix = [0] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix[i] = suffix[i + 1] + mults[i]
    cur = [0] * n

    def rec(i, left):
        if i == n:
            if left == 0:
                out.append(tuple(cur))
            return
        if left > suffix[i]:
            return
        for x in range(min(mults[i], left), -1, -1):
            cur[i] = x
            rec(i + 1, left - x)
        cur[i] = 0

    rec(0, total)
    return out


def _pairs(vec):
    return tuple((i, c) for i, c in enumerate(vec) if c)


def check_caps(instance, caps):
    m = len(instance.universe)
    n = sum(v.count for v in instance.registered_votes + instance.unregistered_votes)
    budgets = (instance.k_av, instance.k_dv, instance.k_ac, instance.k_dc)
    if m > caps.m:
        raise ResourceError(f"brute force capped at m={caps.m} candidates, instance has {m}")
    if n > caps.n:
        raise ResourceError(f"brute force capped at n={caps.n} voters, instance has {n}")
    if max(budgets) > caps.k:
        raise ResourceError(f"brute force capped at budgets <= {caps.k}, instance has {max(budgets)}")


def brute_force_solve(instance, caps=None, jobs=1, point_budget=DEFAULT_POINT_BUDGET):
    """Try every budget-respecting edit, smallest total size first.

    Returns a minimum-size witness; among equal sizes the first in the
    enumeration order (candidate deletions, candidate additions, vote
    deletions, vote additions; lower indices first).
    """
    caps = caps or Caps.from_env()
    check_caps(instance, caps)
    p = instance.distinguished
    V, W = instance.registered_votes, instance.unregistered_votes
    dels = _subsets_by_size([c for c in instance.registered if c != p], instance.k_dc)
    adds = _subsets_by_size(list(instance.unregistered), instance.k_ac)
    vmult = [v.count for v in V]
    wmult = [w.count for w in W]
    kdv = min(instance.k_dv, sum(vmult))
    kav = min(instance.k_av, sum(wmult))
    vdel = [_count_vectors(vmult, s) for s in range(kdv + 1)]
    wadd = [_count_vectors(wmult, s) for s in range(kav + 1)]
    total_points = (sum(map(len, dels)) * sum(map(len, adds))
                    * sum(map(len, vdel)) * sum(map(len, wadd)))
    if total_points > point_budget:
        raise ResourceError(f"brute force would visit {total_points} edit tuples (budget {point_budget})")
    elections = {}
    registered = set(instance.registered)

    def evaluate(point):
        cd, ca, vd, wa = point
        key = (vd, wa)
        e = elections.get(key)
        if e is None:
            e = instance.election(_pairs(vd), _pairs(wa))
            elections[key] = e
        final = (registered - set(cd)) | set(ca)
        return instance.goal_met(winner(e, instance.agenda, instance.procedure, final))

    max_total = (len(dels) - 1) + (len(adds) - 1) + kdv + kav
    pool = ThreadPoolExecutor(jobs) if jobs > 1 else None
    try:
        for total in range(max_total + 1):
            points = []
            for s1 in range(len(dels)):
                for s2 in range(len(adds)):
                    for s3 in range(kdv + 1):
                        s4 = total - s1 - s2 - s3
                        if not 0 <= s4 <= kav:
                            continue
                        for cd in dels[s1]:
                            for ca in adds[s2]:
                                for vd in vdel[s3]:
                                    for wa in wadd[s4]:
                                        points.append((cd, ca, vd, wa))
            hit = _first_hit(points, evaluate, pool, jobs)
            if hit is not None:
                cd, ca, vd, wa = hit
                return yes(ALGORITHM, cd, ca, _pairs(vd), _pairs(wa), minimal=True)
    finally:
        if pool is not None:
            pool.shutdown()
    return no(ALGORITHM)


def _first_hit(points, evaluate, pool, jobs):
    if pool is None or len(points) < 2 * jobs:
        for pt in points:
            if evaluate(pt):
                return pt
        return None
    size = -(-len(points) // jobs)
    chunks = [points[i:i + size] for i in range(0, len(points), size)]

    def scan(chunk):
        for pt in chunk:
            if evaluate(pt):
                return pt
        return None

    # the earliest chunk with a hit wins, so the result matches the serial order
    for res in pool.map(scan, chunks):
        if res is not None:
            return res
    return None
