"""
Candidate-control solvers for the amendment family: the first-position
shortcuts, the beating-path dynamic programs for the amendment procedure, the
reduction-rule algorithm for full-amendment, and the subset-enumeration
algorithms for the relative (m - h) family.
"""

from itertools import combinations

from ..graphs import RBDS, BipartiteGraph, GraphInstance, min_red_blue_dominating_set
from ..procedures import path_exists, resolve_h, run_amendment, winner
from .instance import NotApplicable, no, yes

INF = float("inf")


def _require(instance, problems, families=None):
    if instance.problem not in problems:
        raise NotApplicable(f"expected one of {problems}, got {instance.problem}")
    if families is not None and instance.procedure.family not in families:
        raise NotApplicable(f"procedure {instance.procedure} is not in {families}")


def _win(instance, election, cands):
    return winner(election, instance.agenda, instance.procedure, cands)


def _first_rule(spec, size):
    return resolve_h(spec, size) is None


def solve_first_position(instance):
    """Problems where ``p`` heads the agenda, decided by the Condorcet criterion.

    With ``p`` first, ``p`` wins a candidate set iff it beats everyone else in
    it, unless the relative step degenerates and the first candidate wins
    outright.
    """
    spec = instance.procedure
    if spec.is_successive:
        raise NotApplicable("first-position shortcut is for the amendment family")
    p = instance.distinguished
    agenda, C, D = instance.agenda, list(instance.registered), list(instance.unregistered)
    if instance.problem == "MULTIMODE" or agenda.sort(C + D)[0] != p:
        raise NotApplicable("distinguished candidate is not first")
    e = instance.election()
    wins = _win(instance, e, C) == p
    prob = instance.problem
    name = "first-position"
    if prob in ("CCAC", "DCDC"):
        if wins == (prob == "CCAC"):
            return yes(name + " (immune)", minimal=True)
        return no(name + " (immune)")
    if prob in ("CCAV", "CCDV"):
        raise NotApplicable("constructive voter control with p first has no dedicated algorithm")
    if wins == instance.constructive:
        return yes(name, minimal=True)
    rivals = [c for c in C if c != p]
    if prob == "CCDC":
        k = instance.k_dc
        unbeaten = [c for c in rivals if not e.beats(p, c)]
        options = [unbeaten]
        if spec.is_relative and len(C) > spec.d:
            extra = [c for c in rivals if c not in unbeaten]
            options.append((unbeaten + extra)[:len(C) - spec.d])
        best = min(options, key=len)
        return yes(name, deleted_candidates=best, minimal=True) if len(best) <= k else no(name)
    if prob == "DCAC":
        k = instance.k_ac
        need = spec.d + 1 - len(C) if spec.is_relative else 0
        has_unbeaten = any(not e.beats(p, c) for c in rivals)
        ud = [d for d in D if not e.beats(p, d)]
        if has_unbeaten:
            chosen = D[:max(0, need)]
        elif ud:
            chosen = [ud[0]] + [d for d in D if d != ud[0]][:max(0, need - 1)]
        else:
            return no(name)
        if len(chosen) < max(need, 0 if has_unbeaten else 1) or len(chosen) > k:
            return no(name)
        return yes(name, added_candidates=chosen, minimal=True)
    # DCAV / DCDV: some rival has to tie or beat p
    if spec.is_relative and len(C) <= spec.d:
        return no(name)
    n = e.n
    best = None
    for r in rivals:
        s_rp = e.support(r, p)
        if prob == "DCAV":
            pool = [(i, v.count) for i, v in enumerate(instance.unregistered_votes)
                    if v.order.index(r) < v.order.index(p)]
            need = max(0, n - 2 * s_rp)
            budget = instance.k_av
        else:
            pool = [(i, v.count) for i, v in enumerate(instance.registered_votes)
                    if v.order.index(p) < v.order.index(r)]
            need = max(0, n - 2 * s_rp)
            budget = instance.k_dv
        if need > budget or need > sum(c for _, c in pool):
            continue
        if best is None or need < best[0]:
            best = (need, r, pool)
    if best is None:
        return no(name)
    need, _, pool = best
    picked, left = [], need
    for i, c in pool:
        if left == 0:
            break
        take = min(c, left)
        picked.append((i, take))
        left -= take
    if prob == "DCAV":
        return yes(name, added_votes=picked, minimal=True)
    return yes(name, deleted_votes=picked, minimal=True)


def _paths(e, agenda):
    def path(members, c, c2):
        return path_exists(list(agenda.sort(members)), c, c2, e.beats)
    return path


def ccac_amendment_core(e, agenda, C, D, target, k):
    """Minimum set of unregistered candidates whose addition makes ``target`` the amendment winner.

    ``H[d]`` is the least number of additions, ``d`` included, that realise a
    (d <- target) beating path using only ``d`` and later unregistered
    predecessors of the target.
    """
    C = list(C)
    order = agenda.sort(C)
    if run_amendment(order, 1, e.beats)[0] == target:
        return []
    pos = agenda.index
    if not all(e.beats(target, c) for c in C if pos(c) > pos(target)):
        return None
    path = _paths(e, agenda)
    D1 = [d for d in agenda.sort(D) if pos(d) < pos(target)]
    H, nxt = {}, {}
    for idx in range(len(D1) - 1, -1, -1):
        d = D1[idx]
        best, arg = INF, None
        if path(C + [d], d, target):
            best = 1
        else:
            for d2 in D1[idx + 1:]:
                if H[d2] + 1 < best and path(C + [d, d2], d, d2):
                    best, arg = H[d2] + 1, d2
        H[d], nxt[d] = best, arg
    cstar = order[0]
    best, start = INF, None
    for d in D1:
        if H[d] > k or H[d] >= best:
            continue
        if pos(d) > pos(cstar) and not path(C + [d], cstar, d):
            continue
        best, start = H[d], d
    if start is None:
        return None
    chain = []
    while start is not None:
        chain.append(start)
        start = nxt[start]
    return chain


def solve_ccac_amendment(instance):
    """CCAC under the amendment procedure by the beating-path dynamic program."""
    _require(instance, ("CCAC",), ("amendment",))
    e = instance.election()
    added = ccac_amendment_core(e, instance.agenda, instance.registered, instance.unregistered,
                                instance.distinguished, instance.k_ac)
    if added is None:
        return no("ccac-amendment-dp")
    return yes("ccac-amendment-dp", added_candidates=added, minimal=True)


def ccdc_amendment_core(e, agenda, C, target, k, protected=()):
    """Minimum deletion set making ``target`` the amendment winner, or ``None``.

    ``H[i]`` counts deletions strictly between ``chain[i]`` and ``target``
    needed for a (chain[i] <- target) beating path. Between consecutive path
    elements only the candidates that the earlier element fails to beat have
    to go.
    """
    pos = agenda.index
    protected = set(protected)
    succ = [c for c in agenda.sort(C) if pos(c) > pos(target)]
    mandatory = [c for c in succ if not e.beats(target, c)]
    if protected & set(mandatory) or len(mandatory) > k:
        return None
    chain = [c for c in agenda.sort(C) if pos(c) < pos(target)] + [target]
    t = len(chain) - 1
    H = [INF] * (t + 1)
    mids = [None] * (t + 1)
    H[t] = 0
    for i in range(t - 1, -1, -1):
        ci = chain[i]
        for j in range(i + 1, t + 1):
            if H[j] == INF or e.beats(ci, chain[j]):
                continue
            gone = [x for x in chain[i + 1:j] if not e.beats(ci, x)]
            if protected & set(gone):
                continue
            if H[j] + len(gone) < H[i]:
                H[i] = H[j] + len(gone)
                mids[i] = (j, gone)
    best, start = INF, None
    for i in range(t + 1):
        if protected & set(chain[:i]):
            break
        if i + H[i] < best:
            best, start = i + H[i], i
    if start is None or best + len(mandatory) > k:
        return None
    deleted = list(mandatory) + chain[:start]
    i = start
    while i < t:
        j, gone = mids[i]
        deleted += gone
        i = j
    return deleted


def solve_ccdc_amendment(instance):
    """CCDC under the amendment procedure by the predecessor-chain dynamic program."""
    _require(instance, ("CCDC",), ("amendment",))
    e = instance.election()
    dels = ccdc_amendment_core(e, instance.agenda, instance.registered, instance.distinguished,
                               instance.k_dc, protected=())
    if dels is None:
        return no("ccdc-amendment-dp")
    return yes("ccdc-amendment-dp", deleted_candidates=dels, minimal=True)


def solve_dcac_dcdc_amendment(instance):
    """DCAC/DCDC under amendment: try to make each rival the winner with the constructive solver."""
    _require(instance, ("DCAC", "DCDC"), ("amendment",))
    e = instance.election()
    p, agenda = instance.distinguished, instance.agenda
    C, D = list(instance.registered), list(instance.unregistered)
    name = "turing-reduction-to-cc" + instance.problem[2:].lower() + "-amendment"
    if _win(instance, e, C) != p:
        return yes(name, minimal=True)
    best = None
    for c in agenda.sort(C + D):
        if c == p:
            continue
        if instance.problem == "DCDC":
            dels = ccdc_amendment_core(e, agenda, C, c, instance.k_dc, protected=(p,))
            cand = None if dels is None else ("del", dels)
        else:
            if c in D:
                if instance.k_ac < 1:
                    continue
                added = ccac_amendment_core(e, agenda, C + [c], [d for d in D if d != c], c,
                                            instance.k_ac - 1)
                added = None if added is None else [c] + added
            else:
                added = ccac_amendment_core(e, agenda, C, D, c, instance.k_ac)
            cand = None if added is None else ("add", added)
        if cand is not None and (best is None or len(cand[1]) < len(best[1])):
            best = cand
    if best is None:
        return no(name)
    if best[0] == "del":
        return yes(name, deleted_candidates=best[1], minimal=True)
    return yes(name, added_candidates=best[1], minimal=True)


def _is_full_amendment(instance):
    spec = instance.procedure
    if spec.is_successive:
        return False
    if spec.is_relative:
        return spec.d == 1
    return spec.h >= len(instance.registered) - 1


def ccdc_full_amendment_core(instance, e, target, protected=()):
    """Exhaustive application of the two forced-deletion rules. Returns the deletions or ``None``."""
    agenda = instance.agenda
    pos = agenda.index
    alive = list(agenda.sort(instance.registered))
    deleted = []
    protected = set(protected)
    while True:
        # rule 1: successors the target does not beat must go
        for c in [c for c in alive if pos(c) > pos(target) and not e.beats(target, c)]:
            if c in protected:
                return None
            alive.remove(c)
            deleted.append(c)
        w = _win(instance, e, alive)
        if w == target:
            return deleted
        # rule 2: the current winner precedes the target and must go
        if pos(w) > pos(target) or w in protected:
            return None
        alive.remove(w)
        deleted.append(w)


def solve_ccdc_full_amendment(instance):
    """CCDC under full-amendment by exhaustive forced deletions."""
    _require(instance, ("CCDC",))
    if not _is_full_amendment(instance):
        raise NotApplicable("the forced-deletion rules are only sound for full-amendment")
    dels = ccdc_full_amendment_core(instance, instance.election(), instance.distinguished)
    if dels is None or len(dels) > instance.k_dc:
        return no("ccdc-full-amendment-rules")
    return yes("ccdc-full-amendment-rules", deleted_candidates=dels, minimal=True)


def solve_dcdc_full_amendment(instance):
    """DCDC under full-amendment: make some rival win while keeping ``p``."""
    _require(instance, ("DCDC",))
    if not _is_full_amendment(instance):
        raise NotApplicable("the forced-deletion rules are only sound for full-amendment")
    e = instance.election()
    p = instance.distinguished
    name = "turing-reduction-to-ccdc-full-amendment"
    if _win(instance, e, instance.registered) != p:
        return yes(name, minimal=True)
    best = None
    for c in instance.agenda.sort(instance.registered):
        if c == p:
            continue
        dels = ccdc_full_amendment_core(instance, e, c, protected=(p,))
        if dels is not None and len(dels) <= instance.k_dc and (best is None or len(dels) < len(best)):
            best = dels
    if best is None:
        return no(name)
    return yes(name, deleted_candidates=best, minimal=True)


def _relative_h(instance):
    spec = instance.procedure
    if not spec.is_relative:
        raise NotApplicable("this solver needs a relative (m - h) procedure")
    return spec.d


def solve_dcac_m_minus_h(instance):
    """DCAC under (m - h)-amendment.

    Small witnesses (at most ``2h - 1`` candidates) are found by plain
    enumeration. Larger ones consist of the ``h - 1`` leftmost and ``h - 1``
    rightmost added candidates plus at most ``h - l`` candidates between them,
    where ``l`` is the number of successors of ``p`` among the fixed part.
    """
    _require(instance, ("DCAC",))
    h = _relative_h(instance)
    e = instance.election()
    p, agenda = instance.distinguished, instance.agenda
    pos = agenda.index
    C, D, k = list(instance.registered), list(agenda.sort(instance.unregistered)), instance.k_ac
    name = "dcac-m-h-enumeration"
    if _win(instance, e, C) != p:
        return yes(name, minimal=True)
    for s in range(1, min(2 * h - 1, k, len(D)) + 1):
        for S in combinations(D, s):
            if _win(instance, e, C + list(S)) != p:
                return yes(name, added_candidates=S, minimal=True)
    if h == 1 or len(D) <= 2 * h - 1 or k <= 2 * h - 1:
        return no(name)
    kp = k - 2 * h + 2
    best = None
    for SL in combinations(D, h - 1):
        rest = [d for d in D if d not in SL]
        for SR in combinations(rest, h - 1):
            if pos(SL[-1]) > pos(SR[0]):
                continue
            fixed = C + list(SL) + list(SR)
            ell = sum(1 for c in fixed if pos(c) > pos(p))
            if ell >= h - 1:
                continue
            middle = [d for d in rest if d not in SR and pos(SL[-1]) < pos(d) < pos(SR[0])]
            limit = min(h - ell, kp)
            if best is not None:
                limit = min(limit, len(best) - len(fixed) + len(C) - 1)
            for z in range(limit + 1):
                hit = next((Z for Z in combinations(middle, z)
                            if _win(instance, e, fixed + list(Z)) != p), None)
                if hit is not None:
                    best = list(SL) + list(SR) + list(hit)
                    break
    if best is None:
        return no(name)
    return yes(name, added_candidates=best, minimal=True)


def solve_ccac_m_minus_h_fpt(instance):
    """CCAC under (m - h)-amendment via Red-Blue Dominating Set subproblems.

    Unregistered predecessors ``S`` of ``p`` are guessed, together with the
    unregistered successors ``S'`` that land among the last ``h - 1``
    candidates. A predecessor that would win when considered is a red vertex;
    it is neutralised by adding an unregistered successor of ``p`` that it
    fails to beat and that sits inside its comparison window.
    """
    _require(instance, ("CCAC",))
    h = _relative_h(instance)
    e = instance.election()
    p, agenda = instance.distinguished, instance.agenda
    pos = agenda.index
    C, D, k = list(instance.registered), list(agenda.sort(instance.unregistered)), instance.k_ac
    name = "ccac-m-h-rbds"
    if _win(instance, e, C) == p:
        return yes(name, minimal=True)
    if not all(e.beats(p, c) for c in C if pos(c) > pos(p)):
        return no(name)
    D1 = [d for d in D if pos(d) < pos(p)]
    D2p = [d for d in D if pos(d) > pos(p) and e.beats(p, d)]
    best = None
    for s in range(min(k, len(D1)) + 1):
        for S in combinations(D1, s):
            for s2 in range(min(h - 1, len(D2p), k - s) + 1):
                for S2 in combinations(D2p, s2):
                    base = len(S) + len(S2)
                    if best is not None and base >= len(best):
                        continue
                    fixed = C + list(S) + list(S2)
                    order = agenda.sort(fixed)
                    mp = len(order)
                    tail = order[mp - (h - 1):] if h > 1 else ()
                    if p in tail:
                        if _win(instance, e, fixed) == p:
                            best = list(S) + list(S2)
                        continue
                    head = pos(tail[0]) if tail else INF
                    blue = [d for d in D2p if d not in S2 and pos(d) < head]
                    lp = order.index(p)
                    red = []
                    for i0, c in enumerate(order[:lp]):
                        i = i0 + 1
                        window = order[i0 + 1: mp - (h - i)] if i <= h - 1 else order[i0 + 1:]
                        if all(e.beats(c, x) for x in window):
                            red.append(c)
                    edges = frozenset((r, b) for r in red for b in blue if not e.beats(r, b))
                    g = GraphInstance(RBDS, BipartiteGraph(red, blue, edges), 0)
                    dom = min_red_blue_dominating_set(g)
                    if dom is None or base + len(dom) > k:
                        continue
                    if best is None or base + len(dom) < len(best):
                        best = list(S) + list(S2) + sorted(dom)
    if best is None:
        return no(name)
    return yes(name, added_candidates=best, minimal=True)
