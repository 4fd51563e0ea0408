"""Candidate control under the successive procedure, FPT in the number of successors of p."""

from itertools import combinations

from ..procedures import evaluate
from .instance import NotApplicable, no, yes


def _successive_winner(instance, cands):
    e = instance.election()
    return evaluate(e, instance.agenda, instance.procedure, candidates=cands)[0]


def solve_ccdc_successive_fpt(instance):
    """CCDC-Successive by guessing which successors of p get deleted.

    Deleting a predecessor only matters if it is the current winner, so once
    the deleted successors are fixed the remaining deletions are forced:
    keep deleting the winner while it precedes p.
    """
    if instance.problem != "CCDC" or not instance.procedure.is_successive:
        raise NotApplicable("needs CCDC under the successive procedure")
    p, k = instance.distinguished, instance.k_dc
    agenda = instance.agenda.restrict(instance.registered)
    succ = agenda.successors(p)
    before = set(agenda.predecessors(p))
    best = None
    for size in range(min(k, len(succ)) + 1):
        for S in combinations(succ, size):
            deleted = list(S)
            while len(deleted) <= k:
                w = _successive_winner(instance, [c for c in agenda.order if c not in deleted])
                if w not in before:
                    break
                deleted.append(w)
            if w == p and len(deleted) <= k and (best is None or len(deleted) < len(best)):
                best = deleted
    if best is None:
        return no("ccdc-successive-enumeration")
    return yes("ccdc-successive-enumeration", deleted_candidates=best, minimal=True)


def solve_dcac_successive_fpt(instance):
    """DCAC-Successive by guessing which unregistered successors of p get added.

    Adding a predecessor d can only hurt p by making d itself the winner,
    since every earlier candidate now has one more rival to dominate.
    """
    if instance.problem != "DCAC" or not instance.procedure.is_successive:
        raise NotApplicable("needs DCAC under the successive procedure")
    p, k = instance.distinguished, instance.k_ac
    D = instance.unregistered
    agenda = instance.agenda
    after = set(agenda.successors(p))
    D1 = agenda.sort(d for d in D if d in after)
    D2 = agenda.sort(d for d in D if d not in after)
    C = list(instance.registered)
    # sizes in increasing order give a minimum witness
    for size in range(min(k, len(D)) + 1):
        for S in combinations(D1, size):
            if _successive_winner(instance, C + list(S)) != p:
                return yes("dcac-successive-enumeration", added_candidates=S, minimal=True)
        if size == 0:
            continue
        for S in combinations(D1, size - 1):
            for d in D2:
                if _successive_winner(instance, C + list(S) + [d]) == d:
                    return yes("dcac-successive-enumeration", added_candidates=S + (d,), minimal=True)
    return no("dcac-successive-enumeration")
