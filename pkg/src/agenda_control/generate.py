"""Random control instances for fuzzing and the ``generate random`` command."""

import random
import string

from .election import Agenda, Vote
from .graphs import BICLIQUE, RBDS, BipartiteGraph, Graph, GraphInstance
from .procedures import ProcedureSpec
from .solvers.instance import CONSTRUCTIVE, DESTRUCTIVE, ControlInstance


def candidate_names(m):
    if m <= 26:
        return list(string.ascii_lowercase[:m])
    return [f"c{i}" for i in range(m)]


def random_votes(rng, cands, n):
    """``n`` voters as vote groups; identical consecutive draws are merged."""
    votes = []
    for _ in range(n):
        order = list(cands)
        rng.shuffle(order)
        if votes and rng.random() < 0.25:
            order = list(votes[-1].order)
            votes[-1] = Vote(order, votes[-1].count + 1)
        else:
            votes.append(Vote(order))
    return votes


def random_instance(rng, problem, m, n, procedure=None, k=None, max_k=3, p_index=None,
                    unregistered=None, unregistered_votes=None):
    """Draw a random instance of ``problem`` with ``m`` candidates and ``n`` voters.

    Parameters
    ----------
    rng : random.Random
    problem : str
        One of the eight single-mode problems or ``MULTIMODE``.
    procedure : ProcedureSpec, optional
        Defaults to the amendment procedure.
    k : int, optional
        Budget; drawn from ``0..max_k`` when omitted.
    p_index : int, optional
        0-based agenda position of the distinguished candidate.
    unregistered, unregistered_votes : int, optional
        Sizes of D and W for the problems that allow them.
    """
    if isinstance(rng, int):
        rng = random.Random(rng)
    procedure = procedure or ProcedureSpec.amendment(1)
    cands = candidate_names(m)
    kind = problem[2:] if problem != "MULTIMODE" else "MM"
    nd = 0
    if kind in ("AC", "MM") and m > 1:
        nd = unregistered if unregistered is not None else rng.randint(1, m - 1)
    nw = 0
    if kind in ("AV", "MM") and n > 0:
        nw = unregistered_votes if unregistered_votes is not None else rng.randint(1, n)
    order = list(cands)
    rng.shuffle(order)
    if p_index is None:
        p_index = rng.randrange(m)
    p = order[p_index]
    others = [c for c in cands if c != p]
    rng.shuffle(others)
    D = sorted(others[:nd])
    C = sorted(set(cands) - set(D))
    allv = random_votes(rng, cands, n)
    # split groups so that W gets about nw voters
    V, W, seen = [], [], 0
    for v in allv:
        (W if seen < nw else V).append(v)
        seen += v.count
    kw = {}
    if kind == "MM":
        kw = {key: rng.randint(0, max_k) for key in ("k_av", "k_dv", "k_ac", "k_dc")}
        kw["goal"] = rng.choice([CONSTRUCTIVE, DESTRUCTIVE])
    else:
        kw["k_" + kind.lower()] = rng.randint(0, max_k) if k is None else k
    return ControlInstance(problem, procedure, tuple(C), p, Agenda(order), tuple(V), tuple(D),
                           tuple(W), **kw)


def random_graph_instance(rng, problem, size=4, kappa=None, density=0.5):
    """Random source instance for a graph problem.

    ``size`` bounds each part (bipartite problems) or the vertex count.
    """
    if isinstance(rng, int):
        rng = random.Random(rng)
    if problem in (RBDS, BICLIQUE):
        red = [f"r{i}" for i in range(rng.randint(1, size))]
        blue = [f"b{i}" for i in range(rng.randint(1, size + 1))]
        if problem == BICLIQUE:
            red = [f"x{i}" for i in range(len(red))]
            blue = [f"y{i}" for i in range(len(blue))]
        edges = {(r, b) for r in red for b in blue if rng.random() < density}
        g = BipartiteGraph(tuple(red), tuple(blue), frozenset(edges))
        top = len(blue) if problem == RBDS else min(len(red), len(blue))
    else:
        verts = [f"v{i}" for i in range(rng.randint(2, size + 1))]
        edges = {(u, v) for i, u in enumerate(verts) for v in verts[i + 1:] if rng.random() < density}
        g = Graph(tuple(verts), frozenset(edges))
        top = len(verts)
    if kappa is None:
        kappa = rng.randint(0, top)
    return GraphInstance(problem, g, kappa)


def random_reduction_source(rng, tag, size=4, tries=2000, max_kappa=None):
    """Reject-sample a source instance that ``tag``'s construction accepts.

    A target answer is drawn first and ``kappa`` is then picked among the
    admissible values with that answer, so yes and no sources come out
    roughly balanced. ``max_kappa`` caps the parameter.
    """
    from .errors import InputError
    from .graphs import solve_graph
    from .reductions import CATALOG, build_reduction
    if isinstance(rng, int):
        rng = random.Random(rng)
    problem = CATALOG[tag].source
    want = rng.random() < 0.5
    fallback = None
    for _ in range(tries):
        base = random_graph_instance(rng, problem, size=size, kappa=0,
                                     density=rng.choice([0.3, 0.5, 0.7]))
        g = base.graph
        top = len(g.blue) if problem == RBDS else len(g.red) if problem == BICLIQUE else len(g.vertices)
        fits = {True: [], False: []}
        if max_kappa is not None:
            top = min(top, max_kappa)
        for kappa in range(top + 1):
            src = GraphInstance(problem, g, kappa)
            try:
                build_reduction(tag, src)
            except InputError:
                continue
            fits[solve_graph(src) is not None].append(src)
        if fits[want]:
            return rng.choice(fits[want])
        fallback = fallback or (fits[not want] and rng.choice(fits[not want]))
    if fallback:
        return fallback
    raise RuntimeError(f"no admissible source for {tag} after {tries} draws")
