"""
Hardness constructions as control-instance generators.

Every catalog entry maps a graph-problem instance (RBDS, Perfect Code,
Clique or Biclique) to a control instance whose answer matches the
source's. They double as structured test inputs: solving both sides and
comparing the answers exercises the winner engines and the solvers on
instances far from uniform random.

Orders the constructions leave free (``X`` arranged in "some fixed order")
are lexicographic by vertex id. Where the agenda itself is partly free, a
``seed`` shuffles the free positions.
"""

import logging
import random
from dataclasses import dataclass

from .election import Agenda, Vote
from .errors import InputError, InvariantError
from .graphs import BICLIQUE, CLIQUE, PERFECT_CODE, RBDS, normalize_rbds, solve_graph
from .oriented import OrientedGraph, mcgarvey_election
from .procedures import ProcedureSpec
from .solvers.brute import brute_force_solve
from .solvers.instance import Caps, ControlInstance

log = logging.getLogger(__name__)

P, Q, Q2, P2 = "p", "q", "q2", "p2"
RESERVED = {P, Q, Q2, P2}
VERIFY_CAPS = Caps(m=32, n=160, k=10)


def copy_name(c, i):
    """Id of the i-th extra member of ``c``'s ordered block."""
    return f"{c}__{i}"


@dataclass(frozen=True)
class CatalogEntry:
    tag: str
    source: str
    problem: str
    family: str
    summary: str


@dataclass
class _Draft:
    """A construction before lifting. Orders are lists; votes are ``(order, count)``."""

    problem: str
    registered: list
    agenda: list
    votes: list
    budget: int
    unregistered: list = None
    unregistered_votes: list = None


def _minus(seq, drop):
    drop = set(drop)
    return [c for c in seq if c not in drop]


def _only(seq, keep):
    keep = set(keep)
    return [c for c in seq if c in keep]


def _fail(tag, msg):
    raise InputError(f"{tag}: source violates the assumption {msg}", code="E_PRECONDITION")


# ---------------------------------------------------------------- sources

def _check_ids(tag, vertices):
    for v in vertices:
        if v in RESERVED or "__" in v:
            raise InputError(f"{tag}: vertex id {v!r} clashes with a generated candidate",
                             code="E_PRECONDITION")


def _rbds(tag, source, uniform=False):
    if source.problem != RBDS:
        raise InputError(f"{tag} needs an RBDS source, got {source.problem}", code="E_SOURCE")
    g = source.graph
    if not g.red:
        _fail(tag, "R is nonempty")
    if source.kappa < 1:
        _fail(tag, "kappa >= 1")
    if any(g.degree(v) == 0 for v in g.red + g.blue):
        _fail(tag, "G has no isolated vertices")
    if uniform:
        norm = normalize_rbds(source)
        if norm is not source:
            log.info("%s: padded red degrees to %d with degree-1 blue leaves", tag,
                     max(g.degree(r) for r in g.red))
        source = norm
        g = source.graph
    _check_ids(tag, g.red + g.blue)
    return source, g


def _pc(tag, source, least=2):
    if source.problem != PERFECT_CODE:
        raise InputError(f"{tag} needs a Perfect Code source, got {source.problem}", code="E_SOURCE")
    _check_ids(tag, source.graph.vertices)
    if source.kappa < least:
        _fail(tag, f"kappa >= {least}")
    g = source.graph
    X = [f"x_{v}" for v in g.vertices]
    Y = [f"y_{v}" for v in g.vertices]
    closed = {v: g.closed_neighborhood(v) for v in g.vertices}
    return g, X, Y, closed


def _nx(closed, v, prefix):
    return {f"{prefix}_{u}" for u in closed[v]}


# ---------------------------------------------------------------- builders
#
# Each builder returns (draft, lifting) where lifting is one of
#   ("blocks", names)  every name becomes an ordered block c, c__1, ...
#   ("p-tail",)        p__{h-1} .. p__1 go right before p in the agenda and
#                      right after p, as p__1 .. p__{h-1}, in every vote
#   ("p-block",)       (p, p__1, ...) is an ordered block; p__i close the agenda
#   ("none",)


def _ccav_amd(tag, src, rng, h):
    src, g = _rbds(tag, src)
    k = src.kappa
    if k > len(g.blue):
        _fail(tag, "kappa <= |B|")
    R = list(g.red)
    votes = [([Q, *R, P], k + 1), ([P, *R, Q], 1), ([*R, P, Q], 1)]
    unreg = []
    for b in g.blue:
        nb = g.neighbors(b)
        unreg.append(([*_minus(R, nb), P, Q, *_only(R, nb)], 1))
    d = _Draft("CCAV", [Q, *R, P], [Q, *R, P], votes, k, [], unreg)
    return d, ("blocks", R)


def _uniform_rbds(tag, src, need_k_gt1=True):
    src, g = _rbds(tag, src, uniform=True)
    k, nb = src.kappa, len(g.blue)
    ell = g.degree(g.red[0])
    if not nb > k or (need_k_gt1 and not k > 1):
        _fail(tag, "|B| > kappa > 1")
    if ell + k > nb:
        _fail(tag, "ell + kappa <= |B|")
    return src, g, k, ell


def _ccdv_amd(tag, src, rng, h):
    src, g, k, ell = _uniform_rbds(tag, src)
    R = list(g.red)
    votes = [([*R, P, Q], len(g.blue) - k + 1 - ell), ([P, Q, *R], ell)]
    for b in g.blue:
        nb = g.neighbors(b)
        votes.append(([*_only(R, nb), Q, *_minus(R, nb), P], 1))
    return _Draft("CCDV", [Q, *R, P], [Q, *R, P], votes, k), ("blocks", R)


def _ccdv_amd_dual(tag, src, rng, h):
    src, g = _rbds(tag, src)
    k = src.kappa
    if not k < len(g.blue):
        _fail(tag, "kappa < |B|")
    R = list(g.red)
    votes = [([P, Q, *R, Q2], k), ([*R, P, Q, Q2], 1)]
    for b in g.blue:
        nb = g.neighbors(b)
        votes.append(([Q2, *_minus(R, nb), Q, *_only(R, nb), P], 1))
    agenda = [Q, Q2, *R, P]
    return _Draft("CCDV", agenda, agenda, votes, len(g.blue) - k), ("blocks", [*R, Q2])


def _dcav_votes(k, X, Y, closed, vertices):
    votes = [([P, Q, *X, *Y], 1), ([Q, P, *X, *Y], k + 2), ([P, *X, Q, *Y], k - 2),
             ([P, *X, *Y, Q], k + 2)]
    unreg = []
    for v in vertices:
        nx, ny = _nx(closed, v, "x"), _nx(closed, v, "y")
        unreg.append(([*_only(X, nx), *_minus(Y, ny), Q, P, *_minus(X, nx), *_only(Y, ny)], 1))
    return votes, unreg


def _dcav_amd(tag, src, rng, h):
    g, X, Y, closed = _pc(tag, src)
    votes, unreg = _dcav_votes(src.kappa, X, Y, closed, g.vertices)
    agenda = [Q, *X, *Y, P]
    return _Draft("DCAV", agenda, agenda, votes, src.kappa, [], unreg), ("blocks", X + Y)


def _dcdv_votes(g, k, ell, R):
    votes = [([*R, Q, P], len(g.blue) + 1 - ell - k), ([Q, P, *R], ell)]
    for b in g.blue:
        nb = g.neighbors(b)
        votes.append(([P, *_only(R, nb), Q, *_minus(R, nb)], 1))
    return votes


def _dcdv_amd(tag, src, rng, h):
    src, g, k, ell = _uniform_rbds(tag, src)
    R = list(g.red)
    agenda = [Q, *R, P]
    return _Draft("DCDV", agenda, agenda, _dcdv_votes(g, k, ell, R), k), ("blocks", R)


def _dcdv_dual_votes(g, k, R):
    votes = [([Q, P, *R], k), ([*R, Q, P], 1)]
    for b in g.blue:
        nb = g.neighbors(b)
        votes.append(([P, *_minus(R, nb), Q, *_only(R, nb)], 1))
    return votes


def _dcdv_amd_dual(tag, src, rng, h):
    src, g = _rbds(tag, src)
    k = src.kappa
    if not k < len(g.blue):
        _fail(tag, "kappa < |B|")
    R = list(g.red)
    agenda = [Q, *R, P]
    return _Draft("DCDV", agenda, agenda, _dcdv_dual_votes(g, k, R), len(g.blue) - k), ("none",)


def _ccav_mh_votes(k, X, Y, closed, vertices):
    votes = [([P, *X, *Y], k + 2), ([*X, P, *Y], k - 2), ([*X, *Y, P], k + 2)]
    unreg = []
    for v in vertices:
        nx, ny = _nx(closed, v, "x"), _nx(closed, v, "y")
        unreg.append(([*_only(X, nx), *_minus(Y, ny), P, *_minus(X, nx), *_only(Y, ny)], 1))
    return votes, unreg


def _ccav_mh(tag, src, rng, h):
    # at kappa = 2 every x already ties p, so p wins before any vote is added
    g, X, Y, closed = _pc(tag, src, least=3)
    votes, unreg = _ccav_mh_votes(src.kappa, X, Y, closed, g.vertices)
    agenda = [*X, *Y, P]
    return _Draft("CCAV", agenda, agenda, votes, src.kappa, [], unreg), ("p-tail",)


def _ccdv_mh(tag, src, rng, h):
    src, g = _rbds(tag, src, uniform=True)
    k, nb, ell = src.kappa, len(g.blue), g.degree(g.red[0])
    if k < 3:
        _fail(tag, "kappa >= 3")
    if not nb > k:
        _fail(tag, "|B| > kappa")
    R = list(g.red)
    votes = [([*R, P, Q], nb - k + 1), ([Q, P, *R], ell), ([P, Q, *R], ell - 1)]
    for b in g.blue:
        n_b = g.neighbors(b)
        votes.append(([Q, *_only(R, n_b), P, *_minus(R, n_b)], 1))
    agenda = [Q, *R, P]
    return _Draft("CCDV", agenda, agenda, votes, k), ("p-tail",)


def _ccdv_mh_dual_draft(tag, src, problem):
    src, g = _rbds(tag, src)
    k = src.kappa
    if not 1 <= k < len(g.blue):
        _fail(tag, "1 <= kappa < |B|")
    R = list(g.red)
    votes = [([P, Q, *R], k - 1), ([*R, P, Q], 1)]
    for b in g.blue:
        nb = g.neighbors(b)
        votes.append(([Q, *_minus(R, nb), P, *_only(R, nb)], 1))
    agenda = [Q, *R, P]
    return _Draft(problem, agenda, agenda, votes, len(g.blue) - k)


def _ccdv_mh_dual(tag, src, rng, h):
    return _ccdv_mh_dual_draft(tag, src, "CCDV"), ("p-tail",)


def _free_after_q(middle, rng):
    """Agenda ``q, middle..., p`` with p placed anywhere after q when shuffled."""
    middle = list(middle)
    if rng is None:
        return [Q, *middle, P]
    rng.shuffle(middle)
    middle.insert(rng.randint(0, len(middle)), P)
    return [Q, *middle]


def _dcav_mh(tag, src, rng, h):
    g, X, Y, closed = _pc(tag, src)
    votes, unreg = _dcav_votes(src.kappa, X, Y, closed, g.vertices)
    agenda = _free_after_q(X + Y, rng)
    return _Draft("DCAV", [Q, *X, *Y, P], agenda, votes, src.kappa, [], unreg), ("p-block",)


def _dcdv_mh(tag, src, rng, h):
    src, g, k, ell = _uniform_rbds(tag, src)
    R = list(g.red)
    agenda = _free_after_q(R, rng)
    return _Draft("DCDV", [Q, *R, P], agenda, _dcdv_votes(g, k, ell, R), k), ("p-block",)


def _dcdv_mh_dual(tag, src, rng, h):
    src, g = _rbds(tag, src)
    k = src.kappa
    if not len(g.blue) >= k + 2:
        _fail(tag, "|B| >= kappa + 2")
    R = list(g.red)
    agenda = [Q, *R, P]
    if rng is not None:
        # for h >= 2, q removes its next m - h successors without having to beat
        # everyone, so p must sit beyond that window
        rng.shuffle(R)
        lo = 0 if h == 1 else max(0, len(R) - h + 2)
        R.insert(rng.randint(lo, len(R)), P)
        agenda = [Q, *R]
    return _Draft("DCDV", [Q, *g.red, P], agenda, _dcdv_dual_votes(g, k, list(g.red)), len(g.blue) - k), ("none",)


def _ccac_mh(tag, src, rng, h):
    src, g = _rbds(tag, src)
    if src.kappa > len(g.blue):
        _fail(tag, "kappa <= |B|")
    R, B = list(g.red), list(g.blue)
    arcs = []
    for i, r in enumerate(R):
        arcs.append((r, P))
        arcs.extend((r, r2) for r2 in R[i + 1:])
        for b in B:
            arcs.append((b, r) if (r, b) in g.edges else (r, b))
    arcs.extend((P, b) for b in B)
    d = _Draft("CCAC", [*R, P], [*R, *B, P], arcs, src.kappa, B, [])
    return d, ("mcgarvey",)


def _ccav_succ(tag, src, rng, h):
    g, X, Y, closed = _pc(tag, src, least=3)
    votes, unreg = _ccav_mh_votes(src.kappa, X, Y, closed, g.vertices)
    agenda = [*X, *Y, P]
    return _Draft("CCAV", agenda, agenda, votes, src.kappa, [], unreg), ("none",)


def _ccdv_succ(tag, src, rng, h):
    src, g = _rbds(tag, src, uniform=True)
    k, nb, ell = src.kappa, len(g.blue), g.degree(g.red[0])
    if not nb >= k:
        _fail(tag, "|B| >= kappa")
    R = list(g.red)
    votes = [([*R, P, P2, Q], nb - k), ([Q, P, P2, *R], ell - 1), ([Q, *R, P, P2], 1),
             ([P2, P, Q, *R], ell)]
    for b in g.blue:
        n_b = g.neighbors(b)
        votes.append(([Q, *_only(R, n_b), P2, P, *_minus(R, n_b)], 1))
    return _Draft("CCDV", [Q, *R, P2, P], [Q, *R, P2, P], votes, k), ("none",)


def _ccdv_succ_dual(tag, src, rng, h):
    return _ccdv_mh_dual_draft(tag, src, "CCDV"), ("none",)


def _shuffled(rest, rng):
    rest = list(rest)
    if rng is not None:
        rng.shuffle(rest)
    return rest


def _ccac_succ(tag, src, rng, h):
    src, g = _rbds(tag, src)
    if src.kappa > len(g.blue):
        _fail(tag, "kappa <= |B|")
    R, B = list(g.red), list(g.blue)
    votes = [([P, *B, Q], 1), ([Q, P, *B], len(R))]
    for r in R:
        nr = g.neighbors(r)
        votes.append(([*_only(B, nr), Q, P, *_minus(B, nr)], 1))
    agenda = [Q, *_shuffled([*B, P], rng)]
    return _Draft("CCAC", [P, Q], agenda, votes, src.kappa, B, []), ("none",)


def _clique(tag, src):
    if src.problem != CLIQUE:
        raise InputError(f"{tag} needs a Clique source, got {src.problem}", code="E_SOURCE")
    _check_ids(tag, src.graph.vertices)
    return src.graph, list(src.graph.vertices), src.graph.sorted_edges()


def _ccdc_succ_clique(tag, src, rng, h):
    g, U, E = _clique(tag, src)
    k = src.kappa
    if len(E) < k * (k - 1):
        _fail(tag, "m >= kappa * (kappa - 1)")
    votes = [([P, *U], len(E) - k * (k - 1) + 1)]
    for u, v in E:
        votes.append(([u, v, P, *_minus(U, (u, v))], 1))
    agenda = [P, *_shuffled(U, rng)]
    return _Draft("CCDC", [P, *U], agenda, votes, k), ("none",)


def _biclique(tag, src):
    if src.problem != BICLIQUE:
        raise InputError(f"{tag} needs a Biclique source, got {src.problem}", code="E_SOURCE")
    g = src.graph
    _check_ids(tag, g.red + g.blue)
    return g, list(g.red), list(g.blue)


def _ccdc_succ_biclique(tag, src, rng, h):
    g, X, Y = _biclique(tag, src)
    k = src.kappa
    if not (len(X) > k and len(Y) > 2 * k):
        _fail(tag, "|X| > kappa and |Y| > 2 kappa")
    votes = [([P, *X], len(Y) - 2 * k + 1)]
    for y in Y:
        ny = g.neighbors(y)
        votes.append(([*_minus(X, ny), P, *_only(X, ny)], 1))
    agenda = [P, *_shuffled(X, rng)]
    return _Draft("CCDC", [P, *X], agenda, votes, len(X) - k), ("none",)


def _dcac_succ(tag, src, rng, h):
    src, g = _rbds(tag, src)
    if src.kappa > len(g.blue):
        _fail(tag, "kappa <= |B|")
    R, B = list(g.red), list(g.blue)
    votes = [([P, *B], len(R) - 1)]
    for r in R:
        nr = g.neighbors(r)
        votes.append(([*_only(B, nr), P, *_minus(B, nr)], 1))
    return _Draft("DCAC", [P], [P, *B], votes, src.kappa, B, []), ("none",)


def _dcdc_succ_clique(tag, src, rng, h):
    g, U, E = _clique(tag, src)
    k = src.kappa
    pairs = k * (k - 1) // 2
    if not len(E) >= pairs > 0:
        _fail(tag, "m >= kappa * (kappa - 1) / 2 > 0")
    votes = [([Q, P, *U], len(E) - pairs + 1), ([P, *U, Q], pairs)]
    for u, v in E:
        votes.append(([u, v, Q, P, *_minus(U, (u, v))], 1))
    agenda = _free_after_q(U, rng) if rng is not None else [Q, P, *U]
    return _Draft("DCDC", [Q, P, *U], agenda, votes, k), ("none",)


def _dcdc_succ_biclique(tag, src, rng, h):
    g, X, Y = _biclique(tag, src)
    k = src.kappa
    if not min(len(X), len(Y)) > k > 1:
        _fail(tag, "min(|X|, |Y|) > kappa > 1")
    votes = [([P, *X, Q], k), ([Q, P, *X], len(Y) - k + 1)]
    for y in Y:
        ny = g.neighbors(y)
        votes.append(([*_minus(X, ny), Q, P, *_only(X, ny)], 1))
    agenda = _free_after_q(X, rng) if rng is not None else [Q, P, *X]
    return _Draft("DCDC", [Q, P, *X], agenda, votes, len(X) - k), ("none",)


_AMD, _MH, _SUCC = "amendment", "m-h-amendment", "successive"

_BUILDERS = {
    "ccav_amd": (RBDS, _AMD, _ccav_amd, "add votes of a dominating set so q beats every red block"),
    "ccdv_amd": (RBDS, _AMD, _ccdv_amd, "delete votes of a dominating set so q beats R and p beats q"),
    "ccdv_amd_dual": (RBDS, _AMD, _ccdv_amd_dual, "keep only the votes of a dominating set"),
    "dcav_amd": (PERFECT_CODE, _AMD, _dcav_amd, "add votes of a perfect code so q beats everyone"),
    "dcdv_amd": (RBDS, _AMD, _dcdv_amd, "delete votes of a dominating set so q beats everyone"),
    "dcdv_amd_dual": (RBDS, _AMD, _dcdv_amd_dual, "keep only the votes of a dominating set"),
    "ccav_mh": (PERFECT_CODE, _MH, _ccav_mh, "add votes of a perfect code so p ties everyone"),
    "ccdv_mh": (RBDS, _MH, _ccdv_mh, "delete votes of a dominating set so p ties everyone"),
    "ccdv_mh_dual": (RBDS, _MH, _ccdv_mh_dual, "keep only the votes of a dominating set"),
    "dcav_mh": (PERFECT_CODE, _MH, _dcav_mh, "add votes of a perfect code so q beats everyone"),
    "dcdv_mh": (RBDS, _MH, _dcdv_mh, "delete votes of a dominating set so q beats everyone"),
    "dcdv_mh_dual": (RBDS, _MH, _dcdv_mh_dual, "keep only the votes of a dominating set"),
    "ccac_mh": (RBDS, _MH, _ccac_mh, "add blue candidates that beat every red candidate"),
    "ccav_succ": (PERFECT_CODE, _SUCC, _ccav_succ, "add votes of a perfect code so no predecessor wins"),
    "ccdv_succ": (RBDS, _SUCC, _ccdv_succ, "delete votes of a dominating set so no predecessor wins"),
    "ccdv_succ_dual": (RBDS, _SUCC, _ccdv_succ_dual, "keep only the votes of a dominating set"),
    "ccac_succ": (RBDS, _SUCC, _ccac_succ, "add blue candidates so q stops dominating"),
    "ccdc_succ_clique": (CLIQUE, _SUCC, _ccdc_succ_clique, "delete a clique so p dominates the rest"),
    "ccdc_succ_biclique": (BICLIQUE, _SUCC, _ccdc_succ_biclique, "keep one side of a biclique"),
    "dcac_succ": (RBDS, _SUCC, _dcac_succ, "add blue candidates so p stops dominating"),
    "dcdc_succ_clique": (CLIQUE, _SUCC, _dcdc_succ_clique, "delete a clique so q dominates"),
    "dcdc_succ_biclique": (BICLIQUE, _SUCC, _dcdc_succ_biclique, "keep one side of a biclique"),
}

CATALOG = {tag: CatalogEntry(tag, source, None, family, summary)
           for tag, (source, family, _, summary) in _BUILDERS.items()}


def _procedure(family, h):
    if not isinstance(h, int) or h < 1:
        raise InputError("h must be a positive integer", code="E_H")
    if family == _SUCC:
        if h != 1:
            raise InputError("successive constructions take no h", code="E_H")
        return ProcedureSpec.successive()
    return ProcedureSpec.amendment(h) if family == _AMD else ProcedureSpec.relative(h)


def _expander(lifted, h):
    def expand(order):
        out = []
        for c in order:
            out.append(c)
            if c in lifted:
                out.extend(copy_name(c, i) for i in range(1, h))
        return out
    return expand


def _finish(tag, draft, lifting, h, procedure):
    mode = lifting[0]
    extras = [copy_name(P, i) for i in range(1, h)]
    registered, agenda = list(draft.registered), list(draft.agenda)
    votes, unreg = draft.votes, draft.unregistered_votes or []
    if mode == "mcgarvey":
        arcs = set(votes)
        for i, x in enumerate(extras):
            arcs.add((P, x))
            arcs.update((x, y) for y in extras[i + 1:])
            arcs.update((x, b) for a, b in votes if a == P)
            arcs.update((a, x) for a, b in votes if b == P)
        universe = registered + list(draft.unregistered) + extras
        e = mcgarvey_election(OrientedGraph(tuple(universe), frozenset(arcs)))
        votes = [(v.order, v.count) for v in e.votes]
        registered += extras
        i = agenda.index(P)
        agenda[i + 1:i + 1] = extras
    if mode in ("blocks", "p-tail", "p-block"):
        expand = _expander(set(lifting[1]) if mode == "blocks" else {P}, h)
        votes = [(expand(o), n) for o, n in votes]
        unreg = [(expand(o), n) for o, n in unreg]
        registered = expand(registered)
        if mode == "blocks":
            agenda = expand(agenda)
        elif mode == "p-tail":
            i = agenda.index(P)
            agenda[i:i + 1] = [*reversed(extras), P]
        else:
            agenda = agenda + extras
    for order, n in votes + unreg:
        if n < 0:
            raise InvariantError(f"{tag}: negative vote multiplicity")
    return ControlInstance(
        problem=draft.problem, procedure=procedure, registered=tuple(registered),
        distinguished=P, agenda=Agenda(agenda),
        registered_votes=tuple(Vote(tuple(o), n) for o, n in votes if n > 0),
        unregistered=tuple(draft.unregistered or ()),
        unregistered_votes=tuple(Vote(tuple(o), n) for o, n in unreg if n > 0),
        **{"k_" + draft.problem[2:].lower(): draft.budget})


def build_reduction(tag, source, h=1, seed=None):
    """Build the control instance for catalog entry ``tag`` from a graph instance.

    ``h`` selects the procedure for amendment-style entries: ``amendment h``
    or ``amendment h=m-h``. ``seed`` shuffles the agenda positions the
    construction leaves free. Raises ``InputError`` naming the violated
    assumption when ``source`` is outside the construction's domain.
    """
    if tag not in _BUILDERS:
        raise InputError(f"unknown reduction {tag!r}; known: {', '.join(sorted(_BUILDERS))}",
                         code="E_REDUCTION")
    _, family, build, _ = _BUILDERS[tag]
    procedure = _procedure(family, h)
    rng = None if seed is None else random.Random(seed)
    draft, lifting = build(tag, source, rng, h)
    return _finish(tag, draft, lifting, h, procedure)


@dataclass(frozen=True)
class VerificationReport:
    tag: str
    source_answer: bool
    target_answer: bool
    source_witness: object
    target_solution: object

    @property
    def agree(self):
        return self.source_answer == self.target_answer


def verify_reduction(tag, source, h=1, seed=None, caps=VERIFY_CAPS, jobs=1):
    """Solve the source and the built target independently and compare the answers."""
    target = build_reduction(tag, source, h=h, seed=seed)
    witness = solve_graph(source)
    sol = brute_force_solve(target, caps=caps, jobs=jobs)
    return VerificationReport(tag, witness is not None, sol.decision, witness, sol)


__all__ = ["CATALOG", "CatalogEntry", "VerificationReport", "build_reduction", "copy_name",
           "mcgarvey_election", "verify_reduction"]
