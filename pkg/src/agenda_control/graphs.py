"""
Exact solvers for the auxiliary graph problems used as reduction sources:
Red-Blue Dominating Set, Clique, Biclique and Perfect Code.

These are oracles for small graphs. Each solver enumerates candidate vertex
sets in increasing size and lexicographic order, under a node budget.
"""

from dataclasses import dataclass, field
from itertools import combinations

from .election import check_candidate_id
from .errors import InputError, ResourceError

RBDS = "rbds"
CLIQUE = "clique"
BICLIQUE = "biclique"
PERFECT_CODE = "perfect-code"
PROBLEMS = (RBDS, CLIQUE, BICLIQUE, PERFECT_CODE)

DEFAULT_NODE_BUDGET = 5_000_000


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph. Edges are stored as sorted pairs."""

    vertices: tuple
    edges: frozenset = frozenset()

    def __post_init__(self):
        verts = tuple(sorted(self.vertices))
        if len(set(verts)) != len(verts):
            raise InputError("duplicate vertex", code="E_DUPLICATE_VERTEX")
        for v in verts:
            check_candidate_id(v)
        vs = set(verts)
        edges = set()
        for u, v in self.edges:
            if u == v:
                raise InputError(f"self-loop at {u}", code="E_EDGE")
            if u not in vs or v not in vs:
                raise InputError(f"edge {u}-{v} uses an undeclared vertex", code="E_EDGE")
            edges.add((min(u, v), max(u, v)))
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "edges", frozenset(edges))

    def neighbors(self, v):
        return frozenset(b if a == v else a for a, b in self.edges if v in (a, b))

    def closed_neighborhood(self, v):
        return self.neighbors(v) | {v}

    def adjacent(self, u, v):
        return (min(u, v), max(u, v)) in self.edges

    def sorted_edges(self):
        return sorted(self.edges)


@dataclass(frozen=True)
class BipartiteGraph:
    """Bipartite graph with parts ``red`` and ``blue``. Edges are ``(red, blue)`` pairs."""

    red: tuple
    blue: tuple
    edges: frozenset = frozenset()

    def __post_init__(self):
        red, blue = tuple(sorted(self.red)), tuple(sorted(self.blue))
        for v in red + blue:
            check_candidate_id(v)
        if len(set(red + blue)) != len(red) + len(blue):
            raise InputError("red and blue parts overlap or repeat a vertex", code="E_DUPLICATE_VERTEX")
        rs, bs = set(red), set(blue)
        edges = set()
        for a, b in self.edges:
            if a in rs and b in bs:
                edges.add((a, b))
            elif b in rs and a in bs:
                edges.add((b, a))
            else:
                raise InputError(f"edge {a}-{b} does not cross the bipartition", code="E_EDGE")
        object.__setattr__(self, "red", red)
        object.__setattr__(self, "blue", blue)
        object.__setattr__(self, "edges", frozenset(edges))

    def neighbors(self, v):
        return frozenset(b if a == v else a for a, b in self.edges if v in (a, b))

    def degree(self, v):
        return len(self.neighbors(v))

    def sorted_edges(self):
        return sorted(self.edges)


@dataclass(frozen=True)
class GraphInstance:
    """A graph problem instance with parameter ``kappa``.

    Parameters
    ----------
    problem : {"rbds", "clique", "biclique", "perfect-code"}
    graph : Graph or BipartiteGraph
        RBDS and Biclique need a bipartite graph; for Biclique ``red`` plays
        the role of X and ``blue`` of Y.
    kappa : int
    unsatisfiable : bool
        Set by :func:`normalize_rbds` when a red vertex has no neighbour.
    """

    problem: str
    graph: object
    kappa: int
    unsatisfiable: bool = field(default=False, compare=False)

    def __post_init__(self):
        if self.problem not in PROBLEMS:
            raise InputError(f"unknown graph problem {self.problem!r}", code="E_GRAPH_PROBLEM")
        bip = self.problem in (RBDS, BICLIQUE)
        if bip != isinstance(self.graph, BipartiteGraph):
            raise InputError(f"{self.problem} needs a {'bipartite' if bip else 'general'} graph",
                             code="E_GRAPH_SHAPE")
        if not isinstance(self.kappa, int) or self.kappa < 0:
            raise InputError("kappa must be a nonnegative integer", code="E_KAPPA")


class _Budget:
    def __init__(self, limit):
        self.limit = limit
        self.used = 0

    def tick(self, n=1):
        self.used += n
        if self.used > self.limit:
            raise ResourceError(f"graph search exceeded its node budget of {self.limit}")


def _require(instance, kind):
    if instance.problem != kind:
        raise InputError(f"expected a {kind} instance, got {instance.problem}", code="E_GRAPH_PROBLEM")


def min_red_blue_dominating_set(instance, budget=DEFAULT_NODE_BUDGET):
    """Lexicographically first minimum blue set dominating all red vertices, or ``None``."""
    _require(instance, RBDS)
    g = instance.graph
    if instance.unsatisfiable:
        return None
    nbr = {b: g.neighbors(b) for b in g.blue}
    red = frozenset(g.red)
    if any(not g.neighbors(r) for r in red):
        return None
    bud = _Budget(budget)
    for size in range(0, len(g.blue) + 1):
        for combo in combinations(g.blue, size):
            bud.tick()
            covered = set()
            for b in combo:
                covered |= nbr[b]
            if covered >= red:
                return frozenset(combo)
    return None


def solve_rbds(instance, budget=DEFAULT_NODE_BUDGET):
    """A blue set of size exactly kappa dominating every red vertex, or ``None``."""
    g = instance.graph
    if instance.kappa > len(g.blue):
        _require(instance, RBDS)
        return None
    best = min_red_blue_dominating_set(instance, budget)
    if best is None or len(best) > instance.kappa:
        return None
    pad = [b for b in g.blue if b not in best][:instance.kappa - len(best)]
    return best | frozenset(pad)


def _fresh(base, taken):
    i = 1
    while f"{base}{i}" in taken:
        i += 1
    name = f"{base}{i}"
    taken.add(name)
    return name


def normalize_rbds(instance):
    """Attach new degree-1 blue vertices until every red vertex has the maximum red degree."""
    _require(instance, RBDS)
    g = instance.graph
    if any(g.degree(r) == 0 for r in g.red):
        return GraphInstance(RBDS, g, instance.kappa, unsatisfiable=True)
    if not g.red:
        return instance
    ell = max(g.degree(r) for r in g.red)
    taken = set(g.red) | set(g.blue)
    blue, edges = list(g.blue), set(g.edges)
    for r in g.red:
        for _ in range(ell - g.degree(r)):
            leaf = _fresh(f"{r}_leaf", taken)
            blue.append(leaf)
            edges.add((r, leaf))
    if len(blue) == len(g.blue):
        return instance
    return GraphInstance(RBDS, BipartiteGraph(g.red, blue, frozenset(edges)), instance.kappa)


def solve_clique(instance, budget=DEFAULT_NODE_BUDGET):
    """A set of kappa pairwise adjacent vertices, or ``None``."""
    _require(instance, CLIQUE)
    g = instance.graph
    bud = _Budget(budget)

    def extend(clique, rest):
        bud.tick()
        if len(clique) == instance.kappa:
            return clique
        for i, v in enumerate(rest):
            if len(clique) + len(rest) - i < instance.kappa:
                break
            if all(g.adjacent(u, v) for u in clique):
                found = extend(clique + [v], rest[i + 1:])
                if found is not None:
                    return found
        return None

    res = extend([], list(g.vertices))
    return None if res is None else frozenset(res)


def solve_biclique(instance, budget=DEFAULT_NODE_BUDGET):
    """Sets ``(X', Y')`` of size kappa each, red and blue, inducing a complete bipartite graph."""
    _require(instance, BICLIQUE)
    g = instance.graph
    k = instance.kappa
    bud = _Budget(budget)
    for xs in combinations(g.red, k):
        bud.tick()
        common = set(g.blue)
        for x in xs:
            common &= g.neighbors(x)
        if len(common) >= k:
            return frozenset(xs), frozenset(sorted(common)[:k])
    return None


def solve_perfect_code(instance, budget=DEFAULT_NODE_BUDGET):
    """A set of kappa vertices whose closed neighbourhoods partition the vertex set, or ``None``."""
    _require(instance, PERFECT_CODE)
    g = instance.graph
    closed = {v: g.closed_neighborhood(v) for v in g.vertices}
    total = len(g.vertices)
    bud = _Budget(budget)

    def extend(code, covered, rest):
        bud.tick()
        if len(code) == instance.kappa:
            return code if len(covered) == total else None
        for i, v in enumerate(rest):
            if closed[v] & covered:
                continue
            found = extend(code + [v], covered | closed[v], rest[i + 1:])
            if found is not None:
                return found
        return None

    res = extend([], frozenset(), list(g.vertices))
    return None if res is None else frozenset(res)


def is_perfect_code(graph, code):
    seen = []
    for v in code:
        seen.extend(graph.closed_neighborhood(v))
    return sorted(seen) == sorted(graph.vertices)


def solve_graph(instance):
    """Dispatch on the problem kind. Returns the witness or ``None``."""
    return {RBDS: solve_rbds, CLIQUE: solve_clique, BICLIQUE: solve_biclique,
            PERFECT_CODE: solve_perfect_code}[instance.problem](instance)
