"""Oriented graphs as majority relations, and McGarvey's construction."""

from dataclasses import dataclass

from .election import Election, Vote
from .errors import InputError


@dataclass(frozen=True)
class OrientedGraph:
    """Directed graph without loops or 2-cycles. Missing arcs mean ties."""

    vertices: tuple
    arcs: frozenset = frozenset()

    def __post_init__(self):
        verts = tuple(sorted(self.vertices))
        vs = set(verts)
        if len(vs) != len(verts):
            raise InputError("duplicate vertex in oriented graph", code="E_DUPLICATE_VERTEX")
        arcs = frozenset((a, b) for a, b in self.arcs)
        for a, b in arcs:
            if a == b or a not in vs or b not in vs:
                raise InputError(f"invalid arc {a}->{b}", code="E_ARC")
            if (b, a) in arcs:
                raise InputError(f"2-cycle between {a} and {b}", code="E_ARC")
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "arcs", arcs)

    def beats(self, a, b):
        return (a, b) in self.arcs

    def restrict(self, keep):
        keep = set(keep)
        return OrientedGraph(tuple(v for v in self.vertices if v in keep),
                             frozenset((a, b) for a, b in self.arcs if a in keep and b in keep))

    @classmethod
    def of(cls, election):
        """Majority graph of an election."""
        return cls(election.candidates, frozenset(election.majority_arcs()))


def mcgarvey_election(graph):
    """An election whose majority graph is exactly ``graph``.

    Each arc ``a -> b`` contributes the pair of votes ``(a, b, rest)`` and
    ``(reverse(rest), a, b)``; every other pair cancels out.
    """
    votes = []
    for a, b in sorted(graph.arcs):
        rest = [c for c in graph.vertices if c not in (a, b)]
        votes.append(Vote((a, b, *rest)))
        votes.append(Vote((*reversed(rest), a, b)))
    return Election(graph.vertices, votes)
