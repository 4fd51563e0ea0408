"""
Elections over strict linear orders, agendas, and pairwise-majority queries.

Votes are stored as (order, multiplicity) pairs. Every comparison uses exact
integer arithmetic: ``a`` beats ``b`` iff ``2 * n(a, b) > n``.
"""

import re
from dataclasses import dataclass

from .errors import InputError

_ID_RE = re.compile(r"^[A-Za-z0-9_]+$")


def check_candidate_id(c):
    if not isinstance(c, str) or not _ID_RE.match(c):
        raise InputError(f"invalid candidate id {c!r}", code="E_CANDIDATE_ID")
    return c


@dataclass(frozen=True)
class Vote:
    """A strict linear order with a positive multiplicity.

    Parameters
    ----------
    order : tuple of str
        Candidates from most to least preferred.
    count : int
        Number of identical voters casting this order.
    """

    order: tuple
    count: int = 1

    def __post_init__(self):
        object.__setattr__(self, "order", tuple(self.order))
        if not isinstance(self.count, int) or self.count < 1:
            raise InputError(f"vote multiplicity must be a positive integer, got {self.count!r}",
                             code="E_MULTIPLICITY")
        if len(set(self.order)) != len(self.order):
            raise InputError(f"vote {'>'.join(self.order)} repeats a candidate", code="E_VOTE_UNIVERSE")

    def restrict(self, keep):
        return Vote(tuple(c for c in self.order if c in keep), self.count)

    def __str__(self):
        return f"{self.count}: {'>'.join(self.order)}"


def as_vote(v):
    if isinstance(v, Vote):
        return v
    if isinstance(v, str):
        return Vote(tuple(v.split()))
    if len(v) == 2 and isinstance(v[1], int) and not isinstance(v[0], str):
        return Vote(tuple(v[0]), v[1])
    return Vote(tuple(v))


class Election:
    """A candidate universe together with a multiset of votes.

    Parameters
    ----------
    candidates : iterable of str
        The candidate universe. Stored sorted lexicographically.
    votes : iterable
        Each item is a :class:`Vote`, an ``(order, count)`` pair, a sequence of
        candidate ids, or a whitespace separated string such as ``"a b c"``.

    Attributes
    ----------
    n : int
        Total number of voters (sum of multiplicities).
    """

    __slots__ = ("candidates", "votes", "n", "_universe", "_support")

    def __init__(self, candidates, votes=()):
        cands = list(candidates)
        for c in cands:
            check_candidate_id(c)
        if len(set(cands)) != len(cands):
            dup = sorted({c for c in cands if cands.count(c) > 1})
            raise InputError(f"duplicate candidate {dup[0]}", code="E_DUPLICATE_CANDIDATE")
        self.candidates = tuple(sorted(cands))
        self._universe = frozenset(cands)
        vs = tuple(as_vote(v) for v in votes)
        for v in vs:
            if len(v.order) != len(self._universe) or set(v.order) != self._universe:
                raise InputError(f"vote {'>'.join(v.order)} is not a linear order over the universe",
                                 code="E_VOTE_UNIVERSE")
        self.votes = vs
        self.n = sum(v.count for v in vs)
        self._support = None

    @property
    def universe(self):
        return self._universe

    def __contains__(self, c):
        return c in self._universe

    def __eq__(self, other):
        return (isinstance(other, Election) and self.candidates == other.candidates
                and self.votes == other.votes)

    def __hash__(self):
        return hash((self.candidates, self.votes))

    def __repr__(self):
        return f"Election({list(self.candidates)!r}, n={self.n}, groups={len(self.votes)})"

    def _table(self):
        if self._support is None:
            sup = {}
            for v in self.votes:
                order = v.order
                for i, a in enumerate(order):
                    for b in order[i + 1:]:
                        sup[a, b] = sup.get((a, b), 0) + v.count
            self._support = sup
        return self._support

    def _check(self, *cs):
        for c in cs:
            if c not in self._universe:
                raise InputError(f"unknown candidate {c!r}", code="E_UNKNOWN_CANDIDATE")

    def support(self, a, b):
        """Number of voters ranking ``a`` before ``b``."""
        self._check(a, b)
        if a == b:
            raise InputError("pairwise support needs two distinct candidates", code="E_SAME_CANDIDATE")
        return self._table().get((a, b), 0)

    def beats(self, a, b):
        return 2 * self._table().get((a, b), 0) > self.n

    def ties(self, a, b):
        return 2 * self._table().get((a, b), 0) == self.n

    def majority_dominates(self, c, others):
        """True iff strictly more than half of the voters rank ``c`` above all of ``others``."""
        others = set(others)
        self._check(c, *others)
        if c in others:
            raise InputError(f"{c} cannot dominate a set containing itself", code="E_SELF_DOMINATION")
        if not others:
            return True
        count = 0
        for v in self.votes:
            for x in v.order:
                if x == c:
                    count += v.count
                    break
                if x in others:
                    break
        return 2 * count > self.n

    def condorcet_winner(self):
        if not self.candidates:
            raise InputError("empty candidate universe", code="E_EMPTY")
        for c in self.candidates:
            if all(self.beats(c, d) for d in self.candidates if d != c):
                return c
        return None

    def majority_arcs(self):
        """Set of pairs ``(a, b)`` such that ``a`` beats ``b``."""
        return {(a, b) for a in self.candidates for b in self.candidates
                if a != b and self.beats(a, b)}

    def restrict(self, keep):
        keep = set(keep)
        self._check(*keep)
        if not keep:
            raise InputError("restriction to an empty candidate set", code="E_EMPTY")
        return Election(keep, [v.restrict(keep) for v in self.votes])

    def with_votes(self, votes):
        return Election(self.candidates, votes)


class Agenda:
    """A strict order fixing the sequence in which candidates are considered.

    Indexing with ``agenda[i]`` is 0-based like a tuple; :meth:`position` is
    1-based.
    """

    __slots__ = ("order", "_pos")

    def __init__(self, order):
        order = tuple(order.split()) if isinstance(order, str) else tuple(order)
        for c in order:
            check_candidate_id(c)
        if len(set(order)) != len(order):
            raise InputError("agenda repeats a candidate", code="E_AGENDA")
        self.order = order
        self._pos = {c: i for i, c in enumerate(order)}

    def __len__(self):
        return len(self.order)

    def __iter__(self):
        return iter(self.order)

    def __getitem__(self, i):
        return self.order[i]

    def __contains__(self, c):
        return c in self._pos

    def __eq__(self, other):
        return isinstance(other, Agenda) and self.order == other.order

    def __hash__(self):
        return hash(self.order)

    def __repr__(self):
        return f"Agenda({' '.join(self.order)!r})"

    def position(self, c):
        try:
            return self._pos[c] + 1
        except KeyError:
            raise InputError(f"candidate {c!r} is not on the agenda", code="E_AGENDA") from None

    def index(self, c):
        return self.position(c) - 1

    def predecessors(self, c):
        return self.order[:self.index(c)]

    def successors(self, c):
        return self.order[self.index(c) + 1:]

    def restrict(self, keep):
        keep = set(keep)
        missing = keep - set(self.order)
        if missing:
            raise InputError(f"candidates {sorted(missing)} are not on the agenda", code="E_AGENDA")
        return Agenda(c for c in self.order if c in keep)

    def sort(self, cands):
        """Return ``cands`` as a tuple in agenda order."""
        return tuple(sorted(cands, key=self._pos.__getitem__))

    def covers(self, universe):
        return set(self.order) == set(universe)


def check_agenda(election, agenda):
    if not agenda.covers(election.universe):
        raise InputError("agenda does not cover the election's candidates", code="E_AGENDA")


def pairwise_support(election, a, b):
    return election.support(a, b)


def majority_dominates(election, c, others):
    return election.majority_dominates(c, others)


def condorcet_winner(election):
    return election.condorcet_winner()


def restrict(election, keep):
    return election.restrict(keep)


def restrict_agenda(agenda, keep):
    return agenda.restrict(keep)
