"""
Winner determination for the successive procedure and the h-amendment family.

The amendment family is parameterised either by an absolute step ``h`` or by a
step relative to the number of candidates, ``m - d``. The relative step is
fixed once per evaluated candidate set and does not change between rounds.
"""

import re
from dataclasses import dataclass, field

from .election import Agenda, check_agenda
from .errors import InputError

SUCCESSIVE = "successive"
AMENDMENT = "amendment"


@dataclass(frozen=True)
class ProcedureSpec:
    """Which sequential procedure to run.

    Parameters
    ----------
    kind : {"successive", "amendment"}
    h : int, optional
        Absolute step for the amendment family.
    d : int, optional
        Relative offset: the step is ``m - d`` where ``m`` is the number of
        candidates being evaluated.
    """

    kind: str
    h: int = None
    d: int = None

    def __post_init__(self):
        if self.kind == SUCCESSIVE:
            if self.h is not None or self.d is not None:
                raise InputError("successive takes no step parameter", code="E_PROCEDURE")
        elif self.kind == AMENDMENT:
            if (self.h is None) == (self.d is None):
                raise InputError("amendment needs exactly one of h or d", code="E_PROCEDURE")
            val = self.h if self.h is not None else self.d
            if not isinstance(val, int) or val < 1:
                raise InputError("amendment step parameter must be a positive integer", code="E_PROCEDURE")
        else:
            raise InputError(f"unknown procedure kind {self.kind!r}", code="E_PROCEDURE")

    @classmethod
    def successive(cls):
        return cls(SUCCESSIVE)

    @classmethod
    def amendment(cls, h=1):
        return cls(AMENDMENT, h=h)

    @classmethod
    def relative(cls, d):
        return cls(AMENDMENT, d=d)

    @classmethod
    def parse(cls, text):
        """Parse ``successive``, ``amendment``, ``amendment h=3`` or ``amendment h=m-2``."""
        t = " ".join(text.strip().split())
        if t == SUCCESSIVE:
            return cls.successive()
        if t == AMENDMENT:
            return cls.amendment(1)
        m = re.fullmatch(r"amendment h=(m-)?(\d+)", t)
        if not m:
            raise InputError(f"cannot parse procedure {text!r}", code="E_PROCEDURE")
        val = int(m.group(2))
        return cls.relative(val) if m.group(1) else cls.amendment(val)

    @property
    def is_successive(self):
        return self.kind == SUCCESSIVE

    @property
    def is_relative(self):
        return self.d is not None

    @property
    def family(self):
        """Short label used by the routing table."""
        if self.is_successive:
            return "successive"
        if self.is_relative:
            return "full-amendment" if self.d == 1 else "m-h-amendment"
        return "amendment" if self.h == 1 else "h-amendment"

    def __str__(self):
        if self.is_successive:
            return SUCCESSIVE
        if self.is_relative:
            return f"amendment h=m-{self.d}"
        return f"amendment h={self.h}"


@dataclass(frozen=True)
class EliminationTrace:
    """Rounds of ``(considered candidate, eliminated set)`` and the winner."""

    rounds: tuple = field(default_factory=tuple)
    winner: str = None

    def lines(self):
        out = []
        for i, (c, gone) in enumerate(self.rounds, 1):
            out.append(f"round {i}: {c} considered, eliminated {' '.join(sorted(gone))}")
        out.append(f"winner {self.winner}")
        return out


def resolve_h(spec, m):
    """Effective step for ``m`` candidates, or ``None`` for the first-candidate rule."""
    if m < 1:
        raise InputError("need at least one candidate", code="E_EMPTY")
    if spec.is_relative:
        return m - spec.d if m > spec.d else None
    return min(spec.h, m - 1)


def run_amendment(order, step, beats):
    """Simulate amendment rounds with a fixed step over ``order``.

    ``beats`` is any callable ``beats(a, b) -> bool``; this lets the same code
    run on elections and on bare oriented graphs.
    """
    cur = list(order)
    rounds = []
    if step is None:
        if len(cur) > 1:
            rounds.append((cur[0], frozenset(cur[1:])))
        return cur[0], rounds
    while len(cur) > 1:
        first = cur[0]
        window = cur[1:1 + step]
        if all(beats(first, x) for x in window):
            rounds.append((first, frozenset(window)))
            cur = [first] + cur[1 + step:]
        else:
            rounds.append((first, frozenset([first])))
            cur = cur[1:]
    return cur[0], rounds


def run_successive(order, dominates):
    order = list(order)
    rounds = []
    for i, c in enumerate(order):
        rest = order[i + 1:]
        if dominates(c, rest):
            if rest:
                rounds.append((c, frozenset(rest)))
            return c, rounds
        rounds.append((c, frozenset([c])))
    raise AssertionError("the last candidate always dominates the empty set")


def evaluate(election, agenda, spec, candidates=None):
    """Winner and trace on the sub-election induced by ``candidates``.

    Pairwise support and majority domination do not change under restriction,
    so the restricted election is never materialised.
    """
    order = agenda.order if candidates is None else agenda.sort(candidates)
    if not order:
        raise InputError("no candidates to evaluate", code="E_EMPTY")
    if spec.is_successive:
        w, rounds = run_successive(order, election.majority_dominates)
    else:
        w, rounds = run_amendment(order, resolve_h(spec, len(order)), election.beats)
    return w, EliminationTrace(tuple(rounds), w)


def winner(election, agenda, spec, candidates=None):
    return evaluate(election, agenda, spec, candidates)[0]


def _checked(election, agenda):
    if not isinstance(agenda, Agenda):
        agenda = Agenda(agenda)
    check_agenda(election, agenda)
    if not agenda.order:
        raise InputError("empty agenda", code="E_EMPTY")
    return agenda


def successive_winner(election, agenda):
    """The earliest agenda candidate that majority-dominates all of its successors.

    Returns
    -------
    (str, EliminationTrace)
    """
    agenda = _checked(election, agenda)
    return evaluate(election, agenda, ProcedureSpec.successive())


def h_amendment_winner(election, agenda, spec):
    """Run the amendment family procedure given by ``spec``.

    Returns
    -------
    (str, EliminationTrace)
    """
    if isinstance(spec, int):
        spec = ProcedureSpec.amendment(spec)
    if spec.is_successive:
        raise InputError("h_amendment_winner needs an amendment procedure", code="E_PROCEDURE")
    agenda = _checked(election, agenda)
    return evaluate(election, agenda, spec)


def path_exists(seq, c, c2, beats):
    """Right-to-left reachability sweep for a (c <- c2) beating path over ``seq``."""
    i, j = seq.index(c), seq.index(c2)
    if i > j:
        return False
    reach = [False] * len(seq)
    reach[j] = True
    for x in range(j - 1, i - 1, -1):
        sx = seq[x]
        for y in range(x + 1, j + 1):
            if reach[y] and not beats(sx, seq[y]):
                reach[x] = True
                break
            # later targets need sx to beat seq[y] as a skipped candidate
            if not beats(sx, seq[y]):
                break
    return reach[i]


def beating_path_exists(election, agenda, members, c, c2):
    """Whether a (c <- c2)-beating path exists w.r.t. ``members`` and the agenda.

    The path starts at ``c2`` and moves leftwards. Each step lands on a
    candidate that does not beat the previous path element and that beats every
    member skipped in between.
    """
    agenda = _checked(election, agenda)
    members = set(members)
    for x in (c, c2):
        if x not in members:
            raise InputError(f"{x!r} is not in the candidate subset", code="E_UNKNOWN_CANDIDATE")
    election._check(*members)
    if agenda.position(c) > agenda.position(c2):
        raise InputError("path target must not come after its source", code="E_PATH_ORDER")
    return path_exists(list(agenda.sort(members)), c, c2, election.beats)


def amendment_winner_via_paths(election, agenda, c):
    """Amendment winner test by beating paths: ``c`` beats its successors and is reachable from the first candidate."""
    agenda = _checked(election, agenda)
    election._check(c)
    if not all(election.beats(c, s) for s in agenda.successors(c)):
        return False
    return path_exists(list(agenda.order), agenda[0], c, election.beats)
