import itertools
import pathlib

import pytest
from hypothesis import settings, strategies as st

from agenda_control.election import Election

FIXTURES = pathlib.Path(__file__).resolve().parent.parent / "fixtures"

settings.register_profile("default", deadline=None, max_examples=150)
settings.load_profile("default")

CYCLE4_VOTES = ["b d c a", "c a b d", "a d b c"]
SPLIT_VOTES = ["a b c d", "d a b c", "b c a d"]

# acceptance criterion -> (passed, detail); printed in the terminal summary
ACCEPTANCE = {}


@pytest.fixture
def cycle4():
    return Election("abcd", CYCLE4_VOTES)


@pytest.fixture
def split_election():
    return Election("abcd", SPLIT_VOTES)


@st.composite
def elections(draw, min_m=1, max_m=5, max_n=6):
    m = draw(st.integers(min_m, max_m))
    cands = [chr(ord("a") + i) for i in range(m)]
    perms = list(itertools.permutations(cands)) if m <= 5 else None
    n = draw(st.integers(0, max_n))
    votes = []
    for _ in range(n):
        if perms is not None:
            votes.append(draw(st.sampled_from(perms)))
        else:
            votes.append(tuple(draw(st.permutations(cands))))
    return Election(cands, votes)


@st.composite
def election_agendas(draw, **kw):
    e = draw(elections(**kw))
    order = draw(st.permutations(list(e.candidates)))
    return e, tuple(order)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[num]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'} criterion {num:>2}: {detail}")
