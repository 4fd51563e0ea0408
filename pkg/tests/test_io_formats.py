import pytest
from hypothesis import given

from agenda_control import io_formats
from agenda_control.election import Election
from agenda_control.errors import InputError
from agenda_control.graphs import GraphInstance
from agenda_control.solvers import ControlInstance, Solution

from conftest import CYCLE4_VOTES, FIXTURES, elections
from doc_cases import round_trip_failures

CYCLE4_TEXT = """format election v1
candidates a b c d
vote 1: b>d>c>a
vote 1: c>a>b>d
vote 1: a>d>b>c
"""


def test_cycle4_round_trip_byte_identical():
    e = Election("abcd", CYCLE4_VOTES)
    assert io_formats.serialize(e) == CYCLE4_TEXT
    assert io_formats.serialize(io_formats.parse(CYCLE4_TEXT)) == CYCLE4_TEXT


def test_messy_input_canonicalizes_once():
    messy = "# a comment\nformat election v1\n\ncandidates   d c b a  # trailing\nvote 1 : b > d > c > a\n"
    once = io_formats.canonicalize(messy)
    assert once.splitlines()[1] == "candidates a b c d"
    assert io_formats.canonicalize(once) == once


def test_empty_election():
    e = io_formats.parse("format election v1\n")
    assert e.n == 0 and e.candidates == ()


def test_multiplicity_kept():
    e = io_formats.parse("format election v1\ncandidates a b\nvote 40: a>b\n")
    assert e.n == 40 and len(e.votes) == 1


def test_random_documents_round_trip():
    assert round_trip_failures(500, seed=1) == []


@given(elections(max_m=6, max_n=8))
def test_election_round_trip_property(e):
    back = io_formats.parse(io_formats.serialize(e))
    assert io_formats.serialize(back) == io_formats.serialize(e)
    assert back.n == e.n


def test_fixtures_are_canonical():
    files = sorted(p for p in FIXTURES.rglob("*") if p.is_file())
    assert len(files) >= 8
    for path in files:
        text = path.read_text(encoding="utf-8")
        assert io_formats.canonicalize(text) == text, path.name


def test_fixture_kinds():
    assert isinstance(io_formats.read(FIXTURES / "elections" / "cycle4.election"), Election)
    inst = io_formats.read(FIXTURES / "instances" / "ccdc_delete_b.instance", expect="control-instance")
    assert isinstance(inst, ControlInstance) and inst.k_dc == 1
    assert isinstance(io_formats.read(FIXTURES / "graphs" / "triangle_clique.graph"), GraphInstance)


def test_report_round_trip():
    s = Solution(True, ("b",), (), ((1, 2),), (), True, "brute-force (OPEN cell)", "OPEN")
    text = io_formats.serialize(s)
    assert "delete-candidate b" in text
    assert io_formats.parse(text) == s


def test_multimode_goal_line():
    text = """format control-instance v1
problem MULTIMODE
goal destructive
procedure amendment h=2
candidates a p
unregistered-candidates c
agenda a c p
distinguished p
budgets av=0 dv=1 ac=1 dc=0
vote registered 2: a>p>c
"""
    inst = io_formats.parse(text)
    assert inst.goal == "destructive" and inst.unregistered == ("c",)
    assert io_formats.serialize(inst) == text


BAD = [
    ("candidates a b\n", "E_HEADER", 1),
    ("format ballot v1\n", "E_FORMAT_KIND", 1),
    ("format election v2\n", "E_VERSION", 1),
    ("format election v1\ncandidates a b\ncolor red\n", "E_UNKNOWN_KEY", 3),
    ("format election v1\ncandidates a b\ncandidates a b\n", "E_DUPLICATE_KEY", 3),
    ("format election v1\ncandidates a b a\n", "E_DUPLICATE_CANDIDATE", 2),
    ("format election v1\ncandidates a b c\nvote 1: a>b\n", "E_VOTE_UNIVERSE", 3),
    ("format election v1\ncandidates a b\nvote 0: a>b\n", "E_MULTIPLICITY", 3),
    ("format election v1\ncandidates a b\nvote x a>b\n", "E_SYNTAX", 3),
    ("format election v1\ncandidates a-b c\n", "E_CANDIDATE_ID", 2),
    ("format control-instance v1\nproblem CCDC\nprocedure successive\ncandidates a p\nagenda a p\n"
     "distinguished p\nbudgets av=1 dv=0 ac=0 dc=1\n", "E_BUDGET_SHAPE", 7),
    ("format graph v1\nvertex u v\nedge u z\n", "E_EDGE", 3),
    ("format graph v1\nred r\nvertex u\n", "E_GRAPH_SHAPE", 3),
    ("format graph v1\nproblem foo\nkappa 1\nvertex u\n", "E_GRAPH_PROBLEM", 2),
]


@pytest.mark.parametrize("text,code,line", BAD)
def test_errors_have_code_and_line(text, code, line):
    with pytest.raises(InputError) as exc:
        io_formats.parse(text)
    assert exc.value.code == code
    assert exc.value.line == line
    assert f"line {line}" in str(exc.value)


def test_error_codes_are_distinct():
    assert len({code for _, code, _ in BAD}) == len(BAD)


def test_missing_key():
    text = "format control-instance v1\nproblem CCDC\nprocedure successive\ncandidates a p\nagenda a p\n"
    with pytest.raises(InputError) as exc:
        io_formats.parse(text)
    assert exc.value.code == "E_MISSING_KEY"


def test_bad_encoding():
    with pytest.raises(InputError) as exc:
        io_formats.parse(b"format election v1\n\xff\n")
    assert exc.value.code == "E_ENCODING"


def test_expect_rejects_other_kind():
    with pytest.raises(InputError) as exc:
        io_formats.parse(CYCLE4_TEXT, expect="graph")
    assert exc.value.code == "E_FORMAT_KIND"


def test_write_then_read(tmp_path):
    e = Election("abc", ["a b c", "c b a"])
    io_formats.write(tmp_path / "x.election", e)
    assert io_formats.serialize(io_formats.read(tmp_path / "x.election")) == io_formats.serialize(e)
