"""
Line-oriented text formats for elections, control instances, graphs and reports.

Every document starts with ``format <kind> v1``. Blank lines and ``#``
comments are ignored. Keys are single words at the start of a line; unknown
keys are rejected. ``serialize`` always produces the canonical form: fixed key
order, single spaces, sorted candidate lists and edges. Vote groups keep their
order because witnesses refer to them by index.

Example (control instance)::

    format control-instance v1
    problem CCDC
    procedure amendment h=m-2
    candidates a b p q
    agenda a q b p
    distinguished p
    budgets av=0 dv=0 ac=0 dc=1
    vote registered 1: a>q>b>p
"""

import re
from dataclasses import dataclass

from .election import Agenda, Election, Vote, check_candidate_id
from .errors import InputError
from .graphs import BICLIQUE, PROBLEMS as GRAPH_PROBLEMS, RBDS, BipartiteGraph, Graph, GraphInstance
from .procedures import ProcedureSpec
from .solvers.instance import PROBLEMS, ControlInstance, Solution

VERSION = "1"
KINDS = ("election", "control-instance", "graph", "report")

_HEADER = re.compile(r"format (\S+) v(\S+)")
_VOTE = re.compile(r"(\d+)\s*:\s*(.*)")


@dataclass
class _Line:
    no: int
    key: str
    rest: str


def _err(msg, code, line=None):
    return InputError(msg, code=code, line=line)


def _lines(text):
    out = []
    for no, raw in enumerate(text.splitlines(), 1):
        body = raw.split("#", 1)[0].strip()
        if not body:
            continue
        key, _, rest = body.partition(" ")
        out.append(_Line(no, key, " ".join(rest.split())))
    return out


def _header(lines):
    if not lines:
        raise _err("empty document; expected 'format <kind> v1'", "E_HEADER", 1)
    first = lines[0]
    m = _HEADER.fullmatch(f"{first.key} {first.rest}")
    if not m:
        raise _err("expected 'format <kind> v1'", "E_HEADER", first.no)
    kind, version = m.groups()
    if kind not in KINDS:
        raise _err(f"unknown format kind {kind!r}; expected one of {', '.join(KINDS)}",
                   "E_FORMAT_KIND", first.no)
    if version != VERSION:
        raise _err(f"unsupported version v{version}; expected v{VERSION}", "E_VERSION", first.no)
    return kind, lines[1:]


def _ids(line):
    out = line.rest.split() if line.rest else []
    for c in out:
        try:
            check_candidate_id(c)
        except InputError:
            raise _err(f"invalid id {c!r}", "E_CANDIDATE_ID", line.no) from None
    return out


def _int(text, line, what):
    if not re.fullmatch(r"\d+", text):
        raise _err(f"expected a nonnegative integer for {what}, got {text!r}", "E_SYNTAX", line.no)
    return int(text)


def _single(lines, allowed, repeatable=()):
    """Group lines by key; single-valued keys may appear once."""
    seen = {}
    for ln in lines:
        if ln.key not in allowed:
            raise _err(f"unknown key {ln.key!r}; expected one of {', '.join(allowed)}",
                       "E_UNKNOWN_KEY", ln.no)
        if ln.key in seen and ln.key not in repeatable:
            raise _err(f"duplicate key {ln.key!r}", "E_DUPLICATE_KEY", ln.no)
        seen.setdefault(ln.key, []).append(ln)
    return seen


def _need(seen, key, lines):
    if key not in seen:
        last = lines[-1].no if lines else 1
        raise _err(f"missing required key {key!r}", "E_MISSING_KEY", last)
    return seen[key][0]


def _vote(text, line, universe):
    m = _VOTE.fullmatch(text)
    if not m:
        raise _err("expected '<count>: <id>><id>>...'", "E_SYNTAX", line.no)
    count = int(m.group(1))
    order = [c.strip() for c in m.group(2).split(">")]
    if count < 1:
        raise _err("vote multiplicity must be positive", "E_MULTIPLICITY", line.no)
    if len(order) != len(universe) or set(order) != universe:
        raise _err(f"vote {'>'.join(order)} is not a linear order over the candidates",
                   "E_VOTE_UNIVERSE", line.no)
    return Vote(tuple(order), count)


def _duplicates(ids, line):
    seen = set()
    for c in ids:
        if c in seen:
            raise _err(f"duplicate candidate {c}", "E_DUPLICATE_CANDIDATE", line.no)
        seen.add(c)


# ---------------------------------------------------------------- election

def _parse_election(lines):
    seen = _single(lines, ("candidates", "vote"), repeatable=("vote",))
    # a header-only document is the empty election
    cands = []
    if "candidates" in seen:
        cl = seen["candidates"][0]
        cands = _ids(cl)
        _duplicates(cands, cl)
    universe = set(cands)
    votes = [_vote(ln.rest, ln, universe) for ln in seen.get("vote", [])]
    return Election(cands, votes)


def _serialize_election(e):
    out = ["format election v1"]
    if e.candidates:
        out.append("candidates " + " ".join(e.candidates))
    out += [f"vote {v.count}: {'>'.join(v.order)}" for v in e.votes]
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------- control instance

_CONTROL_KEYS = ("problem", "goal", "procedure", "candidates", "unregistered-candidates", "agenda",
                 "distinguished", "budgets", "vote")
_BUDGET_KEYS = ("av", "dv", "ac", "dc")

# which line to blame when the instance constructor rejects the document
_BLAME = {"E_BUDGET": "budgets", "E_BUDGET_SHAPE": "budgets", "E_GOAL": "goal",
          "E_DISTINGUISHED": "distinguished", "E_AGENDA": "agenda",
          "E_DUPLICATE_CANDIDATE": "unregistered-candidates"}


def _parse_budgets(line):
    out = {}
    for tok in line.rest.split():
        key, eq, val = tok.partition("=")
        if not eq or key not in _BUDGET_KEYS:
            raise _err(f"expected budget 'av=|dv=|ac=|dc=<int>', got {tok!r}", "E_SYNTAX", line.no)
        if key in out:
            raise _err(f"budget {key} given twice", "E_DUPLICATE_KEY", line.no)
        out[key] = _int(val, line, f"budget {key}")
    return {f"k_{k}": out.get(k, 0) for k in _BUDGET_KEYS}


def _parse_control(lines):
    seen = _single(lines, _CONTROL_KEYS, repeatable=("vote",))
    pl = _need(seen, "problem", lines)
    if pl.rest not in PROBLEMS:
        raise _err(f"unknown problem {pl.rest!r}; expected one of {'|'.join(PROBLEMS)}",
                   "E_PROBLEM", pl.no)
    goal = None
    if "goal" in seen:
        gl = seen["goal"][0]
        if pl.rest != "MULTIMODE":
            raise _err("'goal' is only given for MULTIMODE; single-mode goals are implied",
                       "E_GOAL", gl.no)
        goal = gl.rest
    prl = _need(seen, "procedure", lines)
    try:
        procedure = ProcedureSpec.parse(prl.rest)
    except InputError as exc:
        raise _err(str(exc).split("] ", 1)[-1], exc.code, prl.no) from None
    cl = _need(seen, "candidates", lines)
    C = _ids(cl)
    _duplicates(C, cl)
    D = []
    if "unregistered-candidates" in seen:
        dl = seen["unregistered-candidates"][0]
        D = _ids(dl)
        _duplicates(C + D, dl)
    al = _need(seen, "agenda", lines)
    agenda = _ids(al)
    _duplicates(agenda, al)
    dist = _need(seen, "distinguished", lines)
    budgets = _parse_budgets(seen["budgets"][0]) if "budgets" in seen else {}
    universe = set(C) | set(D)
    reg, unreg = [], []
    for ln in seen.get("vote", []):
        which, _, body = ln.rest.partition(" ")
        if which not in ("registered", "unregistered"):
            raise _err("expected 'vote registered|unregistered <count>: ...'", "E_SYNTAX", ln.no)
        (reg if which == "registered" else unreg).append(_vote(body, ln, universe))
    try:
        return ControlInstance(pl.rest, procedure, tuple(C), dist.rest, Agenda(agenda), tuple(reg),
                               tuple(D), tuple(unreg), goal=goal, **budgets)
    except InputError as exc:
        key = _BLAME.get(exc.code)
        blamed = seen.get(key, [pl])[0] if key else pl
        raise _err(str(exc).split("] ", 1)[-1], exc.code, blamed.no) from None


def _serialize_control(x):
    out = ["format control-instance v1", f"problem {x.problem}"]
    if x.problem == "MULTIMODE":
        out.append(f"goal {x.goal}")
    out.append(f"procedure {x.procedure}")
    out.append("candidates " + " ".join(x.registered))
    if x.unregistered:
        out.append("unregistered-candidates " + " ".join(x.unregistered))
    out.append("agenda " + " ".join(x.agenda))
    out.append(f"distinguished {x.distinguished}")
    out.append(f"budgets av={x.k_av} dv={x.k_dv} ac={x.k_ac} dc={x.k_dc}")
    out += [f"vote registered {v.count}: {'>'.join(v.order)}" for v in x.registered_votes]
    out += [f"vote unregistered {v.count}: {'>'.join(v.order)}" for v in x.unregistered_votes]
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------- graph

def _parse_graph(lines):
    seen = _single(lines, ("problem", "kappa", "red", "blue", "vertex", "edge"),
                   repeatable=("red", "blue", "vertex", "edge"))
    problem = kappa = None
    if "problem" in seen:
        ln = seen["problem"][0]
        if ln.rest not in GRAPH_PROBLEMS:
            raise _err(f"unknown graph problem {ln.rest!r}; expected one of {'|'.join(GRAPH_PROBLEMS)}",
                       "E_GRAPH_PROBLEM", ln.no)
        problem = ln.rest
    if "kappa" in seen:
        kappa = _int(seen["kappa"][0].rest, seen["kappa"][0], "kappa")
    bip = "red" in seen or "blue" in seen
    if bip and "vertex" in seen:
        raise _err("a graph has either red/blue lines or vertex lines, not both", "E_GRAPH_SHAPE",
                   seen["vertex"][0].no)
    if problem is not None and bip != (problem in (RBDS, BICLIQUE)) and (bip or "vertex" in seen):
        raise _err(f"{problem} needs a {'bipartite' if not bip else 'general'} graph", "E_GRAPH_SHAPE",
                   seen["problem"][0].no)
    edges = []
    for ln in seen.get("edge", []):
        ends = ln.rest.split()
        if len(ends) != 2:
            raise _err("expected 'edge <id> <id>'", "E_SYNTAX", ln.no)
        edges.append((ln, tuple(ends)))
    bip = bip or problem in (RBDS, BICLIQUE)
    parts = {k: [c for ln in seen.get(k, []) for c in _ids(ln)] for k in ("red", "blue", "vertex")}
    known = set(parts["red"]) | set(parts["blue"]) | set(parts["vertex"])
    for ln, (u, v) in edges:
        if u not in known or v not in known:
            raise _err(f"edge {u}-{v} uses an undeclared vertex", "E_EDGE", ln.no)
    try:
        if bip:
            g = BipartiteGraph(tuple(parts["red"]), tuple(parts["blue"]), frozenset(e for _, e in edges))
        else:
            g = Graph(tuple(parts["vertex"]), frozenset(e for _, e in edges))
    except InputError as exc:
        raise _err(str(exc).split("] ", 1)[-1], exc.code, (edges[0][0].no if edges else lines[0].no)) from None
    if problem is not None and kappa is not None:
        return GraphInstance(problem, g, kappa)
    return g


def _serialize_graph(x):
    out = ["format graph v1"]
    g = x
    if isinstance(x, GraphInstance):
        out += [f"problem {x.problem}", f"kappa {x.kappa}"]
        g = x.graph
    if isinstance(g, BipartiteGraph):
        if g.red:
            out.append("red " + " ".join(g.red))
        if g.blue:
            out.append("blue " + " ".join(g.blue))
    elif g.vertices:
        out.append("vertex " + " ".join(g.vertices))
    out += [f"edge {u} {v}" for u, v in g.sorted_edges()]
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------- report

_REPORT_KEYS = ("answer", "algorithm", "rationale", "minimal", "delete-candidate", "add-candidate",
                "delete-vote", "add-vote")


def _parse_report(lines):
    seen = _single(lines, _REPORT_KEYS,
                   repeatable=("delete-candidate", "add-candidate", "delete-vote", "add-vote"))
    al = _need(seen, "answer", lines)
    if al.rest not in ("YES", "NO"):
        raise _err(f"expected YES or NO, got {al.rest!r}", "E_SYNTAX", al.no)
    minimal = False
    if "minimal" in seen:
        ml = seen["minimal"][0]
        if ml.rest not in ("true", "false"):
            raise _err(f"expected true or false, got {ml.rest!r}", "E_SYNTAX", ml.no)
        minimal = ml.rest == "true"
    edits = {}
    for key in ("delete-candidate", "add-candidate"):
        edits[key] = tuple(c for ln in seen.get(key, []) for c in _ids(ln))
    for key in ("delete-vote", "add-vote"):
        pairs = []
        for ln in seen.get(key, []):
            toks = ln.rest.split()
            if len(toks) != 2:
                raise _err(f"expected '{key} <group> <count>'", "E_SYNTAX", ln.no)
            pairs.append((_int(toks[0], ln, "group"), _int(toks[1], ln, "count")))
        edits[key] = tuple(pairs)
    algo = seen["algorithm"][0].rest if "algorithm" in seen else ""
    why = seen["rationale"][0].rest if "rationale" in seen else ""
    return Solution(al.rest == "YES", edits["delete-candidate"], edits["add-candidate"],
                    edits["delete-vote"], edits["add-vote"], minimal, algo, why)


def _serialize_report(s):
    out = ["format report v1", f"answer {'YES' if s.decision else 'NO'}"]
    if s.algorithm:
        out.append(f"algorithm {s.algorithm}")
    if s.rationale:
        out.append(f"rationale {s.rationale}")
    out.append(f"minimal {'true' if s.minimal else 'false'}")
    out += s.witness_lines()
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------- entry points

_PARSERS = {"election": _parse_election, "control-instance": _parse_control,
            "graph": _parse_graph, "report": _parse_report}


def parse(text, expect=None):
    """Parse a document. ``expect`` restricts the accepted format kind."""
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError:
            raise _err("document is not valid UTF-8", "E_ENCODING", None) from None
    lines = _lines(text)
    kind, body = _header(lines)
    if expect is not None and kind != expect:
        raise _err(f"expected a {expect} document, got {kind}", "E_FORMAT_KIND", lines[0].no)
    return _PARSERS[kind](body)


def kind_of(value):
    if isinstance(value, Election):
        return "election"
    if isinstance(value, ControlInstance):
        return "control-instance"
    if isinstance(value, (Graph, BipartiteGraph, GraphInstance)):
        return "graph"
    if isinstance(value, Solution):
        return "report"
    raise TypeError(f"cannot serialize {type(value).__name__}")


def serialize(value):
    return {"election": _serialize_election, "control-instance": _serialize_control,
            "graph": _serialize_graph, "report": _serialize_report}[kind_of(value)](value)


def canonicalize(text):
    return serialize(parse(text))


def read(path, expect=None):
    with open(path, "rb") as fh:
        return parse(fh.read(), expect=expect)


def write(path, value):
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(serialize(value))
