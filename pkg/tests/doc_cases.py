"""Random documents of every kind for round-trip checks."""

import random

from agenda_control.election import Election
from agenda_control.generate import candidate_names, random_graph_instance, random_instance, random_votes
from agenda_control.graphs import PROBLEMS as GRAPH_PROBLEMS
from agenda_control.procedures import ProcedureSpec
from agenda_control.solvers import PROBLEMS, Solution

PROCS = [ProcedureSpec.amendment(1), ProcedureSpec.amendment(3), ProcedureSpec.relative(1),
         ProcedureSpec.relative(2), ProcedureSpec.successive()]


def random_document(rng):
    kind = rng.choice(["election", "control-instance", "graph", "report"])
    if kind == "election":
        cands = candidate_names(rng.randint(1, 6))
        return Election(cands, random_votes(rng, cands, rng.randint(0, 8)))
    if kind == "control-instance":
        return random_instance(rng, rng.choice(PROBLEMS), rng.randint(2, 6), rng.randint(1, 7),
                               procedure=rng.choice(PROCS), max_k=4)
    if kind == "graph":
        g = random_graph_instance(rng, rng.choice(GRAPH_PROBLEMS), size=rng.randint(1, 5),
                                  density=rng.random())
        return g if rng.random() < 0.7 else g.graph
    dec = rng.random() < 0.6
    cands = candidate_names(6)
    return Solution(dec,
                    tuple(sorted(rng.sample(cands, rng.randint(0, 2)))) if dec else (),
                    tuple(sorted(rng.sample(cands, rng.randint(0, 2)))) if dec else (),
                    tuple((i, rng.randint(1, 3)) for i in sorted(rng.sample(range(5), rng.randint(0, 2))))
                    if dec else (),
                    (), rng.random() < 0.5, rng.choice(["", "brute-force", "ccdc-amendment-dp"]),
                    rng.choice(["", "P", "OPEN"]))


def round_trip_failures(count, seed=0):
    """Serialize, parse, serialize again; return the documents whose text changed."""
    from agenda_control import io_formats
    rng = random.Random(seed)
    bad = []
    for _ in range(count):
        doc = random_document(rng)
        text = io_formats.serialize(doc)
        back = io_formats.parse(text)
        if io_formats.serialize(back) != text or io_formats.parse(io_formats.serialize(back)) != back:
            bad.append(text)
    return bad
