"""Command-line front end: ``agenda-control <verb> ...``.

Exit codes: 0 success or YES, 1 NO (or a disagreeing reduction), 2 input
error, 3 resource cap, 4 internal invariant violation.
"""

import argparse
import dataclasses
import logging
import random
import sys

from . import io_formats
from .election import Agenda
from .errors import AgendaControlError, InputError, InvariantError
from .generate import random_instance
from .graphs import PROBLEMS as GRAPH_PROBLEMS, GraphInstance, solve_graph
from .procedures import ProcedureSpec, evaluate
from .reductions import CATALOG, build_reduction, verify_reduction
from .solvers import PROBLEMS, Caps, brute_force_solve, check_solution, dispatch_solve, route

log = logging.getLogger("agenda_control")


class _Out:
    """Collects report fields; prints them plain or as ``key=value`` lines."""

    def __init__(self, porcelain):
        self.porcelain = porcelain
        self.rows = []

    def add(self, key, value, plain=None):
        self.rows.append((key, value, plain))

    def text(self, body):
        self.rows.append((None, body, None))

    def emit(self, stream):
        for key, value, plain in self.rows:
            if key is None:
                stream.write(value)
            elif self.porcelain:
                stream.write(f"{key}={value}\n")
            else:
                stream.write((plain if plain is not None else f"{key} {value}") + "\n")


def _procedure(text):
    try:
        return ProcedureSpec.parse(text)
    except InputError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _positive(text):
    val = int(text)
    if val < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return val


def _solution_rows(out, sol):
    out.add("answer", "YES" if sol.decision else "NO", "YES" if sol.decision else "NO")
    for line in sol.witness_lines():
        out.add("witness", line, line)
    out.add("algorithm", sol.algorithm)
    if sol.rationale:
        out.add("rationale", sol.rationale)
    out.add("minimal", "true" if sol.minimal else "false")


def _tighten(instance, sol, caps, jobs):
    """Smallest budget that still says YES, using the same router."""
    if not sol.decision or sol.minimal or instance.problem == "MULTIMODE":
        return sol
    key = "k_" + instance.problem[2:].lower()
    for k in range(getattr(instance, key)):
        cand = dispatch_solve(instance.replace(**{key: k}), caps=caps, jobs=jobs)
        if cand.decision:
            sol = cand
            break
    # every smaller budget failed, so no smaller witness exists
    return dataclasses.replace(sol, minimal=True)


def cmd_winner(args, out):
    e = io_formats.read(args.election, expect="election")
    agenda = Agenda(args.agenda.replace(",", " "))
    if set(agenda) != set(e.candidates):
        raise InputError("agenda must list exactly the election's candidates", code="E_AGENDA")
    w, trace = evaluate(e, agenda, args.procedure)
    out.add("winner", w, w)
    if args.trace:
        for line in trace.lines()[:-1]:
            out.add("round", line.split(": ", 1)[1], line)
    return 0


def cmd_solve(args, out):
    inst = io_formats.read(args.instance, expect="control-instance")
    caps = Caps.from_env()
    sol = dispatch_solve(inst, caps=caps, jobs=args.jobs)
    if args.minimal:
        sol = _tighten(inst, sol, caps, args.jobs)
    check_solution(inst, sol)
    _solution_rows(out, sol)
    return 0 if sol.decision else 1


def cmd_oracle(args, out):
    inst = io_formats.read(args.instance, expect="control-instance")
    sol = brute_force_solve(inst, caps=Caps.from_env(), jobs=args.jobs)
    check_solution(inst, sol)
    r = route(inst)
    _solution_rows(out, sol.with_algorithm(sol.algorithm, r.complexity))
    return 0 if sol.decision else 1


def _graph_source(path, kappa=None, problem=None):
    g = io_formats.read(path, expect="graph")
    if isinstance(g, GraphInstance):
        return GraphInstance(problem or g.problem, g.graph, g.kappa if kappa is None else kappa)
    if kappa is None or problem is None:
        raise InputError("graph file has no problem/kappa lines; pass --kappa (and --problem)",
                         code="E_MISSING_KEY")
    return GraphInstance(problem, g, kappa)


def cmd_generate(args, out):
    if args.what == "reduction":
        entry = CATALOG[args.kind]
        src = _graph_source(args.graph, args.kappa, entry.source)
        value = build_reduction(args.kind, src, h=args.h, seed=args.seed)
    else:
        rng = random.Random(args.seed)
        value = random_instance(rng, args.problem, args.candidates, args.votes, procedure=args.procedure,
                                k=args.k)
    text = io_formats.serialize(value)
    if args.out and args.out != "-":
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        out.add("wrote", args.out)
    else:
        out.text(text)
    return 0


def cmd_verify(args, out):
    entry = CATALOG[args.kind]
    src = _graph_source(args.graph, args.kappa, entry.source)
    rep = verify_reduction(args.kind, src, h=args.h, seed=args.seed, jobs=args.jobs)
    verdict = "AGREE" if rep.agree else "DISAGREE"
    out.add("result", verdict, verdict)
    out.add("kind", args.kind)
    out.add("source", "YES" if rep.source_answer else "NO")
    out.add("target", "YES" if rep.target_answer else "NO")
    return 0 if rep.agree else 1


def cmd_graph_solve(args, out):
    src = _graph_source(args.graph, args.kappa, args.problem)
    wit = solve_graph(src)
    if wit is None:
        out.add("answer", "NO", "NO")
        return 1
    out.add("answer", "YES", "YES")
    if isinstance(wit, tuple):
        out.add("witness", " ".join(sorted(wit[0])) + " | " + " ".join(sorted(wit[1])))
    else:
        out.add("witness", " ".join(sorted(wit)))
    return 0


def cmd_canonicalize(args, out):
    with open(args.file, "rb") as fh:
        raw = fh.read()
    text = io_formats.canonicalize(raw)
    if args.check:
        same = raw.decode("utf-8") == text
        out.add("canonical", "true" if same else "false", "canonical" if same else "not canonical")
        return 0 if same else 1
    if args.in_place:
        with open(args.file, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
        return 0
    out.text(text)
    return 0


def _common(defaults):
    common = argparse.ArgumentParser(add_help=False)
    # subcommands must not reset flags given before the verb
    kw = {} if defaults else {"default": argparse.SUPPRESS}
    common.add_argument("--porcelain", action="store_true", help="emit key=value lines", **kw)
    common.add_argument("--jobs", type=_positive, help="worker threads for brute force",
                        **(kw or {"default": 1}))
    common.add_argument("-v", "--verbose", action="store_true", **kw)
    return common


def build_parser():
    common = _common(False)
    ap = argparse.ArgumentParser(prog="agenda-control", parents=[_common(True)],
                                 description="Agenda-based voting procedures and their control problems.")
    sub = ap.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("winner", parents=[common], help="winner of an election under an agenda")
    p.add_argument("--election", required=True)
    p.add_argument("--agenda", required=True, help='candidate ids in agenda order, e.g. "a b c d"')
    p.add_argument("--procedure", type=_procedure, default=ProcedureSpec.amendment(1),
                   help='"successive", "amendment h=2" or "amendment h=m-1"')
    p.add_argument("--trace", action="store_true")
    p.set_defaults(func=cmd_winner)

    p = sub.add_parser("solve", parents=[common], help="decide a control instance")
    p.add_argument("--instance", required=True)
    p.add_argument("--minimal", action="store_true", help="report a minimum-size witness")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("oracle", parents=[common], help="decide by exhaustive search")
    p.add_argument("--instance", required=True)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("generate", parents=[common], help="write a generated instance")
    gsub = p.add_subparsers(dest="what", required=True)
    g = gsub.add_parser("reduction", parents=[common])
    g.add_argument("--kind", required=True, choices=sorted(CATALOG))
    g.add_argument("--graph", required=True)
    g.add_argument("--kappa", type=int)
    g.add_argument("--h", type=_positive, default=1)
    g.add_argument("--seed", type=int)
    g.add_argument("--out")
    g.set_defaults(func=cmd_generate)
    g = gsub.add_parser("random", parents=[common])
    g.add_argument("--candidates", type=_positive, required=True)
    g.add_argument("--votes", type=int, required=True)
    g.add_argument("--problem", choices=PROBLEMS, required=True)
    g.add_argument("--procedure", type=_procedure, default=ProcedureSpec.amendment(1))
    g.add_argument("--k", type=int)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--out")
    g.set_defaults(func=cmd_generate)

    p = sub.add_parser("verify-reduction", parents=[common], help="compare source and target answers")
    p.add_argument("--kind", required=True, choices=sorted(CATALOG))
    p.add_argument("--graph", required=True)
    p.add_argument("--kappa", type=int)
    p.add_argument("--h", type=_positive, default=1)
    p.add_argument("--seed", type=int)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("graph-solve", parents=[common], help="solve a graph problem exactly")
    p.add_argument("--problem", required=True, choices=GRAPH_PROBLEMS)
    p.add_argument("--graph", required=True)
    p.add_argument("--kappa", type=int)
    p.set_defaults(func=cmd_graph_solve)

    p = sub.add_parser("canonicalize", parents=[common], help="rewrite a document in canonical form")
    p.add_argument("file")
    mode = p.add_mutually_exclusive_group()
    mode.add_argument("--check", action="store_true", help="exit 1 unless already canonical")
    mode.add_argument("--in-place", action="store_true")
    p.set_defaults(func=cmd_canonicalize)
    return ap


def run(argv=None, stdout=None, stderr=None):
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s", stream=stderr)
    out = _Out(args.porcelain)
    try:
        code = args.func(args, out)
    except AgendaControlError as exc:
        stderr.write(f"error: {exc}\n")
        return exc.exit_code
    except (OSError, UnicodeDecodeError) as exc:
        stderr.write(f"error: {exc}\n")
        return InputError.exit_code
    except Exception as exc:  # anything else is a bug
        stderr.write(f"internal error: {type(exc).__name__}: {exc}\n")
        return InvariantError.exit_code
    out.emit(stdout)
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
