"""Command-line front-end.

Every subcommand reads its input from ``--in PATH`` (stdin by default), writes
to stdout and starts its output with ``# cherrylab <version> <command-line>``.
Exit status: 0 on success, 1 on domain errors, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import shlex
import sys
from math import comb
from typing import Sequence, TextIO

from . import __version__
from .colouring import cherry_count, construct_good_colouring, verify_good_colouring
from .extremal import construct_iterated, f_table
from .hypergraph import blow_up, shadow
from .io import (colouring_to_json, dumps, parse_colouring, parse_hypergraph, report,
                 serialize_colouring, serialize_hypergraph)
from .oracle import max_cherries, max_edges_odd_free, shortest_odd_bruteforce
from .pairwalk import CycleWitness, detect_odd_pseudocycle, diameter, extend_pseudocycle, is_pseudocycle, trim_small_codegree
from .symmetrise import (ClonePartition, clone_block_of, first_index, full_symmetrise, partition_cherries,
                         prefer_set, reorient_to_larger, seeded_random, symmetrise_from)


class DomainError(Exception):
    pass


def _int_list(text: str) -> list[int]:
    try:
        return [int(t) for t in text.replace(",", " ").split()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _read(path: str | None, stdin: TextIO) -> str:
    if path is None or path == "-":
        return stdin.read()
    with open(path) as fh:
        return fh.read()


def _selector(choice: str, seed: int, stdin: TextIO):
    if choice == "first":
        return first_index()
    if choice == "random":
        return seeded_random(seed)
    if choice.startswith("prefer:"):
        return prefer_set(_int_list(_read(choice[len("prefer:"):], stdin)))
    raise DomainError(f"unknown selector {choice!r}")


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--seed", type=int, default=0)

    def with_in(p):
        p.add_argument("--in", dest="input", metavar="PATH")
        return p

    parser = argparse.ArgumentParser(prog="cherrylab", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("construct", parents=[common], help="iterated blow-up from a profile")
    p.add_argument("--parts", type=_int_list, required=True)
    p = with_in(sub.add_parser("blowup", parents=[common], help="t-blow-up of a hypergraph"))
    p.add_argument("--t", type=int, required=True)
    with_in(sub.add_parser("shadow", parents=[common], help="shadow pairs"))
    with_in(sub.add_parser("detect-odd", parents=[common], help="shortest odd pseudocycle"))
    with_in(sub.add_parser("good-colour", parents=[common], help="good colouring or odd cycle"))
    p = with_in(sub.add_parser("verify-colouring", parents=[common], help="check a good colouring"))
    p.add_argument("--colouring", metavar="PATH", help="coloured graph (default stdin)")
    with_in(sub.add_parser("cherries", parents=[common], help="count cherries"))
    p = with_in(sub.add_parser("symmetrise", parents=[common], help="symmetrise from one vertex"))
    p.add_argument("--vertex", type=int, default=0)
    p.add_argument("--selector", default="first", help="first | random | prefer:<file>")
    p = with_in(sub.add_parser("full-symmetrise", parents=[common], help="partition into clone-cliques"))
    p.add_argument("--selector", default="first", help="first | random | prefer:<file>")
    p = with_in(sub.add_parser("reorient", parents=[common], help="point arcs towards larger blocks"))
    p.add_argument("--partition", metavar="PATH", help="JSON array of blocks")
    with_in(sub.add_parser("diameter", parents=[common], help="pair-digraph diameter"))
    p = with_in(sub.add_parser("trim", parents=[common], help="remove small-codegree pairs"))
    p.add_argument("--threshold", type=int, required=True)
    p = with_in(sub.add_parser("extend-cycle", parents=[common], help="stretch an odd pseudocycle"))
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--cycle", type=_int_list, help="defaults to the shortest odd pseudocycle")
    p = sub.add_parser("f-table", parents=[common], help="f(n), k(n) and density")
    p.add_argument("--max-n", type=int, required=True)

    p = sub.add_parser("oracle", help="brute-force searches")
    osub = p.add_subparsers(dest="oracle", required=True)
    for name in ("max-edges", "max-cherries"):
        q = osub.add_parser(name, parents=[common])
        q.add_argument("--n", type=int, required=True)
        q.add_argument("--jobs", type=int, default=1)
    q = with_in(osub.add_parser("shortest-odd", parents=[common]))
    q.add_argument("--lmax", type=int, default=15)
    return parser


def _emit_report(args, out: TextIO, rep: dict, text: str) -> None:
    out.write(dumps(rep) + "\n" if args.format == "json" else text)


def _cmd(args, stdin: TextIO, out: TextIO) -> int:
    cmd = args.command
    if cmd == "construct":
        H = construct_iterated(args.parts)
        _emit_report(args, out, report("construct", H.n, H.m, None, parts=args.parts,
                                       edges=[list(e) for e in H.sorted_edges()]),
                     serialize_hypergraph(H))
        return 0
    if cmd == "f-table":
        if args.max_n < 1:
            raise DomainError("--max-n must be positive")
        table = f_table(args.max_n)
        rows = []
        for n in range(1, args.max_n + 1):
            dens = table[n] / comb(n, 3) if n >= 3 else None
            rows.append((n, table[n], int(table.k[n]), dens))
        if args.format == "json":
            out.write(dumps(report("f-table", args.max_n, [r[1] for r in rows], None,
                                   k=[r[2] for r in rows], density=[r[3] for r in rows])) + "\n")
        else:
            for n, f, k, d in rows:
                out.write(f"{n}\t{f}\t{k}\t{'-' if d is None else f'{d:.6f}'}\n")
        return 0
    if cmd == "oracle":
        return _oracle(args, stdin, out)

    text = _read(args.input, stdin)
    if cmd in ("cherries", "symmetrise", "full-symmetrise", "reorient"):
        return _coloured(args, parse_colouring(text), stdin, out)
    H = parse_hypergraph(text)
    if cmd == "blowup":
        B = blow_up(H, args.t)
        _emit_report(args, out, report("blowup", B.n, B.m, None, edges=[list(e) for e in B.sorted_edges()]),
                     serialize_hypergraph(B))
    elif cmd == "shadow":
        pairs = sorted(shadow(H))
        _emit_report(args, out, report("shadow", H.n, len(pairs), None, pairs=[list(p) for p in pairs]),
                     "".join(f"{u} {v}\n" for u, v in pairs))
    elif cmd == "detect-odd":
        w = detect_odd_pseudocycle(H)
        _emit_report(args, out, report("detect-odd", H.n, None if w is None else len(w),
                                       None if w is None else w.seq),
                     "none\n" if w is None else f"{len(w)}: {' '.join(map(str, w.seq))}\n")
    elif cmd == "good-colour":
        res = construct_good_colouring(H)
        if isinstance(res, CycleWitness):
            _emit_report(args, out, report("good-colour", H.n, "odd_cycle", res.seq, result="odd_cycle"),
                         f"odd_cycle {' '.join(map(str, res.seq))}\n")
        else:
            _emit_report(args, out, report("good-colour", H.n, "colouring", None, result="colouring",
                                           colouring=colouring_to_json(res)),
                         serialize_colouring(res))
    elif cmd == "verify-colouring":
        if args.input in (None, "-") and args.colouring in (None, "-"):
            raise DomainError("--in and --colouring cannot both read stdin")
        G = parse_colouring(_read(args.colouring, stdin))
        ok = verify_good_colouring(H, G)
        _emit_report(args, out, report("verify-colouring", H.n, ok), "ok\n" if ok else "not good\n")
        return 0 if ok else 1
    elif cmd == "diameter":
        d = diameter(H)
        _emit_report(args, out, report("diameter", H.n, d.value, None, vacuous=d.vacuous),
                     f"{d.value}{' (vacuous)' if d.vacuous else ''}\n")
    elif cmd == "trim":
        T = trim_small_codegree(H, args.threshold)
        _emit_report(args, out, report("trim", T.n, T.m, None, removed=H.m - T.m,
                                       edges=[list(e) for e in T.sorted_edges()]),
                     serialize_hypergraph(T))
    elif cmd == "extend-cycle":
        cyc = args.cycle
        if cyc is None:
            w = detect_odd_pseudocycle(H)
            if w is None:
                raise DomainError("hypergraph has no odd pseudocycle to extend")
            cyc = list(w.seq)
        if len(cyc) < 3 or not is_pseudocycle(H, cyc):
            raise DomainError(f"{cyc} is not a pseudocycle of the input")
        ext = extend_pseudocycle(cyc, args.m)
        _emit_report(args, out, report("extend-cycle", H.n, len(ext), ext.seq),
                     f"{len(ext)}: {' '.join(map(str, ext.seq))}\n")
    return 0


def _coloured(args, G, stdin: TextIO, out: TextIO) -> int:
    cmd = args.command
    if cmd == "cherries":
        c = cherry_count(G)
        _emit_report(args, out, report("cherries", G.n, c), f"{c}\n")
    elif cmd == "symmetrise":
        sel = _selector(args.selector, args.seed, stdin)
        G2, Q, trace = symmetrise_from(G, args.vertex, sel)
        if args.format == "json":
            for s in trace.steps:
                out.write(dumps(s.as_dict()) + "\n")
            out.write(dumps(report("symmetrise", G.n, cherry_count(G2), Q,
                                   initial=trace.initial_cherries,
                                   colouring=colouring_to_json(G2))) + "\n")
        else:
            out.write("# k added gain_new gain_first cloned sym_diff cherries\n")
            for s in trace.steps:
                out.write(f"# {s.k} {s.added} {s.gain_new} {s.gain_first} {s.cloned} {s.sym_diff} {s.cherries}\n")
            out.write(f"# clique {' '.join(map(str, Q))}\n")
            out.write(serialize_colouring(G2))
    elif cmd == "full-symmetrise":
        sel = _selector(args.selector, args.seed, stdin)
        G2, part, traces = full_symmetrise(G, sel)
        blocks = [list(b) for b in part.blocks]
        if args.format == "json":
            out.write(dumps(report("full-symmetrise", G.n, cherry_count(G2), None, partition=blocks,
                                   runs=len(traces), colouring=colouring_to_json(G2))) + "\n")
        else:
            out.write(f"# partition {json.dumps(blocks)}\n")
            out.write(serialize_colouring(G2))
    elif cmd == "reorient":
        if args.partition:
            part = ClonePartition.from_blocks(json.loads(_read(args.partition, stdin)))
        else:
            blocks = {clone_block_of(G, v) for v in range(G.n)}
            if None in blocks:
                raise DomainError("input is not partitioned into full blue clone-cliques; "
                                  "run full-symmetrise first or pass --partition")
            part = ClonePartition.from_blocks(blocks)
        G2 = reorient_to_larger(G, part)
        _emit_report(args, out, report("reorient", G.n, cherry_count(G2), None,
                                       partition=[list(b) for b in part.blocks],
                                       formula=partition_cherries(part),
                                       colouring=colouring_to_json(G2)),
                     serialize_colouring(G2))
    return 0


def _oracle(args, stdin: TextIO, out: TextIO) -> int:
    if args.oracle == "max-edges":
        r = max_edges_odd_free(args.n, jobs=args.jobs)
        edges = [list(e) for e in r.witness.sorted_edges()]
        _emit_report(args, out, report("oracle-max-edges", r.n, r.value, None, edges=edges, nodes=r.nodes),
                     f"{r.value}\n" + serialize_hypergraph(r.witness))
    elif args.oracle == "max-cherries":
        r = max_cherries(args.n, jobs=args.jobs)
        _emit_report(args, out, report("oracle-max-cherries", r.n, r.value, None, optima=r.count,
                                       nodes=r.nodes, colouring=colouring_to_json(r.witness)),
                     f"{r.value}\n" + serialize_colouring(r.witness))
    else:
        H = parse_hypergraph(_read(args.input, stdin))
        length, seq = shortest_odd_bruteforce(H, args.lmax, with_witness=True)
        _emit_report(args, out, report("oracle-shortest-odd", H.n, length, seq, lmax=args.lmax),
                     "none\n" if length is None else f"{length}: {' '.join(map(str, seq))}\n")
    return 0


def run(argv: Sequence[str] | None = None, stdin: TextIO | None = None,
        stdout: TextIO | None = None, stderr: TextIO | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    stdout.write(f"# cherrylab {__version__} {shlex.join(argv)}\n")
    try:
        return _cmd(args, stdin, stdout)
    except (DomainError, ValueError, OSError) as exc:
        stderr.write(f"error: {exc}\n")
        return 1


def main() -> None:
    sys.exit(run())
