"""Command-line interface.

Exit codes: 0 pass, 1 fail, 2 inconclusive, 64 usage or parse error,
75 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from pathlib import Path
from typing import List, Optional

from . import __version__
from .betti import OracleLimitExceeded, betti_numbers, is_componentwise_linear
from .dseq import generic_d_sequence, is_d_sequence_on_rees
from .fileio import parse_graph_text, parse_ideal_text, parse_sequence, sniff_kind
from .graphs import (GraphError, clique_complex, cover_ideal, is_chordal, is_cm_chordal,
                     is_unmixed, minimal_vertex_covers)
from .groebner import Ideal, ResourceLimitExceeded, resource_limits
from .idealops import ideal_power
from .polycore import ParseError, RingCtx, format_monomial, parse_order
from .rees import rees_ideal, x_condition

EXIT_PASS, EXIT_FAIL, EXIT_INCONCLUSIVE = 0, 1, 2
EXIT_USAGE, EXIT_CAP = 64, 75


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _load_ideal(path: str, char: Optional[int] = None) -> Ideal:
    """An ideal file, or the vertex cover ideal of a graph file."""
    text = _read(path)
    if sniff_kind(text) == "graph":
        I = cover_ideal(parse_graph_text(text)).to_ideal()
    else:
        I = parse_ideal_text(text)
    if char is not None and char != I.ctx.char:
        ctx = I.ctx
        new = RingCtx(ctx.var_names, ctx.x_count, char, ctx.weights)
        I = Ideal(new, [g.change_ring(new) for g in I.gens])
    return I


def _load_graph(path: str):
    text = _read(path)
    if sniff_kind(text) != "graph":
        raise UsageError(f"{path} is not a graph file")
    return parse_graph_text(text)


def _monomial_gens(I: Ideal):
    if not I.is_monomial():
        raise UsageError("the Betti oracle needs a monomial ideal")
    return I.monomial_ideal()


class Output:
    def __init__(self, args):
        self.args = args
        self.json = getattr(args, "json", False)
        self.t0 = time.perf_counter()
        self.warnings: List[str] = []

    def emit(self, result: dict, text: str):
        if self.json:
            rep = {
                "tool": "cwlpowers", "version": __version__,
                "command": self.args.command, "argv": sys.argv[1:],
                "inputs": {k: v for k, v in vars(self.args).items()
                           if k not in ("func", "json") and not callable(v)},
                "result": result, "warnings": self.warnings + result.get("warnings", []),
                "seconds": round(time.perf_counter() - self.t0, 3),
            }
            print(json.dumps(rep, indent=2, default=str))
        else:
            print(text)
            for w in self.warnings:
                print(f"warning: {w}")


def cmd_dseq(args, out: Output) -> int:
    I = _load_ideal(args.file, args.char)
    if I.ctx.char:
        out.warnings.append("prime field mode: verdicts are heuristic")
    order = None
    if args.order:
        P = rees_ideal(I)
        order = parse_order(args.order, P.ext)
    if args.generic:
        rep = generic_d_sequence(I, args.trials, args.seed, args.bound, order)
    else:
        if not args.sequence:
            raise UsageError("give --sequence or --generic")
        rep = is_d_sequence_on_rees(I, parse_sequence(args.sequence, I.ctx), order)
    lines = [f"sequence: {'; '.join(rep.sequence)}", f"order: {rep.order}"]
    for s in rep.steps:
        extra = f"  certificate: {s.certificate}" if s.certificate else ""
        extra += f"  ({s.error})" if s.error else ""
        lines.append(f"  step {s.i} [{rep.sequence[s.i - 1]}]: {s.status.upper()}{extra}")
    if rep.mode == "generic":
        lines.append(f"trials: {[(t['seed'], t['verdict']) for t in rep.trials]}")
    lines.append(f"d-sequence: {rep.verdict.upper()}")
    if rep.passed:
        lines.append("all powers of the ideal are componentwise linear")
    lines += [f"warning: {w}" for w in rep.warnings]
    out.emit(rep.to_dict(), "\n".join(lines))
    return {"pass": EXIT_PASS, "fail": EXIT_FAIL}.get(rep.verdict, EXIT_INCONCLUSIVE)


def cmd_rees(args, out: Output) -> int:
    I = _load_ideal(args.file)
    P = rees_ideal(I)
    res = {"ring": list(P.ext.var_names), "images": [str(f) for f in P.images],
           "kernel": P.kernel_strings(),
           "minimal_kernel": [str(g) for g in P.minimal_kernel_gens()],
           "substitution_defect": [str(g) for g in P.substitution_defect()]}
    text = "\n".join([f"T = K[{', '.join(P.ext.var_names)}]",
                      *(f"  y{j + 1} -> {f}" for j, f in enumerate(P.images)),
                      "J = (" + ", ".join(res["minimal_kernel"]) + ")"])
    out.emit(res, text)
    return EXIT_PASS


def cmd_xcond(args, out: Output) -> int:
    P = rees_ideal(_load_ideal(args.file))
    r = x_condition(P)
    names = P.ext.var_names
    res = {"passed": r.passed, "violations": [format_monomial(u, names) for u in r.violations],
           "initial_ideal": [format_monomial(u, names) for u in r.initial_ideal.gens]}
    text = f"x-condition: {'PASS' if r.passed else 'FAIL'}"
    if not r.passed:
        text += "\n  generators of x-degree > 1: " + ", ".join(res["violations"])
    out.emit(res, text)
    return EXIT_PASS if r.passed else EXIT_FAIL


def cmd_cover_ideal(args, out: Output) -> int:
    G = _load_graph(args.file)
    I = cover_ideal(G)
    names = G.names
    gens = [format_monomial(u, names) for u in I.gens]
    covers = [sorted(C) for C in minimal_vertex_covers(G)]
    res = {"generators": gens, "minimal_covers": covers, "unmixed": is_unmixed(G)}
    text = "I_G = (" + ", ".join(gens) + ")\n" + ("unmixed" if res["unmixed"] else "mixed")
    out.emit(res, text)
    return EXIT_PASS


def cmd_chordal(args, out: Output) -> int:
    r = is_chordal(_load_graph(args.file))
    res = {"chordal": r.chordal, "peo": list(r.peo), "chordless_cycle": list(r.cycle)}
    if r.chordal:
        text = "chordal: yes\n  perfect elimination ordering: " + " ".join(map(str, r.peo))
    else:
        text = "chordal: no\n  chordless cycle: " + " ".join(map(str, r.cycle))
    out.emit(res, text)
    return EXIT_PASS if r.chordal else EXIT_FAIL


def cmd_cm_chordal(args, out: Output) -> int:
    G = _load_graph(args.file)
    ch = is_chordal(G)
    if not ch:
        res = {"applicable": False, "chordless_cycle": list(ch.cycle)}
        out.emit(res, "not chordal: the Cohen-Macaulay criterion does not apply\n"
                      "  chordless cycle: " + " ".join(map(str, ch.cycle)))
        return EXIT_INCONCLUSIVE
    r = is_cm_chordal(G)
    cc = clique_complex(G)
    res = {"applicable": True, "cm": r.cm, "free_facets": [sorted(F) for F in r.partition],
           "facets": [sorted(F) for F in cc.facets]}
    text = (f"Cohen-Macaulay: {'yes' if r.cm else 'no'}\n  facets with a free vertex: "
            + " ".join("{" + ",".join(map(str, sorted(F))) + "}" for F in r.partition))
    out.emit(res, text)
    return EXIT_PASS if r.cm else EXIT_FAIL


def _guard(args) -> dict:
    return {"max_lcm_degree": args.max_lcm_degree} if args.max_lcm_degree else {}


def cmd_betti(args, out: Output) -> int:
    I = _load_ideal(args.file)
    if args.power > 1:
        I = ideal_power(I, args.power)
    M = _monomial_gens(I)
    T = betti_numbers(M, **_guard(args))
    out.emit(T.to_dict(), str(T))
    return EXIT_PASS


def cmd_cwl(args, out: Output) -> int:
    I = _load_ideal(args.file)
    if args.power > 1:
        I = ideal_power(I, args.power)
    r = is_componentwise_linear(_monomial_gens(I), **_guard(args))
    res = {"componentwise_linear": r.cwl, "reg": r.reg,
           "components": {str(j): ok for j, ok in r.components.items()}}
    text = f"componentwise linear: {'yes' if r.cwl else 'no'} (reg {r.reg})\n" + \
        "\n".join(f"  I_<{j}> linear resolution: {'yes' if ok else 'no'}"
                  for j, ok in r.components.items())
    out.emit(res, text)
    return EXIT_PASS if r.cwl else EXIT_FAIL


def _parse_skip(items):
    cap, names = None, []
    for it in items or []:
        key, eq, val = it.partition("=")
        if eq and key == "groebner-cap":
            try:
                cap = int(val)
            except ValueError:
                raise UsageError(f"bad cap {val!r}") from None
        elif eq:
            raise UsageError(f"unknown setting {key!r}")
        else:
            names.append(it)
    return cap, names


def cmd_verify_paper(args, out: Output) -> int:
    from .suite import results_to_dicts, run_suite, suite_exit_code
    cap, names = _parse_skip(args.skip)
    if cap is not None:
        out.warnings.append(f"Gröbner pair cap {cap}: INCONCLUSIVE marks claims that hit it")

    def show(r):
        if not out.json:
            loc = f"[{r.location}]"
            print(f"{r.status:<12} {r.name:<28} {loc:<16} {r.seconds:7.2f}s  {r.detail}",
                  flush=True)

    results = run_suite(long=args.long, pair_cap=cap, skip=names, progress=show)
    code = suite_exit_code(results)
    counts = {}
    for r in results:
        counts[r.status] = counts.get(r.status, 0) + 1
    out.emit({"claims": results_to_dicts(results), "counts": counts},
             "summary: " + ", ".join(f"{k} {v}" for k, v in sorted(counts.items())))
    return code


def cmd_scan_chordal(args, out: Output) -> int:
    from .scan import MAX_VERTICES, scan_chordal
    if args.max_vertices > MAX_VERTICES:
        raise UsageError(f"--max-vertices is limited to {MAX_VERTICES}")
    rep = scan_chordal(args.max_vertices, args.samples, args.seed, args.trials, args.bound,
                       args.workers, args.min_vertices)
    c = rep.counts()
    lines = [f"scanned {len(rep.entries)} connected chordal graphs: "
             f"{c['pass']} pass, {c['fail']} fail, {c['inconclusive']} inconclusive"]
    for e in rep.counterexamples():
        lines.append(f"POTENTIAL COUNTEREXAMPLE n={e.n} edges={e.edges}")
    out.emit(rep.to_dict(), "\n".join(lines))
    if c["fail"]:
        return EXIT_FAIL
    return EXIT_INCONCLUSIVE if c["inconclusive"] else EXIT_PASS


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print a JSON report")
    common.add_argument("--max-pairs", type=int, help="Gröbner pair cap")
    common.add_argument("--max-seconds", type=float, help="Gröbner time cap per basis")

    p = _Parser(prog="cwlpowers", description="Componentwise linear powers via d-sequences.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("dseq", parents=[common], help="d-sequence test on the Rees algebra")
    s.add_argument("file", help="ideal file (or graph file: its cover ideal)")
    g = s.add_mutually_exclusive_group()
    g.add_argument("--sequence", help='linear forms "z1;...;zn"')
    g.add_argument("--generic", action="store_true", help="random bases")
    s.add_argument("--trials", type=int, default=3)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--bound", type=int, default=100)
    s.add_argument("--order", help='order on T, e.g. "degrevlex" or "lex:x1>x2>y1"')
    s.add_argument("--char", type=int, help="coefficient characteristic (prime: heuristic)")
    s.set_defaults(func=cmd_dseq)

    for name, func, hlp in [("rees", cmd_rees, "Rees presentation ideal"),
                            ("xcond", cmd_xcond, "x-condition test")]:
        s = sub.add_parser(name, parents=[common], help=hlp)
        s.add_argument("file")
        s.set_defaults(func=func)

    for name, func, hlp in [("cover-ideal", cmd_cover_ideal, "vertex cover ideal"),
                            ("chordal", cmd_chordal, "chordality test"),
                            ("cm-chordal", cmd_cm_chordal, "Cohen-Macaulay chordal test")]:
        s = sub.add_parser(name, parents=[common], help=hlp)
        s.add_argument("file", help="graph file")
        s.set_defaults(func=func)

    for name, func, hlp in [("betti", cmd_betti, "graded Betti numbers (monomial ideals)"),
                            ("cwl", cmd_cwl, "componentwise linearity (monomial ideals)")]:
        s = sub.add_parser(name, parents=[common], help=hlp)
        s.add_argument("file")
        s.add_argument("--power", type=int, default=1)
        s.add_argument("--max-lcm-degree", type=int, default=None)
        s.set_defaults(func=func)

    s = sub.add_parser("verify-paper", parents=[common], help="run the reproduction suite")
    s.add_argument("--long", action="store_true", help="include scrolls n = 5, 6")
    s.add_argument("--skip", action="append", metavar="ITEM",
                   help="claim-name prefix to skip, or groebner-cap=N")
    s.set_defaults(func=cmd_verify_paper)

    s = sub.add_parser("scan-chordal", parents=[common], help="scan chordal graphs")
    s.add_argument("--max-vertices", type=int, default=5)
    s.add_argument("--min-vertices", type=int, default=1)
    s.add_argument("--samples", type=int, default=10)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--trials", type=int, default=3)
    s.add_argument("--bound", type=int, default=100)
    s.add_argument("--workers", type=int, default=1)
    s.set_defaults(func=cmd_scan_chordal)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    out = Output(args)
    try:
        with resource_limits(args.max_pairs, args.max_seconds):
            return args.func(args, out)
    except (ParseError, GraphError, UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ResourceLimitExceeded, OracleLimitExceeded) as exc:
        print(f"resource cap: {exc}", file=sys.stderr)
        return EXIT_CAP


if __name__ == "__main__":
    sys.exit(main())
