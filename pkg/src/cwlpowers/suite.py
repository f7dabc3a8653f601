"""Reproduction suite for the worked examples.

Each claim is a small function returning ``(ok, detail)`` with ``ok``
None when a step hit a resource cap; :func:`run_suite`
runs them under optional Gröbner caps and records PASS, FAIL, INCONCLUSIVE
(cap hit) or SKIP.
"""

from __future__ import annotations

import time
from dataclasses import asdict, dataclass
from typing import Callable, List, Optional, Sequence, Tuple

from . import catalog as cat
from .dseq import generic_d_sequence, is_d_sequence_on_rees, prop_conclusion_check
from .graphs import (cover_ideal, is_chordal, is_cm_chordal, is_unmixed,
                     minimal_vertex_covers, star_cover_generators)
from .groebner import Ideal, ResourceLimitExceeded, resource_limits
from .idealops import ideal_equal
from .monomial import MonomialIdeal
from .polycore import MonomialOrder, parse_poly
from .rees import rees_ideal, star_rees_check, x_condition


@dataclass
class Claim:
    name: str
    location: str
    run: Callable[[], Tuple[Optional[bool], str]]
    long: bool = False


@dataclass
class ClaimResult:
    name: str
    location: str
    status: str
    seconds: float
    detail: str = ""


def _forms(I: Ideal, texts: Sequence[str]):
    return [parse_poly(t, I.ctx) for t in texts]


def _dseq(I: Ideal, seq: Sequence[str]) -> Tuple[bool, str]:
    rep = is_d_sequence_on_rees(I, _forms(I, seq))
    ok = None if rep.verdict == "inconclusive" else rep.passed
    return ok, f"verdict {rep.verdict} for {'; '.join(seq)}"


def _cover_matches(G, texts) -> Tuple[bool, str]:
    got = cover_ideal(G)
    want = MonomialIdeal.parse(G.ring(), texts)
    return got == want, f"I_G = {got}"


def minors_kernel() -> Tuple[bool, str]:
    P = rees_ideal(cat.minors_2x3())
    L = Ideal(P.ext, [parse_poly(s, P.ext) for s in cat.MINORS_2X3_KERNEL])
    detail = "J = (" + ", ".join(cat.MINORS_2X3_KERNEL) + "); printed '-x*y3' read as '-x1*y3'"
    return ideal_equal(P.kernel, L), detail


def minors_initials() -> Tuple[bool, str]:
    P = rees_ideal(cat.minors_2x3())
    order = MonomialOrder.degrevlex(P.ext, cat.MINORS_2X3_CHAIN)
    rep = prop_conclusion_check(P, cat.MINORS_2X3_SEQUENCE, order)
    got = [sorted(x) for x in rep.initial_ideals()]
    want = [sorted(x) for x in cat.MINORS_2X3_INITIALS]
    shown = "; ".join("(" + ", ".join(x) + ")" for x in rep.initial_ideals())
    return rep.passed and got == want, f"in(J_0..J_4) = {shown}"


def triangle_star_covers() -> Tuple[bool, str]:
    G = cat.triangle_star()
    covs = minimal_vertex_covers(G)
    ok = frozenset({1, 2, 3}) in covs and frozenset({2, 3, 4, 6}) in covs and not is_unmixed(G)
    return ok, f"{len(covs)} minimal covers, mixed={not is_unmixed(G)}"


def triangle_star_closed_form() -> Tuple[bool, str]:
    G = cat.triangle_star(star_names=True)
    a, b = star_cover_generators(G), cover_ideal(G)
    return a == b, f"closed form {a}"


def triangle_star_binomials() -> Tuple[bool, str]:
    return star_rees_check(cat.triangle_star(star_names=True)), "J generated by 3 binomials"


def seven_vertex_generic(trials: int = 3, bound: int = 100) -> Tuple[bool, str]:
    I = cover_ideal(cat.seven_vertex_graph()).to_ideal()
    rep = generic_d_sequence(I, trials, cat.SEVEN_VERTEX_SEED, bound)
    ok = None if rep.verdict == "inconclusive" else rep.passed
    return ok, f"trials {[t['verdict'] for t in rep.trials]}"


def cm_chordal_xcondition() -> Tuple[bool, str]:
    oks = []
    for G in cat.cm_chordal_graphs():
        ok = bool(is_cm_chordal(G)) and x_condition(rees_ideal(cover_ideal(G).to_ideal())).passed
        oks.append(ok)
    return all(oks), f"{sum(oks)}/{len(oks)} graphs"


def claims() -> List[Claim]:
    out = [
        Claim("example-1-9/kernel", "Example 1.9", minors_kernel),
        Claim("example-1-9/initial-ideals", "Example 1.9", minors_initials),
        Claim("example-1-9/dseq", "Example 1.9",
              lambda: _dseq(cat.minors_2x3(), cat.MINORS_2X3_SEQUENCE)),
        Claim("symmetric-3x3/dseq", "Section 1",
              lambda: _dseq(cat.symmetric_minors(), cat.SYMMETRIC_SEQUENCE)),
        Claim("example-2-1a/cover", "Example 2.1(a)",
              lambda: _cover_matches(cat.path_of_length(3), cat.PATH3_COVER)),
        Claim("example-2-1a/unmixed", "Example 2.1(a)",
              lambda: (is_unmixed(cat.path_of_length(3)), "unmixed")),
        Claim("example-2-1a/dseq", "Example 2.1(a)",
              lambda: _dseq(cover_ideal(cat.path_of_length(3)).to_ideal(), cat.PATH3_SEQUENCE)),
        Claim("example-2-1b/cover", "Example 2.1(b)",
              lambda: _cover_matches(cat.path_of_length(4), cat.PATH4_COVER)),
        Claim("example-2-1b/mixed", "Example 2.1(b)",
              lambda: (not is_unmixed(cat.path_of_length(4)), "mixed")),
        Claim("example-2-1b/dseq", "Example 2.1(b)",
              lambda: _dseq(cover_ideal(cat.path_of_length(4)).to_ideal(), cat.PATH4_SEQUENCE)),
        Claim("example-2-2/covers", "Example 2.2", triangle_star_covers),
        Claim("example-2-2/closed-form", "Theorem 2.3", triangle_star_closed_form),
        Claim("example-2-2/binomials", "Theorem 2.3", triangle_star_binomials),
        Claim("example-2-2/dseq", "Example 2.2",
              lambda: _dseq(cover_ideal(cat.triangle_star()).to_ideal(),
                            cat.TRIANGLE_STAR_SEQUENCE)),
        Claim("example-2-4/chordal", "Example 2.4",
              lambda: (bool(is_chordal(cat.seven_vertex_graph())), "Lex-BFS PEO verified")),
        Claim("example-2-4/cover", "Example 2.4",
              lambda: _cover_matches(cat.seven_vertex_graph(), cat.SEVEN_VERTEX_COVER)),
        Claim("example-2-4/mixed", "Example 2.4",
              lambda: (not is_unmixed(cat.seven_vertex_graph()), "mixed")),
        Claim("example-2-4/generic-dseq", "Example 2.4", seven_vertex_generic),
        Claim("theorem-2-6/x-condition", "Theorem 2.6", cm_chordal_xcondition),
    ]
    for n in (2, 3, 4, 5, 6):
        out.append(Claim(f"scroll-{n}/dseq", "Section 1",
                         (lambda n=n: _dseq(cat.scroll(n), cat.scroll_sequence(n))), long=n > 4))
    return out


def run_suite(long: bool = False, pair_cap: Optional[int] = None, seconds_cap: Optional[float] = None,
              skip: Sequence[str] = (), progress: Callable[[ClaimResult], None] | None = None
              ) -> List[ClaimResult]:
    results = []
    for c in claims():
        if c.long and not long:
            continue
        t0 = time.perf_counter()
        if any(c.name.startswith(s) for s in skip):
            res = ClaimResult(c.name, c.location, "SKIP", 0.0)
        else:
            try:
                with resource_limits(pair_cap, seconds_cap):
                    ok, detail = c.run()
                status = "INCONCLUSIVE" if ok is None else "PASS" if ok else "FAIL"
                res = ClaimResult(c.name, c.location, status,
                                  time.perf_counter() - t0, detail)
            except ResourceLimitExceeded as exc:
                res = ClaimResult(c.name, c.location, "INCONCLUSIVE",
                                  time.perf_counter() - t0, str(exc))
        results.append(res)
        if progress:
            progress(res)
    return results


def suite_exit_code(results: Sequence[ClaimResult]) -> int:
    st = {r.status for r in results}
    if "FAIL" in st:
        return 1
    if "INCONCLUSIVE" in st:
        return 2
    return 0


def results_to_dicts(results: Sequence[ClaimResult]) -> List[dict]:
    return [asdict(r) for r in results]
