"""The d-sequence test on Rees algebras and its Gröbner sufficient criteria.

After the change of coordinates ``z_i -> x_i`` the sequence is
``x_1..x_n`` and step ``i`` checks

    ((x_1..x_{i-1}) + J) : x_i  ∩  ((x_1..x_n) + J)  =  (x_1..x_{i-1}) + J

in ``T = S[y_1..y_m]``.
"""

from __future__ import annotations

import time
from dataclasses import asdict, dataclass, field
from typing import List, Optional, Sequence, Tuple

from .groebner import Ideal, ResourceLimitExceeded
from .idealops import colon, ideal_equal, intersect, substitute_zero
from .monomial import MonomialIdeal
from .polycore import (LinearChange, MonomialOrder, Poly, format_monomial,
                       random_basis)
from .rees import ReesPresentation, rees_ideal

PASS, FAIL, INCONCLUSIVE = "pass", "fail", "inconclusive"


@dataclass
class StepResult:
    i: int
    variable: str
    status: str
    lhs: List[str] = field(default_factory=list)
    rhs: List[str] = field(default_factory=list)
    certificate: Optional[str] = None
    seconds: float = 0.0
    error: Optional[str] = None

    @property
    def passed(self) -> bool:
        return self.status == PASS


@dataclass
class DseqReport:
    sequence: List[str]
    steps: List[StepResult]
    verdict: str
    mode: str = "explicit"
    seed: Optional[int] = None
    trials: List[dict] = field(default_factory=list)
    kernel: List[str] = field(default_factory=list)
    order: str = ""
    char: int = 0
    warnings: List[str] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return self.verdict == PASS

    def to_dict(self) -> dict:
        d = asdict(self)
        d["passed"] = self.passed
        return d


def _verdict(steps: Sequence[StepResult]) -> str:
    if any(s.status == FAIL for s in steps):
        return FAIL
    if any(s.status == INCONCLUSIVE for s in steps):
        return INCONCLUSIVE
    return PASS


def _step(P: ReesPresentation, i: int, order: MonomialOrder) -> StepResult:
    """Step ``i`` (1-based) of the exact test on the transformed presentation."""
    ext = P.ext
    n = P.base.nvars
    J = list(P.kernel.gens)
    xs = [ext.var(k) for k in range(n)]
    A = Ideal(ext, xs[: i - 1] + J)
    M = Ideal(ext, xs + J)
    xi = xs[i - 1]
    t0 = time.perf_counter()
    L = intersect(colon(A, xi, order), M, order)
    GA = A.groebner(order)
    ok = ideal_equal(L, A, order)
    res = StepResult(i, ext.var_names[i - 1], PASS if ok else FAIL,
                     lhs=[str(g) for g in L.groebner(order)],
                     rhs=[str(g) for g in GA])
    if not ok:
        for g in L.groebner(order):
            if not GA.contains(g):
                res.certificate = str(g)
                break
    res.seconds = time.perf_counter() - t0
    return res


def verify_certificate(P: ReesPresentation, i: int, w: Poly,
                       order: MonomialOrder | None = None) -> bool:
    """``w x_i in A``, ``w in M`` and ``w not in A`` for step ``i``."""
    ext = P.ext
    order = order or MonomialOrder.degrevlex(ext)
    n = P.base.nvars
    xs = [ext.var(k) for k in range(n)]
    J = list(P.kernel.gens)
    GA = Ideal(ext, xs[: i - 1] + J).groebner(order)
    GM = Ideal(ext, xs + J).groebner(order)
    return GA.contains(w * xs[i - 1]) and GM.contains(w) and not GA.contains(w)


def is_d_sequence_on_rees(I: Ideal, z: Sequence[Poly], order: MonomialOrder | None = None,
                          presentation: ReesPresentation | None = None) -> DseqReport:
    """Test whether the linear forms ``z`` form a d-sequence on ``R(I)``.

    A pass means all powers of ``I`` are componentwise linear.  Steps that
    hit a resource cap are marked inconclusive, and so is the verdict.
    """
    t0 = time.perf_counter()
    ctx = I.ctx
    ch = LinearChange.from_forms(list(z), ctx)
    P0 = presentation or rees_ideal(I)
    P = P0.transformed(ch)
    order = order or MonomialOrder.degrevlex(P.ext)
    warnings = []
    if ctx.char:
        warnings.append(f"prime field mode (char {ctx.char}): the verdict is heuristic")
    steps: List[StepResult] = []
    for i in range(1, ctx.x_count + 1):
        try:
            steps.append(_step(P, i, order))
        except ResourceLimitExceeded as exc:
            steps.append(StepResult(i, ctx.var_names[i - 1], INCONCLUSIVE, error=str(exc)))
    return DseqReport(
        sequence=[str(f) for f in z], steps=steps, verdict=_verdict(steps),
        kernel=[str(g) for g in P0.kernel.gens], order=order.describe(P.ext),
        char=ctx.char, warnings=warnings, seconds=time.perf_counter() - t0)


def generic_d_sequence(I: Ideal, trials: int = 3, seed: int = 0, bound: int = 100,
                       order: MonomialOrder | None = None) -> DseqReport:
    """Run the test on random bases; return the first pass or the last report.

    Trial ``t`` uses seed ``seed + t``.  A failed random trial is evidence
    against, not a disproof.
    """
    if trials < 1:
        raise ValueError("trials must be at least 1")
    ctx = I.ctx
    P = rees_ideal(I)
    log = []
    rep = None
    for t in range(trials):
        ch = random_basis(ctx, seed + t, bound)
        rep = is_d_sequence_on_rees(I, ch.forms(ctx), order, presentation=P)
        log.append({"trial": t, "seed": seed + t, "sequence": rep.sequence,
                    "verdict": rep.verdict})
        if rep.passed:
            break
    rep.mode = "generic"
    rep.seed = seed
    rep.trials = log
    if not rep.passed:
        rep.warnings.append("random trials failed; this is evidence, not a disproof")
    return rep


def monomial_step_check(L: MonomialIdeal, i: int, xs: Sequence[int] | None = None) -> bool:
    """Condition (b) at the tested variable ``x_i`` (1-based position in ``xs``).

    Every minimal generator divisible by ``x_i`` has to be ``x_i y^b`` with
    ``x_j y^b`` in ``L`` for all ``j >= i``.
    """
    xs = list(L.ctx.x_indices if xs is None else xs)
    v = xs[i - 1]
    later = xs[i - 1:]
    for u in L.gens:
        if not u[v]:
            continue
        if sum(u[k] for k in xs) != 1:
            return False
        yb = list(u)
        yb[v] = 0
        for j in later:
            m = list(yb)
            m[j] += 1
            if not L.contains(m):
                return False
    return True


def default_step_orders(ext, chain: Sequence[int] | None = None) -> List[MonomialOrder]:
    chain = list(range(ext.nvars)) if chain is None else list(chain)
    rev = list(reversed(chain))
    return [MonomialOrder.degrevlex(ext, chain), MonomialOrder.degrevlex(ext, rev),
            MonomialOrder.lex(ext, chain), MonomialOrder.lex(ext, rev)]


@dataclass
class PropStep:
    i: int
    passed: bool
    order: str = ""
    initial_ideal: List[str] = field(default_factory=list)


@dataclass
class PropReport:
    passed: bool
    steps: List[PropStep]

    def __bool__(self):
        return self.passed

    def initial_ideals(self) -> List[List[str]]:
        return [s.initial_ideal for s in self.steps]


def prop_conclusion_check(P: ReesPresentation, sequence=None, orders=None) -> PropReport:
    """Gröbner sufficient criterion for a sequence of x-variables on ``R(I)``.

    ``sequence`` lists the x-variables (names or indices) in testing order,
    by default ``x_1..x_n``.
    ``orders`` is one order (reused for every step), a list with one entry
    per step, or a list of lists of candidates per step.  The default tries
    degrevlex and lex on the declaration chain and its reverse.  A failure
    is inconclusive for the d-sequence property.
    """
    ext = P.ext
    n = P.base.nvars
    seq = list(range(n)) if sequence is None else [ext.index(v) for v in sequence]
    if sorted(seq) != list(range(n)):
        raise ValueError("sequence must list every x-variable once")
    if orders is None:
        per_step = [default_step_orders(ext)] * n
    elif isinstance(orders, MonomialOrder):
        per_step = [[orders]] * n
    else:
        orders = list(orders)
        if len(orders) != n:
            raise ValueError(f"need one order (or candidate list) per step, got {len(orders)}")
        per_step = [[o] if isinstance(o, MonomialOrder) else list(o) for o in orders]
    names = ext.var_names
    steps = []
    for i in range(1, n + 1):
        Ji = substitute_zero(P.kernel, seq[: i - 1])
        step = PropStep(i, False)
        for o in per_step[i - 1]:
            if Ji.is_zero():
                ini = MonomialIdeal(ext, [])
            else:
                ini = Ji.groebner(o).initial_ideal()
            ok = monomial_step_check(ini, i, seq)
            if not step.initial_ideal or ok:
                step.order = o.describe(ext)
                step.initial_ideal = [format_monomial(u, names) for u in ini.gens]
            if ok:
                step.passed = True
                break
        steps.append(step)
    return PropReport(all(s.passed for s in steps), steps)
