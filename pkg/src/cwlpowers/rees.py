"""Presentation ideals of Rees algebras and the x-condition."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence, Tuple

from .groebner import Ideal
from .idealops import eliminate, ideal_equal
from .monomial import MonomialIdeal
from .polycore import LinearChange, Monomial, MonomialOrder, Poly, RingCtx, apply_change


@dataclass(frozen=True)
class ReesPresentation:
    """``R(I) = T/J`` with ``T = S[y_1..y_m]`` and ``y_j -> f_j``.

    ``ext`` grades ``y_j`` by ``deg f_j`` so that ``kernel`` is homogeneous
    whenever the ``f_j`` are.
    """

    base: RingCtx
    ext: RingCtx
    images: Tuple[Poly, ...]
    kernel: Ideal

    @property
    def x_indices(self) -> range:
        return range(self.base.nvars)

    @property
    def y_indices(self) -> range:
        return range(self.base.nvars, self.ext.nvars)

    def lift(self, f: Poly) -> Poly:
        """An element of ``S`` viewed in ``T``."""
        return f.change_ring(self.ext)

    def substitution_defect(self, gens: Sequence[Poly] | None = None) -> list:
        """Generators that do not vanish under ``y_j -> w f_j`` (empty when sound)."""
        gens = self.kernel.gens if gens is None else gens
        w_name = self.ext.fresh_name("w")
        big = self.ext.extend([w_name], weights=[0])
        w = big.var(self.ext.nvars)
        sub = {j: w * self.lift(f).change_ring(big)
               for j, f in zip(self.y_indices, self.images)}
        bad = []
        for g in gens:
            if g.change_ring(big).substitute(sub):
                bad.append(g)
        return bad

    def is_bigraded(self) -> bool:
        xs, ys = list(self.x_indices), list(self.y_indices)
        for g in self.kernel.gens:
            if len({sum(m[i] for i in ys) for m in g.monomials()}) > 1:
                return False
            if not g.is_homogeneous():
                return False
        degs = {f.weighted_degree() for f in self.images}
        if len(degs) == 1:
            for g in self.kernel.gens:
                if len({sum(m[i] for i in xs) for m in g.monomials()}) > 1:
                    return False
        return True

    def transformed(self, ch: LinearChange) -> "ReesPresentation":
        """Presentation of ``phi(I)`` where ``phi`` sends ``z_i`` to ``x_i``.

        The kernel of ``y_j -> phi(f_j)`` is ``phi(J)``, so no new
        elimination is needed.
        """
        images = tuple(apply_change(f, ch) for f in self.images)
        sub_ext = {k: g.change_ring(self.ext) for k, g in ch.substitution(self.base).items()}
        gens = [g.substitute(sub_ext) for g in self.kernel.gens]
        return ReesPresentation(self.base, self.ext, images, Ideal(self.ext, gens))

    def kernel_strings(self) -> list:
        return [str(g) for g in self.kernel.gens]

    def minimal_kernel_gens(self) -> list:
        """Drop generators lying in the ideal of the others (fine since J is graded)."""
        gens = sorted(self.kernel.gens, key=lambda g: (g.total_degree(), len(g)), reverse=True)
        k = 0
        while k < len(gens):
            rest = gens[:k] + gens[k + 1:]
            if rest and Ideal(self.ext, rest).groebner().contains(gens[k]):
                gens = rest
            else:
                k += 1
        return sorted(gens, key=lambda g: (g.total_degree(), str(g)))


def rees_ring(base: RingCtx, images: Sequence[Poly], y_prefix: str = "y") -> RingCtx:
    m = len(images)
    names = []
    for j in range(1, m + 1):
        nm = f"{y_prefix}{j}"
        while nm in base.var_names or nm in names:
            nm = "_" + nm
        names.append(nm)
    degs = [max(f.weighted_degree(), 1) for f in images]
    return RingCtx(base.var_names + tuple(names), base.nvars, base.char,
                   base.weights + tuple(degs))


def rees_ideal(I: Ideal, y_prefix: str = "y") -> ReesPresentation:
    """Presentation ideal of ``R(I)``.

    The kernel is ``(y_j - w f_j : j)`` with ``w`` eliminated; ``w`` has
    degree 0 so the input stays homogeneous.
    """
    images = tuple(I.gens)
    if not images:
        raise ValueError("the Rees algebra needs at least one generator")
    base = I.ctx
    ext = rees_ring(base, images, y_prefix)
    w_name = ext.fresh_name("w")
    big = ext.extend([w_name], weights=[0])
    w = big.var(ext.nvars)
    gens = [big.var(base.nvars + j) - w * f.change_ring(big) for j, f in enumerate(images)]
    inner = MonomialOrder.degrevlex(big)
    K = eliminate(Ideal(big, gens), [ext.nvars], inner)
    kernel = Ideal(ext, [g.change_ring(ext, {i: i for i in range(ext.nvars)}) for g in K.gens])
    return ReesPresentation(base, ext, images, kernel)


@dataclass(frozen=True)
class XConditionResult:
    passed: bool
    violations: Tuple[Monomial, ...]
    initial_ideal: MonomialIdeal

    def __bool__(self):
        return self.passed


def x_condition(P: ReesPresentation) -> XConditionResult:
    """Check that ``in(J)`` under lex ``x_1 > ... > x_n > y_1 > ... > y_m``
    has all minimal generators of x-degree at most one."""
    order = MonomialOrder.lex(P.ext)
    G = P.kernel.groebner(order)
    ini = G.initial_ideal()
    xs = list(P.x_indices)
    bad = tuple(u for u in ini.gens if sum(u[i] for i in xs) > 1)
    return XConditionResult(not bad, bad, ini)


def star_binomials(G, P: ReesPresentation) -> list:
    """``x_i y_i - (prod of pendant t_k at i) y_{n+1}`` for ``i = 1..n``."""
    from .graphs import pendant_map
    n = G.base_size
    ext = P.ext
    pend = pendant_map(G)
    out = []
    for i in range(1, n + 1):
        t = ext.one()
        for k in pend[i]:
            t = t * ext.var(k - 1)
        y_i, y_last = ext.var(G.n + i - 1), ext.var(G.n + n)
        out.append(ext.var(i - 1) * y_i - t * y_last)
    return out


def star_rees_check(G) -> bool:
    """Compare the Rees kernel of a star graph's cover ideal with the closed form."""
    from .graphs import star_cover_list
    gens = star_cover_list(G)
    ctx = G.ring()
    P = rees_ideal(Ideal(ctx, [ctx.monomial(u) for u in gens]))
    L = Ideal(P.ext, star_binomials(G, P))
    return ideal_equal(P.kernel, L)
