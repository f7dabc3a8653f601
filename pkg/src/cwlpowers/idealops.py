"""Ideal algebra: sums, products, powers, intersections, colons and elimination.

Ideals that contain some variables are split as ``(V) + I'`` with ``I'`` free
of ``V``; intersections and colons of two such ideals are then computed on the
``V``-free parts, which is the same as working in ``T/(V)``.
"""

from __future__ import annotations

from typing import Iterable, Sequence, Tuple

from .groebner import Ideal, buchberger
from .monomial import MonomialIdeal, minimalize
from .polycore import MonomialOrder, Poly, RingCtx

__all__ = [
    "MonomialIdeal", "minimalize", "ideal_sum", "ideal_product", "ideal_power",
    "intersect", "colon", "eliminate", "ideal_equal", "is_subideal",
    "split_variables", "substitute_zero",
]


def _check_same(I: Ideal, J: Ideal):
    if I.ctx != J.ctx:
        raise ValueError("ideals live in different rings")


def _maybe_monomial(ctx: RingCtx, gens: Sequence[Poly]) -> Ideal:
    if gens and all(g.is_monomial() for g in gens):
        return MonomialIdeal.from_polys(ctx, gens).to_ideal()
    return Ideal(ctx, gens)


def ideal_sum(I: Ideal, J: Ideal) -> Ideal:
    _check_same(I, J)
    return _maybe_monomial(I.ctx, I.gens + J.gens)


def ideal_product(I: Ideal, J: Ideal) -> Ideal:
    _check_same(I, J)
    return _maybe_monomial(I.ctx, [f * g for f in I.gens for g in J.gens])


def ideal_power(I: Ideal, k: int) -> Ideal:
    if not isinstance(k, int) or k < 1:
        raise ValueError("power must be a positive integer")
    out = I
    for _ in range(k - 1):
        out = ideal_product(out, I)
    return out


def substitute_zero(I: Ideal, indices: Iterable[int]) -> Ideal:
    """Image of ``I`` in ``T/(x_i : i in indices)``, written in the same ring."""
    idx = list(indices)
    return Ideal(I.ctx, [g.set_zero(idx) for g in I.gens])


def split_variables(I: Ideal) -> Tuple[frozenset, Ideal]:
    """Return ``(V, I')`` with ``I = (x_v : v in V) + I'`` and ``I'`` free of ``V``."""
    V: set = set()
    gens = list(I.gens)
    while True:
        new = {g.variable_index() for g in gens if g.variable_index() is not None} - V
        if not new:
            break
        V |= new
        gens = [g.set_zero(V) for g in gens if g.variable_index() not in V]
        gens = [g for g in gens if g]
    return frozenset(V), Ideal(I.ctx, gens)


def _with_vars(V: Iterable[int], rest: Ideal) -> Ideal:
    ctx = rest.ctx
    return Ideal(ctx, [ctx.var(v) for v in sorted(V)] + list(rest.gens))


def _order_for(ctx: RingCtx, order: MonomialOrder | None) -> MonomialOrder:
    return order or MonomialOrder.degrevlex(ctx)


def _is_unit(I: Ideal, order=None) -> bool:
    return any(g.is_constant() for g in I.gens) or I.groebner(order).is_unit()


def is_subideal(I: Ideal, J: Ideal, order: MonomialOrder | None = None) -> bool:
    """True iff ``I`` is contained in ``J``."""
    _check_same(I, J)
    order = _order_for(I.ctx, order)
    G = J.groebner(order)
    return all(G.contains(g) for g in I.gens)


def ideal_equal(I: Ideal, J: Ideal, order: MonomialOrder | None = None) -> bool:
    """True iff the reduced Gröbner bases coincide."""
    _check_same(I, J)
    order = _order_for(I.ctx, order)
    if I.is_zero() or J.is_zero():
        return I.groebner(order).elements == J.groebner(order).elements
    return I.groebner(order).same_as(J.groebner(order))


def _aux_ring(ctx: RingCtx) -> Tuple[RingCtx, int]:
    name = ctx.fresh_name("w")
    return ctx.extend([name], weights=[0]), ctx.nvars


def eliminate(I: Ideal, variables: Iterable, order: MonomialOrder | None = None) -> Ideal:
    """Generators of ``I`` intersected with the subring without ``variables``.

    Computed from the Gröbner basis under the block order that eliminates
    ``variables`` first and then uses ``order`` (default degrevlex).
    """
    ctx = I.ctx
    elim = [ctx.index(v) for v in variables]
    inner = _order_for(ctx, order)
    if inner.kind == "elim":
        raise ValueError("inner order must be lex or degrevlex")
    eo = MonomialOrder.elimination(ctx, elim, inner)
    G = I.groebner(eo)
    keep = [g for g in G.elements if g.degree_in(elim) <= 0]
    return Ideal(ctx, keep)


def _intersect_generic(I: Ideal, J: Ideal, order: MonomialOrder) -> Ideal:
    ctx = I.ctx
    ext, w = _aux_ring(ctx)
    W = ext.var(w)
    one = ext.one()
    gens = [W * g.change_ring(ext) for g in I.gens]
    gens += [(one - W) * g.change_ring(ext) for g in J.gens]
    if order.kind == "elim":
        order = MonomialOrder.degrevlex(ctx)
    K = eliminate(Ideal(ext, gens), [w], order.extended(1))
    back = {i: i for i in range(ctx.nvars)}
    return Ideal(ctx, [g.change_ring(ctx, back) for g in K.gens])


def intersect(I: Ideal, J: Ideal, order: MonomialOrder | None = None) -> Ideal:
    """Intersection of two ideals.

    Monomial ideals use the lcm rule; otherwise ``w*I + (1-w)*J`` is
    formed with a fresh variable ``w`` of degree 0 and ``w`` is eliminated.
    """
    _check_same(I, J)
    ctx = I.ctx
    order = _order_for(ctx, order)
    if I.is_zero() or J.is_zero():
        return Ideal(ctx, [])
    if I.is_monomial() and J.is_monomial():
        return I.monomial_ideal().intersect(J.monomial_ideal()).to_ideal()
    VI, I2 = split_variables(I)
    VJ, J2 = split_variables(J)
    common = VI & VJ
    if common:
        I3 = _with_vars(VI - common, I2)
        J3 = _with_vars(VJ - common, J2)
        return _with_vars(common, intersect(I3, J3, order))
    if _is_unit(I, order):
        return J
    if _is_unit(J, order):
        return I
    if is_subideal(I, J, order):
        return I
    if is_subideal(J, I, order):
        return J
    return _intersect_generic(I, J, order)


def colon(I: Ideal, f: Poly, order: MonomialOrder | None = None) -> Ideal:
    """The ideal ``I : f``.

    Computed as ``(I ∩ (f)) / f``; for a monomial ideal and a monomial ``f``
    the result is read off from the generators.
    """
    ctx = I.ctx
    if f.ctx != ctx:
        raise ValueError("polynomial from a different ring")
    if not f:
        raise ZeroDivisionError("colon by the zero polynomial")
    order = _order_for(ctx, order)
    if f.is_constant():
        return I
    if I.is_zero():
        return I
    if I.is_monomial() and f.is_monomial():
        (m,) = f.monomials()
        return I.monomial_ideal().colon(m).to_ideal()
    V, I2 = split_variables(I)
    if V:
        f2 = f.set_zero(V)
        if not f2:
            return Ideal(ctx, [ctx.one()])
        return _with_vars(V, colon(I2, f2, order))
    G = I.groebner(order)
    if G.contains(f):
        return Ideal(ctx, [ctx.one()])
    K = intersect(I, Ideal(ctx, [f]), order)
    quotients = []
    for g in K.gens:
        try:
            quotients.append(g.divide_exact(f))
        except ArithmeticError as exc:
            raise ArithmeticError(f"internal error: {g} not divisible by {f}") from exc
    return Ideal(ctx, quotients)
