"""Monomial ideals stored by their minimal generating set."""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence, Tuple

from .polycore import Monomial, Poly, RingCtx, format_monomial


def divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def mono_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x if x > y else y for x, y in zip(a, b))


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def minimalize(monos: Iterable[Monomial]) -> Tuple[Monomial, ...]:
    """Divisibility antichain of ``monos``, sorted by degree then lexicographically."""
    cands = sorted(set(map(tuple, monos)), key=lambda m: (sum(m), m))
    kept: list = []
    for m in cands:
        if not any(divides(g, m) for g in kept):
            kept.append(m)
    return tuple(kept)


class MonomialIdeal:
    """Monomial ideal represented by its minimal generators ``G(L)``."""

    __slots__ = ("ctx", "gens")

    def __init__(self, ctx: RingCtx, gens: Iterable[Sequence[int]] = ()):
        gens = [tuple(g) for g in gens]
        for g in gens:
            if len(g) != ctx.nvars or any(e < 0 for e in g):
                raise ValueError(f"bad exponent vector {g}")
        self.ctx = ctx
        self.gens = minimalize(gens)

    @classmethod
    def from_polys(cls, ctx: RingCtx, polys: Iterable[Poly]) -> "MonomialIdeal":
        monos = []
        for f in polys:
            if not f:
                continue
            if not f.is_monomial():
                raise ValueError(f"{f} is not a monomial")
            monos.extend(f.monomials())
        return cls(ctx, monos)

    @classmethod
    def parse(cls, ctx: RingCtx, texts: Iterable[str]) -> "MonomialIdeal":
        from .polycore import parse_poly
        return cls.from_polys(ctx, (parse_poly(t, ctx) for t in texts))

    def __iter__(self) -> Iterator[Monomial]:
        return iter(self.gens)

    def __len__(self):
        return len(self.gens)

    def __eq__(self, other):
        if not isinstance(other, MonomialIdeal):
            return NotImplemented
        return self.ctx == other.ctx and set(self.gens) == set(other.gens)

    def __hash__(self):
        return hash((self.ctx.var_names, frozenset(self.gens)))

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return any(not any(g) for g in self.gens)

    def contains(self, m: Sequence[int]) -> bool:
        m = tuple(m)
        return any(divides(g, m) for g in self.gens)

    __contains__ = contains

    def degrees(self) -> Tuple[int, ...]:
        return tuple(sorted({sum(g) for g in self.gens}))

    def polys(self) -> Tuple[Poly, ...]:
        return tuple(self.ctx.monomial(g) for g in self.gens)

    def to_ideal(self):
        from .groebner import Ideal
        return Ideal(self.ctx, self.polys())

    def __add__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return MonomialIdeal(self.ctx, self.gens + other.gens)

    def __mul__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return MonomialIdeal(self.ctx, (mono_mul(a, b) for a in self.gens for b in other.gens))

    def __pow__(self, k: int) -> "MonomialIdeal":
        if k < 1:
            raise ValueError("power must be positive")
        out = self
        for _ in range(k - 1):
            out = out * self
        return out

    def intersect(self, other: "MonomialIdeal") -> "MonomialIdeal":
        return MonomialIdeal(self.ctx, (mono_lcm(a, b) for a in self.gens for b in other.gens))

    def colon(self, m: Sequence[int]) -> "MonomialIdeal":
        m = tuple(m)
        return MonomialIdeal(self.ctx, (tuple(max(a - b, 0) for a, b in zip(g, m))
                                        for g in self.gens))

    def set_zero(self, indices: Iterable[int]) -> "MonomialIdeal":
        idx = list(indices)
        return MonomialIdeal(self.ctx, (g for g in self.gens if not any(g[i] for i in idx)))

    def component(self, j: int) -> "MonomialIdeal":
        """The ideal generated by all degree-``j`` monomials of this ideal."""
        n = self.ctx.nvars
        out = set()
        for g in self.gens:
            d = sum(g)
            if d > j:
                continue
            for extra in _monomials_of_degree(n, j - d):
                out.add(mono_mul(g, extra))
        return MonomialIdeal(self.ctx, out)

    def __str__(self):
        names = self.ctx.var_names
        return "(" + ", ".join(format_monomial(g, names) for g in self.gens) + ")"

    def __repr__(self):
        return f"MonomialIdeal{self}"


def _monomials_of_degree(n: int, d: int):
    if n == 0:
        if d == 0:
            yield ()
        return
    if n == 1:
        yield (d,)
        return
    for a in range(d, -1, -1):
        for rest in _monomials_of_degree(n - 1, d - a):
            yield (a,) + rest
