"""Buchberger's algorithm, normal forms and reduced Gröbner bases.

Internally a monomial is one Python integer laid out, from the most
significant bits down, as

    [order row values] [weighted degree] [exponent fields]

Every supported order is a non-negative weight matrix, so this encoding is
additive: the product of two monomials is the sum of their codes and integer
comparison is the monomial order.  Each exponent field keeps a zero guard bit,
which makes divisibility a single subtraction (``((b | H) - a) & H == H``).

Coefficients are fraction-free integers with content removed in
characteristic 0 and residues in characteristic ``p``.
"""

from __future__ import annotations

import contextlib
import contextvars
import os
import threading
import time
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .monomial import MonomialIdeal
from .polycore import MonomialOrder, Poly, RingCtx, format_poly

EXP_BITS = 16
DEG_BITS = 32
ROW_BITS = 32


class ResourceLimitExceeded(RuntimeError):
    """A Gröbner computation hit its pair or time cap."""

    def __init__(self, what: str, limit):
        super().__init__(f"Gröbner resource cap exceeded: {what} > {limit}")
        self.what = what
        self.limit = limit


@dataclass(frozen=True)
class ResourceLimits:
    max_pairs: int = 10**6
    max_seconds: float = 600.0

    @classmethod
    def from_env(cls) -> "ResourceLimits":
        return cls(int(os.environ.get("CWLPOWERS_MAX_PAIRS", 10**6)),
                   float(os.environ.get("CWLPOWERS_MAX_SECONDS", 600.0)))


_limits: contextvars.ContextVar[Optional[ResourceLimits]] = contextvars.ContextVar(
    "cwlpowers_limits", default=None)


def current_limits() -> ResourceLimits:
    return _limits.get() or ResourceLimits.from_env()


@contextlib.contextmanager
def resource_limits(max_pairs: int | None = None, max_seconds: float | None = None):
    """Temporarily override the Gröbner caps for the current context."""
    base = current_limits()
    new = ResourceLimits(max_pairs if max_pairs is not None else base.max_pairs,
                         max_seconds if max_seconds is not None else base.max_seconds)
    token = _limits.set(new)
    try:
        yield new
    finally:
        _limits.reset(token)


class _Encoder:
    """Packs exponent vectors of a fixed ring/order into integers."""

    def __init__(self, order: MonomialOrder, weights: Sequence[int]):
        n = order.nvars
        rows = order.rows
        self.n = n
        self.low_bits = n * EXP_BITS
        self.deg_shift = self.low_bits
        self.key_shift = self.low_bits + DEG_BITS
        nrows = len(rows)
        units = []
        for i in range(n):
            key = 0
            for r in rows:
                key = (key << ROW_BITS) | r[i]
            units.append((key << self.key_shift) | (weights[i] << self.deg_shift)
                         | (1 << (EXP_BITS * i)))
        self.units = units
        self.guard = sum(1 << (EXP_BITS * i + EXP_BITS - 1) for i in range(n))
        self.emask = (1 << EXP_BITS) - 1
        self.dmask = (1 << DEG_BITS) - 1
        self.max_exp = 1 << (EXP_BITS - 1)
        self.nrows = nrows

    def encode(self, e: Sequence[int]) -> int:
        code = 0
        for a, u in zip(e, self.units):
            if a:
                if a >= self.max_exp:
                    raise OverflowError("exponent too large for the packed encoding")
                code += a * u
        return code

    def decode(self, code: int) -> Tuple[int, ...]:
        m, b = self.emask, EXP_BITS
        return tuple((code >> (b * i)) & m for i in range(self.n))

    def degree(self, code: int) -> int:
        return (code >> self.deg_shift) & self.dmask


class _Engine:
    """One Gröbner computation context: a ring, an order and the caps."""

    def __init__(self, ctx: RingCtx, order: MonomialOrder, limits: ResourceLimits | None = None):
        if order.nvars != ctx.nvars:
            raise ValueError("order and ring have different numbers of variables")
        self.ctx = ctx
        self.order = order
        self.p = ctx.char
        self.enc = _Encoder(order, ctx.weights)
        self.limits = limits or current_limits()
        self.pairs_done = 0
        self.t0 = time.monotonic()

    # conversion
    def from_poly(self, f: Poly) -> Dict[int, int]:
        enc = self.enc.encode
        if self.p:
            d = {enc(m): int(c) % self.p for m, c in f.items()}
        else:
            den = lcm(*(c.denominator for _, c in f.items())) if len(f) else 1
            d = {enc(m): int(c * den) for m, c in f.items()}
        return self.normalize({k: v for k, v in d.items() if v})

    def to_poly(self, d: Dict[int, int], monic: bool = True) -> Poly:
        dec = self.enc.decode
        if not d:
            return self.ctx.zero()
        if self.p:
            inv = pow(d[max(d)], -1, self.p) if monic else 1
            return Poly(self.ctx, {dec(k): v * inv % self.p for k, v in d.items()})
        lc = d[max(d)] if monic else 1
        return Poly(self.ctx, {dec(k): Fraction(v, lc) for k, v in d.items()})

    def normalize(self, d: Dict[int, int]) -> Dict[int, int]:
        if not d:
            return d
        lc = d[max(d)]
        if self.p:
            if lc != 1:
                inv = pow(lc, -1, self.p)
                d = {k: v * inv % self.p for k, v in d.items()}
            return d
        g = gcd(*d.values())
        if lc < 0:
            g = -g
        if g != 1:
            d = {k: v // g for k, v in d.items()}
        return d

    def sugar(self, d: Dict[int, int]) -> int:
        deg = self.enc.degree
        return max(deg(k) for k in d)

    def _check_limits(self):
        lim = self.limits
        if self.pairs_done > lim.max_pairs:
            raise ResourceLimitExceeded("pair reductions", lim.max_pairs)
        if time.monotonic() - self.t0 > lim.max_seconds:
            raise ResourceLimitExceeded("seconds", lim.max_seconds)

    # reduction
    def reduce(self, f: Dict[int, int], reducers: Sequence[Tuple[int, Dict[int, int]]],
               full: bool = True, track_scale: bool = False):
        """Reduce ``f`` by ``reducers`` (pairs ``(lm, poly)``, first match wins).

        Returns the remainder ``r`` (a multiple ``s * NF(f)``); with
        ``track_scale`` returns ``(r, s)``.
        """
        H = self.enc.guard
        p = self.p
        f = dict(f)
        tail: List[Tuple[int, int, int]] = []
        scale = 1
        steps = 0
        while f:
            lm = max(f)
            c = f[lm]
            lh = lm | H
            for glm, g in reducers:
                if (lh - glm) & H == H:
                    break
            else:
                if not full:
                    tail.append((lm, c, scale))
                    del f[lm]
                    for k, v in f.items():
                        tail.append((k, v, scale))
                    f = {}
                    break
                tail.append((lm, c, scale))
                del f[lm]
                continue
            m = lm - glm
            if p:
                for k, v in g.items():
                    kk = k + m
                    nv = (f.get(kk, 0) - c * v) % p
                    if nv:
                        f[kk] = nv
                    else:
                        f.pop(kk, None)
            else:
                gc = g[glm]
                d = gcd(c, gc)
                a, b = gc // d, c // d
                if a < 0:
                    a, b = -a, -b
                if a != 1:
                    f = {k: a * v for k, v in f.items()}
                    scale *= a
                get = f.get
                for k, v in g.items():
                    kk = k + m
                    nv = get(kk, 0) - b * v
                    if nv:
                        f[kk] = nv
                    else:
                        del f[kk]
                steps += 1
                if not track_scale and not tail and steps % 8 == 0 and f:
                    cg = gcd(*f.values())
                    if cg > 1:
                        f = {k: v // cg for k, v in f.items()}
        if p:
            r = {k: v for k, v, _ in tail}
            return (r, 1) if track_scale else r
        r = {k: v * (scale // s) for k, v, s in tail}
        return (r, scale) if track_scale else r

    def spoly(self, f: Dict[int, int], lf: int, g: Dict[int, int], lg: int, L: int):
        mf, mg = L - lf, L - lg
        if self.p:
            s = {k + mf: v for k, v in f.items()}
            for k, v in g.items():
                kk = k + mg
                nv = (s.get(kk, 0) - v) % self.p
                if nv:
                    s[kk] = nv
                else:
                    s.pop(kk, None)
            return s
        cf, cg = f[lf], g[lg]
        d = gcd(cf, cg)
        a, b = cg // d, cf // d
        s = {k + mf: a * v for k, v in f.items()}
        for k, v in g.items():
            kk = k + mg
            nv = s.get(kk, 0) - b * v
            if nv:
                s[kk] = nv
            else:
                del s[kk]
        return s

    # Buchberger
    def _presubstitute(self, polys: List[Dict[int, int]]) -> List[Dict[int, int]]:
        """Set variables that are generators to zero in the other generators."""
        enc = self.enc
        units = set()
        unit_codes = set(enc.units)
        while True:
            new = {next(iter(d)) for d in polys if len(d) == 1 and next(iter(d)) in unit_codes}
            new -= units
            if not new:
                break
            units |= new
            H = enc.guard
            out = []
            for d in polys:
                if len(d) == 1 and next(iter(d)) in units:
                    out.append(d)
                    continue
                d2 = {k: v for k, v in d.items()
                      if not any(((k | H) - u) & H == H for u in units)}
                if d2:
                    out.append(self.normalize(d2))
            polys = out
        return polys

    def buchberger(self, gens: Iterable[Dict[int, int]]) -> List[Dict[int, int]]:
        enc = self.enc
        H = enc.guard
        deg = enc.degree
        polys = [g for g in gens if g]
        if not polys:
            return []
        for g in polys:
            if len(g) == 1 and next(iter(g)) == 0:
                return [{0: 1}]
        polys = self._presubstitute(polys)
        uniq = {}
        for g in polys:
            uniq.setdefault(tuple(sorted(g.items())), g)
        polys = sorted(uniq.values(), key=lambda d: (self.sugar(d), max(d), len(d)))

        basis_poly: List[Dict[int, int]] = []
        basis_lm: List[int] = []
        basis_exp: List[Tuple[int, ...]] = []
        basis_sugar: List[int] = []
        active: List[int] = []
        pairs: List[Tuple[int, int, int, int]] = []

        def reducers():
            return [(basis_lm[i], basis_poly[i]) for i in active]

        def add(h: Dict[int, int], sugar: int):
            nonlocal active, pairs
            idx = len(basis_poly)
            lh = max(h)
            eh = enc.decode(lh)
            basis_poly.append(h)
            basis_lm.append(lh)
            basis_exp.append(eh)
            basis_sugar.append(sugar)
            dh = deg(lh)
            # Gebauer-Moeller update
            cand = []
            for g in active:
                eg = basis_exp[g]
                le = tuple(a if a > b else b for a, b in zip(eg, eh))
                L = enc.encode(le)
                coprime = not any(a and b for a, b in zip(eg, eh))
                dl = deg(L)
                s = max(basis_sugar[g] + dl - deg(basis_lm[g]), sugar + dl - dh)
                cand.append((g, L, coprime, s))
            kept = []
            for pos, (g, L, coprime, s) in enumerate(cand):
                if coprime:
                    kept.append((g, L, coprime, s))
                    continue
                LH = L | H
                dominated = False
                for (g2, L2, _, _) in cand[pos + 1:]:
                    if (LH - L2) & H == H:
                        dominated = True
                        break
                if not dominated:
                    for (g2, L2, _, _) in kept:
                        if (LH - L2) & H == H:
                            dominated = True
                            break
                if not dominated:
                    kept.append((g, L, coprime, s))
            new_pairs = [(s, g, idx, L) for (g, L, coprime, s) in kept if not coprime]
            still = []
            for pr in pairs:
                _, i, j, L = pr
                if ((L | H) - lh) & H == H:
                    ei, ej = basis_exp[i], basis_exp[j]
                    Li = enc.encode(tuple(a if a > b else b for a, b in zip(ei, eh)))
                    Lj = enc.encode(tuple(a if a > b else b for a, b in zip(ej, eh)))
                    if Li != L and Lj != L:
                        continue
                still.append(pr)
            pairs = still + new_pairs
            active = [g for g in active if not ((basis_lm[g] | H) - lh) & H == H] + [idx]

        for g in polys:
            h = self.reduce(g, reducers())
            if h:
                h = self.normalize(h)
                add(h, self.sugar(h))
                if max(h) == 0:
                    return [{0: 1}]

        while pairs:
            best = min(range(len(pairs)), key=lambda t: pairs[t][:3])
            s_deg, i, j, L = pairs.pop(best)
            self.pairs_done += 1
            self._check_limits()
            sp = self.spoly(basis_poly[i], basis_lm[i], basis_poly[j], basis_lm[j], L)
            if not sp:
                continue
            h = self.reduce(sp, reducers())
            if h:
                h = self.normalize(h)
                if max(h) == 0:
                    return [{0: 1}]
                add(h, max(s_deg, self.sugar(h)))

        # reduced basis
        final = sorted(active, key=lambda i: basis_lm[i])
        out = []
        for i in final:
            others = [(basis_lm[j], basis_poly[j]) for j in final if j != i]
            red = self.reduce(basis_poly[i], others)
            out.append(self.normalize(red))
        out.sort(key=max, reverse=True)
        return out


class GroebnerBasis:
    """Reduced Gröbner basis of an ideal for one monomial order.

    ``elements`` are monic and sorted by decreasing leading monomial.
    """

    def __init__(self, ctx: RingCtx, order: MonomialOrder, elements: Sequence[Poly],
                 _engine: _Engine | None = None, _encoded=None):
        self.ctx = ctx
        self.order = order
        self.elements = tuple(elements)
        self._engine = _engine
        self._encoded = _encoded
        self._lock = threading.Lock()

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __repr__(self):
        return f"GroebnerBasis([{', '.join(map(str, self.elements))}])"

    def _prepare(self):
        with self._lock:
            if self._engine is None:
                self._engine = _Engine(self.ctx, self.order, ResourceLimits(10**18, 1e18))
            if self._encoded is None:
                self._encoded = [self._engine.from_poly(g) for g in self.elements]
            return self._engine, [(max(d), d) for d in self._encoded]

    def is_unit(self) -> bool:
        return any(g.is_constant() for g in self.elements)

    def leading_monomials(self):
        return tuple(g.leading_monomial(self.order) for g in self.elements)

    def normal_form(self, f: Poly) -> Poly:
        if f.ctx != self.ctx:
            raise ValueError("polynomial and basis live in different rings")
        if not f:
            return f
        eng, red = self._prepare()
        d = eng.from_poly(f)
        # from_poly divided by the content; recover that factor exactly
        probe = next(iter(d))
        orig = f.coeff(eng.enc.decode(probe))
        r, s = eng.reduce(d, red, track_scale=True)
        if not r:
            return self.ctx.zero()
        if eng.p:
            unit = orig * pow(d[probe], -1, eng.p) % eng.p
            return Poly(self.ctx, {eng.enc.decode(k): v * unit % eng.p for k, v in r.items()})
        unit = Fraction(orig) / d[probe] / Fraction(s)
        return Poly(self.ctx, {eng.enc.decode(k): unit * v for k, v in r.items()})

    def reduces_to_zero(self, f: Poly) -> bool:
        if not f:
            return True
        eng, red = self._prepare()
        return not eng.reduce(eng.from_poly(f), red)

    def contains(self, f: Poly) -> bool:
        return self.reduces_to_zero(f)

    __contains__ = contains

    def initial_ideal(self) -> MonomialIdeal:
        return MonomialIdeal(self.ctx, self.leading_monomials())

    def same_as(self, other: "GroebnerBasis") -> bool:
        return set(self.elements) == set(other.elements)


class Ideal:
    """An ideal given by generators, with reduced Gröbner bases cached per order."""

    def __init__(self, ctx: RingCtx, gens: Iterable[Poly] = ()):
        gl = []
        for g in gens:
            if g.ctx != ctx:
                raise ValueError("generator from a different ring")
            if g:
                gl.append(g)
        self.ctx = ctx
        self.gens: Tuple[Poly, ...] = tuple(gl)
        self._cache: Dict[MonomialOrder, GroebnerBasis] = {}
        self._lock = threading.Lock()

    @classmethod
    def parse(cls, ctx: RingCtx, texts: Iterable[str]) -> "Ideal":
        from .polycore import parse_poly
        return cls(ctx, [parse_poly(t, ctx) for t in texts])

    def default_order(self) -> MonomialOrder:
        return MonomialOrder.degrevlex(self.ctx)

    def groebner(self, order: MonomialOrder | None = None) -> GroebnerBasis:
        order = order or self.default_order()
        with self._lock:
            gb = self._cache.get(order)
        if gb is not None:
            return gb
        gb = buchberger(self, order)
        return gb

    def cached_orders(self):
        with self._lock:
            return tuple(self._cache)

    def _store(self, order, gb):
        with self._lock:
            self._cache.setdefault(order, gb)
            return self._cache[order]

    def contains(self, f: Poly, order: MonomialOrder | None = None) -> bool:
        return self.groebner(order).contains(f)

    __contains__ = contains

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return self.groebner().is_unit()

    def is_monomial(self) -> bool:
        return all(g.is_monomial() for g in self.gens)

    def monomial_ideal(self) -> MonomialIdeal:
        return MonomialIdeal.from_polys(self.ctx, self.gens)

    def with_ctx(self, ctx: RingCtx, index_map=None) -> "Ideal":
        return Ideal(ctx, [g.change_ring(ctx, index_map) for g in self.gens])

    def __len__(self):
        return len(self.gens)

    def __iter__(self):
        return iter(self.gens)

    def __str__(self):
        return "(" + ", ".join(format_poly(g) for g in self.gens) + ")"

    def __repr__(self):
        return f"Ideal{self}"


def buchberger(I: Ideal, order: MonomialOrder | None = None,
               limits: ResourceLimits | None = None) -> GroebnerBasis:
    """Reduced monic Gröbner basis of ``I``; cached on ``I``.

    Uses the normal selection strategy (smallest sugar degree, then index
    pair) with the Gebauer-Möller product and chain criteria.  Raises
    :class:`ResourceLimitExceeded` when a cap is hit.
    """
    order = order or I.default_order()
    with I._lock:
        cached = I._cache.get(order)
    if cached is not None:
        return cached
    eng = _Engine(I.ctx, order, limits)
    enc_gens = [eng.from_poly(g) for g in I.gens]
    res = eng.buchberger(enc_gens)
    elements = [eng.to_poly(d) for d in res]
    gb = GroebnerBasis(I.ctx, order, elements, _engine=eng, _encoded=res)
    return I._store(order, gb)


def normal_form(f: Poly, G: GroebnerBasis) -> Poly:
    """Remainder of ``f`` on division by ``G``."""
    return G.normal_form(f)


def initial_ideal(G: GroebnerBasis) -> MonomialIdeal:
    return G.initial_ideal()


def is_groebner_basis(polys: Sequence[Poly], order: MonomialOrder) -> bool:
    """Buchberger's S-pair test, independent of the cached machinery."""
    polys = [g for g in polys if g]
    if not polys:
        return True
    ctx = polys[0].ctx
    eng = _Engine(ctx, order, ResourceLimits(10**18, 1e18))
    enc = [eng.from_poly(g) for g in polys]
    red = [(max(d), d) for d in enc]
    for a in range(len(enc)):
        for b in range(a + 1, len(enc)):
            la, lb = red[a][0], red[b][0]
            L = eng.enc.encode(tuple(map(max, eng.enc.decode(la), eng.enc.decode(lb))))
            s = eng.spoly(enc[a], la, enc[b], lb, L)
            if s and eng.reduce(s, red):
                return False
    return True
