"""Exact multivariate polynomials, monomial orders and linear coordinate changes.

A polynomial is stored as a dictionary mapping exponent tuples to coefficients.
In characteristic 0 coefficients are :class:`fractions.Fraction`; in
characteristic ``p`` they are plain integers in ``range(p)``.  Polynomials are
order-agnostic: a :class:`MonomialOrder` is supplied whenever a leading term or
a sorted term list is needed.

Example::

    >>> ctx = RingCtx(("x1", "x2", "a", "b", "c"))
    >>> f = parse_poly("-x2*a + x1*b", ctx)
    >>> str(f)
    'x1*b - x2*a'
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Dict, Iterable, Mapping, Sequence, Tuple, Union

Monomial = Tuple[int, ...]
Coeff = Union[Fraction, int]

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*$")


class ParseError(ValueError):
    """Raised for malformed polynomial or file input."""


class SingularMatrixError(ValueError):
    """Raised when a coordinate change is not invertible."""


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
    for q in small:
        if p % q == 0:
            return p == q
    d, s = p - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    # deterministic for p < 3.3e24
    for a in small:
        x = pow(a, d, p)
        if x in (1, p - 1):
            continue
        for _ in range(s - 1):
            x = x * x % p
            if x == p - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class RingCtx:
    """Polynomial ring ``K[x-block, y-block]``.

    The first ``x_count`` variables form the base ring ``S``; the remaining
    ``y_count`` ones are Rees variables.  ``weights`` is the grading used for
    homogeneity tests and for the sugar degree in Buchberger's algorithm.
    """

    var_names: Tuple[str, ...]
    x_count: int = -1
    char: int = 0
    weights: Tuple[int, ...] = ()

    def __post_init__(self):
        names = tuple(self.var_names)
        object.__setattr__(self, "var_names", names)
        if not names:
            raise ValueError("a ring needs at least one variable")
        if len(set(names)) != len(names):
            raise ValueError(f"duplicate variable names in {names}")
        for nm in names:
            if not _NAME_RE.match(nm):
                raise ValueError(f"invalid variable name {nm!r}")
        if self.x_count < 0:
            object.__setattr__(self, "x_count", len(names))
        if not 0 <= self.x_count <= len(names):
            raise ValueError("x_count out of range")
        if self.char != 0 and not _is_prime(self.char):
            raise ValueError(f"characteristic must be 0 or prime, got {self.char}")
        w = tuple(self.weights) if self.weights else (1,) * len(names)
        if len(w) != len(names) or any(x < 0 for x in w):
            raise ValueError("weights must be non-negative, one per variable")
        object.__setattr__(self, "weights", w)

    @property
    def nvars(self) -> int:
        return len(self.var_names)

    @property
    def y_count(self) -> int:
        return self.nvars - self.x_count

    @cached_property
    def _index(self) -> Dict[str, int]:
        return {nm: i for i, nm in enumerate(self.var_names)}

    def index(self, name: Union[str, int]) -> int:
        if isinstance(name, int):
            if not 0 <= name < self.nvars:
                raise IndexError(f"variable index {name} out of range")
            return name
        try:
            return self._index[name]
        except KeyError:
            raise ParseError(f"unknown variable {name!r}") from None

    def var(self, name: Union[str, int]) -> "Poly":
        i = self.index(name)
        e = [0] * self.nvars
        e[i] = 1
        return Poly(self, {tuple(e): self.one_coeff})

    def gens(self) -> Tuple["Poly", ...]:
        return tuple(self.var(i) for i in range(self.nvars))

    @property
    def x_indices(self) -> range:
        return range(self.x_count)

    @property
    def y_indices(self) -> range:
        return range(self.x_count, self.nvars)

    # coefficient field
    @property
    def one_coeff(self) -> Coeff:
        return 1 if self.char else Fraction(1)

    def coerce(self, c) -> Coeff:
        if self.char:
            if isinstance(c, Fraction):
                if c.denominator % self.char == 0:
                    raise ZeroDivisionError(f"{c} has no image mod {self.char}")
                return c.numerator * pow(c.denominator, -1, self.char) % self.char
            return int(c) % self.char
        return Fraction(c)

    def cdiv(self, a: Coeff, b: Coeff) -> Coeff:
        if self.char:
            return a * pow(b, -1, self.char) % self.char
        return a / b

    def cnorm(self, c: Coeff) -> Coeff:
        return c % self.char if self.char else c

    def zero(self) -> "Poly":
        return Poly(self, {})

    def one(self) -> "Poly":
        return self.constant(1)

    def constant(self, c) -> "Poly":
        c = self.coerce(c)
        return Poly(self, {(0,) * self.nvars: c} if c else {})

    def monomial(self, exps: Sequence[int], c=1) -> "Poly":
        c = self.coerce(c)
        return Poly(self, {tuple(exps): c} if c else {})

    def extend(self, names: Sequence[str], weights: Sequence[int] | None = None) -> "RingCtx":
        """Append variables to the y-block."""
        w = tuple(weights) if weights is not None else (1,) * len(names)
        return RingCtx(self.var_names + tuple(names), self.x_count, self.char,
                       self.weights + w)

    def with_weights(self, weights: Sequence[int]) -> "RingCtx":
        return RingCtx(self.var_names, self.x_count, self.char, tuple(weights))

    def fresh_name(self, stem: str) -> str:
        name, k = stem, 0
        while name in self._index:
            k += 1
            name = f"{stem}{k}" if not stem[-1].isdigit() else f"{stem}_{k}"
        return name


class Poly:
    """Immutable polynomial over a :class:`RingCtx`."""

    __slots__ = ("ctx", "_terms", "_hash")

    def __init__(self, ctx: RingCtx, terms: Mapping[Monomial, Coeff] | None = None):
        self.ctx = ctx
        self._terms = {m: c for m, c in (terms or {}).items() if c}
        self._hash = None

    @property
    def terms(self) -> Dict[Monomial, Coeff]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def monomials(self):
        return self._terms.keys()

    def coeff(self, m: Monomial) -> Coeff:
        return self._terms.get(tuple(m), 0)

    def __len__(self):
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def is_constant(self) -> bool:
        return all(not any(m) for m in self._terms)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def variable_index(self) -> int | None:
        """Index of ``v`` if this polynomial is ``c * x_v``, else None."""
        if len(self._terms) != 1:
            return None
        (m,) = self._terms
        if sum(m) != 1:
            return None
        return m.index(1)

    def support(self) -> set:
        return {i for m in self._terms for i, e in enumerate(m) if e}

    def total_degree(self) -> int:
        return max((sum(m) for m in self._terms), default=-1)

    def weighted_degree(self, weights: Sequence[int] | None = None) -> int:
        w = weights or self.ctx.weights
        return max((sum(a * b for a, b in zip(w, m)) for m in self._terms), default=-1)

    def is_homogeneous(self, weights: Sequence[int] | None = None) -> bool:
        w = weights or self.ctx.weights
        return len({sum(a * b for a, b in zip(w, m)) for m in self._terms}) <= 1

    def degree_in(self, indices: Iterable[int]) -> int:
        idx = list(indices)
        return max((sum(m[i] for i in idx) for m in self._terms), default=-1)

    # arithmetic
    def _coerce_other(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.ctx != self.ctx:
                raise ValueError("polynomials live in different rings")
            return other
        return self.ctx.constant(other)

    def __add__(self, other):
        other = self._coerce_other(other)
        t = dict(self._terms)
        norm = self.ctx.cnorm
        for m, c in other._terms.items():
            t[m] = norm(t.get(m, 0) + c)
        return Poly(self.ctx, t)

    __radd__ = __add__

    def __neg__(self):
        norm = self.ctx.cnorm
        return Poly(self.ctx, {m: norm(-c) for m, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce_other(other))

    def __rsub__(self, other):
        return self._coerce_other(other) - self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            c = self.ctx.coerce(other)
            norm = self.ctx.cnorm
            return Poly(self.ctx, {m: norm(a * c) for m, a in self._terms.items()})
        other = self._coerce_other(other)
        t: Dict[Monomial, Coeff] = {}
        norm = self.ctx.cnorm
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                t[m] = norm(t.get(m, 0) + c1 * c2)
        return Poly(self.ctx, t)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result, base = self.ctx.one(), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def mul_monomial(self, m: Monomial, c=1) -> "Poly":
        c = self.ctx.coerce(c)
        norm = self.ctx.cnorm
        return Poly(self.ctx, {tuple(a + b for a, b in zip(k, m)): norm(v * c)
                               for k, v in self._terms.items()})

    def scale(self, c) -> "Poly":
        return self * c

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.ctx == other.ctx and self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self == self.ctx.constant(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ctx.var_names, frozenset(self._terms.items())))
        return self._hash

    # order-dependent views
    def sorted_terms(self, order: "MonomialOrder") -> list:
        key = order.key
        return sorted(((c, m) for m, c in self._terms.items()),
                      key=lambda t: key(t[1]), reverse=True)

    def leading_monomial(self, order: "MonomialOrder") -> Monomial:
        if not self._terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self._terms, key=order.key)

    def leading_coeff(self, order: "MonomialOrder") -> Coeff:
        return self._terms[self.leading_monomial(order)]

    def monic(self, order: "MonomialOrder") -> "Poly":
        if not self._terms:
            return self
        lc = self.leading_coeff(order)
        return self * self.ctx.cdiv(self.ctx.one_coeff, lc)

    # substitution
    def substitute(self, mapping: Mapping[int, "Poly"]) -> "Poly":
        """Replace variable ``i`` by ``mapping[i]`` (same ring)."""
        result = self.ctx.zero()
        powers: Dict[Tuple[int, int], Poly] = {}
        for m, c in self._terms.items():
            keep = list(m)
            term = None
            for i, g in mapping.items():
                e = m[i]
                if not e:
                    continue
                keep[i] = 0
                p = powers.get((i, e))
                if p is None:
                    p = powers[(i, e)] = g ** e
                term = p if term is None else term * p
            mono = self.ctx.monomial(keep, c)
            result = result + (mono if term is None else mono * term)
        return result

    def set_zero(self, indices: Iterable[int]) -> "Poly":
        idx = list(indices)
        return Poly(self.ctx, {m: c for m, c in self._terms.items()
                               if not any(m[i] for i in idx)})

    def change_ring(self, ctx: RingCtx, index_map: Mapping[int, int] | None = None) -> "Poly":
        """Move to ``ctx``; variable ``i`` goes to ``index_map[i]`` (default: same index)."""
        n = ctx.nvars
        t: Dict[Monomial, Coeff] = {}
        for m, c in self._terms.items():
            e = [0] * n
            for i, a in enumerate(m):
                if a:
                    j = index_map[i] if index_map is not None else i
                    if j is None or j >= n:
                        raise ValueError("variable has no image in the target ring")
                    e[j] += a
            e = tuple(e)
            t[e] = ctx.cnorm(t.get(e, 0) + (ctx.coerce(c) if ctx.char != self.ctx.char else c))
        return Poly(ctx, t)

    def divide_exact(self, g: "Poly") -> "Poly":
        """Return ``q`` with ``self == q * g``; raise ArithmeticError otherwise."""
        if not g:
            raise ZeroDivisionError("division by zero polynomial")
        order = MonomialOrder.degrevlex(self.ctx)
        lm_g = g.leading_monomial(order)
        lc_g = g._terms[lm_g]
        rem, q = self, self.ctx.zero()
        while rem:
            lm = rem.leading_monomial(order)
            d = tuple(a - b for a, b in zip(lm, lm_g))
            if any(x < 0 for x in d):
                raise ArithmeticError("inexact polynomial division")
            c = self.ctx.cdiv(rem._terms[lm], lc_g)
            q = q + self.ctx.monomial(d, c)
            rem = rem - g.mul_monomial(d, c)
        return q

    def content_free(self) -> "Poly":
        """Scale to integer coprime coefficients with positive leading coefficient
        under the default order (characteristic 0 only; identity otherwise)."""
        if self.ctx.char or not self._terms:
            return self
        from math import gcd, lcm
        den = lcm(*(c.denominator for c in self._terms.values()))
        nums = [int(c * den) for c in self._terms.values()]
        g = gcd(*nums)
        lead = self._terms[self.leading_monomial(MonomialOrder.degrevlex(self.ctx))]
        s = Fraction(den, g) * (1 if lead > 0 else -1)
        return self * s

    def __str__(self):
        return format_poly(self)

    def __repr__(self):
        return f"Poly({format_poly(self)!r})"


@dataclass(frozen=True)
class MonomialOrder:
    """A monomial order given by a kind and an explicit variable priority chain.

    ``perm[0]`` is the largest variable.  ``kind`` is ``"lex"``,
    ``"degrevlex"`` or ``"elim"``; an elimination order first compares the
    total degree in the ``elim`` variables and then the ``inner`` kind.
    Every order is realized as a non-negative integer weight matrix, see
    :meth:`rows`.
    """

    kind: str
    perm: Tuple[int, ...]
    weights: Tuple[int, ...] = ()
    elim: Tuple[int, ...] = ()
    inner: str = "degrevlex"

    def __post_init__(self):
        n = len(self.perm)
        if sorted(self.perm) != list(range(n)):
            raise ValueError(f"perm {self.perm} is not a permutation")
        if self.kind not in ("lex", "degrevlex", "elim"):
            raise ValueError(f"unknown order kind {self.kind!r}")
        if self.inner not in ("lex", "degrevlex"):
            raise ValueError(f"unknown inner order {self.inner!r}")
        w = tuple(self.weights) if self.weights else (1,) * n
        if len(w) != n or any(x <= 0 for x in w):
            raise ValueError("order weights must be positive")
        object.__setattr__(self, "weights", w)
        object.__setattr__(self, "elim", tuple(sorted(set(self.elim))))
        if self.kind == "elim" and not self.elim:
            raise ValueError("elimination order needs variables to eliminate")

    @staticmethod
    def _chain(ctx: RingCtx, chain) -> Tuple[int, ...]:
        if chain is None:
            return tuple(range(ctx.nvars))
        return tuple(ctx.index(v) for v in chain)

    @classmethod
    def lex(cls, ctx: RingCtx, chain=None) -> "MonomialOrder":
        return cls("lex", cls._chain(ctx, chain))

    @classmethod
    def degrevlex(cls, ctx: RingCtx, chain=None, weights=None) -> "MonomialOrder":
        return cls("degrevlex", cls._chain(ctx, chain), tuple(weights or ()))

    @classmethod
    def elimination(cls, ctx: RingCtx, eliminate, inner: "MonomialOrder | None" = None):
        inner = inner or cls.degrevlex(ctx)
        if inner.kind == "elim":
            raise ValueError("inner order of an elimination order must be lex or degrevlex")
        return cls("elim", inner.perm, inner.weights,
                   tuple(ctx.index(v) for v in eliminate), inner.kind)

    @property
    def nvars(self) -> int:
        return len(self.perm)

    @cached_property
    def rows(self) -> Tuple[Tuple[int, ...], ...]:
        """Weight matrix; monomials compare lexicographically by ``row . exponent``."""
        n = self.nvars
        rows = []
        if self.kind == "elim":
            rows.append(tuple(1 if i in self.elim else 0 for i in range(n)))
        base = self.inner if self.kind == "elim" else self.kind
        if base == "lex":
            for v in self.perm:
                r = [0] * n
                r[v] = 1
                rows.append(tuple(r))
        else:
            # degree, then degree minus the smallest variable, and so on
            for k in range(n):
                r = [0] * n
                for v in self.perm[: n - k]:
                    r[v] = self.weights[v]
                rows.append(tuple(r))
        return tuple(rows)

    def key(self, m: Monomial) -> Tuple[int, ...]:
        return tuple(sum(a * b for a, b in zip(r, m) if a) for r in self.rows)

    def extended(self, extra: int = 1) -> "MonomialOrder":
        """Same order on a ring with ``extra`` new variables ranked lowest."""
        n = self.nvars
        perm = self.perm + tuple(range(n, n + extra))
        return MonomialOrder(self.kind, perm, self.weights + (1,) * extra,
                             self.elim, self.inner)

    def describe(self, ctx: RingCtx) -> str:
        chain = ">".join(ctx.var_names[v] for v in self.perm)
        if self.kind == "elim":
            el = ",".join(ctx.var_names[v] for v in self.elim)
            return f"elim({el}; {self.inner} {chain})"
        return f"{self.kind} {chain}"


def compare(m1: Monomial, m2: Monomial, order: MonomialOrder) -> int:
    """Return 1, 0 or -1 as ``m1`` is greater, equal or smaller than ``m2``."""
    if len(m1) != len(m2) or len(m1) != order.nvars:
        raise ValueError("monomials and order have mismatched lengths")
    k1, k2 = order.key(m1), order.key(m2)
    return (k1 > k2) - (k1 < k2)


def parse_order(spec: str, ctx: RingCtx) -> MonomialOrder:
    """Parse ``"degrevlex"``, ``"lex"`` or ``"<kind>:v1>v2>..."``."""
    spec = spec.strip()
    kind, _, chain = spec.partition(":")
    kind = kind.strip()
    names = [c.strip() for c in chain.split(">")] if chain.strip() else None
    if names is not None and sorted(names) != sorted(ctx.var_names):
        raise ParseError("order chain must list every ring variable exactly once")
    if kind == "lex":
        return MonomialOrder.lex(ctx, names)
    if kind in ("degrevlex", "revlex", "drl"):
        return MonomialOrder.degrevlex(ctx, names)
    raise ParseError(f"unknown order {kind!r}")


# formatting

def _fmt_coeff(c: Coeff) -> str:
    if isinstance(c, Fraction) and c.denominator != 1:
        return f"{c.numerator}/{c.denominator}"
    return str(int(c))


def format_monomial(m: Monomial, names: Sequence[str]) -> str:
    parts = []
    for nm, e in zip(names, m):
        if e == 1:
            parts.append(nm)
        elif e:
            parts.append(f"{nm}^{e}")
    return "*".join(parts) if parts else "1"


def format_poly(f: Poly, order: MonomialOrder | None = None) -> str:
    if not f:
        return "0"
    order = order or MonomialOrder.degrevlex(f.ctx)
    out = []
    for c, m in f.sorted_terms(order):
        neg = (c < 0) if not f.ctx.char else False
        a = -c if neg else c
        mono = format_monomial(m, f.ctx.var_names)
        if mono == "1":
            body = _fmt_coeff(a)
        elif a == 1:
            body = mono
        else:
            body = f"{_fmt_coeff(a)}*{mono}"
        if not out:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


# parsing

_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\S))")


def _tokenize(text: str):
    pos, toks = 0, []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m:
            break
        num, name, op = m.groups()
        if num is not None:
            toks.append(("num", int(num), m.start(1)))
        elif name is not None:
            toks.append(("name", name, m.start(2)))
        else:
            if op not in "+-*^()/":
                raise ParseError(f"unexpected character {op!r} at {m.start(3)}")
            toks.append(("op", op, m.start(3)))
        pos = m.end()
    toks.append(("end", None, len(text)))
    return toks


class _Parser:
    def __init__(self, text: str, ctx: RingCtx):
        self.toks = _tokenize(text)
        self.i = 0
        self.ctx = ctx

    def peek(self):
        return self.toks[self.i]

    def take(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect_op(self, op):
        t = self.take()
        if t[0] != "op" or t[1] != op:
            raise ParseError(f"expected {op!r} at position {t[2]}")

    def parse(self) -> Poly:
        if self.peek()[0] == "end":
            raise ParseError("empty polynomial")
        f = self.expr()
        t = self.peek()
        if t[0] != "end":
            raise ParseError(f"unexpected token {t[1]!r} at position {t[2]}")
        return f

    def expr(self) -> Poly:
        f = self.term()
        while True:
            t = self.peek()
            if t[0] == "op" and t[1] in "+-":
                self.take()
                g = self.term()
                f = f + g if t[1] == "+" else f - g
            else:
                return f

    def term(self) -> Poly:
        f = self.unary()
        while True:
            t = self.peek()
            if t[0] == "op" and t[1] == "*":
                self.take()
                f = f * self.unary()
            elif t[0] == "op" and t[1] == "/":
                self.take()
                d = self.unary()
                if not d.is_constant() or not d:
                    raise ParseError(f"division only by nonzero constants (position {t[2]})")
                f = f * self.ctx.cdiv(self.ctx.one_coeff, d.coeff((0,) * self.ctx.nvars))
            else:
                return f

    def unary(self) -> Poly:
        t = self.peek()
        if t[0] == "op" and t[1] in "+-":
            self.take()
            f = self.unary()
            return -f if t[1] == "-" else f
        return self.power()

    def power(self) -> Poly:
        base = self.atom()
        t = self.peek()
        if t[0] == "op" and t[1] == "^":
            self.take()
            e = self.peek()
            if e[0] == "op" and e[1] == "-":
                raise ParseError(f"negative exponent at position {e[2]}")
            if e[0] != "num":
                raise ParseError(f"exponent must be a non-negative integer (position {e[2]})")
            self.take()
            return base ** e[1]
        return base

    def atom(self) -> Poly:
        t = self.take()
        if t[0] == "num":
            return self.ctx.constant(t[1])
        if t[0] == "name":
            return self.ctx.var(t[1])
        if t[0] == "op" and t[1] == "(":
            f = self.expr()
            self.expect_op(")")
            return f
        raise ParseError(f"unexpected token {t[1]!r} at position {t[2]}")


def parse_poly(text: str, ctx: RingCtx, order: MonomialOrder | None = None) -> Poly:
    """Parse ``text`` into a polynomial of ``ctx``.

    ``order`` is accepted for interface symmetry; polynomials are stored
    order-agnostically.
    """
    return _Parser(text, ctx).parse()


# linear algebra over the coefficient field

def _field_ops(char: int):
    if char:
        return (lambda c: int(c) % char if not isinstance(c, Fraction)
                else c.numerator * pow(c.denominator, -1, char) % char,
                lambda a, b: a * pow(b, -1, char) % char,
                lambda c: c % char)
    return Fraction, lambda a, b: a / b, lambda c: c


def determinant(matrix: Sequence[Sequence], char: int = 0):
    """Exact determinant by Gaussian elimination."""
    coerce, div, norm = _field_ops(char)
    a = [[coerce(x) for x in row] for row in matrix]
    n = len(a)
    if any(len(r) != n for r in a):
        raise ValueError("matrix must be square")
    det = coerce(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col]), None)
        if piv is None:
            return coerce(0)
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            det = norm(-det)
        det = norm(det * a[col][col])
        for r in range(col + 1, n):
            if a[r][col]:
                f = div(a[r][col], a[col][col])
                a[r] = [norm(x - f * y) for x, y in zip(a[r], a[col])]
    return det


def matrix_inverse(matrix: Sequence[Sequence], char: int = 0):
    coerce, div, norm = _field_ops(char)
    n = len(matrix)
    a = [[coerce(x) for x in row] + [coerce(int(i == j)) for j in range(n)]
         for i, row in enumerate(matrix)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col]), None)
        if piv is None:
            raise SingularMatrixError("matrix is singular")
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        a[col] = [div(x, p) for x in a[col]]
        for r in range(n):
            if r != col and a[r][col]:
                f = a[r][col]
                a[r] = [norm(x - f * y) for x, y in zip(a[r], a[col])]
    return tuple(tuple(row[n:]) for row in a)


@dataclass(frozen=True)
class LinearChange:
    """Invertible change of coordinates ``z = A x`` on the x-block.

    Row ``i`` of ``matrix`` holds the coefficients of the linear form ``z_i``.
    """

    matrix: Tuple[Tuple[Coeff, ...], ...]
    char: int = 0
    _inverse: Tuple = field(default=None, compare=False, repr=False)

    def __post_init__(self):
        coerce, _, _ = _field_ops(self.char)
        m = tuple(tuple(coerce(x) for x in row) for row in self.matrix)
        object.__setattr__(self, "matrix", m)
        if self._inverse is None:
            object.__setattr__(self, "_inverse", matrix_inverse(m, self.char))

    @property
    def size(self) -> int:
        return len(self.matrix)

    @property
    def inverse_matrix(self):
        return self._inverse

    def inverse(self) -> "LinearChange":
        return LinearChange(self._inverse, self.char)

    @classmethod
    def identity(cls, n: int, char: int = 0) -> "LinearChange":
        return cls(tuple(tuple(int(i == j) for j in range(n)) for i in range(n)), char)

    @classmethod
    def from_forms(cls, forms: Sequence[Poly], ctx: RingCtx) -> "LinearChange":
        """Build from linear forms ``z_1..z_n`` in the x-block of ``ctx``."""
        n = ctx.x_count
        if len(forms) != n:
            raise SingularMatrixError(f"not a basis: need {n} linear forms, got {len(forms)}")
        rows = []
        for z in forms:
            row = [0] * n
            for m, c in z.items():
                if sum(m) != 1 or m.index(1) >= n:
                    raise ParseError(f"{z} is not a linear form in the x-variables")
                row[m.index(1)] = c
            rows.append(row)
        try:
            return cls(tuple(map(tuple, rows)), ctx.char)
        except SingularMatrixError:
            raise SingularMatrixError("not a basis: the linear forms are dependent") from None

    def forms(self, ctx: RingCtx) -> Tuple[Poly, ...]:
        out = []
        for row in self.matrix:
            f = ctx.zero()
            for k, c in enumerate(row):
                if c:
                    f = f + ctx.var(k) * c
            out.append(f)
        return tuple(out)

    def substitution(self, ctx: RingCtx) -> Dict[int, Poly]:
        """The map ``x_k -> (A^-1 row k) . x`` realizing ``z_i -> x_i``."""
        if ctx.x_count != self.size:
            raise ValueError(f"change has size {self.size}, ring has {ctx.x_count} x-variables")
        sub = {}
        for k, row in enumerate(self._inverse):
            g = ctx.zero()
            for j, c in enumerate(row):
                if c:
                    g = g + ctx.var(j) * c
            sub[k] = g
        return sub


def apply_change(f: Poly, ch: LinearChange) -> Poly:
    """Apply the automorphism sending ``z_i`` to ``x_i``; y-variables are fixed."""
    if ch.size != f.ctx.x_count:
        raise ValueError("coordinate change does not match the ring's x-block")
    if all(ch.matrix[i][j] == int(i == j) for i in range(ch.size) for j in range(ch.size)):
        return f
    return f.substitute(ch.substitution(f.ctx))


def random_basis(ctx: RingCtx, seed: int, bound: int, max_tries: int = 100) -> LinearChange:
    """Random invertible change with integer entries in ``[-bound, bound]``."""
    if bound < 1:
        raise ValueError("bound must be positive")
    if ctx.char and ctx.char <= bound:
        raise ValueError("characteristic must exceed the coefficient bound")
    rng = random.Random(seed)
    n = ctx.x_count
    for _ in range(max_tries):
        rows = tuple(tuple(rng.randint(-bound, bound) for _ in range(n)) for _ in range(n))
        if determinant(rows, ctx.char):
            return LinearChange(rows, ctx.char)
    raise RuntimeError(f"no invertible matrix found in {max_tries} draws")
