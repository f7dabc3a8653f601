import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cwlpowers.polycore import (LinearChange, MonomialOrder, ParseError, RingCtx,
                                SingularMatrixError, apply_change, compare, determinant,
                                matrix_inverse, parse_order, parse_poly, random_basis)

from strategies import RING3, RING4, exps, polys

EX19 = RingCtx(("x1", "x2", "a", "b", "c"))


def cofactor_det(m):
    if len(m) == 1:
        return m[0][0]
    return sum((-1) ** j * m[0][j] * cofactor_det([r[:j] + r[j + 1:] for r in m[1:]])
               for j in range(len(m)))


class TestParse:
    def test_zero(self):
        f = parse_poly("0", EX19)
        assert f.is_zero() and not f

    def test_binomial_generator(self):
        f = parse_poly("-x2*a + x1*b", EX19)
        assert len(f) == 2
        assert f.coeff((1, 0, 0, 1, 0)) == 1
        assert f.coeff((0, 1, 1, 0, 0)) == -1

    def test_square_identity(self):
        f = parse_poly("(x1+x2)^2 - x1^2 - 2*x1*x2", EX19)
        assert f == parse_poly("x2^2", EX19)

    def test_rational_coefficients(self):
        f = parse_poly("3/4*x1 - x1/2", EX19)
        assert f == EX19.var("x1") * Fraction(1, 4)

    @pytest.mark.parametrize("bad", ["x1 +", "q*x1", "x1^", "(x1", "x1 ** x2", "2x1"])
    def test_errors(self, bad):
        with pytest.raises(ParseError):
            parse_poly(bad, EX19)

    @settings(max_examples=100, deadline=None)
    @given(polys(RING4))
    def test_round_trip(self, f):
        assert parse_poly(str(f), RING4) == f


class TestRing:
    def test_duplicate_names(self):
        with pytest.raises(ValueError):
            RingCtx(("x", "x"))

    def test_char_must_be_prime(self):
        with pytest.raises(ValueError):
            RingCtx(("x",), char=4)
        assert RingCtx(("x",), char=32003).char == 32003

    def test_prime_field_arithmetic(self):
        ctx = RingCtx(("x",), char=7)
        f = parse_poly("3*x", ctx) * 5
        assert f == parse_poly("x", ctx)


class TestArithmetic:
    @settings(max_examples=100, deadline=None)
    @given(polys(RING3), polys(RING3), polys(RING3))
    def test_ring_axioms(self, f, g, h):
        assert (f + g) * h == f * h + g * h
        assert f * g == g * f
        assert (f * g) * h == f * (g * h)
        assert (f - f).is_zero()

    def test_power(self):
        x1 = RING3.var("x1")
        assert (x1 + 1) ** 3 == x1 ** 3 + x1 ** 2 * 3 + x1 * 3 + 1


class TestOrders:
    def test_lex(self):
        o = MonomialOrder.lex(RingCtx(("x1", "x2")))
        assert compare((1, 0), (0, 5), o) == 1

    def test_degrevlex(self):
        o = MonomialOrder.degrevlex(RING3)
        assert compare((0, 2, 0), (1, 0, 1), o) == 1

    def test_reflexive(self):
        for o in (MonomialOrder.lex(RING3), MonomialOrder.degrevlex(RING3)):
            assert compare((1, 2, 3), (1, 2, 3), o) == 0

    def test_chain_respected(self):
        o = MonomialOrder.lex(RING3, ["x3", "x1", "x2"])
        assert compare((0, 0, 1), (5, 0, 0), o) == 1

    def test_elimination(self):
        o = MonomialOrder.elimination(RING3, ["x3"])
        assert compare((0, 0, 1), (4, 4, 0), o) == 1

    def test_parse_order(self):
        o = parse_order("lex:x3>x2>x1", RING3)
        assert o.perm == (2, 1, 0)
        with pytest.raises(ParseError):
            parse_order("lex:x1>x2", RING3)
        with pytest.raises(ParseError):
            parse_order("weird", RING3)

    @settings(max_examples=200, deadline=None)
    @given(st.sampled_from(["lex", "degrevlex"]), st.permutations(range(3)),
           exps(3, 4), exps(3, 4), exps(3, 4), exps(3, 2))
    def test_axioms(self, kind, perm, a, b, c, m):
        o = MonomialOrder(kind, tuple(perm))
        ab, ba = compare(a, b, o), compare(b, a, o)
        assert ab == -ba
        assert (ab == 0) == (a == b)
        if ab >= 0 and compare(b, c, o) >= 0:
            assert compare(a, c, o) >= 0
        if ab == 1:
            am = tuple(x + y for x, y in zip(a, m))
            bm = tuple(x + y for x, y in zip(b, m))
            assert compare(am, bm, o) == 1
        assert compare(a, (0, 0, 0), o) >= 0


class TestLinearChange:
    def test_sends_z1_to_x1(self):
        ctx = RingCtx(("x1", "x2"))
        z = [parse_poly("x1+x2", ctx), parse_poly("x2", ctx)]
        ch = LinearChange.from_forms(z, ctx)
        assert apply_change(z[0], ch) == ctx.var("x1")
        assert apply_change(ctx.var("x1"), ch) == parse_poly("x1-x2", ctx)

    def test_identity(self):
        f = parse_poly("x1^2 + 3*x2*x3", RING3)
        assert apply_change(f, LinearChange.identity(3)) == f

    def test_scaling(self):
        ctx = RingCtx(("x1",))
        ch = LinearChange.from_forms([parse_poly("2*x1", ctx)], ctx)
        assert apply_change(parse_poly("2*x1", ctx), ch) == ctx.var("x1")

    def test_not_a_basis(self):
        ctx = RingCtx(("x1", "x2"))
        with pytest.raises(SingularMatrixError, match="not a basis"):
            LinearChange.from_forms([ctx.var("x1"), ctx.var("x1")], ctx)
        with pytest.raises(SingularMatrixError, match="not a basis"):
            LinearChange.from_forms([ctx.var("x1")], ctx)

    def test_nonlinear_form(self):
        ctx = RingCtx(("x1", "x2"))
        with pytest.raises(ParseError):
            LinearChange.from_forms([parse_poly("x1^2", ctx), ctx.var("x2")], ctx)

    def test_random_basis_small(self):
        ch = random_basis(RingCtx(("x1",)), seed=5, bound=1)
        assert ch.matrix[0][0] != 0

    def test_random_basis_deterministic(self):
        assert random_basis(RING4, 11, 100).matrix == random_basis(RING4, 11, 100).matrix

    def test_random_basis_six(self):
        ctx = RingCtx(tuple(f"x{i}" for i in range(1, 7)))
        ch = random_basis(ctx, 3, 100)
        assert len(ch.matrix) == 6 and determinant(ch.matrix) != 0

    @settings(max_examples=50, deadline=None)
    @given(st.integers(1, 4), st.integers(0, 10**6))
    def test_determinant_vs_cofactor(self, n, seed):
        import random
        rng = random.Random(seed)
        m = [[rng.randint(-5, 5) for _ in range(n)] for _ in range(n)]
        assert determinant(m) == cofactor_det(m)

    def test_inverse(self):
        m = [[2, 1], [1, 1]]
        inv = matrix_inverse(m)
        prod = [[sum(m[i][k] * inv[k][j] for k in range(2)) for j in range(2)] for i in range(2)]
        assert prod == [[1, 0], [0, 1]]

    @settings(max_examples=60, deadline=None)
    @given(polys(RING3), st.integers(0, 1000))
    def test_inverse_round_trip(self, f, seed):
        ch = random_basis(RING3, seed, 5)
        assert apply_change(apply_change(f, ch), ch.inverse()) == f
