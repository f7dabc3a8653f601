import itertools

import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from cwlpowers.groebner import Ideal
from cwlpowers.idealops import (colon, eliminate, ideal_equal, ideal_power, ideal_product,
                                ideal_sum, intersect, is_subideal, split_variables,
                                substitute_zero)
from cwlpowers.monomial import MonomialIdeal, divides, minimalize
from cwlpowers.polycore import MonomialOrder, RingCtx, parse_poly

from strategies import RING3, monomial_ideals, polys

R5 = RingCtx(tuple(f"x{i}" for i in range(1, 6)))
RY = RingCtx(("x1", "x2", "y1", "y2"), 2)


def I_(ctx, *texts):
    return Ideal.parse(ctx, list(texts))


def all_monomials(n, max_deg):
    return [e for e in itertools.product(range(max_deg + 1), repeat=n) if sum(e) <= max_deg]


def member(gens, m):
    return any(divides(g, m) for g in gens)


def disguised(ctx, gens):
    """Same monomial ideal with an extra non-monomial generator (forces the generic path)."""
    polys_ = [ctx.monomial(g) for g in gens]
    extra = polys_[0] + polys_[-1] * 2 if len(polys_) > 1 else polys_[0] * 3
    if extra.is_monomial():
        extra = polys_[0] * (ctx.var(0) + ctx.var(1))
    return Ideal(ctx, polys_ + [extra])


class TestArithmetic:
    def test_power(self):
        I = I_(RING3, "x1", "x2")
        assert ideal_equal(ideal_power(I, 2), I_(RING3, "x1^2", "x1*x2", "x2^2"))
        with pytest.raises(ValueError):
            ideal_power(I, 0)

    def test_product(self):
        assert ideal_equal(ideal_product(I_(RING3, "x1"), I_(RING3, "x2")), I_(RING3, "x1*x2"))

    def test_power_of_path_cover(self):
        ctx = RingCtx(("x1", "x2", "x3", "x4"))
        I2 = ideal_power(I_(ctx, "x1*x3", "x2*x3", "x2*x4"), 2)
        M = I2.monomial_ideal()
        assert len(M.gens) == 6 and set(M.degrees()) == {4}

    def test_minimalize(self):
        assert minimalize([(1, 0), (1, 1)]) == ((1, 0),)
        assert minimalize([]) == ()
        base = [(1, 0, 1, 0), (0, 1, 1, 0), (0, 1, 0, 1)]
        prods = [tuple(a + b for a, b in zip(u, v)) for u in base for v in base]
        assert len(prods) == 9 and len(minimalize(prods)) == 6

    def test_sum(self):
        assert ideal_equal(ideal_sum(I_(RING3, "x1"), I_(RING3, "x2")), I_(RING3, "x1", "x2"))

    def test_split_variables(self):
        V, rest = split_variables(I_(RING3, "x1", "x1*x2 + x2*x3", "x3^2 - x2"))
        assert V == {0} and ideal_equal(rest, I_(RING3, "x2*x3", "x3^2 - x2"))


class TestIntersectColon:
    def test_simple(self):
        assert ideal_equal(intersect(I_(RING3, "x1"), I_(RING3, "x2")), I_(RING3, "x1*x2"))
        got = intersect(I_(RING3, "x1", "x2"), I_(RING3, "x2", "x3"))
        assert ideal_equal(got, I_(RING3, "x2", "x1*x3"))

    def test_edges_of_path(self):
        ctx = RingCtx(("x1", "x2", "x3", "x4"))
        K = I_(ctx, "x1", "x2")
        for e in (("x2", "x3"), ("x3", "x4")):
            K = intersect(K, I_(ctx, *e))
        assert ideal_equal(K, I_(ctx, "x1*x3", "x2*x3", "x2*x4"))

    def test_generic_intersection(self):
        I = I_(RING3, "x1^2 - x2")
        J = I_(RING3, "x1 - x3")
        K = intersect(I, J)
        assert ideal_equal(K, I_(RING3, "(x1^2 - x2)*(x1 - x3)"))

    def test_colon_examples(self):
        assert intersect(I_(RING3, "x1"), I_(RING3, "x1")).gens
        assert colon(I_(RING3, "x1"), RING3.var("x1")).is_unit()
        got = colon(I_(RY, "x1*y1", "y2"), RY.var("x1"))
        assert ideal_equal(got, I_(RY, "y1", "y2"))
        I = I_(RING3, "x1^2 - x2", "x2*x3")
        assert colon(I, RING3.one()) is I

    def test_colon_generic(self):
        I = I_(RING3, "x1*x2 - x3^2")
        got = colon(ideal_product(I, I_(RING3, "x1 + x3")), parse_poly("x1 + x3", RING3))
        assert ideal_equal(got, I)

    def test_colon_zero_poly(self):
        with pytest.raises(ZeroDivisionError):
            colon(I_(RING3, "x1"), RING3.zero())

    def test_colon_through_split_variables(self):
        I = I_(RING3, "x1", "x2*x3 + x3^2")
        got = colon(I, parse_poly("x1 + x3", RING3))
        # modulo x1 this is (x2*x3 + x3^2) : x3 = (x2 + x3)
        assert ideal_equal(got, I_(RING3, "x1", "x2 + x3"))

    @settings(max_examples=120, deadline=None, suppress_health_check=[HealthCheck.too_slow])
    @given(monomial_ideals(5, 3, 3), monomial_ideals(5, 3, 3))
    def test_monomial_intersection_brute_force(self, a, b):
        A, B = MonomialIdeal(R5, a), MonomialIdeal(R5, b)
        C = A.intersect(B)
        for m in all_monomials(5, 6):
            assert C.contains(m) == (member(A.gens, m) and member(B.gens, m))
        K = intersect(disguised(R5, A.gens), disguised(R5, B.gens))
        assert ideal_equal(K, C.to_ideal())

    @settings(max_examples=120, deadline=None, suppress_health_check=[HealthCheck.too_slow])
    @given(monomial_ideals(5, 4, 3), st.lists(st.integers(0, 2), min_size=5, max_size=5))
    def test_monomial_colon_brute_force(self, a, f):
        A = MonomialIdeal(R5, a)
        f = tuple(f)
        Q = A.colon(f)
        for m in all_monomials(5, 4):
            fm = tuple(x + y for x, y in zip(f, m))
            assert Q.contains(m) == member(A.gens, fm)
        if any(f):
            K = colon(disguised(R5, A.gens), R5.monomial(f))
            assert ideal_equal(K, Q.to_ideal())

    @settings(max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow])
    @given(st.lists(polys(RING3, 2, 3, 3), min_size=1, max_size=2), polys(RING3, 1, 3, 3))
    def test_colon_properties(self, gens, f):
        gens = [g for g in gens if g]
        if not gens or not f:
            return
        I = Ideal(RING3, gens)
        Q = colon(I, f)
        assert is_subideal(I, Q)
        G = I.groebner()
        for g in Q.gens:
            assert G.normal_form(g * f).is_zero()

    @settings(max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow])
    @given(st.lists(polys(RING3, 2, 3, 3), min_size=1, max_size=2),
           st.lists(polys(RING3, 2, 3, 3), min_size=1, max_size=2))
    def test_intersection_properties(self, a, b):
        a, b = [g for g in a if g], [g for g in b if g]
        if not a or not b:
            return
        I, J = Ideal(RING3, a), Ideal(RING3, b)
        K = intersect(I, J)
        assert is_subideal(K, I) and is_subideal(K, J)
        assert is_subideal(ideal_product(I, J), K)


class TestEliminate:
    def test_nothing_survives(self):
        ctx = RingCtx(("w", "x1", "x2"))
        assert eliminate(I_(ctx, "w*x1 - x2"), ["w"]).is_zero()

    def test_forced(self):
        ctx = RingCtx(("w", "x1", "x2"))
        assert ideal_equal(eliminate(I_(ctx, "w - x1", "w - x2"), ["w"]), I_(ctx, "x1 - x2"))

    def test_koszul(self):
        ctx = RingCtx(("x1", "x2", "y1", "y2", "w"))
        K = eliminate(I_(ctx, "y1 - w*x1", "y2 - w*x2"), ["w"])
        assert ideal_equal(K, I_(ctx, "x2*y1 - x1*y2"))

    @settings(max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow])
    @given(st.lists(polys(RING3, 2, 3, 3), min_size=1, max_size=3))
    def test_properties(self, gens):
        gens = [g for g in gens if g]
        if not gens:
            return
        I = Ideal(RING3, gens)
        K = eliminate(I, ["x1"])
        G = I.groebner()
        for g in K.gens:
            assert g.degree_in([0]) == 0
            assert G.normal_form(g).is_zero()


class TestEqual:
    def test_cases(self):
        assert ideal_equal(I_(RING3, "x1", "x2 + x3"), I_(RING3, "x2 + x3", "x1"))
        assert ideal_equal(I_(RING3, "x1"), I_(RING3, "x1", "x1^2"))
        assert not ideal_equal(I_(RING3, "x1"), I_(RING3, "x1^2"))
        assert ideal_equal(Ideal(RING3, []), Ideal(RING3, [RING3.zero()]))

    def test_order_independent_verdict(self):
        a, b = I_(RING3, "x1^2 - x2", "x2*x3"), I_(RING3, "x2*x3", "x1^2 - x2", "x1^2*x3")
        for o in (MonomialOrder.lex(RING3), MonomialOrder.degrevlex(RING3, ["x3", "x2", "x1"])):
            assert ideal_equal(a, b, o)

    @settings(max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow])
    @given(st.lists(polys(RING3, 1, 3, 3), min_size=1, max_size=2), st.integers(2, 3))
    def test_power_recursion(self, gens, k):
        gens = [g for g in gens if g]
        if not gens:
            return
        I = Ideal(RING3, gens)
        assert ideal_equal(ideal_power(I, k), ideal_product(ideal_power(I, k - 1), I))

    def test_substitute_zero(self):
        I = I_(RING3, "x1*x2 + x3", "x2^2")
        assert ideal_equal(substitute_zero(I, [0]), I_(RING3, "x3", "x2^2"))
