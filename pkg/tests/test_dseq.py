import json

import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from cwlpowers import catalog as cat
from cwlpowers.betti import is_componentwise_linear
from cwlpowers.dseq import (default_step_orders, generic_d_sequence, is_d_sequence_on_rees,
                            monomial_step_check, prop_conclusion_check, verify_certificate)
from cwlpowers.graphs import cover_ideal
from cwlpowers.groebner import Ideal, resource_limits
from cwlpowers.idealops import ideal_power
from cwlpowers.monomial import MonomialIdeal
from cwlpowers.polycore import (LinearChange, MonomialOrder, RingCtx, SingularMatrixError,
                                parse_poly)
from cwlpowers.rees import rees_ideal

from strategies import monomial_ideals

R2 = RingCtx(("x1", "x2"))
R3 = RingCtx(("x1", "x2", "x3"))


def forms(I, texts):
    return [parse_poly(t, I.ctx) for t in texts]


class TestExact:
    def test_path_cover(self):
        I = cover_ideal(cat.path_of_length(3)).to_ideal()
        rep = is_d_sequence_on_rees(I, forms(I, cat.PATH3_SEQUENCE))
        assert rep.passed and [s.status for s in rep.steps] == ["pass"] * 4

    def test_minors(self):
        I = cat.minors_2x3()
        assert is_d_sequence_on_rees(I, forms(I, cat.MINORS_2X3_SEQUENCE)).passed

    def test_principal(self):
        ctx = RingCtx(("x1",))
        I = Ideal.parse(ctx, ["x1^2"])
        assert is_d_sequence_on_rees(I, [ctx.var(0)]).passed

    def test_failure_has_valid_certificate(self):
        I = Ideal.parse(R2, ["x1^2", "x2^2"])
        z = [R2.var(0), R2.var(1)]
        rep = is_d_sequence_on_rees(I, z)
        assert rep.verdict == "fail"
        bad = next(s for s in rep.steps if s.status == "fail")
        P = rees_ideal(I).transformed(LinearChange.from_forms(z, R2))
        assert verify_certificate(P, bad.i, parse_poly(bad.certificate, P.ext))

    def test_not_a_basis(self):
        with pytest.raises(SingularMatrixError, match="not a basis"):
            is_d_sequence_on_rees(Ideal.parse(R2, ["x1"]), [R2.var(0), R2.var(0)])

    def test_inconclusive_under_cap(self):
        I = cat.symmetric_minors()
        P = rees_ideal(I)
        with resource_limits(max_pairs=5):
            rep = is_d_sequence_on_rees(I, forms(I, cat.SYMMETRIC_SEQUENCE), presentation=P)
        assert rep.verdict == "inconclusive"
        assert any(s.error for s in rep.steps)

    def test_prime_field_warning(self):
        ctx = RingCtx(("x1", "x2"), char=32003)
        I = Ideal.parse(ctx, ["x1", "x2"])
        rep = is_d_sequence_on_rees(I, [ctx.var(0), ctx.var(1)])
        assert rep.passed and rep.warnings and rep.char == 32003

    def test_report_json(self):
        I = cover_ideal(cat.path_of_length(3)).to_ideal()
        d = is_d_sequence_on_rees(I, forms(I, cat.PATH3_SEQUENCE)).to_dict()
        assert json.loads(json.dumps(d))["passed"] is True
        assert d["sequence"] == ["x1", "x3", "x2 + x4", "x2"]


    def test_cap_outside_steps_raises(self):
        from cwlpowers.groebner import ResourceLimitExceeded
        I = cat.symmetric_minors()
        with resource_limits(max_pairs=5), pytest.raises(ResourceLimitExceeded):
            is_d_sequence_on_rees(I, forms(I, cat.SYMMETRIC_SEQUENCE))


class TestGeneric:
    def test_trials_validated(self):
        with pytest.raises(ValueError):
            generic_d_sequence(Ideal.parse(R2, ["x1"]), trials=0)

    def test_deterministic(self):
        I = cover_ideal(cat.path_of_length(3)).to_ideal()
        a, b = generic_d_sequence(I, seed=4), generic_d_sequence(I, seed=4)
        assert a.sequence == b.sequence and a.verdict == b.verdict == "pass"
        assert a.mode == "generic" and a.trials[0]["seed"] == 4

    def test_failing_trials_logged(self):
        rep = generic_d_sequence(Ideal.parse(R2, ["x1^2", "x2^2"]), trials=2, bound=10)
        assert rep.verdict == "fail" and len(rep.trials) == 2
        assert "not a disproof" in rep.warnings[-1]


class TestMonomialCriteria:
    RY = RingCtx(("x1", "x2", "x3", "y1"), 3)

    def test_x_degree_two(self):
        L = MonomialIdeal.parse(self.RY, ["x1^2*y1"])
        assert not monomial_step_check(L, 1)

    def test_linear_in_y(self):
        L = MonomialIdeal.parse(self.RY, ["x1*y1", "x2*y1", "x3*y1"])
        assert monomial_step_check(L, 1)

    def test_missing_partner(self):
        L = MonomialIdeal.parse(self.RY, ["x1*y1", "x3*y1"])
        assert not monomial_step_check(L, 1)
        assert monomial_step_check(L, 3)

    def test_minors_initial(self):
        P = rees_ideal(cat.minors_2x3())
        L = MonomialIdeal.parse(P.ext, ["c*y1", "b*y1", "b^2*y2"])
        assert monomial_step_check(L, 1)

    def test_prop_minors(self):
        P = rees_ideal(cat.minors_2x3())
        o = MonomialOrder.degrevlex(P.ext, cat.MINORS_2X3_CHAIN)
        rep = prop_conclusion_check(P, cat.MINORS_2X3_SEQUENCE, o)
        assert rep.passed
        assert [sorted(x) for x in rep.initial_ideals()] == \
            [sorted(x) for x in cat.MINORS_2X3_INITIALS]

    def test_prop_zero_kernel(self):
        P = rees_ideal(Ideal.parse(R2, ["x1*x2"]))
        assert prop_conclusion_check(P).passed

    def test_prop_order_argument(self):
        P = rees_ideal(Ideal.parse(R2, ["x1", "x2"]))
        with pytest.raises(ValueError):
            prop_conclusion_check(P, orders=[MonomialOrder.lex(P.ext)])
        with pytest.raises(ValueError):
            prop_conclusion_check(P, sequence=["x1"])
        assert len(default_step_orders(P.ext)) == 4

    def test_scroll_two(self):
        I = cat.scroll(2)
        assert is_d_sequence_on_rees(I, forms(I, cat.scroll_sequence(2))).passed


ideals3 = monomial_ideals(3, 4, 3)


class TestProperties:
    @settings(max_examples=30, deadline=None, suppress_health_check=[HealthCheck.too_slow])
    @given(ideals3, st.permutations(range(3)))
    def test_lemma_soundness(self, gens, perm):
        I = MonomialIdeal(R3, gens).to_ideal()
        P = rees_ideal(I)
        prop = prop_conclusion_check(P, list(perm))
        exact = is_d_sequence_on_rees(I, [R3.var(k) for k in perm], presentation=P)
        for ps, es in zip(prop.steps, exact.steps):
            if ps.passed:
                assert es.passed

    @settings(max_examples=30, deadline=None, suppress_health_check=[HealthCheck.too_slow])
    @given(ideals3, st.permutations(range(3)))
    def test_certificates(self, gens, perm):
        I = MonomialIdeal(R3, gens).to_ideal()
        z = [R3.var(k) for k in perm]
        rep = is_d_sequence_on_rees(I, z)
        P = rees_ideal(I).transformed(LinearChange.from_forms(z, R3))
        for s in rep.steps:
            if s.status == "fail":
                assert verify_certificate(P, s.i, parse_poly(s.certificate, P.ext))

    @settings(max_examples=25, deadline=None, suppress_health_check=[HealthCheck.too_slow])
    @given(monomial_ideals(3, 3, 2), st.sampled_from(["vars", "mixed"]))
    def test_pass_implies_cwl_powers(self, gens, kind):
        I = MonomialIdeal(R3, gens).to_ideal()
        txt = ["x1", "x2", "x3"] if kind == "vars" else ["x1 + x2", "x2 + x3", "x3"]
        rep = is_d_sequence_on_rees(I, forms(I, txt))
        if rep.passed:
            for k in (1, 2, 3):
                assert is_componentwise_linear(ideal_power(I, k).monomial_ideal())
