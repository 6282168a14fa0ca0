"""Type A Grothendieck polynomials, the Monk rule, and transitions."""

import pytest

from ktrans.groth_a import (
    apply_M_a,
    apply_R_a,
    combo_poly,
    groth_poly,
    groth_single,
    monk_identity_holds,
    transition_a,
    transition_data,
    transition_identity_holds,
    unit_combo,
)
from ktrans.rings import (
    BETA,
    ONE,
    YRational,
    pi_operator,
    xvar,
    yrational_str,
    yvar,
)
from ktrans.weyl import group_elements, identity, length, parse_oneline, reflection


def oplus(a, b):
    return a + b + BETA * a * b


class TestGrothPoly:
    def test_identity(self):
        assert groth_poly(identity()) == ONE

    def test_staircase_product(self):
        expect = oplus(xvar(1), yvar(1)) * oplus(xvar(1), yvar(2)) * oplus(xvar(2), yvar(1))
        assert groth_poly(parse_oneline("3,2,1")) == expect

    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_simple_reflection_product_formula(self, k):
        lhs = ONE + BETA * groth_poly(reflection(k, k + 1))
        rhs = ONE
        for i in range(1, k + 1):
            rhs = rhs * (ONE + BETA * xvar(i)) * (ONE + BETA * yvar(i))
        assert lhs == rhs

    def test_rejects_signed(self):
        with pytest.raises(ValueError):
            groth_poly(parse_oneline("-1"))

    def test_path_independence(self):
        # recompute every S_4 polynomial along the opposite descent strategy
        def groth_last_ascent(w, n):
            if w.window == tuple(range(n, 0, -1)):
                return groth_poly(w)
            i = max(i for i in range(1, n) if w(i) < w(i + 1))
            return pi_operator(i, groth_last_ascent(w * reflection(i, i + 1), n))

        for w in group_elements("A", 4):
            if w.is_identity():
                continue
            assert groth_last_ascent(w, 4) == groth_poly(w), str(w)

    def test_homogeneous_with_nonnegative_coefficients(self):
        for w in group_elements("A", 4):
            g = groth_poly(w)
            assert g.homogeneous_degree() == length("A", w)
            assert all(c > 0 for c in g.terms.values())

    def test_stability_under_inclusion(self):
        # embedding S_3 in S_4 adds a fixed point and does not change the poly
        w = parse_oneline("1,3,2")
        via_s4 = pi_operator(3, groth_poly(parse_oneline("1,3,4,2")))
        assert via_s4 == groth_poly(w)

    def test_beta_zero_degree(self):
        for w in group_elements("A", 4):
            g0 = groth_poly(w).coefficient_of_beta(0)
            lw = length("A", w)
            from ktrans.rings import mono_degree

            assert all(mono_degree(m) == lw for m in g0.terms)

    def test_single_polynomials(self):
        s1 = parse_oneline("2,1")
        assert groth_single(s1, "x") == xvar(1)
        assert groth_single(s1, "y") == yvar(1)


class TestOperators:
    def test_v_scaling_on_identity(self):
        out = apply_M_a(2, unit_combo(identity()))
        # the identity term keeps the bare unit scaling
        assert out.terms[identity()] == YRational.inverse_unit(2)

    def test_operator_coefficients_homogeneous(self):
        for u in group_elements("A", 3):
            for k in (1, 2):
                for w, c in apply_M_a(k, unit_combo(u)):
                    assert c.homogeneous_degree() is not None, (str(u), k, str(w))

    def test_monk_golden_example(self):
        # the six-term expansion of (1 + beta x_3) acting on the unit
        out = apply_M_a(3, unit_combo(identity()))
        got = {
            w.window: yrational_str(c)
            for w, c in out
        }
        assert got == {
            (): "1/(1+b*y3)",
            (1, 2, 4, 3): "b/(1+b*y3)",
            (1, 3, 2): "-b/(1+b*y2)",
            (1, 3, 4, 2): "-b^2/(1+b*y2)",
            (2, 3, 1): "b^2/(1+b*y1)",
            (2, 3, 4, 1): "b^3/(1+b*y1)",
        }

    def test_monk_golden_example_larger_support(self):
        out = apply_M_a(3, unit_combo(parse_oneline("1,3,4,5,2")))
        got = {w.window: yrational_str(c) for w, c in out}
        assert got == {
            (1, 3, 4, 5, 2): "1/(1+b*y4)",
            (1, 3, 5, 4, 2): "b/(1+b*y4)",
            (1, 4, 3, 5, 2): "-b/(1+b*y3)",
            (1, 4, 5, 3, 2): "-b^2/(1+b*y3)",
            (3, 4, 1, 5, 2): "b^2/(1+b*y1)",
            (3, 4, 2, 5, 1): "b^3/(1+b*y1)",
            (3, 4, 5, 1, 2): "b^3/(1+b*y1)",
            (3, 4, 5, 2, 1): "b^4/(1+b*y1)",
        }

    def test_r_one_is_identity_operator(self):
        c = unit_combo(parse_oneline("2,1"))
        assert apply_R_a(1, c) == c

    def test_r_two_fixes_s1(self):
        # no length-raising (1,2)-move exists past 21
        c = unit_combo(parse_oneline("2,1"))
        assert apply_R_a(2, c) == c

    @pytest.mark.parametrize("k", [1, 2, 3])
    def test_monk_identity_on_s3(self, k):
        for u in group_elements("A", 3):
            assert monk_identity_holds(u, k), (str(u), k)

    def test_x_factor_absorbs_r_operator(self):
        # (1 + beta x_k) R_k F equals the raising tail of M_k applied to F
        from ktrans.groth_a import _t_move
        from ktrans.rings import FCombo

        k = 2
        for w in group_elements("A", 3):
            lhs = YRational.from_poly(ONE + BETA * xvar(k)) * combo_poly(
                apply_R_a(k, unit_combo(w))
            )
            out = FCombo("A", {w: YRational.inverse_unit(w(k))})
            for l in range(max(k, w.support) + 1, k, -1):
                extra = FCombo("A")
                for u, c in out:
                    v = _t_move(u, k, l)
                    if v is not None:
                        extra.add_term(v, c * BETA)
                out = out + extra
            assert lhs == combo_poly(out), str(w)


class TestTransition:
    def test_data_for_s1(self):
        v, a, b, c = transition_data(parse_oneline("2,1"))
        assert (v, a, b, c) == (identity(), 1, 2, 1)

    def test_data_for_132(self):
        v, a, b, c = transition_data(parse_oneline("1,3,2"))
        assert (v, a, b, c) == (identity(), 2, 3, 2)

    def test_s1_identity_reduces_to_product(self):
        # G_21 = ((1+b y_1)(1+b x_1) - 1) / b
        bracket = (ONE + BETA * yvar(1)) * (ONE + BETA * xvar(1)) - ONE
        assert bracket.divide_beta() == groth_poly(parse_oneline("2,1"))

    def test_identity_input_rejected(self):
        with pytest.raises(ValueError):
            transition_a(identity())

    def test_exactness_and_identity_on_s4(self):
        for w in group_elements("A", 4):
            if w.descents():
                assert transition_identity_holds(w), str(w)
