"""Polynomial arithmetic, the pi operators, and the localized y-ring."""

import random

import pytest

from ktrans.rings import (
    BETA,
    ONE,
    FCombo,
    TruncPoly,
    YRational,
    ominus_series,
    ominus_y,
    parse_poly,
    pi_operator,
    poly_str,
    star_action,
    supersym_check,
    xvar,
    yrational_str,
    yvar,
    zvar,
)
from ktrans.weyl import group_elements, identity, parse_oneline, reflection


def random_poly(rng, nvars=4, max_deg=4, terms=6):
    p = TruncPoly.zero()
    for _ in range(terms):
        term = TruncPoly.const(rng.randint(-3, 3))
        budget = rng.randint(0, max_deg)
        for _ in range(budget):
            term = term * xvar(rng.randint(1, nvars))
        if rng.random() < 0.3:
            term = term * BETA
        p = p + term
    return p


class TestTruncPoly:
    def test_basic_identities(self):
        x1, x2 = xvar(1), xvar(2)
        assert x1 + x2 == x2 + x1
        assert (x1 + x2) * x1 == x1 * x1 + x2 * x1
        assert x1 - x1 == TruncPoly.zero()
        assert ONE * x1 == x1

    def test_ring_laws_random(self):
        rng = random.Random(7)
        for _ in range(10):
            a, b, c = (random_poly(rng, terms=4) for _ in range(3))
            assert a * b == b * a
            assert (a * b) * c == a * (b * c)
            assert a * (b + c) == a * b + a * c

    def test_truncation_commutes_with_arithmetic(self):
        rng = random.Random(11)
        for _ in range(10):
            a, b = random_poly(rng), random_poly(rng)
            assert (a * b).with_bound(3) == (a.with_bound(3) * b.with_bound(3)).with_bound(3)
            assert (a + b).with_bound(3) == (a.with_bound(3) + b.with_bound(3))

    def test_beta_never_truncated(self):
        p = (BETA ** 5 * xvar(1)).with_bound(2)
        assert not p.is_zero()

    def test_divide_beta(self):
        p = BETA * xvar(1) + BETA * BETA
        assert p.divide_beta() == xvar(1) + BETA
        with pytest.raises(ArithmeticError):
            xvar(1).divide_beta()

    def test_homogeneous_degree(self):
        assert (xvar(1) + yvar(2) + BETA * xvar(1) * xvar(2)).homogeneous_degree() == 1
        assert (xvar(1) + xvar(1) * xvar(2)).homogeneous_degree() is None


class TestRendering:
    def test_examples(self):
        assert poly_str(2 * zvar(1) + BETA * zvar(1) * zvar(1)) == "2*z1 + b*z1^2"
        assert poly_str(TruncPoly.zero()) == "0"
        assert poly_str(TruncPoly.const(-1) * xvar(1) + yvar(2)) == "y2 - x1"

    def test_round_trip(self):
        rng = random.Random(3)
        for _ in range(20):
            p = random_poly(rng) + random_poly(rng) * yvar(rng.randint(1, 3))
            assert parse_poly(poly_str(p)) == p

    def test_yrational_rendering(self):
        f = YRational(yvar(1) * BETA * 5, {1: 1})
        assert yrational_str(f) == "5*b*y1/(1+b*y1)"

    def test_yrational_round_trip(self):
        from ktrans.rings import parse_yrational

        cases = [
            YRational(yvar(1) * BETA * 5, {1: 1}),
            YRational.const(4)
            + YRational(yvar(1) * BETA * 5, {1: 1})
            + YRational.from_poly(6 * BETA * BETA * zvar(1) * zvar(2)),
            YRational(yvar(2), {1: 2, 3: 1}),
            YRational.const(0),
            YRational.const(-3) + YRational(-1 * yvar(1), {1: 1}),
        ]
        for f in cases:
            assert parse_yrational(yrational_str(f)) == f


class TestPiOperator:
    def test_kills_x1(self):
        assert pi_operator(1, xvar(1)) == ONE

    def test_constant_gives_minus_beta(self):
        c = TruncPoly.const(5)
        assert pi_operator(1, c) == -5 * BETA

    def test_symmetric_input(self):
        f = xvar(1) * xvar(2)
        assert pi_operator(1, f) == -1 * BETA * f

    def test_idempotent_up_to_beta(self):
        rng = random.Random(5)
        for _ in range(5):
            f = random_poly(rng)
            pf = pi_operator(2, f)
            assert pi_operator(2, pf) == -1 * BETA * pf

    def test_braid_and_commuting_relations(self):
        rng = random.Random(9)
        for _ in range(5):
            f = random_poly(rng)
            for i in (1, 2):
                lhs = pi_operator(i, pi_operator(i + 1, pi_operator(i, f)))
                rhs = pi_operator(i + 1, pi_operator(i, pi_operator(i + 1, f)))
                assert lhs == rhs
            assert pi_operator(1, pi_operator(3, f)) == pi_operator(3, pi_operator(1, f))


class TestOminus:
    def test_zero(self):
        assert ominus_series(TruncPoly.zero(), 3) == TruncPoly.zero(3)

    def test_geometric_expansion(self):
        t = zvar(1)
        expect = -1 * t + BETA * t * t - BETA * BETA * t * t * t
        assert ominus_series(t, 3) == expect.with_bound(3)

    def test_involution(self):
        t = zvar(1)
        assert ominus_series(ominus_series(t, 4), 4) == t.with_bound(4)


class TestYRational:
    def test_add_zero(self):
        f = YRational(yvar(1), {1: 1})
        assert f + YRational.const(0) == f

    def test_unit_inverse(self):
        assert YRational.inverse_unit(1) * (ONE + BETA * yvar(1)) == YRational.const(1)

    def test_ominus_convention(self):
        # 1/(1 + beta*y_{-1}) = 1 + beta*y_1
        lhs = YRational.const(1) + BETA * ominus_y(1)
        assert lhs * (ONE + BETA * yvar(1)) == YRational.const(1)

    def test_normalization(self):
        f = YRational((ONE + BETA * yvar(2)) * yvar(1), {2: 1})
        assert f == YRational.from_poly(yvar(1))
        assert f.den == {}

    def test_homogeneity_additive(self):
        f = YRational(yvar(1), {2: 1})
        g = YRational(BETA * yvar(1) * yvar(3), {1: 2})
        assert (f * g).homogeneous_degree() == f.homogeneous_degree() + g.homogeneous_degree()


class TestStarAction:
    def test_identity(self):
        f = YRational(yvar(1), {2: 1})
        assert star_action(identity(), f) == f

    def test_sign_change(self):
        t0 = reflection(0, 1)
        assert star_action(t0, YRational.from_poly(yvar(1))) == ominus_y(1)
        twice = star_action(t0, star_action(t0, YRational.from_poly(yvar(1))))
        assert twice == YRational.from_poly(yvar(1))

    def test_group_action_on_rank_two(self):
        probes = [
            YRational.from_poly(yvar(1)),
            YRational.from_poly(yvar(2)),
            YRational(yvar(1), {2: 1}),
        ]
        elems = group_elements("B", 2)
        for u in elems:
            for v in elems:
                for f in probes:
                    assert star_action(u * v, f) == star_action(u, star_action(v, f))


class TestSupersym:
    def test_constant(self):
        assert supersym_check(ONE.with_bound(4), 3, 4)

    def test_single_variable_fails(self):
        assert not supersym_check(zvar(1).with_bound(4), 3, 4)

    def test_gp_one_passes(self):
        # e_1 + beta e_2 + beta^2 e_3 in three variables
        e1 = zvar(1) + zvar(2) + zvar(3)
        e2 = zvar(1) * zvar(2) + zvar(1) * zvar(3) + zvar(2) * zvar(3)
        e3 = zvar(1) * zvar(2) * zvar(3)
        f = (e1 + BETA * e2 + BETA * BETA * e3).with_bound(4)
        assert supersym_check(f, 3, 4)

    def test_needs_two_variables(self):
        with pytest.raises(ValueError):
            supersym_check(ONE, 1, 3)


class TestFCombo:
    def test_drops_zero_coefficients(self):
        w = parse_oneline("2,1")
        c = FCombo("B", {w: TruncPoly.zero()})
        assert len(c) == 0

    def test_add_and_scale(self):
        w = parse_oneline("2,1")
        c = FCombo("B", {w: ONE})
        d = c + c.scale(BETA)
        assert d.terms[w] == ONE + BETA
        c.add_term(w, -1 * ONE)
        assert len(c) == 0
