"""The transition recursion and its Grassmannian expansions."""

import pytest

from ktrans.expand import (
    expand_grassmannian,
    expansion_poly,
    load_cache,
    save_cache,
    skew_expansion,
    transition_step,
    verify_expansion,
)
from ktrans.rings import TruncPoly
from ktrans.tableaux import ShiftedSkewShape, gp, w_shape
from ktrans.weyl import group_elements, ld_less, length, parse_oneline

GOLDEN_W = parse_oneline("-3,4,-1,5,2")

GOLDEN_B_TERMS = {
    (4, 2, 1): 4,
    (4, 3): 2,
    (5, 2): 2,
    (4, 3, 1): 5,
    (5, 2, 1): 5,
    (5, 3): 3,
    (5, 3, 1): 6,
}

GOLDEN_C_TERMS = {
    (4, 2, 1): 2,
    (4, 3): 2,
    (5, 2): 2,
    (4, 3, 1): 3,
    (5, 2, 1): 3,
    (5, 3): 3,
    (5, 3, 1): 4,
}


class TestTransitionStep:
    @pytest.mark.parametrize("t", ["B", "C"])
    def test_golden_five_terms(self, t):
        step = transition_step(t, GOLDEN_W)
        expect = {
            parse_oneline("-3,4,2,-1"): TruncPoly.const(1),
            parse_oneline("-3,4,-2,1"): TruncPoly.const(1),
            parse_oneline("-3,4,-2,-1"): TruncPoly.beta(1),
            parse_oneline("-3,4,1,-2"): TruncPoly.beta(1),
            parse_oneline("-3,4,-1,-2"): TruncPoly.beta(2),
        }
        assert step == expect

    def test_b_simple_reflection(self):
        # F^B of 21 expands as 2 GP_1 + beta GP_2 symbols, i.e. GQ_1
        step = transition_step("B", parse_oneline("2,1"))
        assert step == {
            parse_oneline("-1"): TruncPoly.const(2),
            parse_oneline("-2,1"): TruncPoly.beta(1),
        }

    def test_rejects_grassmannian(self):
        with pytest.raises(ValueError):
            transition_step("B", parse_oneline("-2,1"))

    @pytest.mark.parametrize("t", ["B", "C", "D"])
    def test_outputs_descend_in_ld_order(self, t):
        for w in group_elements(t, 3):
            if not w.descents():
                continue
            for u, coeff in transition_step(t, w).items():
                assert ld_less(u, w)
                assert all(c > 0 for c in coeff.terms.values())


class TestExpand:
    def test_golden_type_b(self):
        assert expand_grassmannian("B", GOLDEN_W).terms == GOLDEN_B_TERMS

    def test_golden_type_c(self):
        assert expand_grassmannian("C", GOLDEN_W).terms == GOLDEN_C_TERMS

    def test_grassmannian_input_is_single_term(self):
        w = parse_oneline("-2,1")
        result = expand_grassmannian("B", w)
        assert result.terms == {(2,): 1}
        assert result.basis == "GP"

    def test_json_schema(self):
        doc = expand_grassmannian("B", GOLDEN_W).to_json_dict()
        assert doc["type"] == "B"
        assert doc["w"] == [-3, 4, -1, 5, 2]
        assert doc["length"] == 7
        assert doc["basis"] == "GP"
        by_lambda = {tuple(t["lambda"]): t for t in doc["terms"]}
        assert by_lambda[(4, 2, 1)]["coeff"] == 4
        assert by_lambda[(4, 2, 1)]["beta_power"] == 0
        assert by_lambda[(5, 3, 1)]["beta_power"] == 2

    @pytest.mark.parametrize("t", ["B", "C", "D"])
    def test_beta_powers_respect_homogeneity(self, t):
        for w in group_elements(t, 3):
            result = expand_grassmannian(t, w)
            for lam, coeff in result.terms.items():
                assert coeff > 0
                assert sum(lam) >= result.length or not lam


class TestSkew:
    def test_b_and_d_routes_agree(self):
        for lam, mu in (((5, 3, 1), (2,)), ((4, 2), (1,)), ((3, 2, 1), ())):
            sh = ShiftedSkewShape(lam, mu)
            eB = expand_grassmannian("B", w_shape("B", sh))
            eD = expand_grassmannian("D", w_shape("D", sh))
            assert eB.terms == eD.terms, (lam, mu)

    def test_route_redundancy_exhaustive_small(self):
        # every skew shape inside the staircase (4,3,2,1)
        shapes = []
        from ktrans.tableaux import contains

        def strict_parts(maxi):
            out = [()]

            def rec(prefix, top):
                for p in range(top, 0, -1):
                    cand = prefix + (p,)
                    if contains((4, 3, 2, 1), cand):
                        out.append(cand)
                        rec(cand, p - 1)

            rec((), 4)
            return out

        for lam in strict_parts(4):
            for mu in strict_parts(4):
                if contains(lam, mu):
                    shapes.append((lam, mu))
        for lam, mu in shapes:
            sh = ShiftedSkewShape(lam, mu)
            eB = expand_grassmannian("B", w_shape("B", sh))
            eD = expand_grassmannian("D", w_shape("D", sh))
            assert eB.terms == eD.terms, (lam, mu)

    def test_trivial_straight_shape(self):
        assert skew_expansion("GQ", (3,)).terms == {(3,): 1}
        assert skew_expansion("GP", (3, 1)).terms == {(3, 1): 1}

    def test_gs_function_is_nonnegative(self):
        result = skew_expansion("GP", (2,), (1,))
        assert result.terms == {(1,): 2, (2,): 1}

    def test_skew_beta_power_convention(self):
        # beta powers are |nu| + |mu| - |lambda|
        result = skew_expansion("GP", (5, 3, 1), (2,))
        for lam in result.terms:
            assert result.beta_power(lam) == sum(lam) + 2 - 9

    def test_rejects_non_contained(self):
        with pytest.raises(ValueError):
            skew_expansion("GP", (2,), (3,))


class TestVerify:
    def test_gq_one_case(self):
        rep = verify_expansion("C", parse_oneline("-1"), 2, 3)
        assert rep.ok

    def test_d_grassmannian_case(self):
        rep = verify_expansion("D", parse_oneline("-2,-1"), 2, 3)
        assert rep.ok

    def test_skew_gp_case(self):
        sh = ShiftedSkewShape((2,), (1,))
        rep = verify_expansion("B", w_shape("B", sh), 3, 5)
        assert rep.ok
        assert expansion_poly(rep.expansion, 3, 5) == gp(sh, 3, 5)

    @pytest.mark.parametrize("t", ["B", "C", "D"])
    def test_oracle_agreement_rank_three(self, t):
        for w in group_elements(t, 3):
            if length(t, w) <= 4:
                assert verify_expansion(t, w, 3, 6).ok, (t, str(w))

    def test_golden_element_deep_truncation(self):
        assert verify_expansion("B", GOLDEN_W, 3, 8).ok


class TestCachePersistence:
    def test_round_trip(self, tmp_path):
        expand_grassmannian("B", GOLDEN_W)
        path = str(tmp_path / "expansions.ktrx")
        count = save_cache(path)
        assert count >= 1

        from ktrans import expand as expand_mod

        saved = dict(expand_mod._cache)
        expand_mod._cache.clear()
        loaded = load_cache(path)
        assert loaded == count
        assert expand_mod._cache == saved
        assert expand_grassmannian("B", GOLDEN_W).terms == GOLDEN_B_TERMS

    def test_rejects_garbage(self, tmp_path):
        path = tmp_path / "bad.ktrx"
        path.write_bytes(b"not a cache")
        with pytest.raises(ValueError):
            load_cache(str(path))
