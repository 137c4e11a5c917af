import math
import pytest
import numpy as np
from hypothesis import given, settings, strategies as st
from Models.errors import InvalidParams, NoPositiveStart
from Models.radius import (Theorem, Branch, RadiusValue, RadiusQuery, radius_janowski, radius_formula,
                           proof_polynomial, quad_root_oracle)

ALPHAS = [0, 0.25, 0.5, 0.75, 0.99]
PHASES = np.exp(2j * np.pi * np.arange(8) / 8)
A_VALUES = [m * phase for m in (1.1, 2, 5) for phase in PHASES]
B_VALUES = [m * phase for m in (0, 0.5, 1) for phase in PHASES]


def oracle(query):
    return quad_root_oracle(*proof_polynomial(query))


class TestRadiusQuery:

    def test_from_dict(self):
        query = RadiusQuery.from_dict({"theorem": "T41", "alpha": 0.25, "A": [2, 0], "B": [-1, 0]})
        assert query.theorem == Theorem.T41
        assert query.A == 2 and query.B == -1
        assert RadiusQuery.from_dict(query.to_dict()) == query

    def test_badly_typed_fields(self):
        with pytest.raises(InvalidParams, match="gamma"):
            RadiusQuery.from_dict({"theorem": "t42", "gamma": "one"})
        with pytest.raises(InvalidParams, match="A"):
            RadiusQuery.from_dict({"theorem": "t41", "A": "2+0", "B": [0, 0]})
        with pytest.raises(InvalidParams, match="alpha"):
            RadiusQuery.from_dict({"theorem": "t44", "alpha": [0]})

    def test_parameter_ranges(self):
        """ Each theorem enforces its own parameter domain. """
        with pytest.raises(InvalidParams):
            RadiusQuery(Theorem.T41, A=1, B=0)
        with pytest.raises(InvalidParams):
            RadiusQuery(Theorem.T41, A=2, B=1.5)
        with pytest.raises(InvalidParams):
            RadiusQuery(Theorem.T41, A=2)
        with pytest.raises(InvalidParams):
            RadiusQuery(Theorem.T42, gamma=0.5)
        with pytest.raises(InvalidParams):
            RadiusQuery(Theorem.T45, beta=0)
        with pytest.raises(InvalidParams):
            RadiusQuery(Theorem.T46, k=1)
        with pytest.raises(InvalidParams):
            RadiusQuery(Theorem.T44, alpha=1)
        with pytest.raises(InvalidParams):
            RadiusQuery("t47")
        with pytest.raises(InvalidParams):
            RadiusQuery.from_dict({"alpha": 0})

    def test_radius_value_range(self):
        with pytest.raises(InvalidParams):
            RadiusValue(0.0, Branch.linear)
        with pytest.raises(InvalidParams):
            RadiusValue(1.5, Branch.quadratic)
        assert str(RadiusValue(0.5, Branch.linear)) == "r=0.5 branch=linear"

    def test_string_representation(self):
        assert str(RadiusQuery(Theorem.T45, beta=1)) == "t45(alpha=0.0, beta=1)"


class TestFormulas:

    def test_janowski_corollaries(self):
        """ A=2 with B = 1, -1 or 0 all give 1/2 at alpha = 0. """
        assert radius_janowski(2, 1, 0).r == 0.5
        assert radius_janowski(2, -1, 0).r == 0.5
        value = radius_janowski(2, 0, 0)
        assert value.r == 0.5 and value.branch == Branch.linear

    def test_janowski_alpha_corollaries(self):
        """ B = 1 gives (alpha-2)/(alpha-4); B = -1 gives (2-alpha)/(4+alpha). """
        for alpha in (0, 0.25, 0.5, 0.75):
            assert radius_janowski(2, 1, alpha).r == pytest.approx((alpha - 2) / (alpha - 4), abs=1e-14)
            assert radius_janowski(2, -1, alpha).r == pytest.approx((2 - alpha) / (4 + alpha), abs=1e-14)

    def test_janowski_degenerate_quadratic(self):
        """ alpha |B|^2 = 2 Re(A conj B) leaves the linear remainder. """
        value = radius_janowski(2j, 1, 0)
        assert value.branch == Branch.linear
        assert value.r == pytest.approx(2 / (2 * abs(1 - 2j)), abs=1e-14)

    def test_theorem_formulas(self):
        assert radius_formula(RadiusQuery(Theorem.T42, gamma=1)).r == 1
        assert radius_formula(RadiusQuery(Theorem.T42, gamma=1)).branch == Branch.whole_disc
        assert radius_formula(RadiusQuery(Theorem.T44)).r == pytest.approx(2 - math.sqrt(3), abs=1e-12)
        assert radius_formula(RadiusQuery(Theorem.T46, k=2)).r == 1
        assert radius_formula(RadiusQuery(Theorem.T46, k=4)).r == pytest.approx(2 - math.sqrt(3), abs=1e-12)
        assert radius_formula(RadiusQuery(Theorem.T45, beta=1)).r == 0.5
        assert radius_formula(RadiusQuery(Theorem.T45, beta=1)).branch == Branch.linear

    def test_printed_forms(self):
        """ The rationalised roots equal the unrationalised closed forms. """
        for alpha in (0.25, 0.5, 0.75):
            for gamma in (1.5, 2, 4):
                printed = (gamma - math.sqrt(alpha ** 2 + gamma ** 2 - 1)) / (1 - alpha)
                r = radius_formula(RadiusQuery(Theorem.T42, alpha, gamma=gamma)).r
                assert r == pytest.approx(min(printed, 1), abs=1e-12)
            printed = (2 - math.sqrt(3 + alpha ** 2)) / (1 - alpha)
            assert radius_formula(RadiusQuery(Theorem.T44, alpha)).r == pytest.approx(printed, abs=1e-12)
            for k in (4, 8):
                printed = (k - math.sqrt(k ** 2 - 4 * (1 - alpha ** 2))) / (2 * (1 - alpha))
                assert radius_formula(RadiusQuery(Theorem.T46, alpha, k=k)).r == pytest.approx(printed, abs=1e-12)

    def test_t43_is_whole_disc(self):
        for alpha in ALPHAS:
            value = radius_formula(RadiusQuery(Theorem.T43, alpha))
            assert value.r == 1 and value.branch == Branch.whole_disc

    def test_domain_errors(self):
        with pytest.raises(InvalidParams):
            radius_janowski(0.5, 0, 0)
        with pytest.raises(InvalidParams):
            radius_janowski(2, 0, -0.1)


class TestOracle:

    def test_examples(self):
        assert quad_root_oracle(-4, -2, 2).r == pytest.approx(0.5, abs=1e-10)
        assert quad_root_oracle(1, -4, 1).r == pytest.approx(2 - math.sqrt(3), abs=1e-10)
        assert quad_root_oracle(0, 0, 1).branch == Branch.whole_disc
        assert quad_root_oracle(0, -3, 1).branch == Branch.linear

    def test_no_positive_start(self):
        with pytest.raises(NoPositiveStart):
            quad_root_oracle(1, 1, 0)
        with pytest.raises(NoPositiveStart):
            quad_root_oracle(0, 0, -1)

    def test_janowski_sweep(self):
        """ Closed form and bisection agree on the Janowski parameter sweep. """
        for alpha in ALPHAS:
            for A in A_VALUES:
                for B in B_VALUES:
                    query = RadiusQuery(Theorem.T41, alpha, A=A, B=B)
                    formula = radius_janowski(A, B, alpha)
                    assert formula.r == pytest.approx(oracle(query).r, abs=1e-10), \
                        f"Formula and oracle disagree at A={A}, B={B}, alpha={alpha}"
                    assert 0 < formula.r <= 1

    def test_theorem_sweep(self):
        queries = []
        for alpha in ALPHAS:
            queries += [RadiusQuery(Theorem.T42, alpha, gamma=gamma) for gamma in (1, 2, 4)]
            queries += [RadiusQuery(Theorem.T46, alpha, k=k) for k in (2, 4, 8)]
            queries += [RadiusQuery(Theorem.T45, alpha, beta=beta) for beta in (0.25, 1)]
            queries += [RadiusQuery(Theorem.T43, alpha), RadiusQuery(Theorem.T44, alpha)]
        for query in queries:
            assert radius_formula(query).r == pytest.approx(oracle(query).r, abs=1e-10), str(query)


class TestMonotonicity:

    @settings(max_examples=60, deadline=None)
    @given(st.floats(0, 0.99), st.floats(1.01, 10), st.floats(0, 5))
    def test_nonincreasing_in_A(self, alpha, modulus, extra):
        smaller = radius_janowski(modulus, 0, alpha).r
        larger = radius_janowski(modulus + extra, 0, alpha).r
        assert larger <= smaller + 1e-15

    @settings(max_examples=60, deadline=None)
    @given(st.floats(0, 0.99), st.floats(1, 10), st.floats(0, 5))
    def test_nonincreasing_in_gamma(self, alpha, gamma, extra):
        smaller = radius_formula(RadiusQuery(Theorem.T42, alpha, gamma=gamma)).r
        larger = radius_formula(RadiusQuery(Theorem.T42, alpha, gamma=gamma + extra)).r
        assert larger <= smaller + 1e-12

    @settings(max_examples=60, deadline=None)
    @given(st.floats(0, 0.99), st.floats(2, 20), st.floats(0, 5))
    def test_nonincreasing_in_k(self, alpha, k, extra):
        smaller = radius_formula(RadiusQuery(Theorem.T46, alpha, k=k)).r
        larger = radius_formula(RadiusQuery(Theorem.T46, alpha, k=k + extra)).r
        assert larger <= smaller + 1e-12

    @settings(max_examples=60, deadline=None)
    @given(st.floats(0, 0.99), st.floats(0.01, 1), st.floats(0, 1))
    def test_nonincreasing_in_beta(self, alpha, beta, fraction):
        bigger_beta = beta + fraction * (1 - beta)
        assert (radius_formula(RadiusQuery(Theorem.T45, alpha, beta=bigger_beta)).r
                <= radius_formula(RadiusQuery(Theorem.T45, alpha, beta=beta)).r + 1e-15)
