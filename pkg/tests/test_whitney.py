"""Whitney triangles, Dowling polynomials, r-variants and the Dobinski series."""

from fractions import Fraction

import pytest

from dowlab.exact import LAMBDA, LambdaPoly
from dowlab import stirling as st
from dowlab import whitney as wh

l = LAMBDA


class TestSecondKind:
    @pytest.mark.parametrize("m", (1, 2, 3))
    def test_row_two(self, m):
        assert wh.whitney2(m, 2, 1) == LambdaPoly((m + 2, -1))

    @pytest.mark.parametrize("m", (1, 2, 3))
    def test_column_zero(self, m):
        from dowlab.bases import lambda_falling

        for n in range(9):
            assert wh.whitney2(m, n, 0) == lambda_falling(1, n, l)

    def test_classical_limit_row(self):
        values = [wh.whitney2(1, 3, k).eval(0) for k in range(4)]
        assert values == [1, 7, 6, 1]
        assert values == [st.stirling2(4, k + 1) for k in range(4)]

    def test_index_error(self):
        with pytest.raises(IndexError):
            wh.whitney2(1, 2, 3)

    def test_or_zero_accessors(self):
        assert wh.whitney2_or_zero(2, 1, 2) == LambdaPoly()
        assert wh.whitney2_or_zero(2, 3, -1) == LambdaPoly()
        assert wh.whitney2_or_zero(2, 2, 1) == wh.whitney2(2, 2, 1)
        assert wh.whitney1_or_zero(2, 1, 2) == LambdaPoly()
        assert wh.whitney1_or_zero(2, 2, 1) == wh.whitney1(2, 2, 1)

    def test_m_validation(self):
        with pytest.raises(ValueError):
            wh.whitney2(0, 1, 0)
        with pytest.raises(ValueError):
            wh.WhitneyParams(1, 0)

    @pytest.mark.parametrize("m", (1, 2, 3))
    def test_three_routes_agree(self, m):
        n_max = 8
        assert wh.whitney2_rows(m, n_max) == wh.whitney2_rows_newton(m, n_max)
        assert wh.whitney2_rows(m, n_max) == wh.whitney2_rows_gf(m, n_max)


class TestFirstKind:
    @pytest.mark.parametrize("m", (1, 2, 3))
    def test_diagonal_is_one(self, m):
        for n in range(9):
            assert wh.whitney1(m, n, n) == LambdaPoly((1,))

    @pytest.mark.parametrize("m", (1, 2, 3))
    def test_row_two(self, m):
        assert wh.whitney1(m, 2, 1) == LambdaPoly((-m - 2, 1))
        assert wh.whitney1(m, 2, 0) == LambdaPoly((m + 1,))

    @pytest.mark.parametrize("m", (1, 2, 3))
    def test_column_zero_closed_form(self, m):
        for n in range(9):
            assert wh.whitney1(m, n, 0) == wh.v0(m, n)

    @pytest.mark.parametrize("m", (1, 2, 3))
    def test_three_routes_agree(self, m):
        n_max = 8
        assert wh.whitney1_rows(m, n_max) == wh.whitney1_rows_newton(m, n_max)
        assert wh.whitney1_rows(m, n_max) == wh.whitney1_rows_gf(m, n_max)


class TestAlternativeFormulas:
    @pytest.mark.parametrize("path", ("sum_T12", "stirling_T13", "gf_T1"))
    def test_second_kind_sample(self, path):
        assert wh.whitney2_alt(2, 2, 1, path) == LambdaPoly((4, -1))

    @pytest.mark.parametrize("path", ("quad_T8", "v0_T18", "stirling_T19", "gf_T5"))
    def test_first_kind_sample(self, path):
        assert wh.whitney1_alt(1, 2, 1, path) == LambdaPoly((-3, 1))

    def test_sum_vanishes_above_diagonal(self):
        for m in (1, 2):
            for k in range(1, 6):
                for n in range(k):
                    assert wh.whitney2_alt(m, n, k, "sum_T12").is_zero()

    def test_m_one_note(self):
        # second-kind at m=1: binomial sum of (1)_{n-i,l} against plain S2deg
        from dowlab.bases import binom, lambda_falling

        for n in range(7):
            for k in range(n + 1):
                acc = LambdaPoly()
                for i in range(k, n + 1):
                    acc = acc + st.deg_stirling2(i, k) * lambda_falling(1, n - i, l) * binom(n, i)
                assert acc == wh.whitney2(1, n, k)

    def test_forward_difference_path(self):
        for m in (1, 2):
            for n in range(7):
                for k in range(n + 1):
                    assert wh.whitney2_diff(m, n, k) == wh.whitney2(m, n, k)

    def test_unknown_path_rejected(self):
        with pytest.raises(ValueError):
            wh.whitney2_alt(1, 2, 1, "nosuch")
        with pytest.raises(ValueError):
            wh.whitney1_alt(1, 2, 1, "nosuch")

    def test_classical_limit_of_quad_path(self):
        from dowlab.bases import binom

        m, n, k = 2, 5, 2
        got = wh.whitney1_alt(m, n, k, "quad_T8").eval(0)
        expect = sum(
            binom(q, k) * (-1) ** (q - k) * st.stirling1(n, q) * m ** (n - q)
            for q in range(k, n + 1)
        )
        assert got == expect


class TestStructural:
    @pytest.mark.parametrize("m", (1, 2, 3))
    def test_orthogonality_to_twelve(self, m):
        n_max = 12
        v_rows = wh.whitney1_rows(m, n_max)
        w_rows = wh.whitney2_rows(m, n_max)
        for n in range(n_max + 1):
            for j in range(n + 1):
                acc = LambdaPoly()
                for k in range(j, n + 1):
                    acc = acc + v_rows[n][k] * w_rows[k][j]
                assert acc == LambdaPoly.const(1 if n == j else 0)

    def test_second_kind_stirling_link_to_twelve(self):
        # m = 1 rows against shifted second-kind degenerate Stirling numbers
        for n in range(13):
            for k in range(n + 1):
                rhs = st.deg_stirling2(n + 1, k + 1)
                if k + 1 <= n:
                    rhs = rhs + l * n * st.deg_stirling2(n, k + 1)
                assert wh.whitney2(1, n, k) == rhs


class TestDowling:
    def test_row_polynomial(self):
        assert wh.dowling_poly(1, 2, 1) == LambdaPoly((5, -2))
        assert wh.dowling_poly(3, 0, Fraction(7, 2)) == LambdaPoly((1,))

    def test_bell_relation_spot(self):
        n = 2
        lhs = wh.dowling_number(1, n)
        rhs = st.deg_bell_number(n + 1) + l * n * st.deg_bell_number(n)
        assert lhs == rhs == LambdaPoly((5, -2))

    def test_tanny_dowling(self):
        assert wh.tanny_dowling_poly(1, 0, Fraction(1, 3)) == LambdaPoly((1,))
        assert wh.tanny_dowling_poly(1, 2, 1) == LambdaPoly((6, -2))

    def test_tanny_dowling_gf_oracle(self):
        series = wh.tanny_dowling_gf(1, 1, 4)
        assert series.coeff(2) == LambdaPoly((6, -2))
        for n in range(5):
            assert series.coeff(n) == wh.tanny_dowling_poly(1, n, 1)


class TestRWhitney:
    def test_row_one(self):
        for m in (1, 2, 3):
            for r in (1, 2, 3):
                assert wh.r_whitney2(m, r, 1, 0) == LambdaPoly((r,))
                assert wh.r_whitney2(m, r, 1, 1) == LambdaPoly((1,))
                assert wh.r_whitney1(m, r, 1, 0) == LambdaPoly((-r,))
                assert wh.r_whitney1(m, r, 1, 1) == LambdaPoly((1,))

    @pytest.mark.parametrize("m", (1, 2, 3))
    def test_r_one_reduction(self, m):
        assert wh.r_whitney2_rows(m, 1, 8) == wh.whitney2_rows(m, 8)
        assert wh.r_whitney1_rows(m, 1, 8) == wh.whitney1_rows(m, 8)

    @pytest.mark.parametrize("r", (1, 2, 3))
    def test_m_one_reduction(self, r):
        assert wh.r_whitney2_rows(1, r, 8) == st.deg_r_stirling2_rows(r, 8)
        signs = wh.r_whitney1_rows(1, r, 8)
        brackets = st.deg_r_stirling1_unsigned_rows(r, 8)
        for n in range(9):
            for k in range(n + 1):
                sign = -1 if (n - k) % 2 else 1
                assert signs[n][k] == brackets[n][k] * sign

    @pytest.mark.parametrize("m", (1, 2, 3))
    @pytest.mark.parametrize("r", (1, 2, 3))
    def test_direct_route_matches_substitution(self, m, r):
        assert wh.r_whitney1_rows_direct(m, r, 6) == wh.r_whitney1_rows(m, r, 6)

    @pytest.mark.parametrize("m", (1, 2))
    @pytest.mark.parametrize("r", (1, 2))
    def test_gf_routes(self, m, r):
        assert wh.r_whitney2_rows_gf(m, r, 6) == wh.r_whitney2_rows(m, r, 6)
        assert wh.r_whitney1_rows_gf(m, r, 6) == wh.r_whitney1_rows(m, r, 6)

    def test_validation(self):
        with pytest.raises(ValueError):
            wh.r_whitney2(1, 0, 1, 0)
        with pytest.raises(ValueError):
            wh.r_whitney1(0, 1, 1, 0)


class TestDobinski:
    def test_closed_form_two(self):
        req = wh.DobinskiRequest(m=1, n=1, x=Fraction(1), lam=Fraction(0), terms=50)
        truncated, exact = wh.dobinski_eval(req)
        assert exact == 2.0
        assert abs(truncated - exact) < 1e-9

    def test_order_zero_is_one(self):
        for m in (1, 2, 3):
            req = wh.DobinskiRequest(m=m, n=0, x=Fraction(3), lam=Fraction(1, 2), terms=100)
            truncated, exact = wh.dobinski_eval(req)
            assert exact == 1.0
            assert abs(truncated - 1.0) < 1e-9

    def test_quarter_lambda(self):
        req = wh.DobinskiRequest(m=2, n=4, x=Fraction(1), lam=Fraction(1, 4), terms=200)
        truncated, exact = wh.dobinski_eval(req)
        assert abs(truncated - exact) < 1e-9

    def test_request_validation(self):
        with pytest.raises(ValueError):
            wh.DobinskiRequest(m=0, n=1, x=Fraction(1), lam=Fraction(0))
        with pytest.raises(ValueError):
            wh.DobinskiRequest(m=1, n=1, x=Fraction(1), lam=Fraction(0), terms=0)
        with pytest.raises(ValueError):
            wh.DobinskiRequest(m=1, n=1, x=Fraction(1), lam=Fraction(0), tol=0.0)


class TestTriangleBuilder:
    def test_families(self):
        samples = {
            "S1": LambdaPoly((2,)),
            "S2": LambdaPoly((1,)),
            "S1deg": l - 1,
            "S2deg": 1 - l,
            "Wdeg": LambdaPoly((3, -1)),
            "Vdeg": LambdaPoly((-3, 1)),
        }
        spots = {"S1": (3, 1), "S2": (3, 1), "S1deg": (2, 1), "S2deg": (2, 1),
                 "Wdeg": (2, 1), "Vdeg": (2, 1)}
        for family, expect in samples.items():
            n, k = spots[family]
            tri = wh.build_triangle(family, 1, 1, 3)
            assert tri.value(n, k) == expect

    def test_r_families(self):
        tri = wh.build_triangle("WdegR", 2, 3, 2)
        assert tri.value(1, 0) == LambdaPoly((3,))
        tri1 = wh.build_triangle("VdegR", 2, 3, 2)
        assert tri1.value(1, 0) == LambdaPoly((-3,))

    def test_bad_family(self):
        with pytest.raises(ValueError):
            wh.build_triangle("nosuch", 1, 1, 2)
