import cmath
import math

import pytest
from scipy import special as sps

from photonstat.errors import DomainError, PoleError, RangeOverflowError
from photonstat.gaussian_state import OneModeGaussianState, r_matrix
from photonstat.specfun import (
    LogSigned,
    assoc_legendre,
    gauss_2f1_terminating,
    hermite,
    hermite_2d,
    hermite_log,
    laguerre_half,
    laguerre_half_sequence,
    log_factorial,
    logsigned_sum,
)


def hermite_series(n, z):
    """Independent oracle: explicit monomial sum H_n(z) = n! sum_m (-1)^m (2z)^(n-2m) / (m! (n-2m)!)."""
    total = 0j
    for m in range(n // 2 + 1):
        total += (
            (-1) ** m
            * (2 * z) ** (n - 2 * m)
            / (math.factorial(m) * math.factorial(n - 2 * m))
        )
    return math.factorial(n) * total


class TestHermite:
    def test_degree_zero_is_one(self):
        for z in (0, 2.5, 1 + 3j, -7.2):
            assert hermite(0, z) == 1

    def test_degree_one(self):
        assert hermite(1, 2 + 0j) == 4

    def test_even_value_at_origin(self):
        # closed form H_{2m}(0) = (-1)^m (2m)!/m!
        assert hermite(4, 0) == 12

    def test_recurrence_matches_series(self):
        zs = [0.0, 0.5, -1.0, 3.0, 5.0, 2 + 2j, -4 + 3j, 5j]
        for n in range(21):
            for z in zs:
                ref = hermite_series(n, complex(z))
                got = hermite(n, z)
                assert abs(got - ref) <= 1e-10 * max(abs(ref), 1.0)

    def test_matches_scipy_on_real_axis(self):
        for n in (3, 7, 12, 25):
            for x in (-2.5, 0.3, 4.0):
                assert hermite(n, x).real == pytest.approx(
                    float(sps.eval_hermite(n, x)), rel=1e-10
                )

    def test_conjugate_symmetry(self):
        for n in (3, 8, 15):
            for z in (1 + 2j, -0.5 + 0.25j, 3 - 4j):
                a = hermite(n, z.conjugate())
                b = hermite(n, z).conjugate()
                assert abs(a - b) <= 1e-14 * max(abs(a), 1.0)

    def test_negative_degree_rejected(self):
        with pytest.raises(DomainError):
            hermite(-1, 0.5)

    def test_overflow_raises_and_log_path_survives(self):
        with pytest.raises(RangeOverflowError):
            hermite(800, 30.0)
        ls = hermite_log(800, 30.0)
        assert math.isfinite(ls.log_magnitude)
        assert abs(abs(ls.sign_phase) - 1) < 1e-12


class TestHermite2d:
    def test_degree_zero_is_one(self):
        rm = r_matrix(OneModeGaussianState(1.5, 0.9, 0.3))
        assert hermite_2d(0, rm, 0, 0) == 1

    def test_symmetric_input_is_real(self):
        rm = r_matrix(OneModeGaussianState(1.5, 0.9, 0.3))
        y = 0.7 - 0.2j
        for n in range(8):
            val = hermite_2d(n, rm, y, y.conjugate())
            assert abs(val.imag) <= 1e-12 * max(abs(val), 1.0)

    def test_vanishing_off_diagonal_collapses_to_first_term(self):
        # det Sigma = 1/4 makes r12 = 0; the sum must equal its k = 0 term
        rm = r_matrix(OneModeGaussianState.squeezed_vacuum(0.8))
        assert rm.r12 == pytest.approx(0.0, abs=1e-15)
        y1, y2 = 0.4 + 0.1j, 0.4 - 0.1j
        rho = cmath.sqrt(rm.r11 * rm.r22)
        s1 = cmath.sqrt(rm.r11)
        s2 = rho / s1
        z1 = (rm.r11 * y1 + rm.r12 * y2) / (2 * s1)
        z2 = (rm.r12 * y1 + rm.r22 * y2) / (2 * s2)
        for n in range(1, 7):
            k0 = (rho / 2) ** n * hermite(n, z1) * hermite(n, z2)
            got = hermite_2d(n, rm, y1, y2)
            assert abs(got - k0) <= 1e-12 * max(abs(k0), 1e-30)

    def test_vacuum_r_matrix_annihilates_positive_degrees(self):
        rm = r_matrix(OneModeGaussianState.vacuum())
        for n in range(1, 10):
            assert hermite_2d(n, rm, 0, 0) == 0


class TestLaguerreHalf:
    def test_degree_zero(self):
        for x in (0.0, 1.7, -2.0):
            assert laguerre_half(0, x) == 1.0

    def test_degree_one(self):
        for x in (0.0, 0.3, 2.0):
            assert laguerre_half(1, x) == pytest.approx(0.5 - x, abs=1e-15)

    def test_value_at_origin(self):
        # L_n^a(0) = binom(n + a, n); for n = 2, a = -1/2 this is 3/8
        assert laguerre_half(2, 0.0) == pytest.approx(3 / 8, abs=1e-15)

    def test_matches_scipy(self):
        for n in (3, 10, 30):
            for x in (0.0, 0.7, 3.5):
                assert laguerre_half(n, x) == pytest.approx(
                    float(sps.eval_genlaguerre(n, -0.5, x)), rel=1e-10
                )

    @pytest.mark.parametrize("z", [0.25, -0.25, 0.5, -0.5])
    @pytest.mark.parametrize("x", [0.0, 1.0, 2.5, 4.0])
    def test_generating_function(self, z, x):
        lhs = math.fsum(
            z**n * L.real for n, L in enumerate(laguerre_half_sequence(x, 60))
        )
        rhs = (1 - z) ** -0.5 * math.exp(x * z / (z - 1))
        assert lhs == pytest.approx(rhs, abs=1e-8)


class TestAssocLegendre:
    def test_degree_zero(self):
        for x in (-3.0, 0.2, 7.0):
            assert assoc_legendre(0, 0, x) == 1.0

    def test_first_legendre(self):
        for x in (-3.0, 0.2, 7.0):
            assert assoc_legendre(1, 0, x) == x

    def test_second_legendre_outside_unit_interval(self):
        # independent series: P_2(x) = (3x^2 - 1)/2
        assert assoc_legendre(2, 0, 2.0) == pytest.approx(5.5, abs=1e-14)

    def test_order_above_degree_rejected(self):
        with pytest.raises(DomainError):
            assoc_legendre(1, 2, 0.5)

    def test_magnitude_matches_scipy_inside_unit_interval(self):
        for l, m in ((2, 1), (3, 2), (5, 3), (4, 0)):
            for x in (-0.8, 0.1, 0.6):
                ref = abs(float(sps.lpmv(m, l, x)))
                assert abs(assoc_legendre(l, m, x)) == pytest.approx(ref, rel=1e-10)

    def test_seed_value(self):
        # P_m^m = (2m-1)!! |x^2-1|^{m/2}
        x = 3.0
        assert assoc_legendre(2, 2, x) == pytest.approx(3 * (x * x - 1), rel=1e-14)


class TestGauss2F1:
    def test_empty_series(self):
        assert gauss_2f1_terminating(0, 0.5, 1.0, 0.7) == 1.0

    def test_two_term_series(self):
        for z in (0.0, 0.4, 1.0, -2.0):
            assert gauss_2f1_terminating(1, 0.5, 1.0, z) == pytest.approx(
                1 - z / 2, abs=1e-15
            )

    def test_chu_vandermonde_value(self):
        assert gauss_2f1_terminating(2, 0.5, 1.0, 1.0) == pytest.approx(3 / 8, abs=1e-15)

    def test_chu_vandermonde_central_binomial(self):
        # at z = 1 the sum telescopes to (2k)! / (4^k (k!)^2); exact integers
        for k in range(31):
            ref = math.comb(2 * k, k) / 4**k
            got = gauss_2f1_terminating(k, 0.5, 1.0, 1.0)
            assert abs(got - ref) <= 1e-12 * ref

    def test_matches_scipy(self):
        for k in (2, 5, 9):
            for z in (0.3, -0.8, 0.95):
                assert gauss_2f1_terminating(k, 0.5, 1.0, z) == pytest.approx(
                    float(sps.hyp2f1(-k, 0.5, 1.0, z)), rel=1e-10
                )

    def test_pole_detected(self):
        with pytest.raises(PoleError):
            gauss_2f1_terminating(3, 0.5, -1.0, 0.5)

    def test_unreachable_pole_tolerated(self):
        # (b)_j kills the series at j = 2, before (c)_j vanishes at j = 3;
        # the surviving terms are 1 + (-5)(-1)(1/2)/(-3) = 1/6
        assert gauss_2f1_terminating(5, -1.0, -3.0, 0.5) == pytest.approx(
            1 / 6, abs=1e-15
        )


class TestLogFactorial:
    def test_small_values(self):
        assert log_factorial(0) == 0.0
        assert log_factorial(1) == 0.0
        assert log_factorial(10) == pytest.approx(math.log(3628800), rel=1e-14)

    def test_large_values_match_lgamma(self):
        for n in (200, 5000):
            assert log_factorial(n) == pytest.approx(math.lgamma(n + 1), rel=1e-14)

    def test_negative_rejected(self):
        with pytest.raises(DomainError):
            log_factorial(-2)


class TestLogSigned:
    def test_roundtrip(self):
        # exp/log roundtrips lose ~|log| * eps relative precision
        for z in (3.5, -2.0, 1j, -4 + 3j, 1e-200):
            ls = LogSigned.from_value(z)
            assert cmath.isclose(ls.value(), z, rel_tol=1e-12)

    def test_zero(self):
        ls = LogSigned.from_value(0)
        assert ls.is_zero and ls.value() == 0

    def test_product(self):
        a = LogSigned.from_value(-3.0)
        b = LogSigned.from_value(2j)
        assert cmath.isclose((a * b).value(), -6j, rel_tol=1e-14)

    def test_sum_cancellation_and_order(self):
        terms = [LogSigned.from_value(v) for v in (1e20, -1e20, 3.0)]
        assert logsigned_sum(terms).value() == pytest.approx(3.0, rel=1e-10)
        assert logsigned_sum([]).is_zero

    def test_value_overflow_raises(self):
        with pytest.raises(RangeOverflowError):
            LogSigned(1e4, 1 + 0j).value()
