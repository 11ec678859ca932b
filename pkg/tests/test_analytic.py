import math
from fractions import Fraction

import numpy as np
import pytest
from scipy import special

from identities import analytic
from numtheory.digit_core import correction_nm1, digit_sum, divisor_digit_sum
from numtheory.helpers import DomainError, PoleError, UsageError

BILATERAL_POINTS = [
    (2, 0.3, 3, 0.4),
    (2, 0.0, 4, 0.5),
    (3, 0.5, 5, 0.3),
    (2, -0.7, 3.5, 0.6),
    (2.5, 0.2, 3 + 1j, 0.45),
    (2, 0.1, 3, 0.3 + 0.2j),
]


def test_riemann_zeta_values():
    assert abs(analytic.riemann_zeta(2) - math.pi ** 2 / 6) < 1e-13
    assert abs(analytic.riemann_zeta(4) - math.pi ** 4 / 90) < 1e-13
    assert abs(analytic.riemann_zeta(3) - 1.2020569031595942) < 1e-13


@pytest.mark.parametrize('s', [1.5, 2.0, 3.0, 4.5, 10.0])
@pytest.mark.parametrize('x', [0.1, 0.25, 0.5, 0.9, 1.0])
def test_hurwitz_against_scipy(s, x):
    value = analytic.hurwitz_zeta(s, x)
    assert abs(value.imag) < 1e-15
    assert abs(value.real - special.zeta(s, x)) < 1e-10 * max(1.0, special.zeta(s, x))


@pytest.mark.parametrize('s', [3 + 2j, 2.5 - 7j, 5 + 0.5j])
def test_hurwitz_half_duplication(s):
    # zeta(s, 1/2) = (2^s - 1) zeta(s)
    lhs = analytic.hurwitz_zeta(s, 0.5)
    rhs = (2 ** s - 1) * analytic.riemann_zeta(s)
    assert abs(lhs - rhs) < 1e-11 * abs(rhs)


def test_hurwitz_against_direct_sum():
    value, half = analytic.hurwitz_direct(3.0, 0.3, terms=10 ** 5)
    assert abs(analytic.hurwitz_zeta(3.0, 0.3) - value) <= half + 1e-11


@pytest.mark.parametrize('s', [3 + 2j, 2.5 - 1j, 4 + 5j, 6 - 3j])
@pytest.mark.parametrize('x', [0.3, 0.75, 1.0])
def test_complex_hurwitz_against_direct_sum(s, x):
    value, _ = analytic.hurwitz_direct(s, x, terms=10 ** 5)
    assert abs(analytic.hurwitz_zeta(s, x) - value) < 1e-10


@pytest.mark.parametrize('call', [
    lambda: analytic.riemann_zeta(1),
    lambda: analytic.riemann_zeta(0.5 + 3j),
    lambda: analytic.hurwitz_zeta(2, 0),
    lambda: analytic.hurwitz_zeta(2, 1.5),
    lambda: analytic.riemann_zeta(float('nan')),
])
def test_zeta_domain(call):
    with pytest.raises(DomainError):
        call()


def test_coefficient_arrays():
    n = np.arange(1, 300)
    assert list(analytic.digit_sum_array(n, 7)) == [digit_sum(int(k), 7) for k in n]
    assert list(analytic.correction_nm1_array(n, 10)) == [correction_nm1(int(k), 10) for k in n]
    S = analytic.divisor_digit_sum_array(299, 10)
    assert [int(S[k]) for k in n] == [divisor_digit_sum(int(k), 10) for k in n]


def test_dirichlet_partial_of_zero_coefficients():
    part = analytic.dirichlet_partial(lambda n: np.zeros(len(n)), 3, 1000, tail=lambda N, s: 0.0)
    assert part.value == 0
    assert part.bound == 0


@pytest.mark.parametrize('B', [2, 3, 10])
@pytest.mark.parametrize('s', [3, 4, 2.5, 3 + 2j])
def test_dirichlet_chat(B, s):
    check = analytic.verify_dirichlet_chat(B, s, 10 ** 5)
    assert check.rigorous
    assert check.passed, (check.abs_error, check.bound)


@pytest.mark.parametrize('B', [2, 3, 10])
@pytest.mark.parametrize('s', [3, 4, 2.5, 3 + 2j, 5.5])
def test_dirichlet_carry(B, s):
    check = analytic.verify_dirichlet_carry(B, s, 10 ** 5)
    assert check.rigorous
    assert check.passed, (check.abs_error, check.bound)


@pytest.mark.parametrize('B, s', [(10, 3), (2, 4), (3, 3 + 2j)])
def test_dirichlet_convolution(B, s):
    check = analytic.verify_dirichlet_convolution(B, s, 10 ** 4)
    assert not check.rigorous
    assert check.passed, (check.abs_error, check.bound)


def test_dirichlet_strip():
    with pytest.raises(DomainError):
        analytic.verify_dirichlet_chat(10, 2, 1000)
    with pytest.raises(DomainError):
        analytic.verify_dirichlet_carry(10, 1.5 + 1j, 1000)
    with pytest.raises(UsageError):
        analytic.verify_dirichlet_chat(10, 3, 2)


@pytest.mark.parametrize('B, s, N', [(10, 2, 30), (2, 3, 40), (50, 2, 40)])
def test_convolution_exact_replay(B, s, N):
    assert analytic.convolution_exact_replay(B, s, N)


def test_limit_large_base():
    report = analytic.verify_limit_large_B(3, [2, 10, 1001, 5000], 1000)
    assert report.passed
    by_base = {row.base: row for row in report.rows}
    assert by_base[1001].coefficients_match and by_base[5000].coefficients_match
    assert by_base[1001].partial == report.truncation
    assert by_base[2].gap.real > by_base[10].gap.real > 0
    assert abs(report.zeta_limit - math.pi ** 2 / 6) < 1e-12


def test_bilateral_value_and_edges():
    result = analytic.bilateral_Lhat(2, 0.3, 3, 0.4, window=30)
    assert result.tail_term == 0
    assert 0 < result.head_term < 1e-13


@pytest.mark.parametrize('B, x, z, q', BILATERAL_POINTS)
def test_bilateral_equations(B, x, z, q):
    for check in analytic.verify_bilateral_equations(B, x, z, q, r=1, t=2, window=30):
        assert check.passed, check


@pytest.mark.parametrize('r, t', [(-1, 2), (2, 3), (0, -1), (1, -2)])
def test_bilateral_equations_other_shifts(r, t):
    for check in analytic.verify_bilateral_equations(2, 0.3, 3, 0.4, r=r, t=t, window=30):
        assert check.passed, check


def test_bilateral_domain():
    with pytest.raises(DomainError):
        analytic.bilateral_Lhat(2, 0.3, 1.5, 0.4)
    with pytest.raises(DomainError):
        analytic.bilateral_Lhat(2, 0.3, 3, 1.2)
    with pytest.raises(DomainError):
        analytic.bilateral_Lhat(1, 0.3, 3, 0.4)
    with pytest.raises(DomainError):
        analytic.verify_bilateral_equations(2, 0.3, 3, 0.4, r=1, t=0, window=10)


def test_bilateral_pole():
    # x q^{B^0} = 2 * 0.5 = 1
    with pytest.raises(PoleError):
        analytic.bilateral_Lhat(2, 2, 3, 0.5, window=5)


def test_shift_replay_exact():
    assert analytic.shift_replay_exact(2, Fraction(3, 10), 3, Fraction(2, 5), 2, 6)
    assert analytic.shift_replay_exact(3, 0, 5, Fraction(1, 3), 0, 4)
    with pytest.raises(UsageError):
        analytic.shift_replay_exact(2, 0, 3, Fraction(1, 2), -1, 4)
    # x q^{2^5} = 2^32 2^-32
    with pytest.raises(PoleError):
        analytic.shift_replay_exact(2, 2 ** 32, 3, Fraction(1, 2), 0, 10)


@pytest.mark.parametrize('B, j, z, q', [
    (2, -1, 0.8, 0.3),
    (2, -2, 0.5 + 0.5j, 0.2 + 0.3j),
    (3, -1, 1.0, 0.5),
    (10, -2, 0.8, 0.3),
])
def test_shift_negative(B, j, z, q):
    checks = analytic.verify_shift_negative(B, j, z, q)
    assert len(checks) == 2
    for check in checks:
        assert check.rigorous
        assert check.passed, check


def test_shift_negative_needs_negative_j():
    with pytest.raises(UsageError):
        analytic.verify_shift_negative(2, 0, 0.5, 0.3)


def test_hurwitz_examples():
    assert abs(analytic.hurwitz_zeta(2, 0.5) - math.pi ** 2 / 2) < 1e-12
    value, half = analytic.hurwitz_direct(3, 0.1, terms=10 ** 6)
    assert abs(analytic.hurwitz_zeta(3, 0.1) - value) < 1e-10 + half


def test_dirichlet_partial_of_ones():
    part = analytic.dirichlet_partial(lambda n: np.ones(len(n)), 3, 10 ** 4,
                                      tail=lambda N, s: N ** (1 - s.real) / (s.real - 1))
    assert part.bound == pytest.approx(5e-9)
    assert abs(part.value - analytic.riemann_zeta(3)) <= part.bound


def test_divisor_digit_sums_for_large_base():
    N = 200
    S = analytic.divisor_digit_sum_array(N, N + 1)
    sigma = [sum(d for d in range(1, n + 1) if n % d == 0) for n in range(1, N + 1)]
    assert [int(v) for v in S[1:]] == sigma


def test_bilateral_matches_direct_sum():
    z, q = 7.0, 0.5
    direct = sum(z ** n * q ** (2.0 ** n) for n in range(-30, 31))
    result = analytic.bilateral_Lhat(2, 0, z, q, window=30)
    assert abs(result.value - direct) < 1e-12 * abs(direct)


def test_bilateral_window_growth():
    small = analytic.bilateral_Lhat(2, 0, 4, 0.5, window=20).value
    large = analytic.bilateral_Lhat(2, 0, 4, 0.5, window=40).value
    assert abs(small - large) < 1e-12


def test_bilateral_trivial_congruence():
    checks = analytic.verify_bilateral_equations(2, 0.3, 3, 0.4, r=0, t=1, window=30)
    assert checks[2].abs_error == 0
