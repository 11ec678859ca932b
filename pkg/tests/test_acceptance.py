import math

import pytest

from identities import analytic, genfun
from numtheory.digit_core import (carry_sum_repeat, correction, correction_repeat, digit_sum,
                                  digit_sum_recursion_check)

EXACT_SUITE = [
    genfun.verify_two_variable,
    genfun.verify_chat_ones_two_variable,
    genfun.verify_hypergeometric_form,
    genfun.verify_sB_generating_function,
    genfun.verify_shiftcor,
    genfun.verify_chat_ones_gf,
    genfun.verify_lambert_transform,
]


@pytest.mark.parametrize('B', [2, 3, 10, 16])
def test_digit_sum_of_sums(B, rng):
    for _ in range(10 ** 4):
        r = int(rng.integers(1, 7))
        summands = [int(a) for a in rng.integers(0, 10 ** 6, size=r)]
        lhs = digit_sum(sum(summands), B)
        assert lhs == sum(digit_sum(a, B) for a in summands) - correction(summands, B)


@pytest.mark.parametrize('B', [2, 3, 10, 16])
def test_digit_sum_congruence(B):
    if B == 2:
        pytest.skip('every integer is congruent mod 1')
    for n in range(10 ** 4 + 1):
        assert (digit_sum(n, B) - n) % (B - 1) == 0


@pytest.mark.parametrize('B', [3, 10, 16])
def test_correction_congruence(B, rng):
    for _ in range(10 ** 4):
        r = int(rng.integers(1, 7))
        summands = [int(a) for a in rng.integers(0, 10 ** 6, size=r)]
        assert correction(summands, B) % (B - 1) == 0


@pytest.mark.parametrize('B', [2, 3, 10, 16])
def test_random_recursions(B, rng):
    for _ in range(10 ** 3):
        n = int(rng.integers(1, 10 ** 5))
        k = int(rng.integers(1, n + 1))
        assert digit_sum_recursion_check(n, k, B)
    for _ in range(10 ** 3):
        a = int(rng.integers(0, 10 ** 6))
        b = int(rng.integers(1, 500))
        assert correction_repeat(a, b, B) == b * digit_sum(a, B) - digit_sum(a * b, B)
        assert correction_repeat(a, b, B) == correction_repeat(a, b - 1, B) + correction([a * (b - 1), a], B)


@pytest.mark.parametrize('B', [2, 3, 10, 16])
def test_single_digit_carry_formula(B):
    for a in range(1, B):
        for b in range(1, 201):
            assert carry_sum_repeat(a, b, B) == a * b // B


@pytest.mark.parametrize('B', [2, 3, 5, 10])
def test_exact_catalog(B):
    N = 200
    for verify in EXACT_SUITE:
        report = verify(B, N)
        assert report.passed, (report.spec.id, report.first_divergence)
    for j in range(0, 4):
        if B ** j <= N:
            assert genfun.verify_shift(B, j, N).passed
    assert genfun.verify_squared(B, 128).passed
    assert genfun.verify_chat_repeat(3, B, N).passed


@pytest.mark.parametrize('B, s', [(10, 3), (2, 4)])
def test_dirichlet_full_length(B, s):
    chat = analytic.verify_dirichlet_chat(B, s, 10 ** 6)
    assert chat.passed and chat.abs_error < 1e-4
    if B == 10:
        assert abs(chat.rhs - 9 * analytic.riemann_zeta(3) / 999) < 1e-15
    carry = analytic.verify_dirichlet_carry(B, s, 10 ** 6)
    assert carry.passed


def test_zeta_kernels():
    assert abs(analytic.riemann_zeta(2) - math.pi ** 2 / 6) < 1e-12
    value, half = analytic.hurwitz_direct(2, 0.5, terms=10 ** 6)
    assert abs(analytic.hurwitz_zeta(2, 0.5) - value) < 1e-10 + half
    for s in (1.1, 1.5, 2, 2.5, 3, 4, 6 + 1j, 2 - 3j, 8.5, 20):
        assert abs(analytic.hurwitz_zeta(s, 1) - analytic.riemann_zeta(s)) < 1e-13
