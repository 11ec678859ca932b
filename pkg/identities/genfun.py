# Copyright 2022 Twitter, Inc.
# SPDX-License-Identifier: Apache-2.0

"""
Both sides of the exact digit-sum generating-function identities, built as
TruncatedSeries and compared coefficient by coefficient.

Every verify_* function yields a sequence of named comparisons (the identity
itself plus the intermediate steps of its proof) and stops at the first one
that diverges.
"""

import time

import numpy as np

from identities.report import Divergence, IdentitySpec, VerificationReport
from numtheory.digit_core import (carry_sum, correction, correction_nm1, correction_repeat,
                                  digit_sum, divisor_digit_sum, to_digits)
from numtheory.helpers import UsageError, as_base, check_natural, powers_up_to
from numtheory.series_engine import ONE, ZERO, LaurentPoly, TruncatedSeries, geometric


def _verify(spec, comparisons):
    start = time.perf_counter()
    count = 0
    divergence = None
    for label, lhs, rhs in comparisons:
        count += 1
        hit = lhs.first_divergence(rhs)
        if hit is not None:
            divergence = Divergence(hit[0], hit[1], hit[2], label)
            break
    return VerificationReport(spec, divergence, time.perf_counter() - start, count)


def _integer_series(f, N, start=0):
    return TruncatedSeries([f(n) if n >= start else 0 for n in range(N + 1)], N)


def _q_over_one_minus_q(N):
    return TruncatedSeries.monomial(0, 1, N).div_binomial(0, 1)


#-----------------------------------------------------------------------------#
#------------------------------ building blocks ------------------------------#
#-----------------------------------------------------------------------------#

def digit_sum_series(B, N, digit_sum_fn=digit_sum):
    """sum_n q^n z^{s_B(n)}"""
    B = as_base(B).value
    return TruncatedSeries([LaurentPoly.monomial(digit_sum_fn(n, B)) for n in range(N + 1)], N)


def two_variable_product(B, N, start=0):
    """prod_{i >= start} (1 - z^B q^{B^{i+1}}) / (1 - z q^{B^i}); factors with B^i > N are 1."""
    B = as_base(B).value
    out = TruncatedSeries.one(N)
    for i in powers_up_to(B, N, start):
        out = out.div_binomial(1, B ** i).mul_binomial(B, B ** (i + 1))
    return out


def chat_ones_product(B, N):
    B = as_base(B).value
    out = TruncatedSeries.one(N)
    for i in powers_up_to(B, N):
        p = B ** i
        out = out.div_binomial(p - 1, p).mul_binomial(B * (p - 1), p * B)
    return out


def _weight_table(f, B):
    table = [LaurentPoly.coerce(f(d)) for d in range(B)]
    if table[0] != ONE:
        raise UsageError(f"digit weight f(0) must be 1, got {table[0]}")
    return table


def digit_weighted_sum(f, B, N):
    """sum_n q^n prod_{digits nu of n} f(nu)"""
    B = as_base(B).value
    table = _weight_table(f, B)
    coeffs = []
    for n in range(N + 1):
        w = ONE
        for d in to_digits(n, B).digits:
            w = w * table[d]
        coeffs.append(w)
    return TruncatedSeries(coeffs, N)


def digit_weighted_product(f, B, N):
    """prod_{B^i <= N} (1 + f(1) q^{B^i} + ... + f(B-1) q^{(B-1)B^i})"""
    B = as_base(B).value
    table = _weight_table(f, B)
    out = TruncatedSeries.one(N)
    for i in powers_up_to(B, N):
        p = B ** i
        factor = [ZERO] * (N + 1)
        for d in range(B):
            if d * p <= N:
                factor[d * p] = table[d]
        out = out * TruncatedSeries(factor, N)
    return out


def random_digit_weights(rng, B, max_terms=2, exp_range=(-2, 3), coeff_range=(-3, 3)):
    """A seeded digit-weight function with f(0) = 1 and small random Laurent weights elsewhere."""
    table = {0: ONE}
    for d in range(1, B):
        terms = {}
        for _ in range(int(rng.integers(1, max_terms + 1))):
            k = int(rng.integers(exp_range[0], exp_range[1] + 1))
            c = int(rng.integers(coeff_range[0], coeff_range[1] + 1))
            terms[k] = terms.get(k, 0) + c
        table[d] = LaurentPoly(terms)
    return table.__getitem__


def lambert_series(B, N, start=1):
    """sum_{i >= start} q^{B^i} / (1 - q^{B^i})"""
    B = as_base(B).value
    out = TruncatedSeries.zero(N)
    for i in powers_up_to(B, N, start):
        p = B ** i
        out = out + TruncatedSeries.monomial(0, p, N).div_binomial(0, p)
    return out


def lambert_LB(B, N):
    return lambert_series(B, N, start=1)


def calL(B, N):
    """sum_{i >= 0} q^{B^i} / (1 - z q^{B^i}), with z in the role of x."""
    B = as_base(B).value
    out = TruncatedSeries.zero(N)
    for i in powers_up_to(B, N):
        p = B ** i
        out = out + TruncatedSeries.monomial(0, p, N).div_binomial(1, p)
    return out


def calL_double_sum(B, N):
    """sum_{n >= 0} z^n sum_{i >= 0} q^{(n+1) B^i}"""
    B = as_base(B).value
    acc = [{} for _ in range(N + 1)]
    for n in range(N):
        p = n + 1
        while p <= N:
            acc[p][n] = acc[p].get(n, 0) + 1
            p *= B
    return TruncatedSeries([LaurentPoly(t) for t in acc], N)


def lambert_forms(B, N):
    B = as_base(B).value
    L = calL(B, N)
    yield 'calL expansion orders', L, calL_double_sum(B, N)
    yield 'L_B = calL(1;q) - q/(1-q)', lambert_LB(B, N), L.eval_z_at_one() - _q_over_one_minus_q(N)


#-----------------------------------------------------------------------------#
#-------------------------------- identities ---------------------------------#
#-----------------------------------------------------------------------------#

def _two_variable(B, N, digit_sum_fn, seed, weight_trials):
    lhs = digit_sum_series(B, N, digit_sum_fn)
    rhs = two_variable_product(B, N)
    yield 'sum q^n z^s_B(n) = product', lhs, rhs
    yield 'z = 1', lhs.eval_z_at_one(), geometric(0, 1, N)
    rng = np.random.default_rng(seed)
    for trial in range(weight_trials):
        f = random_digit_weights(rng, B)
        yield f'digit weights #{trial}', digit_weighted_sum(f, B, N), digit_weighted_product(f, B, N)


def verify_two_variable(B, N, digit_sum_fn=digit_sum, seed=0, weight_trials=20):
    B = as_base(B).value
    spec = IdentitySpec('thm-two-variable', B, N)
    return _verify(spec, _two_variable(B, N, digit_sum_fn, seed, weight_trials))


def _shift(B, j, N):
    p = B ** j
    direct = [ZERO] * (N + 1)
    for n in range(N // p + 1):
        direct[n * p] = LaurentPoly.monomial(digit_sum(n, B))
    direct = TruncatedSeries(direct, N)
    tail_product = two_variable_product(B, N, start=j)
    series = digit_sum_series(B, N)
    prefixed = series
    for i in range(j):
        prefixed = prefixed.mul_binomial(1, B ** i).div_binomial(B, B ** (i + 1))
    yield 'q -> q^{B^j} relabel', direct, series.substitute_q_power(p)
    yield 'shifted sum = tail product', direct, tail_product
    yield 'tail product = prefix * full sum', tail_product, prefixed
    yield 'L_B(q^{B^j}) index shift', lambert_LB(B, N).substitute_q_power(p), lambert_series(B, N, start=j + 1)


def verify_shift(B, j, N):
    B = as_base(B).value
    check_natural(j, 'j')
    spec = IdentitySpec('eq-shift-j', B, N, {'j': j})
    return _verify(spec, _shift(B, j, N))


def _chat_ones_two_variable(B, N):
    lhs = TruncatedSeries([LaurentPoly.monomial(correction_repeat(1, n, B)) for n in range(N + 1)], N)
    swapped = digit_sum_series(B, N).substitute_monomial(z_to=(-1, 0), q_to=(1, 1))
    yield 'chat({1}^n) = n - s_B(n)', lhs, TruncatedSeries(
        [LaurentPoly.monomial(n - digit_sum(n, B)) for n in range(N + 1)], N)
    yield 'z -> 1/z, q -> zq', swapped, lhs
    yield 'sum q^n z^chat({1}^n) = product', lhs, chat_ones_product(B, N)


def verify_chat_ones_two_variable(B, N):
    B = as_base(B).value
    return _verify(IdentitySpec('cor-chat-ones-2var', B, N), _chat_ones_two_variable(B, N))


def _squared(B, N, z_degree_cap):
    def cap(series):
        return series if z_degree_cap is None else series.truncate_z(z_degree_cap)

    coeffs = []
    for n in range(N + 1):
        inner = {}
        for k in range(n + 1):
            e = correction([n - k, k], B)
            inner[e] = inner.get(e, 0) + 1
        coeffs.append(LaurentPoly(inner).shift(digit_sum(n, B)))
    lhs = cap(TruncatedSeries(coeffs, N))
    P = cap(two_variable_product(B, N))
    S = cap(digit_sum_series(B, N))
    yield 'Cauchy square of the sum', cap(S * S), lhs
    yield 'squared product', lhs, cap(P * P)


def verify_squared(B, N, z_degree_cap=None):
    B = as_base(B).value
    params = {} if z_degree_cap is None else {'z_degree_cap': z_degree_cap}
    return _verify(IdentitySpec('cor-squared', B, N, params), _squared(B, N, z_degree_cap))


def _hypergeometric(B, N):
    total = TruncatedSeries.zero(N)
    for n in powers_up_to(B, N, 1):
        term = TruncatedSeries.monomial(0, B ** n, N)
        for j in range(n):
            term = term.mul_binomial(B, B ** j)
        for j in range(n + 1):
            term = term.div_binomial(1, B ** j)
        total = total + term
    scale = LaurentPoly({1: 1, B: -1})
    rhs = geometric(1, 1, N) + total.div_binomial(B, 1) * scale
    yield 'product = q-hypergeometric sum', two_variable_product(B, N), rhs


def verify_hypergeometric_form(B, N):
    B = as_base(B).value
    return _verify(IdentitySpec('thm-hypergeom', B, N), _hypergeometric(B, N))


def _sB_generating_function(B, N):
    yield from lambert_forms(B, N)
    L = calL(B, N)
    bracket = L * LaurentPoly.monomial(1) - L.substitute_monomial(z_to=(B, 0), q_to=(0, B)) * LaurentPoly.monomial(B, B)
    yield 'z d/dz of the two-variable theorem', digit_sum_series(B, N).z_derivative(), two_variable_product(B, N) * bracket
    sB = _integer_series(lambda n: digit_sum(n, B), N)
    yield 'z d/dz at z = 1', two_variable_product(B, N).z_derivative().eval_z_at_one(), sB
    L1 = L.eval_z_at_one()
    LB = lambert_LB(B, N)
    yield 'calL(1;q) - B calL(1;q^B)', L1 - L1.substitute_q_power(B) * B, _q_over_one_minus_q(N) - LB * (B - 1)
    rhs = TruncatedSeries.monomial(0, 1, N).div_binomial(0, 1).div_binomial(0, 1) - (LB * (B - 1)).div_binomial(0, 1)
    yield 'sum s_B(n) q^n', sB, rhs


def verify_sB_generating_function(B, N):
    B = as_base(B).value
    return _verify(IdentitySpec('cor-sB-gf', B, N), _sB_generating_function(B, N))


def _shiftcor(B, N):
    traced = _integer_series(lambda n: correction([n - 1, 1], B), N, start=1)
    fast = _integer_series(lambda n: correction_nm1(n, B), N, start=1)
    LB = lambert_LB(B, N)
    yield 'closed form = traced', fast, traced
    yield 'sum c_B(n-1,1) q^n = L_B', _integer_series(lambda n: carry_sum([n - 1, 1], B), N, start=1), LB
    yield 'sum chat(n-1,1) q^n = (B-1) L_B', traced, LB * (B - 1)


def verify_shiftcor(B, N):
    B = as_base(B).value
    return _verify(IdentitySpec('cor-shiftcor', B, N), _shiftcor(B, N))


def _chat_ones_gf(B, N):
    lhs = _integer_series(lambda n: correction_repeat(1, n, B), N, start=1)
    nm1 = _integer_series(lambda n: correction_nm1(n, B), N, start=1)
    yield '(1-q) sum chat({1}^n) q^n = sum chat(n-1,1) q^n', lhs.mul_binomial(0, 1), nm1
    yield 'z d/dz of the chat({1}^n) product at z = 1', chat_ones_product(B, N).z_derivative().eval_z_at_one(), lhs
    yield 'sum chat({1}^n) q^n = (B-1) L_B / (1-q)', lhs, (lambert_LB(B, N) * (B - 1)).div_binomial(0, 1)


def verify_chat_ones_gf(B, N):
    B = as_base(B).value
    return _verify(IdentitySpec('cor-chat-ones-gf', B, N), _chat_ones_gf(B, N))


def _chat_repeat(a, B, N):
    lhs = _integer_series(lambda n: correction_repeat(a, n, B), N, start=1)
    pairs = _integer_series(lambda n: correction([a * n, a], B), N)
    recursion = _integer_series(lambda n: correction_repeat(a, n - 1, B) + correction([a * (n - 1), a], B), N, start=1)
    yield 'chat({a}^n) recursion', lhs, recursion
    yield 'sum chat({a}^n) q^n = q/(1-q) sum chat(an,a) q^n', lhs, _q_over_one_minus_q(N) * pairs


def verify_chat_repeat(a, B, N):
    B = as_base(B).value
    check_natural(a, 'a')
    spec = IdentitySpec('thm-chat-repeat', B, N, {'a': a})
    return _verify(spec, _chat_repeat(a, B, N))


def _lambert_transform(B, N):
    lhs = TruncatedSeries.zero(N)
    for n in range(1, N + 1):
        lhs = lhs + TruncatedSeries.monomial(0, n, N, digit_sum(n, B)).div_binomial(0, n)
    sieve = [0] * (N + 1)
    for d in range(1, N + 1):
        s = digit_sum(d, B)
        for m in range(d, N + 1, d):
            sieve[m] += s
    rhs = _integer_series(lambda n: divisor_digit_sum(n, B), N, start=1)
    yield 'S_B(n) = sum_{d|n} s_B(d)', TruncatedSeries(sieve, N), rhs
    yield 'Lambert series of s_B = sum S_B(n) q^n', lhs, rhs


def verify_lambert_transform(B, N):
    B = as_base(B).value
    return _verify(IdentitySpec('eq-lambert-transform', B, N), _lambert_transform(B, N))
