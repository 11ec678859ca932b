# Copyright 2022 Twitter, Inc.
# SPDX-License-Identifier: Apache-2.0

"""
Double-precision evaluation of the zeta functions, tail-bounded Dirichlet
partial sums of digit data, and numeric checks of the bilateral B-ary Lambert
series and of the negative-j shift equation.
"""

import cmath
import functools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional

import numpy as np
from scipy.special import bernoulli

from identities.report import NumericCheck
from numtheory.digit_core import digit_sum, divisor_digit_sum
from numtheory.helpers import DomainError, PoleError, UsageError, as_base
from utils.config import DEFAULT_NUMERIC


def _as_complex(v, name='s'):
    try:
        v = complex(v)
    except (TypeError, ValueError):
        raise DomainError(f"{name} must be a number, got {v!r}")
    if not (math.isfinite(v.real) and math.isfinite(v.imag)):
        raise DomainError(f"{name} must be finite, got {v}")
    return v


#-----------------------------------------------------------------------------#
#------------------------------- zeta kernels --------------------------------#
#-----------------------------------------------------------------------------#

@functools.lru_cache(maxsize=None)
def _em_weights(order):
    """B_{2j} / (2j)! for j = 1 .. order/2"""
    b = bernoulli(order)
    return tuple(float(b[2 * j]) / math.factorial(2 * j) for j in range(1, order // 2 + 1))


def _euler_maclaurin(s, x, config):
    M = config.em_direct_terms
    k = np.arange(M, dtype=np.float64) + x
    total = complex(np.sum(np.exp(-s * np.log(k))))
    a = M + x
    a_s = cmath.exp(-s * math.log(a))
    total += a * a_s / (s - 1) + a_s / 2
    t = s * a_s / a
    for j, w in enumerate(_em_weights(config.em_bernoulli_order), start=1):
        total += w * t
        t *= (s + 2 * j - 1) * (s + 2 * j) / (a * a)
    return total


def hurwitz_zeta(s, x, config=DEFAULT_NUMERIC):
    s = _as_complex(s)
    x = float(x)
    if s.real <= 1:
        raise DomainError(f"hurwitz_zeta needs Re(s) > 1, got {s}")
    if not 0 < x <= 1:
        raise DomainError(f"hurwitz_zeta needs 0 < x <= 1, got {x}")
    return _euler_maclaurin(s, x, config)


def riemann_zeta(s, config=DEFAULT_NUMERIC):
    s = _as_complex(s)
    if s.real <= 1:
        raise DomainError(f"riemann_zeta needs Re(s) > 1, got {s}")
    return _euler_maclaurin(s, 1.0, config)


def hurwitz_direct(s, x, terms=1000000, chunk=1000000):
    """
    Direct summation of (n + x)^(-s) for n < terms plus the integral estimate of
    the tail. Returns (value, half_width); for real s the true value lies within
    half_width of value.
    """
    s = _as_complex(s)
    total = 0j
    for lo in range(0, terms, chunk):
        k = np.arange(lo, min(lo + chunk, terms), dtype=np.float64) + x
        total += complex(np.sum(np.exp(-s * np.log(k))))
    a = terms + x
    a_s = cmath.exp(-s * math.log(a))
    half = abs(a_s) / 2
    return total + a * a_s / (s - 1) + a_s / 2, half


#-----------------------------------------------------------------------------#
#--------------------------- Dirichlet partial sums --------------------------#
#-----------------------------------------------------------------------------#

@dataclass
class DirichletSum:
    value: complex
    bound: float
    rigorous: bool
    terms: int


def dirichlet_partial(coeff, s, N, tail=None, rigorous=True, config=DEFAULT_NUMERIC):
    """
    sum_{n <= N} coeff(n) / n^s. `coeff` maps an int64 array of n to the array of
    coefficients; `tail(N, s)` bounds the omitted part of the series.
    """
    s = _as_complex(s)
    if N < 1:
        raise UsageError(f"need at least one term, got N={N}")
    total = 0j
    for lo in range(1, N + 1, config.chunk):
        n = np.arange(lo, min(lo + config.chunk, N + 1), dtype=np.int64)
        c = np.asarray(coeff(n), dtype=np.float64)
        total += complex(np.sum(c * np.exp(-s * np.log(n))))
    bound = 0.0 if tail is None else float(tail(N, s))
    return DirichletSum(total, bound, rigorous, N)


def digit_sum_array(n, B):
    n = np.array(n, dtype=np.int64)
    out = np.zeros_like(n)
    while n.any():
        out += n % B
        n //= B
    return out


def valuation_array(n, B):
    m = np.array(n, dtype=np.int64)
    v = np.zeros_like(m)
    mask = m % B == 0
    while mask.any():
        v[mask] += 1
        m[mask] //= B
        mask = m % B == 0
    return v


def correction_nm1_array(n, B):
    return (B - 1) * valuation_array(n, B)


def carry_ones_array(n, B):
    # c_B({1}^n) = floor(n / B)
    return np.asarray(n, dtype=np.int64) // B


def divisor_digit_sum_array(N, B):
    sB = digit_sum_array(np.arange(N + 1), B)
    S = np.zeros(N + 1, dtype=np.int64)
    for d in range(1, N + 1):
        S[d::d] += sB[d]
    return S


def chat_tail_bound(B, N, sigma):
    # chat(n-1,1) <= (B-1) log_B n and log(x) x^-sigma decreases on [N, oo)
    return (B - 1) / math.log(B) * N ** (1 - sigma) * (math.log(N) / (sigma - 1) + 1 / (sigma - 1) ** 2)


def carry_tail_bound(B, N, sigma):
    # floor(n/B) <= n/B
    return N ** (2 - sigma) / (B * (sigma - 2))


def _require_strip(s, lower=2):
    s = _as_complex(s)
    if s.real <= lower:
        raise DomainError(f"need Re(s) > {lower}, got {s}")
    return s


def verify_dirichlet_chat(B, s, N, config=DEFAULT_NUMERIC):
    B = as_base(B).value
    s = _require_strip(s)
    if N < 3:
        raise UsageError("need N >= 3 terms")
    part = dirichlet_partial(lambda n: correction_nm1_array(n, B), s, N,
                             tail=lambda N, s: chat_tail_bound(B, N, s.real), config=config)
    rhs = (B - 1) / (B ** s - 1) * riemann_zeta(s, config)
    return NumericCheck('dir-chat', part.value, rhs, abs(part.value - rhs),
                        part.bound + config.float_tolerance, rigorous=True)


def verify_dirichlet_carry(B, s, N, config=DEFAULT_NUMERIC):
    B = as_base(B).value
    s = _require_strip(s)
    if N < 3:
        raise UsageError("need N >= 3 terms")
    part = dirichlet_partial(lambda n: carry_ones_array(n, B), s, N,
                             tail=lambda N, s: carry_tail_bound(B, N, s.real), config=config)
    hurwitz = sum(k * hurwitz_zeta(s, k / B, config) for k in range(1, B))
    rhs = riemann_zeta(s - 1, config) / B - B ** (-(s + 1)) * hurwitz
    return NumericCheck('dir-carry', part.value, rhs, abs(part.value - rhs),
                        part.bound + config.float_tolerance, rigorous=True)


def verify_dirichlet_convolution(B, s, N, config=DEFAULT_NUMERIC):
    B = as_base(B).value
    s = _require_strip(s)
    sigma = s.real
    zeta = riemann_zeta(s, config)
    digits = dirichlet_partial(lambda n: digit_sum_array(n, B), s, N, config=config)
    S = divisor_digit_sum_array(N, B)
    divisor = dirichlet_partial(lambda n: S[n], s, N, config=config)
    # s_B(n) <= n and S_B(n) <= sigma(n) <= n (1 + log n); the estimate is not tracked rigorously
    gap = sigma - 2
    bound = (abs(riemann_zeta(sigma, config)) * N ** (2 - sigma) / gap
             + N ** (2 - sigma) * ((1 + math.log(N)) / gap + 1 / gap ** 2))
    lhs = zeta * digits.value
    return NumericCheck('dir-convolution', lhs, divisor.value, abs(lhs - divisor.value),
                        bound + config.float_tolerance, rigorous=False)


def convolution_exact_replay(B, s, N):
    """Truncated convolution in exact rationals: sum S_B(n)/n^s against sum_{dm <= N} s_B(d)/(dm)^s."""
    B = as_base(B).value
    if isinstance(s, bool) or not isinstance(s, int) or s < 1:
        raise UsageError("exact replay needs a positive integer s")
    lhs = sum(Fraction(divisor_digit_sum(n, B), n ** s) for n in range(1, N + 1))
    rhs = sum(Fraction(digit_sum(d, B), (d * m) ** s)
              for d in range(1, N + 1) for m in range(1, N // d + 1))
    return lhs == rhs


@dataclass
class LimitRow:
    base: int
    partial: complex
    gap: complex  # truncation - partial, summed directly
    coefficients_match: bool
    passed: bool

    def as_dict(self):
        return {'partial': [self.partial.real, self.partial.imag],
                'gap': [self.gap.real, self.gap.imag],
                'coefficients_match': self.coefficients_match}


@dataclass
class LimitReport:
    s: complex
    order: int
    truncation: complex
    zeta_limit: Optional[complex]
    rows: List[LimitRow]

    @property
    def passed(self):
        return all(row.passed for row in self.rows)


def verify_limit_large_B(s, Bs, N, config=DEFAULT_NUMERIC):
    """
    Partial sums sum_{n <= N} s_B(n)/n^s against the truncation sum_{n <= N} n^(1-s).
    For B > N the two coincide exactly; for real s and B <= N the partial sum is
    strictly smaller because s_B(n) <= n with s_B(B) = 1 < B.
    """
    s = _as_complex(s)
    n = np.arange(1, N + 1, dtype=np.int64)
    powers = np.exp(-s * np.log(n))
    truncation = complex(np.sum(n.astype(np.float64) * powers))
    zeta_limit = riemann_zeta(s - 1, config) if s.real > 2 else None
    rows = []
    for B in Bs:
        B = as_base(B).value
        sB = digit_sum_array(n, B)
        partial = complex(np.sum(sB.astype(np.float64) * powers))
        gap = complex(np.sum((n - sB).astype(np.float64) * powers))
        match = bool(np.array_equal(sB, n))
        if B > N:
            ok = match and partial == truncation
        elif s.imag == 0:
            ok = (not match) and gap.real > 0
        else:
            ok = not match
        rows.append(LimitRow(B, partial, gap, match, ok))
    return LimitReport(s, N, truncation, zeta_limit, rows)


#-----------------------------------------------------------------------------#
#--------------------------- bilateral Lambert series ------------------------#
#-----------------------------------------------------------------------------#

@dataclass
class BilateralValue:
    value: complex
    head_term: float  # |term| at n = -window
    tail_term: float  # |term| at n = +window


def _check_bilateral_domain(B, z, q):
    if not 0 < abs(q) < 1:
        raise DomainError(f"need 0 < |q| < 1, got {q}")
    if B <= 0 or B == 1:
        raise DomainError(f"bilateral base must be positive and != 1, got {B}")
    # B < 1 is the mirror image n -> -n of base 1/B with z -> 1/z
    if B > 1 and not abs(z) > B:
        raise DomainError(f"need |z| > B, got |z|={abs(z)}, B={B}")
    if B < 1 and not abs(z) < B:
        raise DomainError(f"need |1/z| > 1/B, got |z|={abs(z)}, B={B}")


def _bilateral_term(B, x, z, log_q, n, config):
    try:
        e = (B ** n) * log_q
    except OverflowError:
        return 0j  # B^n past float range, q^{B^n} is 0
    if e.real < -745.0:
        return 0j  # q^{B^n} underflows
    qb = cmath.exp(e)
    denom = 1 - x * qb
    if abs(denom) < config.pole_threshold:
        raise PoleError(f"x q^(B^n) = 1 at n={n}")
    return (z ** n) * qb / denom


def _bilateral_sum(B, x, z, log_q, indices, config):
    return sum((_bilateral_term(B, x, z, log_q, n, config) for n in indices), 0j)


def bilateral_Lhat(B, x, z, q=None, window=30, log_q=None, config=DEFAULT_NUMERIC):
    """
    sum_{|n| <= window} z^n q^{B^n} / (1 - x q^{B^n}) with q^{B^n} = exp(B^n log q).
    Pass log_q instead of q to pin the branch of a substituted q.
    """
    B = float(B)
    x = _as_complex(x, 'x')
    z = _as_complex(z, 'z')
    if log_q is None:
        q = _as_complex(q, 'q')
        if q == 0:
            raise DomainError("q must be nonzero")
        log_q = cmath.log(q)
    log_q = _as_complex(log_q, 'log_q')
    _check_bilateral_domain(B, z, cmath.exp(log_q))
    value = _bilateral_sum(B, x, z, log_q, range(-window, window + 1), config)
    head = abs(_bilateral_term(B, x, z, log_q, -window, config))
    tail = abs(_bilateral_term(B, x, z, log_q, window, config))
    return BilateralValue(value, head, tail)


def verify_bilateral_equations(B, x, z, q, r, t, window, config=DEFAULT_NUMERIC):
    """
    (i) the base-1/B series at 1/z, (ii) z^r times the series at q^{B^r}, and
    (iii) z^r times the base-B^t series at (z^t, q^{B^r}) against the
    congruence-class sum, each compared with the plain series; plus the
    window-doubling stability of the plain series.
    """
    if t == 0:
        raise DomainError("t must be nonzero")
    B = float(B)
    x = _as_complex(x, 'x')
    z = _as_complex(z, 'z')
    q = _as_complex(q, 'q')
    if q == 0:
        raise DomainError("q must be nonzero")
    log_q = cmath.log(q)
    base = bilateral_Lhat(B, x, z, window=window, log_q=log_q, config=config).value
    shifted_log = (B ** r) * log_q

    def check(label, lhs, rhs):
        err = abs(lhs - rhs)
        return NumericCheck(label, lhs, rhs, err, config.bilateral_tolerance * max(1.0, abs(rhs)), rigorous=True)

    inverse = bilateral_Lhat(1 / B, x, 1 / z, window=window, log_q=log_q, config=config).value
    shift = z ** r * bilateral_Lhat(B, x, z, window=window, log_q=shifted_log, config=config).value
    lhs3 = z ** r * bilateral_Lhat(B ** t, x, z ** t, window=window, log_q=shifted_log, config=config).value
    span = abs(t) * window
    rhs3 = _bilateral_sum(B, x, z, log_q, (n for n in range(-span, span + 1) if (n - r) % t == 0), config)
    doubled = bilateral_Lhat(B, x, z, window=2 * window, log_q=log_q, config=config).value
    stability = NumericCheck('window doubling', base, doubled, abs(base - doubled),
                             config.window_stability, rigorous=True)
    return (check('base 1/B at 1/z', inverse, base),
            check('z^r shift of q^{B^r}', shift, base),
            check('congruence class sum', lhs3, rhs3),
            stability)


def shift_replay_exact(B, x, z, q, r, window):
    """
    Exact rational replay of the index shift z^r T_n(q^{B^r}) = T_{n+r}(q) for the
    terms T_n = z^n q^{B^n} / (1 - x q^{B^n}) with 0 <= n <= window.
    """
    B = as_base(B).value
    if r < 0:
        raise UsageError("exact replay covers r >= 0 only")
    x, z, q = Fraction(x), Fraction(z), Fraction(q)

    def term(n, qq):
        qb = qq ** (B ** n)
        if x * qb == 1:
            raise PoleError(f"x q^(B^n) = 1 at n={n}")
        return z ** n * qb / (1 - x * qb)

    q_shifted = q ** (B ** r)
    return all(z ** r * term(n, q_shifted) == term(n + r, q) for n in range(window + 1))


#-----------------------------------------------------------------------------#
#---------------------------- negative-j shifting ----------------------------#
#-----------------------------------------------------------------------------#

def _digit_product(B, z, log_q, start, stop=None, cutoff=1e-18):
    """prod_{i=start}^{stop-1} (1 - z^B q^{B^{i+1}}) / (1 - z q^{B^i}); open-ended stops once factors are 1."""
    out = 1 + 0j
    i = start
    zB = z ** B
    while stop is None or i < stop:
        u = cmath.exp((B ** i) * log_q) if ((B ** i) * log_q).real > -745.0 else 0j
        if stop is None and abs(u) * max(1.0, abs(zB)) < cutoff:
            break
        u_next = cmath.exp((B ** (i + 1)) * log_q) if ((B ** (i + 1)) * log_q).real > -745.0 else 0j
        out *= (1 - zB * u_next) / (1 - z * u)
        i += 1
    return out


def verify_shift_negative(B, j, z, q, terms=None, config=DEFAULT_NUMERIC):
    """
    Numeric check of the shift equation for j < 0, where q^{B^j} is a fractional
    power (principal branch) and the formal engine has nothing to say.
    """
    B = as_base(B).value
    if j >= 0:
        raise UsageError("numeric shift checks are for j < 0; use the exact engine otherwise")
    z = _as_complex(z, 'z')
    q = _as_complex(q, 'q')
    if not 0 < abs(q) < 1:
        raise DomainError(f"need 0 < |q| < 1, got {q}")
    log_q = cmath.log(q)
    log_qj = (B ** j) * log_q
    ratio = math.exp(log_qj.real)
    if terms is None:
        terms = int(math.ceil(math.log(1e-18) / math.log(ratio))) + 1
    n = np.arange(terms + 1, dtype=np.int64)
    weights = z ** digit_sum_array(n, B).astype(np.complex128)
    shifted_sum = complex(np.sum(np.exp(n * log_qj) * weights))
    full_terms = int(math.ceil(math.log(1e-18) / math.log(abs(q)))) + 1
    m = np.arange(full_terms + 1, dtype=np.int64)
    full_sum = complex(np.sum(np.exp(m * log_q) * z ** digit_sum_array(m, B).astype(np.complex128)))
    tail = _digit_product(B, z, log_q, j)
    prefix = _digit_product(B, z, log_q, j, stop=0)
    tail_bound = ratio ** (terms + 1) / (1 - ratio)
    rigorous = abs(z) <= 1
    if not rigorous:
        tail_bound *= abs(z) ** ((B - 1) * (math.log(terms + 1, B) + 1))
    bound = tail_bound + config.float_tolerance * max(1.0, abs(tail))
    return (NumericCheck('shifted sum = tail product', shifted_sum, tail, abs(shifted_sum - tail), bound, rigorous),
            NumericCheck('tail product = prefix * full sum', tail, prefix * full_sum,
                         abs(tail - prefix * full_sum), bound, rigorous))
