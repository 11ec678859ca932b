# Copyright 2022 Twitter, Inc.
# SPDX-License-Identifier: Apache-2.0

"""
Exact base-B digit arithmetic.

Digits are little-endian throughout, so the column index of the addition
algorithm equals the power of B it holds. All arithmetic is on Python ints.
"""

from dataclasses import dataclass
from typing import Tuple

from numtheory.helpers import UsageError, as_base, check_natural, divisors, valuation


@dataclass(frozen=True)
class DigitVec:
    base: int
    digits: Tuple[int, ...]

    def __post_init__(self):
        if self.digits and self.digits[-1] == 0:
            raise UsageError(f"digit vector {self.digits} is not canonical")
        for d in self.digits:
            if not 0 <= d < self.base:
                raise UsageError(f"digit {d} out of range for base {self.base}")

    def __len__(self):
        return len(self.digits)


@dataclass(frozen=True)
class AdditionTrace:
    base: int
    summands: Tuple[int, ...]
    column_carries: Tuple[int, ...]  # delta_0 .. delta_t
    terminal_carry: int
    carry_sum: int
    correction: int
    total: int

    def as_dict(self):
        return {'base': self.base,
                'summands': list(self.summands),
                'carries': list(self.column_carries),
                'carry_sum': self.carry_sum,
                'beta': self.terminal_carry,
                'correction': self.correction,
                'total': self.total}


def to_digits(n, B):
    B = as_base(B).value
    check_natural(n)
    digits = []
    while n:
        n, d = divmod(n, B)
        digits.append(d)
    return DigitVec(B, tuple(digits))


def digits_to_int(vec):
    n = 0
    for d in reversed(vec.digits):
        n = n * vec.base + d
    return n


def digit_sum(n, B):
    B = as_base(B).value
    check_natural(n)
    s = 0
    while n:
        n, d = divmod(n, B)
        s += d
    return s


def _carry_columns(column_sums, B):
    carries = []
    delta = 0
    for col in column_sums:
        delta = (col + delta) // B
        carries.append(delta)
    return carries


def _finish_trace(B, summands, column_sums, total):
    # t is the highest digit position among the summands; an all-zero sum still has column 0
    if not column_sums:
        column_sums = [0]
    carries = _carry_columns(column_sums, B)
    beta = carries[-1]
    c = sum(carries)
    chat = beta - digit_sum(beta, B) + (B - 1) * c
    return AdditionTrace(base=B,
                         summands=tuple(summands),
                         column_carries=tuple(carries),
                         terminal_carry=beta,
                         carry_sum=c,
                         correction=chat,
                         total=total)


def add_with_trace(summands, B):
    B = as_base(B).value
    summands = list(summands)
    if not summands:
        raise UsageError("add_with_trace needs at least one summand")
    column_sums = []
    for a in summands:
        for j, d in enumerate(to_digits(a, B).digits):
            if j == len(column_sums):
                column_sums.append(0)
            column_sums[j] += d
    return _finish_trace(B, summands, column_sums, sum(summands))


def add_repeat_trace(a, b, B):
    """Trace of a + a + ... + a (b copies), using column sums b * alpha_j."""
    B = as_base(B).value
    check_natural(a, 'a')
    check_natural(b, 'b')
    if b == 0:
        raise UsageError("add_repeat_trace needs at least one copy")
    column_sums = [b * d for d in to_digits(a, B).digits]
    return _finish_trace(B, (a,) * b, column_sums, a * b)


def carry_sum(summands, B):
    return add_with_trace(summands, B).carry_sum


def correction(summands, B):
    return add_with_trace(summands, B).correction


def carry_sum_repeat(a, b, B):
    if b == 0:
        return 0
    return add_repeat_trace(a, b, B).carry_sum


def correction_repeat(a, b, B):
    if b == 0:
        return 0
    return add_repeat_trace(a, b, B).correction


def correction_nm1(n, B):
    """Closed form of correction([n - 1, 1], B): (B - 1) times the B-adic valuation of n."""
    B = as_base(B).value
    check_natural(n)
    if n == 0:
        raise UsageError("correction_nm1 is defined for n >= 1")
    return (B - 1) * valuation(n, B)


def digit_sum_recursion_check(n, k, B):
    B = as_base(B).value
    check_natural(n)
    check_natural(k, 'k')
    if not 1 <= k <= n:
        raise UsageError(f"need 1 <= k <= n, got k={k}, n={n}")
    m = n // k
    rhs = digit_sum(n - k * m, B) + digit_sum(k, B) * m
    rhs -= sum(correction([n - i * k, k], B) for i in range(1, m + 1))
    return digit_sum(n, B) == rhs


def divisor_digit_sum(n, B):
    B = as_base(B).value
    check_natural(n)
    if n == 0:
        raise UsageError("divisor_digit_sum is defined for n >= 1")
    return sum(digit_sum(d, B) for d in divisors(n))
