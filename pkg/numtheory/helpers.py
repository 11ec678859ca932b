# Copyright 2022 Twitter, Inc.
# SPDX-License-Identifier: Apache-2.0

import math
from dataclasses import dataclass


class UsageError(ValueError):
    """Arguments that no operation accepts (empty sums, mismatched orders, ...)."""


class DomainError(ValueError):
    """Numeric arguments outside the region where an analytic object is defined."""


class PoleError(DomainError):
    pass


@dataclass(frozen=True)
class Base:
    value: int

    def __post_init__(self):
        if isinstance(self.value, bool) or not isinstance(self.value, int):
            raise UsageError(f"base must be an integer, got {self.value!r}")
        if self.value < 2:
            raise UsageError(f"base must be >= 2, got {self.value}")

    def __int__(self):
        return self.value

    def __index__(self):
        return self.value


def as_base(B):
    if isinstance(B, Base):
        return B
    return Base(B)


def check_natural(n, name='n'):
    if isinstance(n, bool) or not isinstance(n, int):
        raise UsageError(f"{name} must be an integer, got {n!r}")
    if n < 0:
        raise UsageError(f"{name} must be nonnegative, got {n}")
    return n


def valuation(n, B):
    """Exponent of the exact power of B dividing n (n >= 1)."""
    N = 0
    while n % B == 0:
        n //= B
        N += 1
    return N


def divisors(n):
    small, large = [], []
    for d in range(1, math.isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
    return small + large[::-1]


def powers_up_to(B, N, start=0):
    """Exponents i >= start with B**i <= N."""
    out = []
    i, p = start, B ** start
    while p <= N:
        out.append(i)
        i += 1
        p *= B
    return out
