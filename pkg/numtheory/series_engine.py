# Copyright 2022 Twitter, Inc.
# SPDX-License-Identifier: Apache-2.0

"""
Truncated formal power series in q whose coefficients are sparse Laurent
polynomials in z with integer coefficients.

A TruncatedSeries of order N keeps the coefficients of q^0 .. q^N. Every
operation returns a new series of the same order and never reads or writes a
coefficient past q^N; combining series of different orders is an error.
"""

from numtheory.helpers import UsageError


class LaurentPoly(object):
    __slots__ = ('terms',)

    def __init__(self, terms=None):
        self.terms = {k: v for k, v in (terms or {}).items() if v}

    @classmethod
    def _wrap(cls, terms):
        # terms already free of zero coefficients
        poly = cls.__new__(cls)
        poly.terms = terms
        return poly

    @classmethod
    def monomial(cls, k, c=1):
        return cls._wrap({k: c} if c else {})

    @classmethod
    def constant(cls, c):
        return cls.monomial(0, c)

    @classmethod
    def coerce(cls, value):
        if isinstance(value, LaurentPoly):
            return value
        if isinstance(value, int) and not isinstance(value, bool):
            return cls.constant(value)
        raise UsageError(f"cannot use {value!r} as a Laurent polynomial")

    # ------------------------------------------ queries ------------------------------------------#

    def __bool__(self):
        return bool(self.terms)

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __len__(self):
        return len(self.terms)

    def items(self):
        return sorted(self.terms.items())

    def degree(self):
        return max(self.terms) if self.terms else None

    def valuation(self):
        return min(self.terms) if self.terms else None

    def at_one(self):
        return sum(self.terms.values())

    def is_unit_constant(self):
        return self.terms in ({0: 1}, {0: -1})

    # ------------------------------------------ arithmetic ------------------------------------------#

    def __add__(self, other):
        if not isinstance(other, (int, LaurentPoly)):
            return NotImplemented
        other = LaurentPoly.coerce(other)
        out = dict(self.terms)
        for k, v in other.terms.items():
            c = out.get(k, 0) + v
            if c:
                out[k] = c
            else:
                out.pop(k, None)
        return LaurentPoly._wrap(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly._wrap({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, (int, LaurentPoly)):
            return NotImplemented
        return self + (-LaurentPoly.coerce(other))

    def __rsub__(self, other):
        if not isinstance(other, int):
            return NotImplemented
        return LaurentPoly.coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, int) and not isinstance(other, bool):
            if not other:
                return LaurentPoly()
            return LaurentPoly._wrap({k: v * other for k, v in self.terms.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        out = {}
        for ka, va in self.terms.items():
            for kb, vb in other.terms.items():
                k = ka + kb
                out[k] = out.get(k, 0) + va * vb
        return LaurentPoly(out)

    __rmul__ = __mul__

    def shift(self, k):
        """Multiply by z^k."""
        return LaurentPoly._wrap({e + k: v for e, v in self.terms.items()})

    def scale_exponents(self, a):
        """z -> z^a (a != 0)."""
        if a == 0:
            return LaurentPoly.constant(self.at_one())
        return LaurentPoly._wrap({e * a: v for e, v in self.terms.items()})

    def z_derivative(self):
        return LaurentPoly._wrap({k: k * v for k, v in self.terms.items() if k})

    def truncate_degree(self, cap):
        return LaurentPoly._wrap({k: v for k, v in self.terms.items() if k <= cap})

    # ------------------------------------------ formatting ------------------------------------------#

    def to_json(self):
        return [[k, v] for k, v in self.items()]

    def __str__(self):
        if not self.terms:
            return '0'
        parts = []
        for k, v in sorted(self.terms.items(), reverse=True):
            mag = abs(v)
            if k == 0:
                body = str(mag)
            else:
                z = 'z' if k == 1 else f'z^{k}'
                body = z if mag == 1 else f'{mag}{z}'
            sign = '-' if v < 0 else '+'
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        out = ('-' if first_sign == '-' else '') + first_body
        for sign, body in parts[1:]:
            out += f' {sign} {body}'
        return out

    def __repr__(self):
        return f'LaurentPoly({self.items()})'


ZERO = LaurentPoly()
ONE = LaurentPoly.constant(1)


class TruncatedSeries(object):
    __slots__ = ('order', 'coeffs')

    def __init__(self, coeffs, order=None):
        coeffs = [LaurentPoly.coerce(c) for c in coeffs]
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise UsageError(f"truncation order must be >= 0, got {order}")
        coeffs = coeffs[:order + 1]
        coeffs.extend(ZERO for _ in range(order + 1 - len(coeffs)))
        self.order = order
        self.coeffs = tuple(coeffs)

    @classmethod
    def _wrap(cls, coeffs, order):
        series = cls.__new__(cls)
        series.order = order
        series.coeffs = tuple(coeffs)
        return series

    @classmethod
    def zero(cls, N):
        return cls([], N)

    @classmethod
    def one(cls, N):
        return cls([ONE], N)

    @classmethod
    def monomial(cls, z_exp, q_exp, N, c=1):
        coeffs = [ZERO] * (N + 1)
        if q_exp <= N:
            coeffs[q_exp] = LaurentPoly.monomial(z_exp, c)
        return cls._wrap(coeffs, N)

    @classmethod
    def from_function(cls, f, N):
        return cls([f(n) for n in range(N + 1)], N)

    def __getitem__(self, n):
        return self.coeffs[n]

    def __len__(self):
        return len(self.coeffs)

    def nonzero(self):
        return [(n, c) for n, c in enumerate(self.coeffs) if c]

    def _check(self, other):
        if not isinstance(other, TruncatedSeries):
            raise UsageError(f"expected a TruncatedSeries, got {type(other).__name__}")
        if other.order != self.order:
            raise UsageError(f"truncation orders differ: {self.order} vs {other.order}")

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def first_divergence(self, other):
        """Smallest q-exponent where the two series differ, with both coefficients."""
        self._check(other)
        for n, (a, b) in enumerate(zip(self.coeffs, other.coeffs)):
            if a != b:
                return n, a, b
        return None

    # ------------------------------------------ ring operations ------------------------------------------#

    def __add__(self, other):
        self._check(other)
        return TruncatedSeries._wrap([a + b for a, b in zip(self.coeffs, other.coeffs)], self.order)

    def __sub__(self, other):
        self._check(other)
        return TruncatedSeries._wrap([a - b for a, b in zip(self.coeffs, other.coeffs)], self.order)

    def __neg__(self):
        return TruncatedSeries._wrap([-a for a in self.coeffs], self.order)

    def __mul__(self, other):
        if isinstance(other, (int, LaurentPoly)) and not isinstance(other, bool):
            return TruncatedSeries._wrap([a * other for a in self.coeffs], self.order)
        self._check(other)
        N = self.order
        left, right = self.nonzero(), other.nonzero()
        acc = [{} for _ in range(N + 1)]
        for i, a in left:
            for j, b in right:
                if i + j > N:
                    break
                d = acc[i + j]
                for ka, va in a.terms.items():
                    for kb, vb in b.terms.items():
                        k = ka + kb
                        d[k] = d.get(k, 0) + va * vb
        return TruncatedSeries._wrap([LaurentPoly(d) for d in acc], N)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            return self.reciprocal() ** (-k)
        out = TruncatedSeries.one(self.order)
        for _ in range(k):
            out = out * self
        return out

    def reciprocal(self):
        a0 = self.coeffs[0]
        if not a0.is_unit_constant():
            raise UsageError(f"constant term {a0} is not invertible (must be 1 or -1)")
        u = a0.terms[0]
        N = self.order
        left = self.nonzero()[1:]
        out = [LaurentPoly.constant(u)]
        for n in range(1, N + 1):
            acc = {}
            for k, a in left:
                if k > n:
                    break
                b = out[n - k]
                for ka, va in a.terms.items():
                    for kb, vb in b.terms.items():
                        e = ka + kb
                        acc[e] = acc.get(e, 0) - u * va * vb
            out.append(LaurentPoly(acc))
        return TruncatedSeries._wrap(out, N)

    def mul_binomial(self, z_exp, q_exp, c=-1):
        """Multiply by (1 + c z^z_exp q^q_exp)."""
        if q_exp < 0:
            raise UsageError("binomial factor needs q-degree >= 0")
        N = self.order
        out = list(self.coeffs)
        factor = LaurentPoly.monomial(z_exp, c)
        if q_exp == 0:
            return TruncatedSeries._wrap([a + a * factor for a in out], N)
        for n in range(q_exp, N + 1):
            prev = self.coeffs[n - q_exp]
            if prev:
                out[n] = out[n] + prev.shift(z_exp) * c
        return TruncatedSeries._wrap(out, N)

    def div_binomial(self, z_exp, q_exp):
        """Divide by (1 - z^z_exp q^q_exp)."""
        if q_exp < 1:
            raise UsageError("can only divide by 1 - z^k q^m with m >= 1")
        N = self.order
        out = list(self.coeffs)
        for n in range(q_exp, N + 1):
            prev = out[n - q_exp]
            if prev:
                out[n] = out[n] + prev.shift(z_exp)
        return TruncatedSeries._wrap(out, N)

    # ------------------------------------------ operators and substitutions ------------------------------------------#

    def z_derivative(self):
        return TruncatedSeries._wrap([a.z_derivative() for a in self.coeffs], self.order)

    def eval_z_at_one(self):
        return TruncatedSeries._wrap([LaurentPoly.constant(a.at_one()) for a in self.coeffs], self.order)

    def truncate_z(self, cap):
        """Drop z-exponents above cap; a ring map when all exponents are nonnegative."""
        return TruncatedSeries._wrap([a.truncate_degree(cap) for a in self.coeffs], self.order)

    def substitute_q_power(self, m):
        if m < 1:
            raise UsageError(f"q -> q^m needs m >= 1, got {m}")
        N = self.order
        out = [ZERO] * (N + 1)
        for n in range(0, N // m + 1):
            out[n * m] = self.coeffs[n]
        return TruncatedSeries._wrap(out, N)

    def substitute_monomial(self, z_to=(1, 0), q_to=(0, 1)):
        """
        Change of variables z -> z^a q^b, q -> z^c q^d given as z_to=(a, b), q_to=(c, d).
        The image of q must have positive q-degree (d >= 1) and z may only pick up
        nonnegative powers of q (b >= 0, and b > 0 only on nonnegative z-exponents).
        """
        (a, b), (c, d) = z_to, q_to
        if d < 1:
            raise UsageError("image of q must have positive q-degree")
        if b < 0:
            raise UsageError("image of z must have nonnegative q-degree")
        N = self.order
        acc = [{} for _ in range(N + 1)]
        for n, poly in self.nonzero():
            for k, v in poly.terms.items():
                if b and k < 0:
                    raise UsageError(f"z^{k} would map to a negative power of q")
                m = b * k + d * n
                if m > N:
                    continue
                e = a * k + c * n
                acc[m][e] = acc[m].get(e, 0) + v
        return TruncatedSeries._wrap([LaurentPoly(t) for t in acc], N)

    # ------------------------------------------ formatting ------------------------------------------#

    def __repr__(self):
        body = ', '.join(f'q^{n}: {c}' for n, c in self.nonzero())
        return f'TruncatedSeries(order={self.order}, {{{body}}})'


# Functional forms of the series operations

def add(a, b):
    return a + b


def subtract(a, b):
    return a - b


def multiply(a, b):
    return a * b


def product(factors, N):
    out = TruncatedSeries.one(N)
    for f in factors:
        out = out * f
    return out


def geometric(z_exp, q_exp, N):
    """Expansion of 1 / (1 - z^z_exp q^q_exp) through q^N."""
    if q_exp < 1:
        raise UsageError(f"geometric series needs q-degree >= 1, got {q_exp}")
    return TruncatedSeries.one(N).div_binomial(z_exp, q_exp)


def reciprocal(a):
    return a.reciprocal()


def z_derivative(a):
    return a.z_derivative()


def eval_z_at_one(a):
    return a.eval_z_at_one()


def substitute_q_power(a, m):
    return a.substitute_q_power(m)


def substitute_monomial(a, z_to=(1, 0), q_to=(0, 1)):
    return a.substitute_monomial(z_to, q_to)
