# Copyright 2022 Twitter, Inc.
# SPDX-License-Identifier: Apache-2.0

import math
from dataclasses import dataclass, field
from typing import Any, Dict, Optional

from numtheory.helpers import DomainError, UsageError

EXACT_IDS = ('thm-two-variable', 'eq-shift-j', 'cor-chat-ones-2var', 'cor-squared', 'thm-hypergeom',
             'cor-sB-gf', 'cor-shiftcor', 'cor-chat-ones-gf', 'thm-chat-repeat', 'eq-lambert-transform')
ANALYTIC_IDS = ('dir-chat', 'dir-carry', 'dir-convolution', 'dir-limit', 'bilateral-eqs')
CATALOG_IDS = EXACT_IDS + ANALYTIC_IDS


@dataclass(frozen=True)
class IdentitySpec:
    id: str
    base: int
    order: int
    params: Dict[str, Any] = field(default_factory=dict)

    def __post_init__(self):
        if self.id not in CATALOG_IDS:
            raise UsageError(f"unknown identity id {self.id!r}")
        if self.order < 1:
            raise UsageError(f"order must be >= 1, got {self.order}")


@dataclass(frozen=True)
class Divergence:
    exponent: int
    lhs: Any
    rhs: Any
    comparison: str

    def as_dict(self):
        return {'comparison': self.comparison,
                'q_exponent': self.exponent,
                'lhs': self.lhs.to_json(),
                'rhs': self.rhs.to_json()}


@dataclass
class VerificationReport:
    spec: IdentitySpec
    first_divergence: Optional[Divergence]
    elapsed: float
    comparisons: int = 0

    @property
    def passed(self):
        return self.first_divergence is None


@dataclass
class NumericCheck:
    label: str
    lhs: complex
    rhs: complex
    abs_error: float
    bound: float
    rigorous: bool
    passed: bool = field(init=False)

    def __post_init__(self):
        for v in (self.lhs, self.rhs):
            if not (math.isfinite(v.real) and math.isfinite(v.imag)):
                raise DomainError(f"{self.label}: non-finite value {v}")
        self.passed = bool(self.abs_error <= self.bound)


def _complex_json(v):
    v = complex(v)
    return [v.real, v.imag]


@dataclass
class CheckRecord:
    """One line of a run report."""
    id: str
    base: Any
    order: int
    passed: bool
    elapsed_ms: float
    params: Dict[str, Any] = field(default_factory=dict)
    first_divergence: Optional[Divergence] = None
    numeric: Optional[NumericCheck] = None
    extra: Dict[str, Any] = field(default_factory=dict)

    @property
    def blocking(self):
        # heuristic-bound failures are reported without failing the run
        return self.numeric is None or self.numeric.rigorous

    @classmethod
    def from_report(cls, report):
        spec = report.spec
        return cls(id=spec.id, base=spec.base, order=spec.order, passed=report.passed,
                   elapsed_ms=report.elapsed * 1e3, params=dict(spec.params),
                   first_divergence=report.first_divergence)

    @classmethod
    def from_numeric(cls, id, base, order, check, elapsed, params=None):
        params = dict(params or {})
        params['check'] = check.label
        return cls(id=id, base=base, order=order, passed=check.passed, elapsed_ms=elapsed * 1e3,
                   params=params, numeric=check)

    def as_dict(self, with_timing=True):
        out = {'id': self.id, 'base': self.base, 'order': self.order, 'passed': self.passed}
        if self.params:
            out['params'] = {k: _complex_json(v) if isinstance(v, complex) else v
                             for k, v in self.params.items()}
        if self.first_divergence is not None:
            out['first_divergence'] = self.first_divergence.as_dict()
        if self.numeric is not None:
            out['lhs'] = _complex_json(self.numeric.lhs)
            out['rhs'] = _complex_json(self.numeric.rhs)
            out['abs_error'] = self.numeric.abs_error
            out['bound'] = self.numeric.bound
            out['rigorous'] = self.numeric.rigorous
        out.update(self.extra)
        if with_timing:
            out['elapsed_ms'] = round(self.elapsed_ms, 3)
        return out
