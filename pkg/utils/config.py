# Copyright 2022 Twitter, Inc.
# SPDX-License-Identifier: Apache-2.0

from dataclasses import dataclass, field
from typing import List, Optional

from identities.report import CATALOG_IDS
from numtheory.helpers import DomainError, UsageError, as_base

COMMANDS = ('digits', 'trace', 'verify', 'verify-all', 'dirichlet', 'bilateral')


@dataclass(frozen=True)
class NumericConfig:
    em_direct_terms: int = 50         # Euler-Maclaurin cutoff M
    em_bernoulli_order: int = 16      # corrections through B_16
    float_tolerance: float = 1e-11    # added to rigorous tail bounds for evaluation round-off
    bilateral_tolerance: float = 1e-10
    pole_threshold: float = 1e-12
    window_stability: float = 1e-12
    chunk: int = 1000000              # Dirichlet partial sums are accumulated in blocks


DEFAULT_NUMERIC = NumericConfig()


@dataclass
class RunConfig:
    command: str
    base: int = 10
    order: int = 200
    s: complex = 3 + 0j
    ids: List[str] = field(default_factory=list)
    output_format: str = 'human'
    seed: int = 0
    numbers: List[int] = field(default_factory=list)
    # identity parameters
    a: int = 3
    j: Optional[int] = None
    squared_order: int = 128
    weight_trials: int = 20
    # Dirichlet partial sums
    terms: int = 1000000
    convolution_terms: int = 100000
    # bilateral
    bilateral_base: float = 2.0
    x: complex = 0.3 + 0j
    z: complex = 3 + 0j
    q: complex = 0.4 + 0j
    r: int = 1
    t: int = 2
    window: int = 30
    # ceilings
    max_order: int = 10000
    max_terms: int = 10000000
    workers: int = 1
    numeric: NumericConfig = DEFAULT_NUMERIC

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise UsageError(f"unknown command {self.command!r}")
        as_base(self.base)
        if self.output_format not in ('human', 'json'):
            raise UsageError(f"unknown output format {self.output_format!r}")
        for name in self.ids:
            if name not in CATALOG_IDS:
                raise UsageError(f"unknown identity id {name!r}; choose from {', '.join(CATALOG_IDS)}")
        if self.command in ('digits', 'trace') and not self.numbers:
            raise UsageError(f"{self.command} needs at least one integer")
        if any(n < 0 for n in self.numbers):
            raise UsageError("integers must be nonnegative")
        if self.command == 'verify' and not self.ids:
            raise UsageError("verify needs at least one --id")
        if not 1 <= self.order <= self.max_order:
            raise UsageError(f"order must be in [1, {self.max_order}], got {self.order}")
        if not 3 <= self.terms <= self.max_terms or not 3 <= self.convolution_terms <= self.max_terms:
            raise UsageError(f"partial sum lengths must be in [3, {self.max_terms}]")
        if self.a < 0:
            raise UsageError("a must be nonnegative")
        if self.j is not None and self.j < 0:
            raise UsageError("exact shift checks need j >= 0")
        if self.t == 0:
            raise DomainError("bilateral congruence sum needs t != 0")
        if self.window < 1:
            raise UsageError("window must be >= 1")
        if self.workers < 1:
            raise UsageError("workers must be >= 1")
