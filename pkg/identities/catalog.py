# Copyright 2022 Twitter, Inc.
# SPDX-License-Identifier: Apache-2.0

import time
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from identities import analytic, genfun
from identities.report import CATALOG_IDS, CheckRecord
from numtheory.helpers import powers_up_to
from utils.logger import logger

# sample points for the numeric j < 0 shift checks: (z, q)
NEGATIVE_SHIFT_POINTS = ((0.8, 0.3), (0.5 + 0.5j, 0.2 + 0.3j))
NEGATIVE_SHIFTS = (-1, -2)
NEGATIVE_SHIFT_MAX_ROOT = 1000
CONVOLUTION_REPLAY_TERMS = 50
SHIFT_REPLAY_WINDOW = 10


def _timed(fn, *args, **kwargs):
    start = time.perf_counter()
    out = fn(*args, **kwargs)
    return out, time.perf_counter() - start


def _two_variable(cfg):
    report = genfun.verify_two_variable(cfg.base, cfg.order, seed=cfg.seed, weight_trials=cfg.weight_trials)
    record = CheckRecord.from_report(report)
    record.params.update(seed=cfg.seed, weight_trials=cfg.weight_trials)
    return [record]


def _shift(cfg):
    js = [cfg.j] if cfg.j is not None else powers_up_to(cfg.base, cfg.order)
    records = [CheckRecord.from_report(genfun.verify_shift(cfg.base, j, cfg.order)) for j in js]
    for j in NEGATIVE_SHIFTS:
        if cfg.base ** -j > NEGATIVE_SHIFT_MAX_ROOT:
            continue  # q^{B^j} too close to 1 for a direct sum
        for z, q in NEGATIVE_SHIFT_POINTS:
            checks, elapsed = _timed(analytic.verify_shift_negative, cfg.base, j, z, q, config=cfg.numeric)
            for check in checks:
                records.append(CheckRecord.from_numeric('eq-shift-j', cfg.base, cfg.order, check,
                                                        elapsed / len(checks), {'j': j, 'z': complex(z), 'q': complex(q)}))
    return records


def _squared(cfg):
    return [CheckRecord.from_report(genfun.verify_squared(cfg.base, min(cfg.order, cfg.squared_order)))]


def _chat_repeat(cfg):
    return [CheckRecord.from_report(genfun.verify_chat_repeat(cfg.a, cfg.base, cfg.order))]


def _exact(verify):
    def run(cfg):
        return [CheckRecord.from_report(verify(cfg.base, cfg.order))]
    return run


def _dirichlet(id, verify, terms_attr):
    def run(cfg):
        N = getattr(cfg, terms_attr)
        check, elapsed = _timed(verify, cfg.base, cfg.s, N, config=cfg.numeric)
        records = [CheckRecord.from_numeric(id, cfg.base, N, check, elapsed, {'s': cfg.s})]
        if id == 'dir-convolution' and cfg.s.imag == 0 and cfg.s.real == int(cfg.s.real):
            s = int(cfg.s.real)
            ok, elapsed = _timed(analytic.convolution_exact_replay, cfg.base, s, CONVOLUTION_REPLAY_TERMS)
            records.append(CheckRecord(id=id, base=cfg.base, order=CONVOLUTION_REPLAY_TERMS, passed=ok,
                                       elapsed_ms=elapsed * 1e3, params={'s': s, 'check': 'exact replay'}))
        return records
    return run


def _limit(cfg):
    N = cfg.convolution_terms
    bases = sorted({2, cfg.base, N + 1})
    report, elapsed = _timed(analytic.verify_limit_large_B, cfg.s, bases, N, config=cfg.numeric)
    truncation = [report.truncation.real, report.truncation.imag]
    records = []
    for row in report.rows:
        extra = dict(row.as_dict(), truncation=truncation)
        records.append(CheckRecord(id='dir-limit', base=row.base, order=N, passed=row.passed,
                                   elapsed_ms=elapsed * 1e3 / len(report.rows), params={'s': cfg.s}, extra=extra))
    return records


def _bilateral(cfg):
    params = {'x': cfg.x, 'z': cfg.z, 'q': cfg.q, 'r': cfg.r, 't': cfg.t}
    checks, elapsed = _timed(analytic.verify_bilateral_equations, cfg.bilateral_base, cfg.x, cfg.z, cfg.q,
                             cfg.r, cfg.t, cfg.window, config=cfg.numeric)
    records = [CheckRecord.from_numeric('bilateral-eqs', cfg.bilateral_base, cfg.window, check,
                                        elapsed / len(checks), params) for check in checks]
    integral = float(cfg.bilateral_base).is_integer() and cfg.bilateral_base >= 2
    real = all(complex(v).imag == 0 for v in (cfg.x, cfg.z, cfg.q))
    if integral and real and cfg.r >= 0:
        x, z, q = (Fraction(complex(v).real).limit_denominator(1000) for v in (cfg.x, cfg.z, cfg.q))
        ok, elapsed = _timed(analytic.shift_replay_exact, int(cfg.bilateral_base), x, z, q, cfg.r, SHIFT_REPLAY_WINDOW)
        records.append(CheckRecord(id='bilateral-eqs', base=int(cfg.bilateral_base), order=SHIFT_REPLAY_WINDOW,
                                   passed=ok, elapsed_ms=elapsed * 1e3, params={'r': cfg.r, 'check': 'exact shift replay'}))
    return records


CATALOG = {
    'thm-two-variable': _two_variable,
    'eq-shift-j': _shift,
    'cor-chat-ones-2var': _exact(genfun.verify_chat_ones_two_variable),
    'cor-squared': _squared,
    'thm-hypergeom': _exact(genfun.verify_hypergeometric_form),
    'cor-sB-gf': _exact(genfun.verify_sB_generating_function),
    'cor-shiftcor': _exact(genfun.verify_shiftcor),
    'cor-chat-ones-gf': _exact(genfun.verify_chat_ones_gf),
    'thm-chat-repeat': _chat_repeat,
    'eq-lambert-transform': _exact(genfun.verify_lambert_transform),
    'dir-chat': _dirichlet('dir-chat', analytic.verify_dirichlet_chat, 'terms'),
    'dir-carry': _dirichlet('dir-carry', analytic.verify_dirichlet_carry, 'terms'),
    'dir-convolution': _dirichlet('dir-convolution', analytic.verify_dirichlet_convolution, 'convolution_terms'),
    'dir-limit': _limit,
    'bilateral-eqs': _bilateral,
}
assert tuple(CATALOG) == CATALOG_IDS


def run_entry(id, cfg):
    records = CATALOG[id](cfg)
    for record in records:
        logger.log(f"{record.id} base={record.base} order={record.order} "
                   f"{'ok' if record.passed else 'FAILED'} {record.elapsed_ms:.1f} ms")
    return records


def run_catalog(ids, cfg, progress=None):
    """Runs the entries on cfg.workers threads; records come back sorted by id, stable within an entry."""
    ids = list(dict.fromkeys(ids))
    results = {}
    with ThreadPoolExecutor(max_workers=cfg.workers) as pool:
        futures = {id: pool.submit(run_entry, id, cfg) for id in ids}
        for id, fut in futures.items():
            results[id] = fut.result()
            if progress is not None:
                progress.update(1)
    return [record for id in sorted(results) for record in results[id]]
