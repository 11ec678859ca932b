# Copyright 2022 Twitter, Inc.
# SPDX-License-Identifier: Apache-2.0

import argparse
import json
import os
import sys

from identities.catalog import run_catalog
from identities.report import ANALYTIC_IDS, CATALOG_IDS
from numtheory.digit_core import add_with_trace, digit_sum, to_digits
from numtheory.helpers import DomainError, UsageError
from utils import utils
from utils.config import COMMANDS, NumericConfig, RunConfig
from utils.logger import logger, setup_logger

DIRICHLET_IDS = tuple(i for i in ANALYTIC_IDS if i.startswith('dir-'))


def _complex(text):
    try:
        return complex(text.replace(' ', '').replace('i', 'j'))
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a complex number: {text!r}")


def _emit(payload, human_lines, cfg):
    if cfg.output_format == 'json':
        print(json.dumps(payload, indent=2))
    else:
        for line in human_lines:
            print(line)


def run_digits(cfg):
    rows = []
    for n in cfg.numbers:
        vec = to_digits(n, cfg.base)
        rows.append({'n': n, 'base': cfg.base, 'digits': list(vec.digits), 'digit_sum': digit_sum(n, cfg.base)})
    _emit({'command': 'digits', 'results': rows},
          [f"{r['n']}: digits {r['digits']} (little-endian), digit sum {r['digit_sum']}" for r in rows], cfg)
    return 0


def run_trace(cfg):
    trace = add_with_trace(cfg.numbers, cfg.base).as_dict()
    lines = [f"{' + '.join(map(str, trace['summands']))} = {trace['total']} in base {trace['base']}",
             f"carries {trace['carries']}, carry sum {trace['carry_sum']}, "
             f"terminal carry {trace['beta']}, correction {trace['correction']}"]
    _emit(trace, lines, cfg)
    return 0


def _record_tabular(record):
    logger.record_tabular('id', record.id)
    logger.record_tabular('base', record.base)
    logger.record_tabular('order', record.order)
    logger.record_tabular('check', record.params.get('check', ''))
    logger.record_tabular('passed', record.passed)
    logger.record_tabular('abs_error', record.numeric.abs_error if record.numeric else '')
    logger.record_tabular('bound', record.numeric.bound if record.numeric else '')
    logger.record_tabular('elapsed_ms', round(record.elapsed_ms, 3))
    logger.dump_tabular()


def _human(record):
    status = 'PASS' if record.passed else ('FAIL' if record.blocking else 'WARN')
    params = ' '.join(f"{k}={v}" for k, v in record.params.items())
    line = f"{status} {record.id} base={record.base} order={record.order} {params}".rstrip()
    if record.numeric is not None:
        line += f" |err|={record.numeric.abs_error:.3e} bound={record.numeric.bound:.3e}"
    if record.first_divergence is not None:
        d = record.first_divergence
        line += f"\n    {d.comparison}: first divergence at q^{d.exponent}: {d.lhs} != {d.rhs}"
    return line


def run_checks(cfg, ids, verbose=False):
    progress = utils.progress(len(ids), name=cfg.command, verbose=verbose)
    records = run_catalog(ids, cfg, progress)
    progress.close()
    for record in records:
        _record_tabular(record)
    failed = [r for r in records if not r.passed and r.blocking]
    _emit({'command': cfg.command, 'passed': not failed, 'records': [r.as_dict() for r in records]},
          [_human(r) for r in records], cfg)
    return 1 if failed else 0


def run(cfg, verbose=False):
    if cfg.command == 'digits':
        return run_digits(cfg)
    if cfg.command == 'trace':
        return run_trace(cfg)
    if cfg.command == 'verify':
        ids = cfg.ids
    elif cfg.command == 'verify-all':
        ids = list(CATALOG_IDS)
    elif cfg.command == 'dirichlet':
        ids = list(DIRICHLET_IDS)
    else:
        ids = ['bilateral-eqs']
    return run_checks(cfg, ids, verbose)


def build_parser():
    parser = argparse.ArgumentParser(prog='digitlab',
                                     description='Exact digit-sum, carry and q-series identity checks.',
                                     epilog='identity ids: ' + ', '.join(CATALOG_IDS))
    ### Command ###
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("numbers", nargs='*', type=int)             # integers for digits / trace
    parser.add_argument("--id", dest='ids', action='append', default=[], metavar='ID')  # repeatable
    parser.add_argument("--format", dest='output_format', default='human', choices=['human', 'json'])
    parser.add_argument("--seed", default=0, type=int)              # digit-weight trials
    ### Series Setups ###
    parser.add_argument("--base", default=10, type=int)
    parser.add_argument("--order", default=200, type=int)           # truncation order N
    parser.add_argument("--a", default=3, type=int)                 # thm-chat-repeat digit block
    parser.add_argument("--j", default=None, type=int)              # eq-shift-j; all j with B^j <= N if unset
    parser.add_argument("--squared_order", default=128, type=int)
    parser.add_argument("--weight_trials", default=20, type=int)
    ### Dirichlet Setups ###
    parser.add_argument("--s", default=3 + 0j, type=_complex)
    parser.add_argument("--terms", default=10 ** 6, type=int)
    parser.add_argument("--convolution_terms", default=10 ** 5, type=int)
    ### Bilateral Setups ###
    parser.add_argument("--bilateral_base", default=2.0, type=float)
    parser.add_argument("--x", default=0.3, type=_complex)
    parser.add_argument("--z", default=3, type=_complex)
    parser.add_argument("--q", default=0.4, type=_complex)
    parser.add_argument("--r", default=1, type=int)
    parser.add_argument("--t", default=2, type=int)
    parser.add_argument("--window", default=30, type=int)
    ### Limits and Execution ###
    parser.add_argument("--max_order", default=10 ** 4, type=int)
    parser.add_argument("--max_terms", default=10 ** 7, type=int)
    parser.add_argument("--workers", default=1, type=int)
    parser.add_argument("--log_dir", default=None, type=str)        # variant.json + progress.csv
    parser.add_argument("--verbose", action='store_true')
    return parser


def config_from_args(args):
    return RunConfig(command=args.command, base=args.base, order=args.order, s=args.s, ids=args.ids,
                     output_format=args.output_format, seed=args.seed, numbers=args.numbers,
                     a=args.a, j=args.j, squared_order=args.squared_order, weight_trials=args.weight_trials,
                     terms=args.terms, convolution_terms=args.convolution_terms,
                     bilateral_base=args.bilateral_base, x=complex(args.x), z=complex(args.z), q=complex(args.q),
                     r=args.r, t=args.t, window=args.window, max_order=args.max_order, max_terms=args.max_terms,
                     workers=args.workers, numeric=NumericConfig())


def main(argv=None):
    parser = build_parser()
    args = parser.parse_intermixed_args(argv)
    try:
        cfg = config_from_args(args)
        variant = vars(args)
        variant.update(version="digitlab")
        if args.log_dir is not None:
            os.makedirs(args.log_dir, exist_ok=True)
        setup_logger(args.command, variant=variant, log_dir=args.log_dir, enabled=args.verbose)
        if args.verbose:
            utils.print_banner(f"{cfg.command}: base {cfg.base}, order {cfg.order}, s {cfg.s}")
        return run(cfg, verbose=args.verbose)
    except (UsageError, DomainError) as e:
        print(f"digitlab: error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
