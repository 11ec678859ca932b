# Copyright 2022 Twitter, Inc.
# SPDX-License-Identifier: Apache-2.0

"""
Tabular run logger. Key/value rows are collected with record_tabular, printed
to stderr by dump_tabular and, once a log directory is set, appended to
progress.csv next to the run's variant.json.
"""

import csv
import datetime
import json
import os
import sys


def _jsonable(o):
    if isinstance(o, complex):
        return [o.real, o.imag]
    return repr(o)


class Logger(object):

    def __init__(self):
        self._prefix = ''
        self._log_dir = None
        self._tabular = []
        self._header = None
        self.enabled = True

    def set_log_dir(self, log_dir):
        self._log_dir = log_dir
        self._header = None
        if log_dir is not None:
            os.makedirs(log_dir, exist_ok=True)

    @property
    def log_dir(self):
        return self._log_dir

    def log(self, s, with_timestamp=True):
        if not self.enabled:
            return
        if with_timestamp:
            now = datetime.datetime.now().strftime('%Y-%m-%d %H:%M:%S')
            s = f"{now} | {self._prefix}{s}"
        print(s, file=sys.stderr, flush=True)

    def record_tabular(self, key, val):
        self._tabular.append((str(key), val))

    def get_table_dict(self):
        return dict(self._tabular)

    def dump_tabular(self):
        if not self._tabular:
            return
        rows = self._tabular
        self._tabular = []
        if self.enabled:
            width = max(len(k) for k, _ in rows)
            bar = '-' * (width + 24)
            print(bar, file=sys.stderr)
            for k, v in rows:
                print(f"{k.ljust(width)}  {v}", file=sys.stderr)
            print(bar, file=sys.stderr, flush=True)
        if self._log_dir is not None:
            path = os.path.join(self._log_dir, 'progress.csv')
            keys = [k for k, _ in rows]
            new_file = self._header != keys or not os.path.exists(path)
            with open(path, 'a', newline='') as f:
                writer = csv.writer(f)
                if new_file:
                    writer.writerow(keys)
                    self._header = keys
                writer.writerow([v for _, v in rows])

    def log_variant(self, file_name, variant):
        with open(file_name, 'w') as f:
            json.dump(variant, f, indent=2, sort_keys=True, default=_jsonable)


logger = Logger()


def setup_logger(exp_prefix='default', variant=None, log_dir=None, enabled=True):
    logger.enabled = enabled
    logger._prefix = f"[{exp_prefix}] " if exp_prefix else ''
    logger.set_log_dir(log_dir)
    if log_dir is not None and variant is not None:
        logger.log_variant(os.path.join(log_dir, 'variant.json'), variant)
    return log_dir
