# Copyright 2022 Twitter, Inc.
# SPDX-License-Identifier: Apache-2.0

import sys

from tqdm import tqdm


def print_banner(s, separator="-", num_star=60):
	# stdout is reserved for reports
	print(separator * num_star, file=sys.stderr, flush=True)
	print(s, file=sys.stderr, flush=True)
	print(separator * num_star, file=sys.stderr, flush=True)


def progress(total, name='Progress', verbose=False):
	if not verbose:
		return Silent()
	return tqdm(total=total, desc=name, file=sys.stderr, leave=False)


class Silent:

	def __init__(self, *args, **kwargs):
		pass

	def __getattr__(self, attr):
		return lambda *args, **kwargs: None
