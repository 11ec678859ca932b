import csv
import json
import os

import pytest

import run_digitlab
from identities import catalog, genfun
from identities.report import CATALOG_IDS, CheckRecord, NumericCheck
from numtheory.digit_core import digit_sum
from utils.config import NumericConfig

FIXTURES = os.path.join(os.path.dirname(__file__), 'fixtures')


def load_fixture(name):
    with open(os.path.join(FIXTURES, name)) as f:
        return json.load(f)


def run(capsys, *argv):
    status = run_digitlab.main(list(argv))
    out, err = capsys.readouterr()
    return status, out, err


def strip_timing(payload):
    for record in payload.get('records', []):
        record.pop('elapsed_ms', None)
    return payload


def test_digits_golden(capsys):
    status, out, _ = run(capsys, 'digits', '--base', '10', '73', '246', '--format', 'json')
    assert status == 0
    assert json.loads(out) == load_fixture('digits_73_246.json')


def test_digits_human(capsys):
    status, out, _ = run(capsys, 'digits', '73')
    assert status == 0
    assert 'digits [3, 7]' in out and 'digit sum 10' in out


def test_trace_golden(capsys):
    status, out, _ = run(capsys, 'trace', '--base', '10', '58', '67', '--format', 'json')
    assert status == 0
    assert json.loads(out) == load_fixture('trace_58_67.json')


def test_verify_golden(capsys):
    status, out, _ = run(capsys, 'verify', '--id', 'thm-chat-repeat', '--id', 'cor-shiftcor',
                         '--order', '30', '--a', '7', '--format', 'json')
    assert status == 0
    assert strip_timing(json.loads(out)) == load_fixture('verify_shiftcor_chat_repeat.json')


def test_records_carry_timing(capsys):
    status, out, _ = run(capsys, 'verify', '--id', 'cor-chat-ones-gf', '--order', '20', '--format', 'json')
    assert status == 0
    (record,) = json.loads(out)['records']
    assert record['elapsed_ms'] >= 0


def test_workers_keep_order(capsys):
    argv = ['verify', '--id', 'thm-hypergeom', '--id', 'cor-sB-gf', '--id', 'cor-chat-ones-2var',
            '--order', '40', '--format', 'json']
    _, serial, _ = run(capsys, *argv)
    _, threaded, _ = run(capsys, *argv, '--workers', '3')
    ids = [r['id'] for r in json.loads(threaded)['records']]
    assert ids == sorted(ids)
    assert strip_timing(json.loads(serial)) == strip_timing(json.loads(threaded))


def test_verify_all_binary(capsys):
    status, out, _ = run(capsys, 'verify-all', '--base', '2', '--order', '128', '--format', 'json',
                         '--terms', '20000', '--convolution_terms', '5000')
    payload = json.loads(out)
    assert status == 0
    assert payload['passed']
    assert {r['id'] for r in payload['records']} == set(CATALOG_IDS)
    assert all(r['passed'] for r in payload['records'])


def test_dirichlet_command(capsys):
    status, out, _ = run(capsys, 'dirichlet', '--s', '3+1i', '--terms', '10000',
                         '--convolution_terms', '2000', '--format', 'json')
    assert status == 0
    records = json.loads(out)['records']
    assert {r['id'] for r in records} == {'dir-chat', 'dir-carry', 'dir-convolution', 'dir-limit'}
    chat = next(r for r in records if r['id'] == 'dir-chat')
    assert chat['rigorous'] and chat['abs_error'] <= chat['bound']
    assert chat['params']['s'] == [3.0, 1.0]


def test_bilateral_command(capsys):
    status, out, _ = run(capsys, 'bilateral', '--format', 'json')
    assert status == 0
    checks = [r['params']['check'] for r in json.loads(out)['records']]
    assert 'window doubling' in checks and 'exact shift replay' in checks


def test_failed_exact_check_exits_one(capsys, monkeypatch):
    def bad(n, B):
        return digit_sum(n, B) + (n == 17)

    def runner(cfg):
        return [CheckRecord.from_report(genfun.verify_two_variable(cfg.base, cfg.order, digit_sum_fn=bad))]

    monkeypatch.setitem(catalog.CATALOG, 'thm-two-variable', runner)
    status, out, _ = run(capsys, 'verify', '--id', 'thm-two-variable', '--order', '40', '--format', 'json')
    assert status == 1
    (record,) = json.loads(out)['records']
    assert not record['passed']
    assert record['first_divergence']['q_exponent'] == 17


def test_heuristic_failure_does_not_block(capsys, monkeypatch):
    def runner(cfg):
        check = NumericCheck('forced', 1.0, 2.0, 1.0, 0.5, rigorous=False)
        return [CheckRecord.from_numeric('dir-convolution', cfg.base, 10, check, 0.0)]

    monkeypatch.setitem(catalog.CATALOG, 'dir-convolution', runner)
    status, out, _ = run(capsys, 'verify', '--id', 'dir-convolution')
    assert status == 0
    assert out.startswith('WARN dir-convolution')


def test_failed_bilateral_equation_exits_one(capsys, monkeypatch):
    monkeypatch.setattr(run_digitlab, 'NumericConfig',
                        lambda: NumericConfig(bilateral_tolerance=0.0, window_stability=0.0))
    status, out, _ = run(capsys, 'bilateral', '--z', '3.3', '--q', '0.41', '--format', 'json')
    assert status == 1
    payload = json.loads(out)
    assert not payload['passed']
    failed = [r for r in payload['records'] if not r['passed']]
    assert failed and all(r['rigorous'] for r in failed)


@pytest.mark.parametrize('argv', [
    ['verify', '--id', 'no-such-identity'],
    ['verify'],
    ['trace'],
    ['digits', '--base', '1', '5'],
    ['verify', '--id', 'dir-chat', '--s', '2'],
    ['bilateral', '--z', '1.5'],
    ['bilateral', '--x', '4294967296', '--z', '3', '--q', '0.5', '--window', '1', '--r', '0', '--t', '1'],
    ['verify', '--id', 'thm-two-variable', '--order', '20000'],
])
def test_usage_and_domain_errors(capsys, argv):
    status, out, err = run(capsys, *argv)
    assert status == 2
    assert out == ''
    assert err.startswith('digitlab: error:')


def test_argparse_errors_exit_two(capsys):
    with pytest.raises(SystemExit) as excinfo:
        run_digitlab.main(['frobnicate'])
    assert excinfo.value.code == 2


def test_log_dir(capsys, tmp_path):
    log_dir = tmp_path / 'run'
    status, _, _ = run(capsys, 'verify', '--id', 'cor-shiftcor', '--id', 'thm-hypergeom', '--order', '20',
                       '--log_dir', str(log_dir))
    assert status == 0
    with open(log_dir / 'variant.json') as f:
        variant = json.load(f)
    assert variant['ids'] == ['cor-shiftcor', 'thm-hypergeom']
    with open(log_dir / 'progress.csv') as f:
        rows = list(csv.DictReader(f))
    assert [r['id'] for r in rows] == ['cor-shiftcor', 'thm-hypergeom']
    assert all(r['passed'] == 'True' for r in rows)
