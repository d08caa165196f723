import io
import json
import sys

import pytest

from layerhom.cli import EXIT_DOMAIN, EXIT_OK, EXIT_USAGE, main
from layerhom.series import hilbert_B, window_betti


def run(capsys, monkeypatch, argv, stdin=None):
    if stdin is not None:
        monkeypatch.setattr('sys.stdin', io.StringIO(stdin))
    status = main(argv)
    return status, capsys.readouterr().out


def generate(capsys, monkeypatch, *args):
    status, out = run(capsys, monkeypatch, ['generate', '--json'] + list(args))
    assert status == EXIT_OK
    return out


def test_boolean_pipeline_golden(capsys, monkeypatch):
    graph = generate(capsys, monkeypatch, 'boolean', '3')
    status, out = run(capsys, monkeypatch, ['hilbert-b', '--json'], graph)
    assert status == EXIT_OK
    assert out == '{"coeffs": [1, 7, 5, 1], "truncation": 3}\n'


def test_json_output_is_deterministic(capsys, monkeypatch):
    graph = generate(capsys, monkeypatch, 'cassidy-shelton')
    first = run(capsys, monkeypatch, ['report', '--json'], graph)
    second = run(capsys, monkeypatch, ['report', '--json'], graph)
    assert first == second
    assert generate(capsys, monkeypatch, 'cassidy-shelton') == graph


def test_cassidy_shelton_koszul(capsys, monkeypatch):
    graph = generate(capsys, monkeypatch, 'cassidy-shelton')
    status, out = run(capsys, monkeypatch, ['koszul', '--json'], graph)
    assert status == EXIT_OK
    document = json.loads(out)
    assert document['verdict'] is False
    assert document['defects']['4'] == 1

    status, out = run(capsys, monkeypatch, ['koszul'], graph)
    assert 'not numerically Koszul' in out
    assert '4' in out


def test_validate_reports_violations(capsys, monkeypatch):
    bad = json.dumps({'vertices': [{'id': 'a', 'level': 2},
                                   {'id': '*', 'level': 0}],
                      'edges': [['a', '*']]})
    status, out = run(capsys, monkeypatch, ['validate', '--json'], bad)
    assert status == EXIT_DOMAIN
    assert len(json.loads(out)['violations']) == 1

    status, out = run(capsys, monkeypatch, ['validate'], bad)
    assert status == EXIT_DOMAIN
    assert out.startswith('invalid:')


def test_malformed_input(capsys, monkeypatch):
    status, out = run(capsys, monkeypatch, ['validate', '--json'],
                      '{"vertices": [], "edges": [["a"]]}')
    assert status == EXIT_DOMAIN
    assert json.loads(out)['error'] == 'GraphFormatError'


def test_input_file(capsys, monkeypatch, tmp_path):
    path = tmp_path / 'theta2.json'
    path.write_text(generate(capsys, monkeypatch, 'boolean', '2'))
    status, out = run(capsys, monkeypatch,
                      ['oracle', '--json', '--input', str(path)])
    assert status == EXIT_OK
    document = json.loads(out)
    assert document['dims'] == [1, 3, 1]
    assert document['matches_hilbert_B'] is True


def test_missing_input_file(capsys, monkeypatch, tmp_path):
    status, _ = run(capsys, monkeypatch,
                    ['validate', '--input', str(tmp_path / 'nope.json')])
    assert status == EXIT_DOMAIN


@pytest.mark.parametrize('argv', [
    [],
    ['frobnicate'],
    ['koszul', '--both-fields'],
    ['generate'],
    ['generate', 'boolean', '--max-degree', 'x'],
    ['homology', '--window', '2'],
    ['cm-check', '--vertex', '{1,2}'],
    ['hilbert-b', '--low-degree', '--both-fields'],
])
def test_usage_errors(capsys, monkeypatch, argv):
    status, _ = run(capsys, monkeypatch, argv, '')
    assert status == EXIT_USAGE


def test_bad_field(capsys, monkeypatch):
    graph = generate(capsys, monkeypatch, 'boolean', '2')
    status, _ = run(capsys, monkeypatch,
                    ['hilbert-b', '--field', 'p:4'], graph)
    assert status == EXIT_DOMAIN


def test_bad_family_parameters(capsys, monkeypatch):
    status, _ = run(capsys, monkeypatch,
                    ['generate', 'prescribed-rs', '4', '3'])
    assert status == EXIT_DOMAIN


def test_both_fields(capsys, monkeypatch):
    graph = generate(capsys, monkeypatch, 'boolean', '3')
    status, out = run(capsys, monkeypatch,
                      ['homology', '--json', '--both-fields', '--vertex',
                       '{1,2,3}', '--window', '3'], graph)
    assert status == EXIT_OK
    document = json.loads(out)
    assert document['agree'] is True
    assert document['fields']['Q'] == {'-1': 0, '0': 0, '1': 1}
    assert set(document['fields']) == {'Q', 'Fp(2)'}


def test_window_flags_go_together(capsys, monkeypatch):
    graph = generate(capsys, monkeypatch, 'boolean', '2')
    monkeypatch.setattr('sys.stdin', io.StringIO(graph))
    status = main(['mobius', '--vertex', '{1,2}'])
    assert status == EXIT_USAGE
    assert '--vertex and --window go together' in capsys.readouterr().err
    # refused before the graph is read
    assert sys.stdin.read() == graph


def test_mobius(capsys, monkeypatch):
    graph = generate(capsys, monkeypatch, 'complete', '3', '2')
    status, out = run(capsys, monkeypatch, ['mobius', '--json'], graph)
    assert status == EXIT_OK
    # K_{3,2} is a wedge of two circles
    assert json.loads(out) == {'mobius': -2, 'euler_characteristic': -2}


def test_cm_check(capsys, monkeypatch):
    graph = generate(capsys, monkeypatch, 'complete', '2', '2', '1')
    status, out = run(capsys, monkeypatch, ['cm-check', '--json'], graph)
    assert status == EXIT_OK
    assert json.loads(out) == {'cohen_macaulay': True, 'failures': []}


def test_strict_refuses_non_uniform(capsys, monkeypatch):
    graph = json.dumps({
        'vertices': [{'id': 'a', 'level': 2}, {'id': 'b1', 'level': 1},
                     {'id': 'b2', 'level': 1}, {'id': 'z1', 'level': 0},
                     {'id': 'z2', 'level': 0}],
        'edges': [['a', 'b1'], ['a', 'b2'], ['b1', 'z1'], ['b2', 'z2']],
    })
    status, out = run(capsys, monkeypatch, ['uniform', '--json'], graph)
    assert status == EXIT_OK
    assert json.loads(out)['failing_tails'] == ['a']

    status, _ = run(capsys, monkeypatch, ['uniform', '--strict'], graph)
    assert status == EXIT_DOMAIN
    status, _ = run(capsys, monkeypatch, ['hilbert-b', '--strict'], graph)
    assert status == EXIT_DOMAIN
    status, _ = run(capsys, monkeypatch, ['koszul'], graph)
    assert status == EXIT_DOMAIN
    # lenient by default
    status, _ = run(capsys, monkeypatch, ['hilbert-b'], graph)
    assert status == EXIT_OK


def test_inverse_series_commands(capsys, monkeypatch):
    graph = generate(capsys, monkeypatch, 'palindromic', '9')
    status, out = run(capsys, monkeypatch,
                      ['inv-hilbert-a', '--json', '--chain-count'], graph)
    assert status == EXIT_OK
    assert json.loads(out)['coeffs'] == [1, -9, 9, -1]

    status, out = run(capsys, monkeypatch,
                      ['inv-hilbert-a', '--json', '--invert',
                       '--max-degree', '3'], graph)
    document = json.loads(out)
    assert document['hilbert_A']['coeffs'] == [1, 9, 72, 568]

    status, out = run(capsys, monkeypatch, ['inv-hilbert-a'], graph)
    assert out.strip() == 'h(A)^-1 = 1 - 9t + 9t^2 - t^3'


def test_low_degree_flag(capsys, monkeypatch):
    graph = generate(capsys, monkeypatch, 'cassidy-shelton')
    status, out = run(capsys, monkeypatch,
                      ['hilbert-b', '--json', '--low-degree'], graph)
    assert json.loads(out) == {'low_degree': [1, 10, 8, 1]}


def test_report(capsys, monkeypatch):
    graph = generate(capsys, monkeypatch, 'cassidy-shelton')
    status, out = run(capsys, monkeypatch, ['report', '--json'], graph)
    assert status == EXIT_OK
    document = json.loads(out)
    assert document['consistent'] is True
    assert document['hilbert_B'] == [1, 10, 8, 1, 0]
    assert document['oracle']['dims'] == [1, 10, 8, 1, 0]
    assert document['inv_hilbert_A_chain_count'] == document['inv_hilbert_A']
    assert document['koszul']['verdict'] is False


def test_report_skips_koszul_when_hypotheses_fail(capsys, monkeypatch):
    graph = json.dumps({
        'vertices': [{'id': 'x', 'level': 1}, {'id': 'y', 'level': 1},
                     {'id': '*', 'level': 0}],
        'edges': [['x', '*']],
    })
    status, out = run(capsys, monkeypatch, ['report', '--json'], graph)
    assert status == EXIT_OK
    assert 'skipped' in json.loads(out)['koszul']


def test_config_file_and_workers(capsys, monkeypatch, tmp_path):
    config = tmp_path / 'layerhom.ini'
    config.write_text('[layerhom]\nfield = p:3\nworkers = 2\n')
    graph = generate(capsys, monkeypatch, 'boolean', '3')
    status, out = run(capsys, monkeypatch,
                      ['hilbert-b', '--json', '--config', str(config)], graph)
    assert status == EXIT_OK
    assert json.loads(out)['coeffs'] == [1, 7, 5, 1]

    status, out = run(capsys, monkeypatch,
                      ['homology', '--json', '--config', str(config)], graph)
    assert json.loads(out)['field'] == 'Fp(3)'


def test_human_output(capsys, monkeypatch):
    graph = generate(capsys, monkeypatch, 'boolean', '2')
    status, out = run(capsys, monkeypatch, ['hilbert-b'], graph)
    assert out.strip() == 'h(B) = 1 + 3t + t^2'
    status, out = run(capsys, monkeypatch, ['validate'], graph)
    assert out.startswith('valid: 4 vertices')


def test_each_run_starts_with_empty_window_cache(capsys, monkeypatch, theta3):
    hilbert_B(theta3)
    assert window_betti.cache
    generate(capsys, monkeypatch, 'boolean', '2')
    assert not window_betti.cache
