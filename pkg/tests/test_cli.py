# Copyright (c) 2022, VRAI Labs and/or its affiliates. All rights reserved.
#
# This software is licensed under the Apache License, Version 2.0 (the
# "License") as published by the Apache Software Foundation.
#
# You may not use this file except in compliance with the License. You may
# obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
# WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
# License for the specific language governing permissions and limitations
# under the License.
import json

from pytest import raises

from iam_simulator.audit import dumps_events, read_log
from iam_simulator.cli import main
from iam_simulator.data import bundled_scenario_path, cross_account_scenario_path
from iam_simulator.evaluation import AccessRequest, explain
from iam_simulator.least_privilege import build_usage_index, generate_least_privilege, render_generated_policy
from iam_simulator.organization import load_scenario, parse_scenario
from tests.utils import ACCOUNT_A, ACCOUNT_B, BUCKET_S, api_call, cross_account_org, login, reset

CROSS = cross_account_scenario_path()
REQUESTS = [
    {'user': 'user-1', 'account': ACCOUNT_A, 'action': 's3:GetObject', 'resource': BUCKET_S},
    {'user': 'user-2', 'account': ACCOUNT_B, 'action': 's3:GetObject', 'resource': BUCKET_S},
    {'user': 'user-3', 'account': ACCOUNT_B, 'action': 's3:GetObject', 'resource': BUCKET_S}
]


def setup_function(f):
    reset()


def teardown_function(f):
    reset()


def authorize_args(user, account, *extra):
    return ['--scenario', CROSS, 'authorize', '--user', user, '--account', account,
            '--action', 's3:GetObject', '--resource', BUCKET_S] + list(extra)


def write_requests(tmp_path, requests=None, prefix=''):
    file_path = tmp_path / 'requests.jsonl'
    file_path.write_text(prefix + ''.join(json.dumps(r) + '\n' for r in requests or REQUESTS), encoding='utf-8')
    return str(file_path)


def write_events(tmp_path, name, events):
    file_path = tmp_path / name
    file_path.write_text(dumps_events(events), encoding='utf-8')
    return str(file_path)


def test_validate_the_bundled_scenario(capsys):
    assert main(['validate']) == 0
    assert capsys.readouterr().out == 'valid: 13 accounts, 7 users, 6 permission sets, 6 resources\n'
    assert main(['--format', 'json', 'validate', CROSS]) == 0
    assert json.loads(capsys.readouterr().out) == {
        'valid': True, 'accounts': 3, 'users': 3, 'permission_sets': 1, 'resources': 1
    }


def test_validate_reports_bad_and_missing_files(tmp_path, capsys):
    broken = tmp_path / 'broken.json'
    broken.write_text('{"organization": {}}', encoding='utf-8')
    assert main(['validate', str(broken)]) == 2
    assert capsys.readouterr().err.startswith('error: ')
    assert main(['validate', str(tmp_path / 'missing.json')]) == 3
    assert capsys.readouterr().err.startswith('error: ')


def test_authorize_exit_codes(capsys):
    assert main(authorize_args('user-1', ACCOUNT_A)) == 0
    assert capsys.readouterr().out == 'Allow (SameAccountAllow)\n'
    assert main(authorize_args('user-2', ACCOUNT_B)) == 1
    assert capsys.readouterr().out == 'Deny (ImplicitDeny)\n'
    assert main(authorize_args('user-3', ACCOUNT_B)) == 0
    assert capsys.readouterr().out == 'Allow (CrossAccountAllow)\n'
    assert main(authorize_args('mallory', ACCOUNT_B)) == 2
    assert 'unknown user "mallory"' in capsys.readouterr().err
    assert main(authorize_args('user-1', ACCOUNT_A, '--context', 'no-equals-sign')) == 2


def test_authorize_explain_matches_the_library(capsys):
    assert main(authorize_args('user-2', ACCOUNT_B, '--explain', '--context', 'env=dev')) == 1
    request = AccessRequest('user-2', ACCOUNT_B, 's3:GetObject', BUCKET_S, {'env': 'dev'})
    assert capsys.readouterr().out == explain(cross_account_org(), request)

    assert main(['--format', 'json'] + authorize_args('user-3', ACCOUNT_B, '--explain')) == 0
    decision = json.loads(capsys.readouterr().out)
    assert (decision['verdict'], decision['reason']) == ('Allow', 'CrossAccountAllow')
    assert [t['origin_kind'] for t in decision['trace']] == ['identity', 'resource']


def test_simulate_writes_decisions_and_events(tmp_path, capsys):
    requests = write_requests(tmp_path)
    log = str(tmp_path / 'logs' / 'events.jsonl')
    assert main(['--scenario', CROSS, 'simulate', '--requests', requests, '--emit-log', log,
                 '--base-time', '2022-02-01T00:00:00Z']) == 0
    captured = capsys.readouterr()
    assert [json.loads(line) for line in captured.out.splitlines()] == [
        {'verdict': 'Allow', 'reason': 'SameAccountAllow'},
        {'verdict': 'Deny', 'reason': 'ImplicitDeny'},
        {'verdict': 'Allow', 'reason': 'CrossAccountAllow'}
    ]
    assert captured.err == '3 request(s): 2 allowed, 1 denied\n'
    events = read_log(log).events
    assert [(e.user, e.verdict) for e in events] == [('user-1', 'Allow'), ('user-2', 'Deny'), ('user-3', 'Allow')]

    output = str(tmp_path / 'decisions.jsonl')
    assert main(['--scenario', CROSS, 'simulate', '--requests', requests, '--output', output, '--trace',
                 '--workers', '4']) == 0
    assert capsys.readouterr().out == ''
    with open(output, encoding='utf-8') as f:
        assert [len(json.loads(line)['trace']) for line in f] == [2, 2, 2]


def test_simulate_points_at_the_offending_line(tmp_path, capsys):
    bad = REQUESTS[:1] + [dict(REQUESTS[0], user='mallory')]
    requests = write_requests(tmp_path, bad, prefix='\n')
    log = str(tmp_path / 'events.jsonl')
    assert main(['--scenario', CROSS, 'simulate', '--requests', requests, '--emit-log', log]) == 2
    assert requests + ':3: ' in capsys.readouterr().err
    assert not (tmp_path / 'events.jsonl').exists()

    (tmp_path / 'requests.jsonl').write_text('{"user": "user-1"}\n', encoding='utf-8')
    assert main(['--scenario', CROSS, 'simulate', '--requests', requests]) == 2
    assert requests + ':1: ' in capsys.readouterr().err


def test_generated_policy_from_the_cli_matches_the_library(tmp_path, capsys):
    requests = write_requests(tmp_path, REQUESTS * 3)
    log = str(tmp_path / 'events.jsonl')
    assert main(['--scenario', CROSS, 'simulate', '--requests', requests, '--emit-log', log]) == 0
    capsys.readouterr()

    for level in ('4', '2'):
        assert main(['--scenario', CROSS, 'analyze', 'generate', '--log', log,
                     '--principal', 'user-3@' + ACCOUNT_B, '--level', level]) == 0
        org = load_scenario(CROSS)
        generated = generate_least_privilege(build_usage_index(org, read_log(log).events), org,
                                             ('user-3', ACCOUNT_B), int(level))
        assert capsys.readouterr().out == render_generated_policy(generated)

    assert main(['--scenario', CROSS, 'analyze', 'generate', '--log', log, '--principal', 'user-2@' + ACCOUNT_B]) == 2
    assert 'no allowed activity' in capsys.readouterr().err
    assert main(['--scenario', CROSS, 'analyze', 'generate', '--log', log, '--principal', 'user-2']) == 2
    with raises(SystemExit):
        main(['--scenario', CROSS, 'analyze', 'generate', '--log', log, '--principal', 'user-3@' + ACCOUNT_B,
              '--level', '1'])


def test_analyze_unused_and_narrow(tmp_path, capsys):
    log = write_events(tmp_path, 'events.jsonl', [
        login(0, 'alice', '200000000001'),
        api_call(60, 'alice', '200000000001', 'ec2:DescribeInstances',
                 'arn:aws:ec2:ap-northeast-2:200000000001:instance/i-1'),
        api_call(120, 'erin', '400000000001', 's3:GetObject', 'arn:aws:s3:::org-log-archive')
    ])
    assert main(['--format', 'json', 'analyze', 'unused', '--log', log, '--as-of', '2022-01-02T00:00:00Z',
                 '--threshold-days', '0']) == 0
    rows = json.loads(capsys.readouterr().out)
    keys = [(r['permission_set'], r['policy'], r['statement']) for r in rows]
    assert ('backend', 'backend-services', 0) in keys
    assert [r for r in rows if r['last_used'] != 'never'] == [
        {'permission_set': 'backend', 'policy': 'backend-services', 'statement': 0,
         'last_used': '2022-01-01T00:01:00Z'},
        {'permission_set': 'data-analyst', 'policy': 'analytics-read', 'statement': 0,
         'last_used': '2022-01-01T00:02:00Z'}
    ]

    assert main(['--format', 'json', 'analyze', 'narrow', '--log', log]) == 0
    suggestions = {(s['permission_set'], s['statement']): s for s in json.loads(capsys.readouterr().out)}
    assert suggestions[('backend', 0)]['exercised'] == ['ec2:Describe*']
    assert suggestions[('backend', 0)]['read_only']
    assert ('data-analyst', 0) not in suggestions


def test_audit_merge_query_and_split(tmp_path, capsys):
    first = write_events(tmp_path, 'a.jsonl', [
        api_call(0, 'user-1', ACCOUNT_A, 's3:GetObject', BUCKET_S),
        api_call(20, 'user-1', ACCOUNT_A, 's3:DeleteObject', BUCKET_S, 'Deny')
    ])
    second = write_events(tmp_path, 'b.jsonl', [
        login(10, 'user-2', ACCOUNT_B),
        api_call(30, 'user-2', ACCOUNT_B, 'dynamodb:DeleteItem', 'arn:aws:dynamodb:r:333333333333:table/T', 'Deny')
    ])
    out_dir = tmp_path / 'merged'
    assert main(['audit', 'merge', first, second, '--output-dir', str(out_dir)]) == 0
    assert 'merged 4 event(s) from 2 account(s)' in capsys.readouterr().err
    archive = str(out_dir / 'archive.jsonl')
    assert [e.kind for e in read_log(archive).events] == ['ApiCall', 'Login', 'ApiCall', 'ApiCall']

    assert main(['--format', 'json', 'audit', 'query', archive, '--action', '*:Delete*']) == 0
    assert [json.loads(line)['action'] for line in capsys.readouterr().out.splitlines()] == \
        ['s3:DeleteObject', 'dynamodb:DeleteItem']
    assert main(['audit', 'query', first, second, '--kind', 'Login']) == 0
    assert capsys.readouterr().out == '2022-01-01T00:00:10Z  Login  user-2@333333333333  Allow\n'
    assert main(['audit', 'query', archive, '--start', 'tomorrow']) == 2

    assert main(['audit', 'denied-summary', archive, '--bucket', '1m']) == 0
    assert capsys.readouterr().out == '2022-01-01T00:00:00Z  user-1@222222222222  1\n' \
                                      '2022-01-01T00:00:00Z  user-2@333333333333  1\n'

    split_dir = tmp_path / 'split'
    assert main(['audit', 'split', archive, '--output-dir', str(split_dir)]) == 0
    assert sorted(p.name for p in split_dir.iterdir()) == [ACCOUNT_A + '.jsonl', ACCOUNT_B + '.jsonl']
    assert (split_dir / (ACCOUNT_A + '.jsonl')).read_text(encoding='utf-8') == \
        (tmp_path / 'a.jsonl').read_text(encoding='utf-8')


def test_malformed_logs_fail_with_their_location(tmp_path, capsys):
    log = tmp_path / 'bad.jsonl'
    log.write_text('{"time": "2022-01-01T00:00:00Z"}\n', encoding='utf-8')
    assert main(['audit', 'query', str(log)]) == 2
    assert str(log) + ':1: ' in capsys.readouterr().err
    assert main(['audit', 'query', str(tmp_path / 'missing.jsonl')]) == 3


def test_undecodable_inputs_are_bad_input(tmp_path, capsys):
    log = tmp_path / 'trail.jsonl'
    valid = dumps_events([login(0, 'user-1', ACCOUNT_A)]).encode('utf-8')
    log.write_bytes(valid + b'{"time": "\xff\xfe"}\n')
    assert main(['audit', 'query', str(log)]) == 2
    assert str(log) + ':2: not valid UTF-8' in capsys.readouterr().err
    assert main(['audit', 'merge', str(log), '--output-dir', str(tmp_path / 'out')]) == 2
    assert str(log) + ':2: ' in capsys.readouterr().err

    scenario = tmp_path / 'org.json'
    scenario.write_bytes(b'{\n"organization": "\xff"\n}\n')
    assert main(['--scenario', str(scenario), 'validate']) == 2
    assert str(scenario) + ':2: not valid UTF-8' in capsys.readouterr().err

    requests = tmp_path / 'requests.jsonl'
    requests.write_bytes(json.dumps(REQUESTS[0]).encode('utf-8') + b'\n\xc3\x28\n')
    assert main(['--scenario', CROSS, 'simulate', '--requests', str(requests)]) == 2
    assert str(requests) + ':2: not valid UTF-8' in capsys.readouterr().err

    config = tmp_path / 'run.yaml'
    config.write_bytes(b'seed: \xff\n')
    assert main(['--config', str(config), 'validate']) == 2
    assert str(config) + ':1: not valid UTF-8' in capsys.readouterr().err


def test_export(capsys):
    assert main(['--scenario', CROSS, 'export', '--what', 'scenario']) == 0
    out = capsys.readouterr().out
    assert parse_scenario(out) == load_scenario(CROSS)
    exported = json.loads(out)
    assert exported['organization']['management_account'] == '111111111111'
    assert main(['export']) == 0
    assert isinstance(json.loads(capsys.readouterr().out), dict)


def test_run_config_file(tmp_path, capsys):
    config = tmp_path / 'run.yaml'
    config.write_text('scenario: ' + CROSS + '\nformat: json\nseed: 7\n', encoding='utf-8')
    args = ['authorize', '--user', 'user-1', '--account', ACCOUNT_A, '--action', 's3:GetObject',
            '--resource', BUCKET_S]
    assert main(['--config', str(config)] + args) == 0
    assert json.loads(capsys.readouterr().out) == {'verdict': 'Allow', 'reason': 'SameAccountAllow'}
    assert main(['--config', str(config), '--format', 'text'] + args) == 0
    assert capsys.readouterr().out == 'Allow (SameAccountAllow)\n'

    config.write_text('scenario: ' + CROSS + '\ncolour: blue\n', encoding='utf-8')
    assert main(['--config', str(config)] + args) == 2
    config.write_text('scenario: [unclosed\n', encoding='utf-8')
    assert main(['--config', str(config)] + args) == 2
    assert main(['--config', str(tmp_path / 'missing.yaml')] + args) == 3


def test_version_and_bundled_paths(capsys):
    with raises(SystemExit) as e:
        main(['--version'])
    assert e.value.code == 0
    assert capsys.readouterr().out.startswith('iam-simulator ')
    assert bundled_scenario_path().endswith('multi-account-org.json')
