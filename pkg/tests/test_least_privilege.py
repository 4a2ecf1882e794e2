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
from datetime import timedelta
from random import Random

from pytest import raises

from iam_simulator.evaluation import AccessRequest, ListSink, authorize, simulate
from iam_simulator.evaluation.exceptions import UnknownPrincipalError
from iam_simulator.exceptions import BadInputError
from iam_simulator.least_privilege import (
    build_usage_index,
    complement_sample,
    generate_least_privilege,
    install_generated_policy,
    narrowing_report,
    render_generated_policy,
    render_narrowing_report,
    render_unused_report,
    unused_report
)
from iam_simulator.least_privilege.exceptions import NoObservationsError, OutOfOrderEventsError
from iam_simulator.organization import build_org, resolve_permission_sets
from iam_simulator.policy import serialize_policy
from iam_simulator.utils import format_timestamp
from tests.utils import (
    ACCOUNT_A,
    ACCOUNT_B,
    T0,
    allow,
    api_call,
    assign,
    deny,
    login,
    permission_set,
    random_action,
    random_scenario,
    reset,
    scenario,
    scenario_account_ids
)

DAY = 24 * 60 * 60
INSTANCE = 'arn:aws:ec2:ap-northeast-2:222222222222:instance/i-1'
CERTIFICATE = 'arn:aws:acm:ap-northeast-2:222222222222:certificate/c-1'
TABLE = 'arn:aws:dynamodb:ap-northeast-2:222222222222:table/Books'
BUCKET_0 = 'arn:aws:s3:::bucket-0/data'
BUCKET_1 = 'arn:aws:s3:::bucket-1/data'
PRINCIPAL = ('dev', ACCOUNT_A)


def setup_function(f):
    reset()


def teardown_function(f):
    reset()


def backend_org():
    return build_org(scenario(
        users=[{'id': 'dev'}],
        permission_sets=[
            {'id': 'backend', 'policies': [{'name': 'backend-services', 'document': {
                'Version': '2012-10-17',
                'Statement': [allow('ec2:*'), allow('acm:*'), deny('ec2:TerminateInstances')]
            }}]}
        ],
        assignments=[assign('dev', ACCOUNT_A, 'backend')],
        resources=[{'arn': INSTANCE, 'owner_account': ACCOUNT_A}, {'arn': CERTIFICATE, 'owner_account': ACCOUNT_A}]
    ))


def developer_org():
    return build_org(scenario(
        accounts=[ACCOUNT_A, ACCOUNT_B],
        users=[{'id': 'dev'}, {'id': 'idle'}],
        permission_sets=[permission_set('developer', allow(['s3:*', 'ec2:*', 'dynamodb:*']))],
        assignments=[assign('dev', ACCOUNT_A, 'developer'), assign('idle', ACCOUNT_A, 'developer')],
        resources=[{'arn': r, 'owner_account': ACCOUNT_A} for r in (BUCKET_0, BUCKET_1, INSTANCE, TABLE)]
    ))


def developer_events():
    return [
        login(0, 'dev', ACCOUNT_A),
        api_call(10, 'dev', ACCOUNT_A, 's3:GetObject', BUCKET_0),
        api_call(20, 'dev', ACCOUNT_A, 's3:PutObject', BUCKET_0),
        api_call(30, 'dev', ACCOUNT_A, 's3:ListBucket', BUCKET_1),
        api_call(40, 'dev', ACCOUNT_A, 'ec2:DescribeInstances', INSTANCE),
        api_call(50, 'dev', ACCOUNT_A, 'dynamodb:GetItem', TABLE),
        api_call(60, 'dev', ACCOUNT_A, 'ec2:TerminateInstances', INSTANCE, verdict='Deny')
    ]


def statement_shapes(generated):
    return [([str(a) for a in s.actions], [r.pattern for r in s.resources]) for s in generated.document.statements]


def test_usage_index_credits_identity_statements():
    index = build_usage_index(developer_org(), developer_events())
    assert index.events_ingested == 7
    assert index.last_used_of(('developer', 'inline', 0)) == T0 + timedelta(seconds=50)
    assert index.exercised[('developer', 'inline', 0)] == \
        {'s3:GetObject', 's3:PutObject', 's3:ListBucket', 'ec2:DescribeInstances', 'dynamodb:GetItem'}
    assert 'ec2:TerminateInstances' in index.actions_seen
    assert [o.action for o in index.observations_of(PRINCIPAL)] == \
        ['s3:GetObject', 's3:PutObject', 's3:ListBucket', 'ec2:DescribeInstances', 'dynamodb:GetItem']
    assert index.observations_of(('idle', ACCOUNT_A)) == []


def test_usage_index_rejects_bad_streams():
    events = developer_events()
    with raises(OutOfOrderEventsError):
        build_usage_index(developer_org(), list(reversed(events)))
    with raises(UnknownPrincipalError):
        build_usage_index(developer_org(), events + [api_call(70, 'mallory', ACCOUNT_A, 's3:GetObject', BUCKET_0)])
    assert build_usage_index(developer_org(), []).is_empty()


def test_statement_unused_past_the_threshold_is_reported():
    events = [api_call(0, 'dev', ACCOUNT_A, 'acm:DescribeCertificate', CERTIFICATE)]
    events += [api_call(week * 7 * DAY + 1, 'dev', ACCOUNT_A, 'ec2:DescribeInstances', INSTANCE)
               for week in range(18)]
    index = build_usage_index(backend_org(), events)
    rows = unused_report(index, backend_org(), T0 + timedelta(days=120), 90)
    assert [(r.key(), r.last_used) for r in rows] == [(('backend', 'backend-services', 1), T0)]
    assert rows[0].to_json() == {'permission_set': 'backend', 'policy': 'backend-services', 'statement': 1,
                                 'last_used': '2022-01-01T00:00:00Z'}


def test_never_used_statements_come_first():
    index = build_usage_index(backend_org(), [api_call(0, 'dev', ACCOUNT_A, 'acm:DescribeCertificate',
                                                       CERTIFICATE)])
    rows = unused_report(index, backend_org(), T0 + timedelta(days=120), 90)
    assert [r.statement_index for r in rows] == [0, 1]
    assert rows[0].last_used is None
    text = render_unused_report(rows)
    assert text.splitlines()[0].split() == ['PERMISSION', 'SET', 'POLICY', 'STATEMENT', 'LAST', 'USED']
    assert text.splitlines()[1].split() == ['backend', 'backend-services', '0', 'never']
    assert '"last_used": "never"' in render_unused_report(rows, 'json')
    with raises(BadInputError):
        unused_report(index, backend_org(), T0, -1)
    with raises(BadInputError):
        render_unused_report(rows, 'yaml')


def test_level_four_keeps_exact_pairs():
    org = developer_org()
    generated = generate_least_privilege(build_usage_index(org, developer_events()), org, PRINCIPAL, 4)
    assert statement_shapes(generated) == [
        (['dynamodb:GetItem'], [TABLE]),
        (['ec2:DescribeInstances'], [INSTANCE]),
        (['s3:GetObject'], [BUCKET_0]),
        (['s3:ListBucket'], [BUCKET_1]),
        (['s3:PutObject'], [BUCKET_0])
    ]
    assert generated.document.name == 'least-privilege-level-4'
    assert generated.window == (T0 + timedelta(seconds=10), T0 + timedelta(seconds=50))
    assert generated.verification.coverage == 1.0
    assert generated.verification.excess == 0.0
    assert generated.verified


def test_level_two_grants_one_statement_per_service():
    org = developer_org()
    generated = generate_least_privilege(build_usage_index(org, developer_events()), org, PRINCIPAL, 2)
    assert statement_shapes(generated) == [(['dynamodb:*'], ['*']), (['ec2:*'], ['*']), (['s3:*'], ['*'])]
    assert generated.verification.coverage == 1.0
    assert generated.verification.excess > 0.0
    assert generated.verified


def test_level_three_groups_by_verb():
    org = developer_org()
    generated = generate_least_privilege(build_usage_index(org, developer_events()), org, PRINCIPAL, 3)
    assert statement_shapes(generated) == [
        (['dynamodb:Get*'], ['*']),
        (['ec2:Describe*'], ['*']),
        (['s3:Get*'], ['*']),
        (['s3:List*'], ['*']),
        (['s3:Put*'], ['*'])
    ]
    assert generated.fallbacks == []


def test_unknown_verbs_stay_at_level_four():
    org = developer_org()
    events = [api_call(10, 'dev', ACCOUNT_A, 's3:RestoreObject', BUCKET_0)]
    generated = generate_least_privilege(build_usage_index(org, events), org, PRINCIPAL, 3)
    assert statement_shapes(generated) == [(['s3:RestoreObject'], ['*'])]
    assert generated.fallbacks == ['s3:RestoreObject']
    assert '# kept at level 4 (verb not in table): s3:RestoreObject' in render_generated_policy(generated)


def test_excess_shrinks_as_the_level_rises():
    org = developer_org()
    index = build_usage_index(org, developer_events())
    excess = [generate_least_privilege(index, org, PRINCIPAL, level).verification.excess for level in (2, 3, 4)]
    assert excess[0] >= excess[1] >= excess[2] == 0.0


def test_window_restricts_the_observations():
    org = developer_org()
    index = build_usage_index(org, developer_events())
    generated = generate_least_privilege(index, org, PRINCIPAL, 4,
                                         window='2022-01-01T00:00:00Z/2022-01-01T00:00:20Z')
    assert statement_shapes(generated) == [(['s3:GetObject'], [BUCKET_0]), (['s3:PutObject'], [BUCKET_0])]
    assert generated.verification.observed == 2
    with raises(NoObservationsError):
        generate_least_privilege(index, org, PRINCIPAL, 4, window='2022-02-01T00:00:00Z/2022-03-01T00:00:00Z')
    with raises(BadInputError):
        generate_least_privilege(index, org, PRINCIPAL, 4, window='2022-03-01T00:00:00Z/2022-02-01T00:00:00Z')


def test_generation_input_errors():
    org = developer_org()
    index = build_usage_index(org, developer_events())
    with raises(NoObservationsError):
        generate_least_privilege(index, org, ('idle', ACCOUNT_A), 4)
    for level in (1, 5, True, '4'):
        with raises(BadInputError):
            generate_least_privilege(index, org, PRINCIPAL, level)
    with raises(BadInputError):
        generate_least_privilege(index, org, PRINCIPAL, 4, max_samples=-1)


def test_installed_policy_is_the_only_permission_set():
    org = developer_org()
    generated = generate_least_privilege(build_usage_index(org, developer_events()), org, PRINCIPAL, 4)
    what_if = install_generated_policy(org, generated)
    assert [p.id for p in resolve_permission_sets(what_if, 'dev', ACCOUNT_A)] == ['least-privilege-dev-222222222222']
    assert [p.id for p in resolve_permission_sets(what_if, 'idle', ACCOUNT_A)] == ['developer']
    assert authorize(what_if, AccessRequest('dev', ACCOUNT_A, 's3:GetObject', BUCKET_0)).allowed
    assert not authorize(what_if, AccessRequest('dev', ACCOUNT_A, 's3:GetObject', BUCKET_1)).allowed
    assert [p.id for p in resolve_permission_sets(org, 'dev', ACCOUNT_A)] == ['developer']


def test_complement_sample_is_seeded_and_capped():
    org = developer_org()
    index = build_usage_index(org, developer_events())
    observed = [o.pair() for o in index.observations_of(PRINCIPAL)]
    full = complement_sample(index, org, observed, seed=1, cap=10000)
    assert len(full) == 6 * 4 - 5
    assert not set(full) & set(observed)
    small = complement_sample(index, org, observed, seed=1, cap=4)
    assert len(small) == 4
    assert small == sorted(small)
    assert set(small) <= set(full)
    assert small == complement_sample(index, org, observed, seed=1, cap=4)


def test_complement_cap_holds_with_observations_on_unregistered_resources():
    org = developer_org()
    index = build_usage_index(org, developer_events())
    observed = [o.pair() for o in index.observations_of(PRINCIPAL)]
    elsewhere = [('s3:GetObject', 'arn:aws:s3:::elsewhere/' + str(i)) for i in range(10)]
    full = complement_sample(index, org, observed, seed=1, cap=10000)
    assert complement_sample(index, org, observed + elsewhere, seed=1, cap=10000) == full
    capped = complement_sample(index, org, observed + elsewhere, seed=1, cap=18)
    assert len(capped) == 18
    assert set(capped) <= set(full)


def test_rendered_policy_text():
    org = developer_org()
    generated = generate_least_privilege(build_usage_index(org, developer_events()), org, PRINCIPAL, 2)
    text = render_generated_policy(generated)
    assert text.startswith(serialize_policy(generated.document, indent=2) + '\n\n')
    assert '# principal: dev@222222222222\n' in text
    assert '# window:    2022-01-01T00:00:10Z/2022-01-01T00:00:50Z\n' in text
    assert '# coverage:  1.0000 (5/5)\n' in text
    assert text.endswith('# verified:  yes\n')
    assert '"level": 2' in render_generated_policy(generated, 'json')


def test_narrowing_report_flags_read_only_use():
    org = developer_org()
    events = [api_call(10, 'dev', ACCOUNT_A, 's3:GetObject', BUCKET_0),
              api_call(20, 'dev', ACCOUNT_A, 's3:ListBucket', BUCKET_1)]
    suggestions = narrowing_report(build_usage_index(org, events), org)
    assert len(suggestions) == 1
    suggestion = suggestions[0]
    assert suggestion.granted == ['s3:*', 'ec2:*', 'dynamodb:*']
    assert suggestion.exercised == ['s3:Get*', 's3:List*']
    assert suggestion.read_only
    assert render_narrowing_report(suggestions).splitlines()[1].split()[-1] == 'yes'

    writes = events + [api_call(30, 'dev', ACCOUNT_A, 's3:PutObject', BUCKET_0)]
    assert not narrowing_report(build_usage_index(org, writes), org)[0].read_only
    assert not narrowing_report(build_usage_index(org, []), org)[0].read_only


def test_level_four_replays_exactly_on_random_organizations():
    rng = Random(3)
    checked = 0
    for _ in range(30):
        raw = random_scenario(rng)
        org = build_org(raw)
        users = [u['id'] for u in raw['users']]
        accounts = scenario_account_ids(raw)
        arns = [r['arn'] for r in raw['resources']]
        requests = [AccessRequest(rng.choice(users), rng.choice(accounts),
                                  rng.choice(['s3:GetObject', 's3:PutObject', 'ec2:DescribeInstances']),
                                  rng.choice(arns))
                    for _ in range(40)]
        sink = ListSink()
        simulate(org, requests, sink, base_time=format_timestamp(T0))
        index = build_usage_index(org, sink.events)
        for principal in sorted(index.observations):
            generated = generate_least_privilege(index, org, principal, 4)
            assert generated.verification.coverage == 1.0
            assert generated.verification.excess == 0.0
            assert generated.verified
            checked += 1
    assert checked > 0


def test_every_level_covers_random_activity_and_excess_grows_as_the_level_drops():
    rng = Random(2022)
    raw = random_scenario(rng, accounts=5, users=10, statements=12, resources=4)
    users = [u['id'] for u in raw['users']]
    accounts = scenario_account_ids(raw)
    raw['permission_sets'].append(permission_set('activity', allow(['s3:*', 'ec2:*', 'dynamodb:*'])))
    raw['assignments'] += [assign(u, a, 'activity') for u in users for a in accounts]
    org = build_org(raw)
    arns = [r['arn'] for r in raw['resources']]

    requests = [AccessRequest(u, a, random_action(rng), rng.choice(arns)) for u in users for a in accounts]
    requests += [AccessRequest(rng.choice(users), rng.choice(accounts), random_action(rng), rng.choice(arns))
                 for _ in range(2000)]
    sink = ListSink()
    simulate(org, requests, sink, base_time=format_timestamp(T0))
    assert len(sink.events) >= 2000
    assert len({(e.user, e.account) for e in sink.events}) >= 50

    index = build_usage_index(org, sink.events)
    assert len(index.observations) >= 25
    for principal in sorted(index.observations):
        by_level = {level: generate_least_privilege(index, org, principal, level) for level in (2, 3, 4)}
        for generated in by_level.values():
            assert generated.verification.coverage == 1.0
        assert by_level[4].verification.excess == 0.0
        assert by_level[4].verified
        excess = [by_level[level].verification.excess for level in (2, 3, 4)]
        assert excess[0] >= excess[1] >= excess[2]
