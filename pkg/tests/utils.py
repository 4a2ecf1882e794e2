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
from datetime import datetime, timedelta, timezone
from os import environ
from random import Random
from typing import List, Union

from iam_simulator.audit import AuditEvent, create_event
from iam_simulator.audit.constants import KIND_API_CALL, KIND_LOGIN
from iam_simulator.constants import VERB_TABLE_ENV_VAR
from iam_simulator.data import bundled_scenario_path, cross_account_scenario_path
from iam_simulator.logger import disable_debug_logging
from iam_simulator.organization import Organization, build_org, load_scenario
from iam_simulator.policy import load_verb_table
from iam_simulator.utils import glob_to_regex

ACCOUNT_A = '222222222222'
ACCOUNT_B = '333333333333'
MANAGEMENT_ACCOUNT = '111111111111'
BUCKET_S = 'arn:aws:s3:::bucket-s'
BOOKS_TABLE = 'arn:aws:dynamodb:ap-northeast-2:123456789012:table/Books'
BOOKS_ACCOUNT = '123456789012'
BOOKS_POLICY = '''{
  "Version": "2012-10-17",
  "Statement": [
    {
      "Effect": "Allow",
      "Action": "dynamodb:*",
      "Resource": "arn:aws:dynamodb:ap-northeast-2:123456789012:table/Books"
    }
  ]
}'''
T0 = datetime(2022, 1, 1, tzinfo=timezone.utc)


def reset():
    disable_debug_logging()
    environ.pop(VERB_TABLE_ENV_VAR, None)
    load_verb_table.cache_clear()
    glob_to_regex.cache_clear()


def policy(*statements: dict) -> dict:
    return {'Version': '2012-10-17', 'Statement': list(statements)}


def allow(action: Union[str, List[str]], resource: Union[str, List[str]] = '*', **extra) -> dict:
    statement = {'Effect': 'Allow', 'Action': action, 'Resource': resource}
    statement.update(extra)
    return statement


def deny(action: Union[str, List[str]], resource: Union[str, List[str]] = '*', **extra) -> dict:
    statement = {'Effect': 'Deny', 'Action': action, 'Resource': resource}
    statement.update(extra)
    return statement


def scenario(accounts: List[str] = None, users: List[dict] = None, groups: List[str] = None,
             permission_sets: List[dict] = None, assignments: List[dict] = None,
             resources: List[dict] = None, shares: List[dict] = None) -> dict:
    """A single-OU scenario; the first account is the management account."""
    if accounts is None:
        accounts = [ACCOUNT_A]
    return {
        'organization': {
            'management_account': accounts[0],
            'root': {
                'name': 'Root',
                'accounts': [{'id': a, 'name': 'account-' + a} for a in accounts]
            }
        },
        'users': users or [],
        'groups': [{'id': g} for g in groups or []],
        'permission_sets': permission_sets or [],
        'assignments': assignments or [],
        'resources': resources or [],
        'shares': shares or []
    }


def permission_set(permission_set_id: str, *statements: dict, name: str = 'inline') -> dict:
    return {'id': permission_set_id, 'policies': [{'name': name, 'document': policy(*statements)}]}


def assign(user: str, account: str, permission_set_id: str, subject_type: str = 'user') -> dict:
    return {'subject': {'type': subject_type, 'id': user}, 'account': account, 'permission_set': permission_set_id}


def single_user_org(*statements: dict, user: str = 'u1', account: str = ACCOUNT_A,
                    resources: List[dict] = None) -> Organization:
    return build_org(scenario(
        accounts=[account],
        users=[{'id': user}],
        permission_sets=[permission_set('ps', *statements)] if len(statements) != 0 else [],
        assignments=[assign(user, account, 'ps')] if len(statements) != 0 else [],
        resources=resources
    ))


def cross_account_org() -> Organization:
    return load_scenario(cross_account_scenario_path())


def bundled_org() -> Organization:
    return load_scenario(bundled_scenario_path())


def api_call(time: Union[datetime, int], user: str, account: str, action: str, resource: str,
             verdict: str = 'Allow', source: str = None) -> AuditEvent:
    if isinstance(time, int):
        time = T0 + timedelta(seconds=time)
    return create_event(time, KIND_API_CALL, user, account, action, resource, verdict, source)


def login(time: Union[datetime, int], user: str, account: str, source: str = None) -> AuditEvent:
    if isinstance(time, int):
        time = T0 + timedelta(seconds=time)
    return create_event(time, KIND_LOGIN, user, account, source=source)


SERVICES = ['s3', 'ec2', 'dynamodb']
OPERATIONS = ['GetObject', 'PutObject', 'DeleteObject', 'ListBucket', 'DescribeInstances', 'RunInstances']


def random_action(rng: Random) -> str:
    return rng.choice(SERVICES) + ':' + rng.choice(OPERATIONS)


def random_action_pattern(rng: Random) -> str:
    roll = rng.random()
    if roll < 0.05:
        return '*'
    service = rng.choice(SERVICES)
    if roll < 0.25:
        return service + ':*'
    operation = rng.choice(OPERATIONS)
    if roll < 0.55:
        return service + ':' + operation[:rng.randint(1, len(operation) - 1)] + '*'
    return service + ':' + operation


CONDITIONS = [
    {'StringEquals': {'env': 'dev'}},
    {'StringEquals': {'env': 'prod'}},
    {'StringLike': {'team': 'red-*'}},
    {'StringLike': {'team': ['*-ops', 'blue-*']}},
    {'StringEquals': {'env': 'dev'}, 'StringLike': {'team': 'red-*'}}
]


def random_statement(rng: Random, resources: List[str], principals: List[str] = None) -> dict:
    statement = {
        'Effect': 'Deny' if rng.random() < 0.2 else 'Allow',
        'Action': [random_action_pattern(rng) for _ in range(rng.randint(1, 2))],
        'Resource': rng.choice(['*', rng.choice(resources), rng.choice(resources)[:-2] + '*'])
    }
    if rng.random() < 0.2:
        statement['Condition'] = rng.choice(CONDITIONS)
    if principals is not None:
        statement['Principal'] = rng.sample(principals, rng.randint(1, min(2, len(principals))))
    return statement


def nest_accounts(raw: dict) -> dict:
    """Moves all but the management account into a two-level OU chain below the root."""
    root = raw['organization']['root']
    accounts = root['accounts']
    if len(accounts) < 2:
        return raw
    middle = (len(accounts) + 1) // 2
    root['accounts'] = accounts[:1]
    root['children'] = [{
        'name': 'Workloads',
        'accounts': accounts[1:middle],
        'children': [{'name': 'Prod', 'accounts': accounts[middle:]}]
    }]
    return raw


def scenario_account_ids(raw: dict) -> List[str]:
    result = []

    def visit(ou: dict):
        result.extend(a['id'] for a in ou.get('accounts', []))
        for child in ou.get('children', []):
            visit(child)

    visit(raw['organization']['root'])
    return result


def random_scenario(rng: Random, accounts: int = 3, users: int = 4, statements: int = 6,
                    resources: int = 3, groups: int = 2) -> dict:
    account_ids = [str(100000000000 + i * 111111111).zfill(12) for i in range(1, accounts + 1)]
    user_ids = ['user-' + str(i) for i in range(users)]
    group_ids = ['team-' + str(i) for i in range(groups)]
    arns = ['arn:aws:s3:::bucket-' + str(i) + '/data' for i in range(resources)]

    permission_sets = []
    for i in range(max(1, statements // 2)):
        count = rng.randint(0, 2)
        permission_sets.append(permission_set('ps-' + str(i), *[random_statement(rng, arns) for _ in range(count)]))
    permission_sets = [p for p in permission_sets if len(p['policies'][0]['document']['Statement']) != 0]

    assignments = []
    seen = set()
    for _ in range(rng.randint(0, (users + groups) * 2)):
        if len(permission_sets) == 0:
            break
        if len(group_ids) != 0 and rng.random() < 0.4:
            subject = ('group', rng.choice(group_ids))
        else:
            subject = ('user', rng.choice(user_ids))
        key = (subject, rng.choice(account_ids), rng.choice(permission_sets)['id'])
        if key not in seen:
            seen.add(key)
            assignments.append(assign(subject[1], key[1], key[2], subject[0]))

    raw_users = []
    for user_id in user_ids:
        raw_user = {'id': user_id}
        if len(group_ids) != 0:
            raw_user['groups'] = rng.sample(group_ids, rng.randint(0, len(group_ids)))
        raw_users.append(raw_user)

    raw_resources = []
    for arn in arns:
        raw = {'arn': arn, 'owner_account': rng.choice(account_ids)}
        if rng.random() < 0.6:
            raw['policy'] = policy(*[random_statement(rng, arns, user_ids + account_ids)
                                     for _ in range(rng.randint(1, 2))])
        raw_resources.append(raw)

    shares = []
    for raw in raw_resources:
        others = [a for a in account_ids if a != raw['owner_account']]
        if rng.random() < 0.3:
            shares.append({'resource': raw['arn'], 'shared_with': rng.sample(others, 1)})

    return nest_accounts(scenario(accounts=account_ids, users=raw_users, groups=group_ids,
                                  permission_sets=permission_sets, assignments=assignments,
                                  resources=raw_resources, shares=shares))
