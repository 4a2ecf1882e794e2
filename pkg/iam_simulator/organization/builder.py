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
from __future__ import annotations

import json
from json import JSONDecodeError
from typing import Any, Dict, List, Set

from iam_simulator.exceptions import UndecodableFileError
from iam_simulator.logger import log_debug_message
from iam_simulator.policy import policy_from_json, policy_to_json
from iam_simulator.policy.constants import POLICY_KIND_IDENTITY, POLICY_KIND_RESOURCE
from iam_simulator.policy.exceptions import PolicyParseError
from iam_simulator.utils import collect_schema_errors, read_text_file
from .constants import ARN_ACCOUNT_FIELD, SUBJECT_GROUP, SUBJECT_USER
from .exceptions import ScenarioValidationError
from .organization import Organization
from .types import (
    SCENARIO_SCHEMA,
    Account,
    Assignment,
    OrgUnit,
    PermissionSet,
    Resource,
    ResourceShare,
    SsoGroup,
    SsoUser
)


def load_scenario(file_path: str) -> Organization:
    try:
        text = read_text_file(file_path)
    except UndecodableFileError as e:
        raise ScenarioValidationError([str(e)]) from None
    return parse_scenario(text)


def parse_scenario(text: str) -> Organization:
    try:
        scenario = json.loads(text)
    except JSONDecodeError as e:
        raise ScenarioValidationError(['malformed JSON: ' + str(e)]) from None
    return build_org(scenario)


def build_org(scenario: Any) -> Organization:
    errors = collect_schema_errors(scenario, SCENARIO_SCHEMA, 'scenario')
    if len(errors) != 0:
        raise ScenarioValidationError(errors)

    violations: List[str] = []
    accounts: Dict[str, str] = {}
    account_names: Set[str] = set()
    root = _build_ou(scenario['organization']['root'], '', accounts, account_names, violations)

    management_account = scenario['organization']['management_account']
    if management_account not in accounts:
        violations.append('management account ' + management_account + ' is not part of the OU tree')

    groups = []
    for raw in scenario.get('groups', []):
        if any(g.id == raw['id'] for g in groups):
            violations.append('duplicate group id "' + raw['id'] + '"')
            continue
        groups.append(SsoGroup(raw['id'], raw.get('display_name', raw['id'])))
    group_ids = {g.id for g in groups}

    users = []
    for raw in scenario.get('users', []):
        if any(u.id == raw['id'] for u in users):
            violations.append('duplicate user id "' + raw['id'] + '"')
            continue
        for group_id in raw.get('groups', []):
            if group_id not in group_ids:
                violations.append('user "' + raw['id'] + '" is a member of unknown group "' + group_id + '"')
        users.append(SsoUser(raw['id'], raw.get('display_name', raw['id']), tuple(sorted(set(raw.get('groups', []))))))
    user_ids = {u.id for u in users}

    permission_sets = []
    for index, raw in enumerate(scenario.get('permission_sets', [])):
        if any(p.id == raw['id'] for p in permission_sets):
            violations.append('duplicate permission set id "' + raw['id'] + '"')
            continue
        policies = []
        for policy_index, raw_policy in enumerate(raw['policies']):
            if any(p.name == raw_policy['name'] for p in policies):
                violations.append('permission set "' + raw['id'] + '" has duplicate policy name "' +
                                  raw_policy['name'] + '"')
                continue
            try:
                policies.append(policy_from_json(
                    raw_policy['document'], raw_policy['name'], POLICY_KIND_IDENTITY,
                    'permission_sets.' + str(index) + '.policies.' + str(policy_index) + '.document'))
            except PolicyParseError as e:
                violations.append('permission set "' + raw['id'] + '": ' + str(e))
        permission_sets.append(PermissionSet(raw['id'], tuple(policies), raw.get('description', '')))
    permission_set_ids = {p.id for p in permission_sets}

    assignments = []
    for raw in scenario.get('assignments', []):
        assignment = Assignment(raw['subject']['type'], raw['subject']['id'], raw['account'],
                                raw['permission_set'])
        valid = True
        if assignment.subject_type == SUBJECT_USER and assignment.subject_id not in user_ids:
            violations.append('assignment ' + assignment.describe() + ' references unknown user "' +
                              assignment.subject_id + '"')
            valid = False
        if assignment.subject_type == SUBJECT_GROUP and assignment.subject_id not in group_ids:
            violations.append('assignment ' + assignment.describe() + ' references unknown group "' +
                              assignment.subject_id + '"')
            valid = False
        if assignment.account not in accounts:
            violations.append('assignment ' + assignment.describe() + ' references unknown account ' +
                              assignment.account)
            valid = False
        if assignment.permission_set not in permission_set_ids:
            violations.append('assignment ' + assignment.describe() + ' references unknown permission set "' +
                              assignment.permission_set + '"')
            valid = False
        if assignment in assignments:
            violations.append('duplicate assignment ' + assignment.describe())
            valid = False
        if valid:
            assignments.append(assignment)

    resources = []
    for index, raw in enumerate(scenario.get('resources', [])):
        arn = raw['arn']
        owner = raw['owner_account']
        if any(r.arn == arn for r in resources):
            violations.append('duplicate resource "' + arn + '"')
            continue
        if '*' in arn:
            violations.append('resource "' + arn + '" must be a concrete identifier')
        if owner not in accounts:
            violations.append('resource "' + arn + '" is owned by unknown account ' + owner)
        arn_account = arn_account_segment(arn)
        if arn_account is not None and arn_account != owner:
            violations.append('resource "' + arn + '" names account ' + arn_account + ' but is owned by ' + owner)
        policy = None
        if 'policy' in raw:
            try:
                policy = policy_from_json(raw['policy'], arn, POLICY_KIND_RESOURCE,
                                          'resources.' + str(index) + '.policy')
            except PolicyParseError as e:
                violations.append('resource "' + arn + '": ' + str(e))
        resources.append(Resource(arn, owner, policy))
    owners = {r.arn: r.owner_account for r in resources}

    shares = []
    for raw in scenario.get('shares', []):
        arn = raw['resource']
        if arn not in owners:
            violations.append('share references unknown resource "' + arn + '"')
            continue
        if any(s.resource == arn for s in shares):
            violations.append('duplicate share for resource "' + arn + '"')
            continue
        for account_id in raw['shared_with']:
            if account_id == owners[arn]:
                violations.append('resource "' + arn + '" is shared with its own owner ' + account_id)
            elif account_id not in accounts:
                violations.append('resource "' + arn + '" is shared with unknown account ' + account_id)
        shares.append(ResourceShare(arn, tuple(sorted(set(raw['shared_with'])))))

    if len(violations) != 0:
        raise ScenarioValidationError(violations)

    log_debug_message('built organization with ' + str(len(accounts)) + ' accounts and ' +
                      str(len(users)) + ' users')
    return Organization(root, management_account, users, groups, permission_sets, assignments, resources, shares)


def _build_ou(raw: dict, path: str, accounts: Dict[str, str], account_names: Set[str],
               violations: List[str]) -> OrgUnit:
    here = path + '/' + raw['name'] if path != '' else raw['name']
    ou_accounts = []
    for raw_account in raw.get('accounts', []):
        account_id = raw_account['id']
        if account_id in accounts:
            violations.append('account ' + account_id + ' appears in more than one place ("' +
                              accounts[account_id] + '" and "' + here + '")')
            continue
        if raw_account['name'] in account_names:
            violations.append('duplicate account name "' + raw_account['name'] + '"')
        accounts[account_id] = here
        account_names.add(raw_account['name'])
        ou_accounts.append(Account(account_id, raw_account['name'], raw_account.get('email')))

    children = []
    seen = set()
    for raw_child in raw.get('children', []):
        if raw_child['name'] in seen:
            violations.append('OU "' + here + '" has two children named "' + raw_child['name'] + '"')
        seen.add(raw_child['name'])
        children.append(_build_ou(raw_child, here, accounts, account_names, violations))
    return OrgUnit(raw['name'], tuple(children), tuple(ou_accounts))


def arn_account_segment(arn: str):
    if not arn.startswith('arn:'):
        return None
    parts = arn.split(':', 5)
    if len(parts) < 6 or parts[ARN_ACCOUNT_FIELD] == '':
        return None
    return parts[ARN_ACCOUNT_FIELD]


def export_org(org: Organization) -> dict:
    scenario = {
        'organization': {
            'management_account': org.management_account,
            'root': _export_ou(org.root)
        },
        'users': [{
            'id': u.id,
            'display_name': u.display_name,
            'groups': list(u.groups)
        } for u in org.users],
        'groups': [{
            'id': g.id,
            'display_name': g.display_name
        } for g in org.groups],
        'permission_sets': [],
        'assignments': [{
            'subject': {'type': a.subject_type, 'id': a.subject_id},
            'account': a.account,
            'permission_set': a.permission_set
        } for a in org.assignments],
        'resources': [],
        'shares': [{
            'resource': s.resource,
            'shared_with': list(s.shared_with)
        } for s in org.shares]
    }
    for permission_set in org.permission_sets:
        raw = {
            'id': permission_set.id,
            'policies': [{'name': p.name, 'document': policy_to_json(p)} for p in permission_set.policies]
        }
        if permission_set.description != '':
            raw['description'] = permission_set.description
        scenario['permission_sets'].append(raw)
    for resource in org.resources:
        raw = {'arn': resource.arn, 'owner_account': resource.owner_account}
        if resource.policy is not None:
            raw['policy'] = policy_to_json(resource.policy)
        scenario['resources'].append(raw)
    return scenario


def _export_ou(ou: OrgUnit) -> dict:
    accounts = []
    for account in ou.accounts:
        raw = {'id': account.id, 'name': account.name}
        if account.email is not None:
            raw['email'] = account.email
        accounts.append(raw)
    return {
        'name': ou.name,
        'accounts': accounts,
        'children': [_export_ou(c) for c in ou.children]
    }


def dump_scenario(org: Organization, indent: int = 2) -> str:
    return json.dumps(export_org(org), indent=indent)
