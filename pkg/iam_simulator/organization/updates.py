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

from typing import List, Union

from iam_simulator.exceptions import raise_bad_input_exception
from iam_simulator.logger import log_debug_message
from .constants import ACCOUNT_ID_WIDTH, SUBJECT_GROUP, SUBJECT_USER
from .exceptions import DuplicateAccountNameError, UnknownEntityError
from .organization import Organization, resolve_ou_path
from .types import Account, Assignment, OrgUnit, PermissionSet, SsoUser


def provision_account(org: Organization, name: str, ou_path: str,
                      email: Union[str, None] = None) -> Organization:
    chain = resolve_ou_path(org.root, ou_path)
    existing = [org.account(a) for a in org.account_ids()]
    if any(a.name == name for a in existing):
        raise DuplicateAccountNameError('an account named "' + name + '" already exists')

    next_id = max(int(a.id) for a in existing) + 1
    if len(str(next_id)) > ACCOUNT_ID_WIDTH:
        raise_bad_input_exception('no ' + str(ACCOUNT_ID_WIDTH) + '-digit account id is left after ' + str(next_id - 1))
    account = Account(str(next_id).zfill(ACCOUNT_ID_WIDTH), name, email)

    target = chain[-1]
    replacement = OrgUnit(target.name, target.children, target.accounts + (account,))
    root = _replace_along_chain(chain, replacement)
    log_debug_message('provisioned account ' + account.id + ' (' + name + ') under "' + ou_path + '"')
    return Organization(root, org.management_account, org.users, org.groups, org.permission_sets,
                        org.assignments, org.resources, org.shares)


def _replace_along_chain(chain: List[OrgUnit], replacement: OrgUnit) -> OrgUnit:
    for depth in range(len(chain) - 2, -1, -1):
        parent, old = chain[depth], chain[depth + 1]
        children = tuple(replacement if c is old else c for c in parent.children)
        replacement = OrgUnit(parent.name, children, parent.accounts)
    return replacement


def add_permission_set(org: Organization, permission_set: PermissionSet) -> Organization:
    if org.permission_set(permission_set.id) is not None:
        raise_bad_input_exception('permission set "' + permission_set.id + '" already exists')
    for policy in permission_set.policies:
        if policy.has_principals():
            raise_bad_input_exception('permission set policies must not contain a Principal field')
    return Organization(org.root, org.management_account, org.users, org.groups,
                        org.permission_sets + (permission_set,), org.assignments, org.resources, org.shares)


def add_assignment(org: Organization, assignment: Assignment) -> Organization:
    if assignment.subject_type == SUBJECT_USER and org.user(assignment.subject_id) is None:
        raise UnknownEntityError('unknown user "' + assignment.subject_id + '"')
    if assignment.subject_type == SUBJECT_GROUP and org.group(assignment.subject_id) is None:
        raise UnknownEntityError('unknown group "' + assignment.subject_id + '"')
    if not org.has_account(assignment.account):
        raise UnknownEntityError('unknown account "' + assignment.account + '"')
    if org.permission_set(assignment.permission_set) is None:
        raise UnknownEntityError('unknown permission set "' + assignment.permission_set + '"')
    if assignment in org.assignments:
        raise_bad_input_exception('duplicate assignment ' + assignment.describe())
    return Organization(org.root, org.management_account, org.users, org.groups, org.permission_sets,
                        org.assignments + (assignment,), org.resources, org.shares)


def with_sole_permission_set(org: Organization, user_id: str, account_id: str,
                             permission_set: PermissionSet) -> Organization:
    """What-if copy in which permission_set is the only one the user holds in account_id.

    The user's group memberships are dropped in the copy, so group assignments
    made for other members stay untouched.
    """
    user = org.user(user_id)
    if user is None:
        raise UnknownEntityError('unknown user "' + user_id + '"')
    if not org.has_account(account_id):
        raise UnknownEntityError('unknown account "' + account_id + '"')

    users = [u if u.id != user_id else SsoUser(u.id, u.display_name, ()) for u in org.users]
    assignments = [a for a in org.assignments
                   if not (a.subject_type == SUBJECT_USER and a.subject_id == user_id)]
    permission_sets = [p for p in org.permission_sets if p.id != permission_set.id]
    permission_sets.append(permission_set)
    assignments = [a for a in assignments if a.permission_set != permission_set.id]
    assignments.append(Assignment(SUBJECT_USER, user_id, account_id, permission_set.id))
    return Organization(org.root, org.management_account, users, org.groups, permission_sets,
                        assignments, org.resources, org.shares)
