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

from typing import Dict, Iterable, List, Tuple, Union

from iam_simulator.policy import PolicyDocument
from .constants import OU_PATH_SEPARATOR, SUBJECT_GROUP, SUBJECT_USER
from .exceptions import ResourceNotFoundError, UnknownEntityError, UnknownOrgUnitError
from .types import (
    Account,
    Assignment,
    OrgUnit,
    PermissionSet,
    Resource,
    ResourceShare,
    SsoGroup,
    SsoUser
)


class Organization:
    """An immutable organization value.

    Every update function in this package returns a new Organization; untouched OU
    subtrees and entity tuples are shared with the original value.
    """

    def __init__(self, root: OrgUnit, management_account: str,
                 users: Iterable[SsoUser] = (),
                 groups: Iterable[SsoGroup] = (),
                 permission_sets: Iterable[PermissionSet] = (),
                 assignments: Iterable[Assignment] = (),
                 resources: Iterable[Resource] = (),
                 shares: Iterable[ResourceShare] = ()):
        self.root = root
        self.management_account = management_account
        self.users: Tuple[SsoUser, ...] = tuple(sorted(users, key=lambda u: u.id))
        self.groups: Tuple[SsoGroup, ...] = tuple(sorted(groups, key=lambda g: g.id))
        self.permission_sets: Tuple[PermissionSet, ...] = tuple(sorted(permission_sets, key=lambda p: p.id))
        self.assignments: Tuple[Assignment, ...] = tuple(sorted(
            assignments, key=lambda a: (a.account, a.permission_set, a.subject_type, a.subject_id)))
        self.resources: Tuple[Resource, ...] = tuple(sorted(resources, key=lambda r: r.arn))
        self.shares: Tuple[ResourceShare, ...] = tuple(sorted(shares, key=lambda s: s.resource))

        self.__accounts: Dict[str, Account] = {}
        self.__account_ou: Dict[str, str] = {}
        self.__index_accounts(root, '')
        self.__users = {u.id: u for u in self.users}
        self.__groups = {g.id: g for g in self.groups}
        self.__permission_sets = {p.id: p for p in self.permission_sets}
        self.__resources = {r.arn: r for r in self.resources}
        self.__shares: Dict[str, frozenset] = {}
        for share in self.shares:
            self.__shares[share.resource] = self.__shares.get(share.resource, frozenset()) | set(share.shared_with)

    def __index_accounts(self, ou: OrgUnit, path: str):
        for account in ou.accounts:
            self.__accounts[account.id] = account
            self.__account_ou[account.id] = path if path != '' else OU_PATH_SEPARATOR
        for child in ou.children:
            self.__index_accounts(child, path + OU_PATH_SEPARATOR + child.name)

    def account(self, account_id: str) -> Union[Account, None]:
        return self.__accounts.get(account_id)

    def has_account(self, account_id: str) -> bool:
        return account_id in self.__accounts

    def account_ids(self) -> List[str]:
        return accounts_in_subtree(self, OU_PATH_SEPARATOR)

    def ou_path_of(self, account_id: str) -> Union[str, None]:
        return self.__account_ou.get(account_id)

    def user(self, user_id: str) -> Union[SsoUser, None]:
        return self.__users.get(user_id)

    def group(self, group_id: str) -> Union[SsoGroup, None]:
        return self.__groups.get(group_id)

    def permission_set(self, permission_set_id: str) -> Union[PermissionSet, None]:
        return self.__permission_sets.get(permission_set_id)

    def resource(self, arn: str) -> Union[Resource, None]:
        return self.__resources.get(arn)

    def shared_with(self, arn: str) -> frozenset:
        return self.__shares.get(arn, frozenset())

    def __eq__(self, other) -> bool:
        if not isinstance(other, Organization):
            return NotImplemented
        from .builder import export_org
        return export_org(self) == export_org(other)

    __hash__ = None


def resolve_ou_path(root: OrgUnit, ou_path: str) -> List[OrgUnit]:
    """Returns the chain of OUs from the root down to the OU named by ou_path."""
    segments = [s for s in ou_path.split(OU_PATH_SEPARATOR) if s != '']
    if len(segments) != 0 and segments[0] == root.name and root.child(segments[0]) is None:
        segments = segments[1:]
    chain = [root]
    for segment in segments:
        child = chain[-1].child(segment)
        if child is None:
            raise UnknownOrgUnitError('unknown organizational unit "' + ou_path + '"')
        chain.append(child)
    return chain


def accounts_in_subtree(org: Organization, ou_path: str) -> List[str]:
    ou = resolve_ou_path(org.root, ou_path)[-1]
    result = []

    def visit(unit: OrgUnit):
        for account in unit.accounts:
            result.append(account.id)
        for child in unit.children:
            visit(child)

    visit(ou)
    return result


def resolve_permission_sets(org: Organization, user_id: str, account_id: str) -> List[PermissionSet]:
    user = org.user(user_id)
    if user is None:
        raise UnknownEntityError('unknown user "' + user_id + '"')
    if not org.has_account(account_id):
        raise UnknownEntityError('unknown account "' + account_id + '"')

    groups = set(user.groups)
    permission_set_ids = set()
    for assignment in org.assignments:
        if assignment.account != account_id:
            continue
        if assignment.subject_type == SUBJECT_USER and assignment.subject_id == user_id:
            permission_set_ids.add(assignment.permission_set)
        elif assignment.subject_type == SUBJECT_GROUP and assignment.subject_id in groups:
            permission_set_ids.add(assignment.permission_set)
    return [org.permission_set(p) for p in sorted(permission_set_ids)]


def resolve_identity_policies(org: Organization, user_id: str, account_id: str) -> List[PolicyDocument]:
    policies = []
    for permission_set in resolve_permission_sets(org, user_id, account_id):
        policies.extend(permission_set.policies)
    return policies


def resource_lookup(org: Organization, arn: str) -> Resource:
    resource = org.resource(arn)
    if resource is None:
        raise ResourceNotFoundError('unknown resource "' + arn + '"')
    return resource


def shares_covering(org: Organization, arn: str, account_id: str) -> bool:
    return account_id in org.shared_with(arn)
