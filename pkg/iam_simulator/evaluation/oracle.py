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

import re
from typing import List, Mapping, Pattern, Tuple

from iam_simulator.organization import Organization
from .exceptions import InvalidRequestError, UnknownPrincipalError
from .types import AccessRequest

# (origin, effect, action regexes, resource regexes, condition, principals)
_Row = Tuple[str, str, List[Pattern], List[Pattern], tuple, tuple]


def oracle_authorize(org: Organization, request: AccessRequest) -> str:
    """Reference authorizer for tests.

    Materializes every (statement, request) pair as regular-expression checks and
    applies the decision rules directly, without going through the policy matchers.
    """
    user = org.user(request.user)
    if user is None or not org.has_account(request.account):
        raise UnknownPrincipalError('unknown principal ' + request.user + '@' + request.account)
    if '*' in request.action or '*' in request.resource or ':' not in request.action:
        raise InvalidRequestError('request must name a concrete action and resource')

    rows: List[_Row] = []
    held = set()
    for a in org.assignments:
        if a.account != request.account:
            continue
        if (a.subject_type == 'user' and a.subject_id == user.id) or \
                (a.subject_type == 'group' and a.subject_id in user.groups):
            held.add(a.permission_set)
    for permission_set_id in held:
        for document in org.permission_set(permission_set_id).policies:
            for s in document.statements:
                rows.append(('identity', s.effect, [_to_regex(str(p)) for p in s.actions],
                             [_to_regex(str(r)) for r in s.resources], s.condition.clauses, ()))

    owner = request.account
    for resource in org.resources:
        if resource.arn != request.resource:
            continue
        owner = resource.owner_account
        if resource.policy is None:
            continue
        for s in resource.policy.statements:
            rows.append(('resource', s.effect, [_to_regex(str(p)) for p in s.actions],
                         [_to_regex(str(r)) for r in s.resources], s.condition.clauses, tuple(s.principals)))

    hits = [(origin, effect) for origin, effect, actions, resources, clauses, principals in rows
            if any(p.fullmatch(request.action) for p in actions)
            and any(p.fullmatch(request.resource) for p in resources)
            and _clauses_hold(clauses, request.context)
            and (origin == 'identity' or request.user in principals or request.account in principals)]

    if ('identity', 'Deny') in hits or ('resource', 'Deny') in hits:
        return 'Deny'
    identity_allow = ('identity', 'Allow') in hits
    resource_allow = ('resource', 'Allow') in hits
    if owner == request.account:
        return 'Allow' if identity_allow or resource_allow else 'Deny'
    shared = any(request.account in share.shared_with for share in org.shares if share.resource == request.resource)
    return 'Allow' if identity_allow and (resource_allow or shared) else 'Deny'


def _to_regex(glob: str) -> Pattern:
    return re.compile('.*'.join(re.escape(piece) for piece in glob.split('*')), re.DOTALL)


def _clauses_hold(clauses: tuple, context: Mapping[str, str]) -> bool:
    for operator, keys in clauses:
        for key, values in keys:
            if key not in context:
                return False
            if operator == 'StringEquals' and context[key] not in values:
                return False
            if operator == 'StringLike' and not any(_to_regex(v).fullmatch(context[key]) for v in values):
                return False
    return True
