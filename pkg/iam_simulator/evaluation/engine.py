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

from iam_simulator.constants import VERDICT_ALLOW, VERDICT_DENY
from iam_simulator.logger import log_debug_message
from iam_simulator.organization import Organization, resolve_permission_sets, shares_covering
from iam_simulator.policy import (
    ActionPattern,
    Statement,
    action_matches,
    condition_holds,
    parse_concrete_resource,
    resource_matches
)
from iam_simulator.policy.constants import EFFECT_ALLOW, EFFECT_DENY
from iam_simulator.policy.exceptions import InvalidPatternError
from .constants import (
    ORIGIN_IDENTITY,
    ORIGIN_RESOURCE,
    REASON_CROSS_ACCOUNT_ALLOW,
    REASON_EXPLICIT_DENY,
    REASON_IMPLICIT_DENY,
    REASON_SAME_ACCOUNT_ALLOW,
    RULE_CROSS_ACCOUNT,
    RULE_EXPLICIT_DENY,
    RULE_SAME_ACCOUNT
)
from .exceptions import InvalidRequestError, UnknownPrincipalError
from .types import AccessRequest, Decision, MatchTrace


def validate_request(org: Organization, request: AccessRequest) -> ActionPattern:
    if org.user(request.user) is None:
        raise UnknownPrincipalError('unknown user "' + request.user + '"')
    if not org.has_account(request.account):
        raise UnknownPrincipalError('unknown account "' + request.account + '"')
    try:
        action = ActionPattern.parse_concrete(request.action)
        parse_concrete_resource(request.resource)
    except InvalidPatternError as e:
        raise InvalidRequestError(str(e)) from None
    for key, value in request.context.items():
        if not isinstance(key, str) or not isinstance(value, str):
            raise InvalidRequestError('context keys and values must be strings')
    return action


def authorize(org: Organization, request: AccessRequest) -> Decision:
    action = validate_request(org, request)

    trace: List[MatchTrace] = []
    for permission_set in resolve_permission_sets(org, request.user, request.account):
        for policy in permission_set.policies:
            for index, statement in enumerate(policy.statements):
                trace.append(_match_statement(ORIGIN_IDENTITY, permission_set.id, policy.name, index,
                                               statement, action, request))

    resource = org.resource(request.resource)
    owner = request.account if resource is None else resource.owner_account
    if resource is not None and resource.policy is not None:
        for index, statement in enumerate(resource.policy.statements):
            trace.append(_match_statement(ORIGIN_RESOURCE, resource.arn, resource.policy.name, index,
                                           statement, action, request))

    matched = [t for t in trace if t.matched]
    identity_allow = any(t.effect == EFFECT_ALLOW and t.origin_kind == ORIGIN_IDENTITY for t in matched)
    resource_allow = any(t.effect == EFFECT_ALLOW and t.origin_kind == ORIGIN_RESOURCE for t in matched)
    shared = owner != request.account and shares_covering(org, request.resource, request.account)

    if any(t.effect == EFFECT_DENY for t in matched):
        verdict, reason, rule = VERDICT_DENY, REASON_EXPLICIT_DENY, RULE_EXPLICIT_DENY
    elif owner == request.account:
        rule = RULE_SAME_ACCOUNT
        if identity_allow or resource_allow:
            verdict, reason = VERDICT_ALLOW, REASON_SAME_ACCOUNT_ALLOW
        else:
            verdict, reason = VERDICT_DENY, REASON_IMPLICIT_DENY
    else:
        rule = RULE_CROSS_ACCOUNT
        if identity_allow and (resource_allow or shared):
            verdict, reason = VERDICT_ALLOW, REASON_CROSS_ACCOUNT_ALLOW
        else:
            verdict, reason = VERDICT_DENY, REASON_IMPLICIT_DENY

    log_debug_message(request.user + '@' + request.account + ' ' + request.action + ' on ' +
                      request.resource + ': ' + verdict + ' (' + reason + ')')
    return Decision(verdict, reason, tuple(trace), rule, request, owner,
                    identity_allow, resource_allow, shared)


def _match_statement(origin_kind: str, origin: str, policy_name: Union[str, None], index: int,
                      statement: Statement, action: ActionPattern, request: AccessRequest) -> MatchTrace:
    principal_match = None
    if origin_kind == ORIGIN_RESOURCE:
        principals = statement.principals or ()
        principal_match = request.user in principals or request.account in principals
    return MatchTrace(
        origin_kind=origin_kind,
        origin=origin,
        policy=policy_name,
        statement_index=index,
        effect=statement.effect,
        action_match=any(action_matches(p, action) for p in statement.actions),
        resource_match=any(resource_matches(r, request.resource) for r in statement.resources),
        condition_match=condition_holds(statement.condition, request.context),
        principal_match=principal_match
    )
