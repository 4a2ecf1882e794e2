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

from typing import List

from iam_simulator.organization import Organization
from iam_simulator.policy.constants import EFFECT_DENY
from .constants import ORIGIN_IDENTITY, ORIGIN_RESOURCE, RULE_EXPLICIT_DENY, RULE_SAME_ACCOUNT
from .engine import authorize
from .types import AccessRequest, Decision, MatchTrace


def explain(org: Organization, request: AccessRequest) -> str:
    return render_decision(authorize(org, request))


def render_decision(decision: Decision) -> str:
    request = decision.request
    same_account = request.account == decision.resource_owner
    lines = [
        'request:  ' + request.user + '@' + request.account + ' ' + request.action + ' on ' + request.resource,
        'owner:    ' + decision.resource_owner + (' (same account)' if same_account else ' (cross-account)')
    ]
    if len(request.context) != 0:
        lines.append('context:  ' + ', '.join(k + '=' + request.context[k] for k in sorted(request.context)))

    for origin_kind, title in ((ORIGIN_IDENTITY, 'identity statements:'), (ORIGIN_RESOURCE, 'resource statements:')):
        entries = [t for t in decision.trace if t.origin_kind == origin_kind]
        lines.append(title + ('' if len(entries) != 0 else ' none'))
        for t in entries:
            lines.append('  ' + _render_trace(t))

    lines.extend(_render_rule(decision))
    lines.append('decision: ' + decision.verdict + ' (' + decision.reason + ')')
    return '\n'.join(lines) + '\n'


def _statement_ref(t: MatchTrace) -> str:
    name = t.origin if t.policy is None else t.origin + '/' + t.policy
    return name + ' #' + str(t.statement_index)


def _render_trace(t: MatchTrace) -> str:
    checks = [('action', t.action_match), ('resource', t.resource_match), ('condition', t.condition_match)]
    if t.principal_match is not None:
        checks.insert(0, ('principal', t.principal_match))
    failed = [name for name, ok in checks if not ok]
    outcome = 'matched' if len(failed) == 0 else 'no match (' + ', '.join(failed) + ')'
    return '[' + _statement_ref(t) + '] ' + t.effect + ' ' + \
        ' '.join(name + '=' + ('yes' if ok else 'no') for name, ok in checks) + ' -> ' + outcome


def _render_rule(decision: Decision) -> List[str]:
    if decision.rule == RULE_EXPLICIT_DENY:
        denies = [t for t in decision.trace if t.matched and t.effect == EFFECT_DENY]
        return ['rule:     explicit deny by ' + ', '.join('[' + _statement_ref(t) + ']' for t in denies)]

    def yes_no(flag: bool) -> str:
        return 'yes' if flag else 'no'

    outcome = 'satisfied' if decision.allowed else 'failed'
    if decision.rule == RULE_SAME_ACCOUNT:
        return [
            'rule:     same-account (identity allow OR resource allow) ' + outcome,
            '  identity allow: ' + yes_no(decision.identity_allow),
            '  resource allow: ' + yes_no(decision.resource_allow)
        ]
    return [
        'rule:     cross-account (identity allow AND (resource allow OR share)) ' + outcome,
        '  identity allow: ' + yes_no(decision.identity_allow),
        '  resource allow: ' + yes_no(decision.resource_allow),
        '  shared:         ' + yes_no(decision.shared)
    ]
