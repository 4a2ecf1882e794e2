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

from dataclasses import dataclass, field
from datetime import datetime
from typing import Mapping, Tuple, Union

try:
    from typing import Literal
except ImportError:
    from typing_extensions import Literal

from iam_simulator.constants import VERDICT_ALLOW

type_string = {
    'type': 'string',
    'minLength': 1
}

REQUEST_SCHEMA = {
    'type': 'object',
    'properties': {
        'user': type_string,
        'account': type_string,
        'action': type_string,
        'resource': type_string,
        'context': {
            'type': 'object',
            'additionalProperties': {'type': 'string'}
        },
        'time': type_string
    },
    'required': ['user', 'account', 'action', 'resource'],
    'additionalProperties': False
}


@dataclass(frozen=True)
class AccessRequest:
    user: str
    account: str
    action: str
    resource: str
    context: Mapping[str, str] = field(default_factory=dict)
    time: Union[datetime, None] = None


@dataclass(frozen=True)
class MatchTrace:
    origin_kind: Literal['identity', 'resource']
    origin: str
    policy: Union[str, None]
    statement_index: int
    effect: Literal['Allow', 'Deny']
    action_match: bool
    resource_match: bool
    condition_match: bool
    principal_match: Union[bool, None] = None

    @property
    def matched(self) -> bool:
        return self.action_match and self.resource_match and self.condition_match and \
            self.principal_match is not False


@dataclass(frozen=True)
class Decision:
    verdict: Literal['Allow', 'Deny']
    reason: Literal['ExplicitDeny', 'ImplicitDeny', 'SameAccountAllow', 'CrossAccountAllow']
    trace: Tuple[MatchTrace, ...]
    rule: Literal['explicit-deny', 'same-account', 'cross-account']
    request: AccessRequest
    resource_owner: str
    identity_allow: bool = False
    resource_allow: bool = False
    shared: bool = False

    @property
    def allowed(self) -> bool:
        return self.verdict == VERDICT_ALLOW
