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

from dataclasses import dataclass
from datetime import datetime, timedelta
from typing import Union

try:
    from typing import Literal
except ImportError:
    from typing_extensions import Literal

from iam_simulator.constants import VERDICTS
from iam_simulator.exceptions import BadInputError
from iam_simulator.policy import ActionPattern
from iam_simulator.policy.exceptions import InvalidPatternError
from iam_simulator.utils import parse_timestamp
from .constants import EVENT_FIELDS, EVENT_KINDS, KIND_API_CALL, KIND_LOGIN
from .exceptions import InvalidFilterError, MalformedEventError

type_string = {
    'type': 'string'
}

EVENT_SCHEMA = {
    'type': 'object',
    'properties': {
        'time': type_string,
        'kind': {'enum': list(EVENT_KINDS)},
        'user': {'type': 'string', 'minLength': 1},
        'account': {'type': 'string', 'minLength': 1},
        'action': type_string,
        'resource': type_string,
        'verdict': {'enum': list(VERDICTS)},
        'source': {'type': 'string', 'minLength': 1}
    },
    'required': list(EVENT_FIELDS),
    'additionalProperties': False
}


@dataclass(frozen=True)
class AuditEvent:
    time: datetime
    kind: Literal['Login', 'ApiCall']
    user: str
    account: str
    action: str
    resource: str
    verdict: Literal['Allow', 'Deny']
    source: str


def create_event(time: Union[str, datetime], kind: str, user: str, account: str, action: str = '',
                 resource: str = '', verdict: str = 'Allow', source: Union[str, None] = None) -> AuditEvent:
    if isinstance(time, str):
        time = parse_timestamp(time)
    if source is None:
        source = account
    event = AuditEvent(time, kind, user, account, action, resource, verdict, source)
    validate_event(event)
    return event


def validate_event(event: AuditEvent):
    if event.kind not in EVENT_KINDS:
        raise MalformedEventError('unknown event kind "' + str(event.kind) + '"')
    if event.verdict not in VERDICTS:
        raise MalformedEventError('unknown verdict "' + str(event.verdict) + '"')
    if event.user == '' or event.account == '' or event.source == '':
        raise MalformedEventError('user, account and source must be non-empty')
    if event.time.tzinfo is None or event.time.utcoffset() != timedelta(0) or event.time.microsecond != 0:
        raise MalformedEventError('event time must be UTC with second precision')
    if event.kind == KIND_API_CALL:
        if event.action == '' or event.resource == '':
            raise MalformedEventError('ApiCall events need a non-empty action and resource')
        try:
            ActionPattern.parse_concrete(event.action)
        except InvalidPatternError as e:
            raise MalformedEventError(str(e)) from None
        if '*' in event.resource:
            raise MalformedEventError('event resource "' + event.resource + '" must be concrete')
    if event.kind == KIND_LOGIN and (event.action != '' or event.resource != ''):
        raise MalformedEventError('Login events carry no action or resource')


class EventFilter:
    def __init__(self, user: Union[str, None] = None, account: Union[str, None] = None,
                 action_pattern: Union[str, ActionPattern, None] = None,
                 kind: Union[str, None] = None, verdict: Union[str, None] = None,
                 start: Union[datetime, str, None] = None, end: Union[datetime, str, None] = None):
        if isinstance(action_pattern, str):
            try:
                action_pattern = ActionPattern.parse(action_pattern, allow_service_wildcard=True)
            except InvalidPatternError as e:
                raise InvalidFilterError(str(e)) from None
        if kind is not None and kind not in EVENT_KINDS:
            raise InvalidFilterError('kind must be one of ' + ', '.join(EVENT_KINDS))
        if verdict is not None and verdict not in VERDICTS:
            raise InvalidFilterError('verdict must be one of ' + ', '.join(VERDICTS))
        try:
            if isinstance(start, str):
                start = parse_timestamp(start)
            if isinstance(end, str):
                end = parse_timestamp(end)
        except BadInputError as e:
            raise InvalidFilterError(str(e)) from None
        if start is not None and end is not None and start > end:
            raise InvalidFilterError('time range start is after its end')

        self.user = user
        self.account = account
        self.action_pattern = action_pattern
        self.kind = kind
        self.verdict = verdict
        self.start = start
        self.end = end
