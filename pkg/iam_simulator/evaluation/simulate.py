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
from abc import ABC, abstractmethod
from concurrent.futures import ThreadPoolExecutor
from datetime import datetime, timedelta
from threading import Lock
from typing import Any, List, Sequence, Union

from iam_simulator.audit import AuditEvent, LogArchive, create_event
from iam_simulator.audit.constants import KIND_API_CALL
from iam_simulator.exceptions import BadInputError
from iam_simulator.logger import log_debug_message
from iam_simulator.organization import Organization
from iam_simulator.utils import collect_schema_errors, parse_timestamp
from .constants import DEFAULT_SIMULATION_START
from .engine import authorize, validate_request
from .exceptions import InvalidRequestError
from .types import REQUEST_SCHEMA, AccessRequest, Decision, MatchTrace


class AuditSink(ABC):
    @abstractmethod
    def emit(self, event: AuditEvent):
        pass


class ListSink(AuditSink):
    def __init__(self):
        self.events: List[AuditEvent] = []
        self.__lock = Lock()

    def emit(self, event: AuditEvent):
        with self.__lock:
            self.events.append(event)


class ArchiveSink(AuditSink):
    def __init__(self, archive: Union[LogArchive, None] = None):
        self.archive = LogArchive() if archive is None else archive
        self.__lock = Lock()

    def emit(self, event: AuditEvent):
        with self.__lock:
            self.archive.append(event)


def simulate(org: Organization, requests: Sequence[AccessRequest], sink: Union[AuditSink, None] = None,
             base_time: Union[datetime, str, None] = None, max_workers: Union[int, None] = None) -> List[Decision]:
    """Authorizes a batch of requests, returning decisions in input order.

    Every request is validated before any is evaluated; the first invalid one
    aborts the batch. When a sink is given, one ApiCall event per request is
    emitted in input order. Requests without a time are stamped base_time plus
    their index in seconds.
    """
    for index, request in enumerate(requests):
        try:
            validate_request(org, request)
        except InvalidRequestError as e:
            raise e.__class__(str(e), index) from None

    if max_workers is not None and max_workers > 1 and len(requests) > 1:
        with ThreadPoolExecutor(max_workers=max_workers) as pool:
            decisions = list(pool.map(lambda r: authorize(org, r), requests))
    else:
        decisions = [authorize(org, r) for r in requests]

    if sink is not None:
        if base_time is None:
            base_time = DEFAULT_SIMULATION_START
        if isinstance(base_time, str):
            base_time = parse_timestamp(base_time)
        for index, decision in enumerate(decisions):
            sink.emit(decision_to_event(decision, base_time + timedelta(seconds=index)))
    log_debug_message('simulated ' + str(len(decisions)) + ' request(s)')
    return decisions


def decision_to_event(decision: Decision, default_time: datetime) -> AuditEvent:
    request = decision.request
    time = request.time if request.time is not None else default_time
    return create_event(time, KIND_API_CALL, request.user, request.account, request.action,
                        request.resource, decision.verdict, request.account)


def trace_to_json(trace: MatchTrace) -> dict:
    result = {
        'origin_kind': trace.origin_kind,
        'origin': trace.origin,
        'policy': trace.policy,
        'statement': trace.statement_index,
        'effect': trace.effect,
        'action_match': trace.action_match,
        'resource_match': trace.resource_match,
        'condition_match': trace.condition_match
    }
    if trace.principal_match is not None:
        result['principal_match'] = trace.principal_match
    return result


def decision_to_json(decision: Decision, include_trace: bool = False) -> dict:
    result: dict = {
        'verdict': decision.verdict,
        'reason': decision.reason
    }
    if include_trace:
        result['trace'] = [trace_to_json(t) for t in decision.trace]
    return result


def parse_request_line(line: str, index: Union[int, None] = None) -> AccessRequest:
    try:
        raw: Any = json.loads(line)
    except ValueError as e:
        raise InvalidRequestError('invalid JSON: ' + str(e), index) from None
    errors = collect_schema_errors(raw, REQUEST_SCHEMA, 'request')
    if len(errors) != 0:
        raise InvalidRequestError(errors[0], index)
    time = None
    if 'time' in raw:
        try:
            time = parse_timestamp(raw['time'])
        except BadInputError as e:
            raise InvalidRequestError(str(e), index) from None
    return AccessRequest(raw['user'], raw['account'], raw['action'], raw['resource'],
                         dict(raw.get('context', {})), time)


def load_requests(text: str, source: str = '<requests>') -> List[AccessRequest]:
    requests = []
    for number, line in enumerate(text.splitlines(), start=1):
        if line.strip() == '':
            continue
        try:
            requests.append(parse_request_line(line))
        except InvalidRequestError as e:
            error = InvalidRequestError(source + ':' + str(number) + ': ' + str(e))
            error.index = len(requests)
            raise error from None
    return requests
