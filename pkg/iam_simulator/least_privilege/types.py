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

from datetime import datetime
from typing import Dict, List, Set, Tuple, Union

from iam_simulator.policy import ActionLevel, PolicyDocument
from iam_simulator.utils import format_timestamp
from .constants import GENERATED_PERMISSION_SET_PREFIX, NEVER_USED

# (permission set id, policy name, statement index)
StatementKey = Tuple[str, str, int]
# (user id, account id)
Principal = Tuple[str, str]


class Observation:
    def __init__(self, action: str, resource: str, time: datetime):
        self.action = action
        self.resource = resource
        self.time = time

    def pair(self) -> Tuple[str, str]:
        return self.action, self.resource

    def __eq__(self, other) -> bool:
        return isinstance(other, Observation) and \
            (self.action, self.resource, self.time) == (other.action, other.resource, other.time)

    def __repr__(self) -> str:
        return 'Observation(' + self.action + ', ' + self.resource + ', ' + format_timestamp(self.time) + ')'


class UsageIndex:
    """Per-statement last use and per-principal allowed activity, folded from an audit stream."""

    def __init__(self):
        self.last_used: Dict[StatementKey, datetime] = {}
        self.observations: Dict[Principal, List[Observation]] = {}
        self.exercised: Dict[StatementKey, Set[str]] = {}
        self.actions_seen: Set[str] = set()
        self.events_ingested = 0
        self.latest: Union[datetime, None] = None

    def last_used_of(self, key: StatementKey) -> Union[datetime, None]:
        return self.last_used.get(key)

    def observations_of(self, principal: Principal,
                        window: Union[Tuple[datetime, datetime], None] = None) -> List[Observation]:
        result = self.observations.get(principal, [])
        if window is not None:
            start, end = window
            result = [o for o in result if start <= o.time <= end]
        return list(result)

    def is_empty(self) -> bool:
        return len(self.last_used) == 0 and len(self.observations) == 0


class UnusedStatement:
    def __init__(self, permission_set: str, policy: str, statement_index: int,
                 last_used: Union[datetime, None]):
        self.permission_set = permission_set
        self.policy = policy
        self.statement_index = statement_index
        self.last_used = last_used

    def key(self) -> StatementKey:
        return self.permission_set, self.policy, self.statement_index

    def to_json(self) -> dict:
        return {
            'permission_set': self.permission_set,
            'policy': self.policy,
            'statement': self.statement_index,
            'last_used': NEVER_USED if self.last_used is None else format_timestamp(self.last_used)
        }


class NarrowingSuggestion:
    def __init__(self, permission_set: str, policy: str, statement_index: int,
                 granted: List[str], exercised: List[str], read_only: bool):
        self.permission_set = permission_set
        self.policy = policy
        self.statement_index = statement_index
        self.granted = granted
        self.exercised = exercised
        self.read_only = read_only

    def to_json(self) -> dict:
        return {
            'permission_set': self.permission_set,
            'policy': self.policy,
            'statement': self.statement_index,
            'granted': self.granted,
            'exercised': self.exercised,
            'read_only': self.read_only
        }


class ReplayResult:
    def __init__(self, observed: int, covered: int, sampled: int, excess_allowed: int):
        self.observed = observed
        self.covered = covered
        self.sampled = sampled
        self.excess_allowed = excess_allowed

    @property
    def coverage(self) -> float:
        if self.observed == 0:
            return 1.0
        return self.covered / self.observed

    @property
    def excess(self) -> float:
        if self.sampled == 0:
            return 0.0
        return self.excess_allowed / self.sampled

    def to_json(self) -> dict:
        return {
            'coverage': self.coverage,
            'excess': self.excess,
            'observed': self.observed,
            'sampled': self.sampled
        }


class GeneratedPolicy:
    def __init__(self, document: PolicyDocument, level: ActionLevel, principal: Principal,
                 window: Tuple[datetime, datetime], verified: bool,
                 verification: Union[ReplayResult, None] = None, fallbacks: Union[List[str], None] = None):
        self.document = document
        self.level = level
        self.principal = principal
        self.window = window
        self.verified = verified
        self.verification = verification
        self.fallbacks = [] if fallbacks is None else fallbacks

    @property
    def permission_set_id(self) -> str:
        return GENERATED_PERMISSION_SET_PREFIX + self.principal[0] + '-' + self.principal[1]
