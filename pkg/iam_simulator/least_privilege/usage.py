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

from typing import Iterable

from iam_simulator.audit import AuditEvent
from iam_simulator.audit.constants import KIND_API_CALL
from iam_simulator.constants import VERDICT_ALLOW
from iam_simulator.evaluation import AccessRequest, authorize
from iam_simulator.evaluation.constants import ORIGIN_IDENTITY
from iam_simulator.evaluation.exceptions import UnknownPrincipalError
from iam_simulator.logger import log_debug_message
from iam_simulator.organization import Organization
from iam_simulator.policy.constants import EFFECT_ALLOW
from iam_simulator.utils import format_timestamp
from .exceptions import OutOfOrderEventsError
from .types import Observation, UsageIndex


def build_usage_index(org: Organization, events: Iterable[AuditEvent]) -> UsageIndex:
    """Folds a time-ordered event stream into a UsageIndex.

    Each allowed ApiCall is re-authorized against org (with an empty context) and
    every identity Allow statement that matched is credited with the event time.
    """
    index = UsageIndex()
    for event in events:
        if index.latest is not None and event.time < index.latest:
            raise OutOfOrderEventsError('event at ' + format_timestamp(event.time) +
                                        ' arrives after ' + format_timestamp(index.latest))
        index.latest = event.time
        index.events_ingested += 1
        if org.user(event.user) is None or not org.has_account(event.account):
            raise UnknownPrincipalError('event at ' + format_timestamp(event.time) + ' names unknown principal ' +
                                        event.user + '@' + event.account)
        if event.kind != KIND_API_CALL:
            continue

        index.actions_seen.add(event.action)
        if event.verdict != VERDICT_ALLOW:
            continue

        decision = authorize(org, AccessRequest(event.user, event.account, event.action, event.resource))
        for t in decision.trace:
            if t.origin_kind != ORIGIN_IDENTITY or t.effect != EFFECT_ALLOW or not t.matched:
                continue
            key = (t.origin, t.policy, t.statement_index)
            index.last_used[key] = event.time
            index.exercised.setdefault(key, set()).add(event.action)
        index.observations.setdefault((event.user, event.account), []).append(
            Observation(event.action, event.resource, event.time))

    log_debug_message('usage index built from ' + str(index.events_ingested) + ' event(s); ' +
                      str(len(index.last_used)) + ' statement(s) credited')
    return index
