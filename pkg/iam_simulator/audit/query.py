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

from datetime import datetime, timedelta, timezone
from re import fullmatch
from typing import Dict, List, Tuple, Union

from iam_simulator.constants import VERDICT_DENY
from iam_simulator.policy import action_matches
from iam_simulator.utils import format_timestamp
from .archive import LogArchive
from .constants import DURATION_REGEX, DURATION_UNIT_SECONDS, KIND_API_CALL
from .exceptions import InvalidFilterError
from .types import AuditEvent, EventFilter


def query(archive: LogArchive, event_filter: Union[EventFilter, None] = None) -> List[AuditEvent]:
    if event_filter is None:
        return archive.events
    return [e for e in archive.events if event_matches_filter(e, event_filter)]


def event_matches_filter(event: AuditEvent, f: EventFilter) -> bool:
    if f.user is not None and event.user != f.user:
        return False
    if f.account is not None and event.account != f.account:
        return False
    if f.kind is not None and event.kind != f.kind:
        return False
    if f.verdict is not None and event.verdict != f.verdict:
        return False
    if f.start is not None and event.time < f.start:
        return False
    if f.end is not None and event.time >= f.end:
        return False
    if f.action_pattern is not None:
        if event.kind != KIND_API_CALL or not action_matches(f.action_pattern, event.action):
            return False
    return True


def parse_duration(text: str) -> timedelta:
    match = fullmatch(DURATION_REGEX, text.strip()) if isinstance(text, str) else None
    if match is None:
        raise InvalidFilterError('"' + str(text) + '" is not a duration such as 90s, 30m, 1h or 1d')
    return timedelta(seconds=int(match.group(1)) * DURATION_UNIT_SECONDS[match.group(2)])


class DeniedAccessCount:
    def __init__(self, bucket_start: datetime, user: str, account: str, count: int):
        self.bucket_start = bucket_start
        self.user = user
        self.account = account
        self.count = count

    def to_json(self) -> dict:
        return {
            'bucket_start': format_timestamp(self.bucket_start),
            'user': self.user,
            'account': self.account,
            'count': self.count
        }


def denied_access_summary(archive: LogArchive, bucket: Union[timedelta, str]) -> List[DeniedAccessCount]:
    if isinstance(bucket, str):
        bucket = parse_duration(bucket)
    bucket_seconds = int(bucket.total_seconds())
    if bucket_seconds <= 0:
        raise InvalidFilterError('bucket must be a positive duration')

    counts: Dict[Tuple[int, str, str], int] = {}
    for event in archive.events:
        if event.verdict != VERDICT_DENY:
            continue
        epoch = int(event.time.timestamp())
        key = (epoch - epoch % bucket_seconds, event.user, event.account)
        counts[key] = counts.get(key, 0) + 1

    return [
        DeniedAccessCount(datetime.fromtimestamp(start, tz=timezone.utc), user, account, count)
        for (start, user, account), count in sorted(counts.items())
    ]
