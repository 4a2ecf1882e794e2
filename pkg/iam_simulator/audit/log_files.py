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
from json import JSONDecodeError
from os import makedirs, path
from typing import Any, Dict, List, Union

from iam_simulator.exceptions import BadInputError, UndecodableFileError
from iam_simulator.utils import collect_schema_errors, format_timestamp, parse_timestamp, read_text_file
from .archive import LogArchive
from .constants import ACCOUNT_LOG_SUFFIX
from .exceptions import MalformedEventError
from .types import EVENT_SCHEMA, AuditEvent, validate_event


def event_to_json(event: AuditEvent) -> dict:
    return {
        'time': format_timestamp(event.time),
        'kind': event.kind,
        'user': event.user,
        'account': event.account,
        'action': event.action,
        'resource': event.resource,
        'verdict': event.verdict,
        'source': event.source
    }


def event_from_json(raw: Any, file_path: Union[str, None] = None, line: Union[int, None] = None) -> AuditEvent:
    errors = collect_schema_errors(raw, EVENT_SCHEMA, 'audit event')
    if len(errors) != 0:
        raise MalformedEventError(errors[0], file_path, line)
    try:
        event = AuditEvent(parse_timestamp(raw['time']), raw['kind'], raw['user'], raw['account'],
                           raw['action'], raw['resource'], raw['verdict'], raw['source'])
        validate_event(event)
    except BadInputError as e:
        raise MalformedEventError(str(e), file_path, line) from None
    return event


def dumps_events(events: List[AuditEvent]) -> str:
    return ''.join(json.dumps(event_to_json(e), separators=(',', ':')) + '\n' for e in events)


def loads_events(text: str, file_path: Union[str, None] = None) -> List[AuditEvent]:
    events = []
    for number, line in enumerate(text.splitlines(), start=1):
        if line.strip() == '':
            continue
        try:
            raw = json.loads(line)
        except JSONDecodeError as e:
            raise MalformedEventError('malformed JSON: ' + str(e), file_path, number) from None
        events.append(event_from_json(raw, file_path, number))
    return events


def read_log(file_path: str) -> LogArchive:
    try:
        text = read_text_file(file_path)
    except UndecodableFileError as e:
        raise MalformedEventError('not valid UTF-8 (' + e.reason + ')', file_path, e.line) from None
    return LogArchive(loads_events(text, file_path))


def write_log(archive: LogArchive, file_path: str):
    directory = path.dirname(file_path)
    if directory != '':
        makedirs(directory, exist_ok=True)
    with open(file_path, mode='w', encoding='utf-8') as f:
        f.write(dumps_events(archive.events))


def write_account_logs(archive: LogArchive, directory: str) -> List[str]:
    by_source: Dict[str, LogArchive] = {}
    for event in archive.events:
        by_source.setdefault(event.source, LogArchive()).append(event)
    written = []
    for source in sorted(by_source.keys()):
        file_path = path.join(directory, source + ACCOUNT_LOG_SUFFIX)
        write_log(by_source[source], file_path)
        written.append(file_path)
    return written
