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

from bisect import insort
from typing import Iterable, Iterator, List, Sequence

from iam_simulator.logger import log_debug_message
from .types import AuditEvent, validate_event


class LogArchive:
    """Time-ordered audit events, keyed by (time, source account, sequence)."""

    def __init__(self, events: Iterable[AuditEvent] = ()):
        self.__entries: List[tuple] = []
        self.__next_sequence = 0
        for event in events:
            self.append(event)

    def append(self, event: AuditEvent) -> LogArchive:
        validate_event(event)
        entry = (event.time, event.source, self.__next_sequence, event)
        self.__next_sequence += 1
        if len(self.__entries) != 0 and entry[:3] < self.__entries[-1][:3]:
            log_debug_message('late event at ' + event.time.isoformat() + ' from ' + event.source +
                              ' re-sorted into the archive')
        insort(self.__entries, entry)
        return self

    @property
    def events(self) -> List[AuditEvent]:
        return [entry[3] for entry in self.__entries]

    @property
    def accounts_covered(self) -> frozenset:
        return frozenset(entry[1] for entry in self.__entries)

    def __len__(self) -> int:
        return len(self.__entries)

    def __iter__(self) -> Iterator[AuditEvent]:
        return iter(self.events)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LogArchive):
            return NotImplemented
        return self.events == other.events

    __hash__ = None


def append_event(archive: LogArchive, event: AuditEvent) -> LogArchive:
    return archive.append(event)


def merge_archives(archives: Sequence[LogArchive]) -> LogArchive:
    keyed = []
    for archive_index, archive in enumerate(archives):
        for sequence, event in enumerate(archive.events):
            keyed.append(((event.time, event.source, archive_index, sequence), event))
    keyed.sort(key=lambda pair: pair[0])
    merged = LogArchive(event for _, event in keyed)
    log_debug_message('merged ' + str(len(archives)) + ' archive(s) into ' + str(len(merged)) + ' events')
    return merged
