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
from .archive import LogArchive, append_event, merge_archives
from .log_files import (
    event_to_json,
    event_from_json,
    dumps_events,
    loads_events,
    read_log,
    write_log,
    write_account_logs
)
from .query import query, denied_access_summary, parse_duration, DeniedAccessCount
from .types import AuditEvent, EventFilter, create_event, validate_event
