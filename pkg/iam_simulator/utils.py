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

import re
from datetime import datetime, timezone
from functools import lru_cache
from typing import Any, List, Pattern

from dateutil.parser import isoparse
from jsonschema import Draft7Validator
from jsonschema.exceptions import ValidationError

from .constants import TIMESTAMP_FORMAT
from .exceptions import UndecodableFileError, raise_bad_input_exception


def format_schema_error(error: ValidationError, config_root: str) -> str:
    path = '.'.join(list(map(str, error.path)))
    if not path == '':
        path = 'for path "' + path + '": '

    error_message = path + error.message
    if 'is a required property' in error_message:
        error_message = 'input ' + error_message
    return 'Schema error in ' + config_root + ': ' + error_message


def collect_schema_errors(document: Any, input_schema: dict, config_root: str) -> List[str]:
    validator = Draft7Validator(input_schema)
    errors = sorted(validator.iter_errors(document), key=lambda e: list(map(str, e.path)))
    return [format_schema_error(e, config_root) for e in errors]


def validate_the_structure_of_user_input(document: Any, input_schema: dict, config_root: str):
    errors = collect_schema_errors(document, input_schema, config_root)
    if len(errors) != 0:
        raise_bad_input_exception(errors[0])


@lru_cache(maxsize=4096)
def glob_to_regex(pattern: str) -> Pattern:
    # only '*' is special; it spans ':' and '/'
    parts = [re.escape(part) for part in pattern.split('*')]
    return re.compile('.*'.join(parts), re.DOTALL)


def glob_matches(pattern: str, value: str) -> bool:
    if pattern == '*':
        return True
    if '*' not in pattern:
        return pattern == value
    return glob_to_regex(pattern).fullmatch(value) is not None


def parse_timestamp(value: str) -> datetime:
    if not isinstance(value, str) or value == '':
        raise_bad_input_exception('timestamp must be a non-empty RFC 3339 string')
    try:
        parsed = isoparse(value)
    except ValueError:
        raise_bad_input_exception('"' + value + '" is not a valid RFC 3339 timestamp')
    if parsed.tzinfo is None:
        raise_bad_input_exception('"' + value + '" has no UTC offset')
    parsed = parsed.astimezone(timezone.utc)
    if parsed.microsecond != 0:
        raise_bad_input_exception('"' + value + '" has sub-second precision')
    return parsed


def format_timestamp(value: datetime) -> str:
    return value.astimezone(timezone.utc).strftime(TIMESTAMP_FORMAT)


def read_text_file(file_path: str) -> str:
    with open(file_path, mode='rb') as f:
        data = f.read()
    try:
        return data.decode('utf-8')
    except UnicodeDecodeError as e:
        raise UndecodableFileError(file_path, data.count(b'\n', 0, e.start) + 1, e.reason) from None
