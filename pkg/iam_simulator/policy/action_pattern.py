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
from enum import IntEnum
from re import fullmatch

from .constants import SERVICE_REGEX, OPERATION_PATTERN_REGEX, CONCRETE_OPERATION_REGEX
from .exceptions import InvalidPatternError


class ActionLevel(IntEnum):
    FULL_ACCESS = 1
    SERVICE = 2
    ACCESS_TYPE = 3
    ACTION = 4


@dataclass(frozen=True)
class ActionPattern:
    service: str
    operation_pattern: str

    @staticmethod
    def parse(text: str, allow_service_wildcard: bool = False) -> ActionPattern:
        service, operation = normalise_action_or_throw_error(text, allow_service_wildcard)
        return ActionPattern(service, operation)

    @staticmethod
    def parse_concrete(text: str) -> ActionPattern:
        pattern = ActionPattern.parse(text)
        if not pattern.is_concrete():
            raise InvalidPatternError('"' + text + '" is not a concrete action')
        return pattern

    def is_concrete(self) -> bool:
        return '*' not in self.service and '*' not in self.operation_pattern

    def get_as_string(self) -> str:
        return self.service + ':' + self.operation_pattern

    def __str__(self) -> str:
        return self.get_as_string()


def normalise_action_or_throw_error(text: str, allow_service_wildcard: bool = False):
    if not isinstance(text, str):
        raise InvalidPatternError('action must be a string')
    if text == '*':
        return '*', '*'
    if text.count(':') != 1:
        raise InvalidPatternError('"' + text + '" must be written as service:operation')

    service, operation = text.split(':')
    if service == '*':
        if operation != '*' and not allow_service_wildcard:
            raise InvalidPatternError(
                '"' + text + '" uses a service wildcard; only "*:*" may do so')
    elif fullmatch(SERVICE_REGEX, service) is None:
        raise InvalidPatternError('"' + text + '" has an invalid service; services are lowercase tokens')

    if operation == '' or fullmatch(OPERATION_PATTERN_REGEX, operation) is None:
        raise InvalidPatternError(
            '"' + text + '" has an invalid operation; "*" is only allowed once, in trailing position')
    if '*' not in operation and fullmatch(CONCRETE_OPERATION_REGEX, operation) is None:
        raise InvalidPatternError('"' + text + '" has an invalid operation name')
    return service, operation


@dataclass(frozen=True)
class ResourcePattern:
    pattern: str

    @staticmethod
    def parse(text: str) -> ResourcePattern:
        if not isinstance(text, str) or text == '':
            raise InvalidPatternError('resource must be a non-empty string')
        if '${' in text:
            raise InvalidPatternError('"' + text + '" uses a policy variable, which is not supported')
        if any(c.isspace() for c in text):
            raise InvalidPatternError('"' + text + '" contains whitespace')
        return ResourcePattern(text)

    def is_concrete(self) -> bool:
        return '*' not in self.pattern

    def __str__(self) -> str:
        return self.pattern


def parse_concrete_resource(text: str) -> str:
    resource = ResourcePattern.parse(text)
    if not resource.is_concrete():
        raise InvalidPatternError('"' + text + '" is not a concrete resource')
    return resource.pattern
