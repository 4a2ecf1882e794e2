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

from typing import Mapping, Union

from iam_simulator.utils import glob_matches
from .action_pattern import ActionPattern, ResourcePattern
from .constants import CONDITION_STRING_EQUALS, CONDITION_STRING_LIKE
from .exceptions import InvalidPatternError
from .types import ConditionBlock


def action_matches(pattern: ActionPattern, action: Union[str, ActionPattern]) -> bool:
    if isinstance(action, str):
        action = ActionPattern.parse_concrete(action)
    elif not action.is_concrete():
        raise InvalidPatternError('"' + action.get_as_string() + '" is not a concrete action')

    if pattern.service != '*' and pattern.service != action.service:
        return False
    operation = pattern.operation_pattern
    if operation.endswith('*'):
        return action.operation_pattern.startswith(operation[:-1])
    return operation == action.operation_pattern


def resource_matches(pattern: Union[str, ResourcePattern], arn: str) -> bool:
    if isinstance(pattern, ResourcePattern):
        pattern = pattern.pattern
    return glob_matches(pattern, arn)


def condition_holds(block: ConditionBlock, context: Mapping[str, str]) -> bool:
    for operator, keys in block.clauses:
        for key, expected in keys:
            if key not in context:
                return False
            actual = context[key]
            if operator == CONDITION_STRING_EQUALS:
                if actual not in expected:
                    return False
            elif operator == CONDITION_STRING_LIKE:
                if not any(glob_matches(p, actual) for p in expected):
                    return False
            else:
                return False
    return True
