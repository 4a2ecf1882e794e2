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

from dataclasses import dataclass, field
from typing import Dict, List, Mapping, Sequence, Tuple, Union

try:
    from typing import Literal
except ImportError:
    from typing_extensions import Literal

from iam_simulator.constants import POLICY_VERSION
from .action_pattern import ActionPattern, ResourcePattern
from .constants import CONDITION_OPERATORS, EFFECTS

type_string = {
    'type': 'string',
    'minLength': 1
}

type_string_or_list = {
    'oneOf': [
        type_string,
        {
            'type': 'array',
            'items': type_string,
            'minItems': 1
        }
    ]
}

CONDITION_SCHEMA = {
    'type': 'object',
    'propertyNames': {
        'enum': list(CONDITION_OPERATORS)
    },
    'additionalProperties': {
        'type': 'object',
        'additionalProperties': type_string_or_list
    }
}

STATEMENT_SCHEMA = {
    'type': 'object',
    'properties': {
        'Effect': {
            'enum': list(EFFECTS)
        },
        'Principal': type_string_or_list,
        'Action': type_string_or_list,
        'Resource': type_string_or_list,
        'Condition': CONDITION_SCHEMA
    },
    'required': ['Effect', 'Action', 'Resource'],
    'additionalProperties': False
}

POLICY_SCHEMA = {
    'type': 'object',
    'properties': {
        'Version': {
            'const': POLICY_VERSION
        },
        'Statement': {
            'type': 'array',
            'items': STATEMENT_SCHEMA
        }
    },
    'required': ['Version', 'Statement'],
    'additionalProperties': False
}


ConditionClause = Tuple[str, Tuple[Tuple[str, Tuple[str, ...]], ...]]


@dataclass(frozen=True)
class ConditionBlock:
    clauses: Tuple[ConditionClause, ...] = ()

    @staticmethod
    def from_mapping(raw: Mapping[str, Mapping[str, Union[str, Sequence[str]]]]) -> ConditionBlock:
        clauses = []
        for operator in sorted(raw.keys()):
            keys = []
            for key in sorted(raw[operator].keys()):
                values = raw[operator][key]
                if isinstance(values, str):
                    values = [values]
                keys.append((key, tuple(values)))
            clauses.append((operator, tuple(keys)))
        return ConditionBlock(tuple(clauses))

    def is_empty(self) -> bool:
        return len(self.clauses) == 0

    def to_json(self) -> Dict[str, Dict[str, List[str]]]:
        return {
            operator: {key: list(values) for key, values in keys}
            for operator, keys in self.clauses
        }


@dataclass(frozen=True)
class Statement:
    effect: Literal['Allow', 'Deny']
    actions: Tuple[ActionPattern, ...]
    resources: Tuple[ResourcePattern, ...]
    condition: ConditionBlock = ConditionBlock()
    principals: Union[Tuple[str, ...], None] = None

    def is_resource_based(self) -> bool:
        return self.principals is not None


@dataclass(frozen=True)
class PolicyDocument:
    statements: Tuple[Statement, ...] = ()
    version: str = POLICY_VERSION
    name: Union[str, None] = field(default=None, compare=False)

    def with_name(self, name: str) -> PolicyDocument:
        return PolicyDocument(self.statements, self.version, name)

    def has_principals(self) -> bool:
        return any(s.principals is not None for s in self.statements)
