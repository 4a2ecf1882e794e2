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
from typing import Any, Union

from iam_simulator.utils import collect_schema_errors
from .action_pattern import ActionPattern, ResourcePattern
from .constants import (
    CONDITION_OPERATORS,
    UNSUPPORTED_STATEMENT_FIELDS,
    POLICY_KIND_IDENTITY,
    POLICY_KIND_RESOURCE
)
from .exceptions import PolicyParseError, InvalidPatternError
from .types import POLICY_SCHEMA, ConditionBlock, PolicyDocument, Statement


def parse_policy(text: str, name: Union[str, None] = None, kind: Union[str, None] = None) -> PolicyDocument:
    try:
        raw = json.loads(text)
    except (JSONDecodeError, TypeError) as e:
        raise PolicyParseError('malformed JSON: ' + str(e)) from None
    return policy_from_json(raw, name, kind)


def policy_from_json(raw: Any, name: Union[str, None] = None, kind: Union[str, None] = None,
                     path: str = '') -> PolicyDocument:
    if not isinstance(raw, dict):
        raise PolicyParseError('policy document must be a JSON object', path)
    _reject_unsupported_constructs(raw, path)

    errors = collect_schema_errors(raw, POLICY_SCHEMA, 'policy document')
    if len(errors) != 0:
        raise PolicyParseError(errors[0], path)

    statements = []
    for index, raw_statement in enumerate(raw['Statement']):
        statement_path = _join(path, 'Statement.' + str(index))
        statements.append(_statement_from_json(raw_statement, statement_path))
    document = PolicyDocument(tuple(statements), raw['Version'], name)

    if kind == POLICY_KIND_IDENTITY and document.has_principals():
        raise PolicyParseError('identity-based policies must not contain a Principal field', path)
    if kind == POLICY_KIND_RESOURCE:
        for index, statement in enumerate(document.statements):
            if statement.principals is None:
                raise PolicyParseError('resource-based statements must contain a Principal field',
                                       _join(path, 'Statement.' + str(index)))
    return document


def serialize_policy(doc: PolicyDocument, indent: Union[int, None] = None) -> str:
    separators = (',', ':') if indent is None else (',', ': ')
    return json.dumps(policy_to_json(doc), indent=indent, separators=separators)


def policy_to_json(doc: PolicyDocument) -> dict:
    statements = []
    for statement in doc.statements:
        raw = {'Effect': statement.effect}
        if statement.principals is not None:
            raw['Principal'] = list(statement.principals)
        raw['Action'] = [a.get_as_string() for a in statement.actions]
        raw['Resource'] = [r.pattern for r in statement.resources]
        if not statement.condition.is_empty():
            raw['Condition'] = statement.condition.to_json()
        statements.append(raw)
    return {
        'Version': doc.version,
        'Statement': statements
    }


def _statement_from_json(raw: dict, path: str) -> Statement:
    try:
        actions = tuple(ActionPattern.parse(a) for a in _as_list(raw['Action']))
    except InvalidPatternError as e:
        raise PolicyParseError(str(e), _join(path, 'Action')) from None
    try:
        resources = tuple(ResourcePattern.parse(r) for r in _as_list(raw['Resource']))
    except InvalidPatternError as e:
        raise PolicyParseError(str(e), _join(path, 'Resource')) from None

    principals = None
    if 'Principal' in raw:
        principals = tuple(_as_list(raw['Principal']))
        for principal in principals:
            if '*' in principal or '${' in principal:
                raise PolicyParseError('principal "' + principal + '" must name a user id or account id',
                                       _join(path, 'Principal'))

    condition = ConditionBlock.from_mapping(raw.get('Condition', {}))
    return Statement(raw['Effect'], actions, resources, condition, principals)


def _reject_unsupported_constructs(raw: dict, path: str):
    statements = raw.get('Statement')
    if not isinstance(statements, list):
        return
    for index, statement in enumerate(statements):
        if not isinstance(statement, dict):
            continue
        statement_path = _join(path, 'Statement.' + str(index))
        for unsupported in UNSUPPORTED_STATEMENT_FIELDS:
            if unsupported in statement:
                raise PolicyParseError(unsupported + ' is not supported', statement_path)
        condition = statement.get('Condition')
        if isinstance(condition, dict):
            for operator in condition.keys():
                if operator not in CONDITION_OPERATORS:
                    raise PolicyParseError('unsupported condition operator "' + str(operator) + '"',
                                           _join(statement_path, 'Condition'))


def _as_list(value):
    if isinstance(value, str):
        return [value]
    return list(value)


def _join(path: str, suffix: str) -> str:
    if path == '':
        return suffix
    return path + '.' + suffix
