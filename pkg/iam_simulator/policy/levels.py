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

from functools import lru_cache
from os import environ, path
from re import fullmatch
from typing import Dict, Union

try:
    from typing import Literal
except ImportError:
    from typing_extensions import Literal

from iam_simulator.constants import VERB_TABLE_ENV_VAR
from iam_simulator.exceptions import UndecodableFileError, raise_bad_input_exception
from iam_simulator.logger import log_warning_message
from iam_simulator.utils import read_text_file
from .action_pattern import ActionLevel, ActionPattern
from .constants import ACCESS_READ, ACCESS_WRITE, DEFAULT_VERB_TABLE_FILE, VERB_REGEX
from .exceptions import VerbTableError


class VerbTable:
    """Maps operation verb prefixes (Get, Put, ...) to an access type."""

    def __init__(self, verbs: Dict[str, Literal['read', 'write']]):
        self.verbs = dict(verbs)
        self.__by_length = sorted(self.verbs.keys(), key=lambda v: (-len(v), v))

    def access_of(self, verb: str) -> Union[str, None]:
        return self.verbs.get(verb)

    def verb_prefix(self, operation: str) -> Union[str, None]:
        for verb in self.__by_length:
            if operation.startswith(verb):
                if len(operation) == len(verb) or not operation[len(verb)].islower():
                    return verb
        return None

    def __eq__(self, other) -> bool:
        return isinstance(other, VerbTable) and self.verbs == other.verbs

    @staticmethod
    def default() -> VerbTable:
        return load_verb_table(default_verb_table_path())


def default_verb_table_path() -> str:
    if VERB_TABLE_ENV_VAR in environ and environ[VERB_TABLE_ENV_VAR] != '':
        return environ[VERB_TABLE_ENV_VAR]
    here = path.abspath(path.dirname(__file__))
    return path.join(here, '..', 'data', DEFAULT_VERB_TABLE_FILE)


@lru_cache(maxsize=16)
def load_verb_table(file_path: str) -> VerbTable:
    try:
        text = read_text_file(file_path)
    except UndecodableFileError as e:
        raise VerbTableError(str(e)) from None
    return parse_verb_table(text, file_path)


def parse_verb_table(text: str, source: str = '<verb table>') -> VerbTable:
    verbs = {}
    for number, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if line == '' or line.startswith('#'):
            continue
        fields = line.split('\t')
        if len(fields) != 2:
            raise VerbTableError(source + ':' + str(number) + ': expected "Verb<TAB>read|write"')
        verb, access = fields[0].strip(), fields[1].strip()
        if fullmatch(VERB_REGEX, verb) is None:
            raise VerbTableError(source + ':' + str(number) + ': invalid verb "' + verb + '"')
        if access not in (ACCESS_READ, ACCESS_WRITE):
            raise VerbTableError(source + ':' + str(number) + ': access must be read or write')
        if verb in verbs:
            raise VerbTableError(source + ':' + str(number) + ': duplicate verb "' + verb + '"')
        verbs[verb] = access
    return VerbTable(verbs)


def classify_action_level(pattern: ActionPattern) -> ActionLevel:
    if pattern.service == '*' and pattern.operation_pattern == '*':
        return ActionLevel.FULL_ACCESS
    if pattern.operation_pattern == '*':
        return ActionLevel.SERVICE
    if pattern.operation_pattern.endswith('*'):
        return ActionLevel.ACCESS_TYPE
    return ActionLevel.ACTION


class GeneralizedAction:
    def __init__(self, pattern: ActionPattern, level: ActionLevel, fallback: bool = False):
        self.pattern = pattern
        self.level = level
        self.fallback = fallback


def generalize_action(action: Union[str, ActionPattern], target: int,
                      verb_table: Union[VerbTable, None] = None) -> GeneralizedAction:
    if isinstance(action, str):
        action = ActionPattern.parse_concrete(action)
    if target not in (2, 3, 4):
        raise_bad_input_exception('actions can only be generalized to levels 2, 3 or 4, not ' + str(target))

    if target == ActionLevel.ACTION:
        return GeneralizedAction(action, ActionLevel.ACTION)
    if target == ActionLevel.SERVICE:
        return GeneralizedAction(ActionPattern(action.service, '*'), ActionLevel.SERVICE)

    if verb_table is None:
        verb_table = VerbTable.default()
    verb = verb_table.verb_prefix(action.operation_pattern)
    if verb is None:
        log_warning_message('no verb in the verb table prefixes ' + action.get_as_string() +
                            '; keeping it at level 4')
        return GeneralizedAction(action, ActionLevel.ACTION, True)
    return GeneralizedAction(ActionPattern(action.service, verb + '*'), ActionLevel.ACCESS_TYPE)


def access_type_of(action: Union[str, ActionPattern],
                   verb_table: Union[VerbTable, None] = None) -> Union[str, None]:
    if isinstance(action, str):
        action = ActionPattern.parse_concrete(action)
    if verb_table is None:
        verb_table = VerbTable.default()
    verb = verb_table.verb_prefix(action.operation_pattern)
    if verb is None:
        return None
    return verb_table.access_of(verb)
