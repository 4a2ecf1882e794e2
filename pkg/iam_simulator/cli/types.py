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

from argparse import Namespace
from typing import Dict, Union

try:
    from typing import Literal
except ImportError:
    from typing_extensions import Literal

from .constants import EXIT_OK, FORMATS

RUN_CONFIG_SCHEMA = {
    'type': 'object',
    'properties': {
        'scenario': {'type': 'string', 'minLength': 1},
        'format': {'enum': list(FORMATS)},
        'seed': {'type': 'integer'},
        'verb_table': {'type': 'string', 'minLength': 1}
    },
    'additionalProperties': False
}


class RunConfig:
    def __init__(self, scenario: str, command: str, subcommand: Union[str, None], args: Namespace,
                 output_format: Literal['json', 'text'], seed: int, verb_table: Union[str, None],
                 verbose: bool):
        self.scenario = scenario
        self.command = command
        self.subcommand = subcommand
        self.args = args
        self.output_format = output_format
        self.seed = seed
        self.verb_table = verb_table
        self.verbose = verbose


class CommandResult:
    """Everything a command produces; nothing is written until the command has finished."""

    def __init__(self, exit_code: int = EXIT_OK, stdout: str = '', stderr: str = '',
                 files: Union[Dict[str, str], None] = None):
        self.exit_code = exit_code
        self.stdout = stdout
        self.stderr = stderr
        self.files = {} if files is None else files
