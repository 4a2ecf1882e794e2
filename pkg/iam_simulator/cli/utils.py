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
from typing import Any, Union

import yaml

from iam_simulator.constants import DEFAULT_SEED
from iam_simulator.data import bundled_scenario_path
from iam_simulator.exceptions import raise_bad_input_exception
from iam_simulator.utils import read_text_file, validate_the_structure_of_user_input
from .constants import DEFAULT_FORMAT
from .types import RUN_CONFIG_SCHEMA, RunConfig


def load_run_config_file(file_path: Union[str, None]) -> dict:
    if file_path is None:
        return {}
    try:
        document: Any = yaml.safe_load(read_text_file(file_path))
    except yaml.YAMLError as e:
        raise_bad_input_exception('invalid YAML in ' + file_path + ': ' + str(e))
    if document is None:
        return {}
    validate_the_structure_of_user_input(document, RUN_CONFIG_SCHEMA, 'run config ' + file_path)
    return document


def validate_and_normalise_user_input(args: Namespace, file_config: Union[dict, None] = None) -> RunConfig:
    """Flags given on the command line win over the run-config file, which wins over defaults."""
    if file_config is None:
        file_config = {}

    def pick(flag: Any, key: str, default: Any) -> Any:
        if flag is not None:
            return flag
        return file_config.get(key, default)

    scenario_flag = getattr(args, 'scenario_path', None) or args.scenario
    scenario = pick(scenario_flag, 'scenario', bundled_scenario_path())
    seed = pick(args.seed, 'seed', DEFAULT_SEED)
    if isinstance(seed, bool) or not isinstance(seed, int):
        raise_bad_input_exception('seed must be an integer')

    return RunConfig(
        scenario=scenario,
        command=args.command,
        subcommand=getattr(args, 'subcommand', None),
        args=args,
        output_format=pick(args.format, 'format', DEFAULT_FORMAT),
        seed=seed,
        verb_table=pick(args.verb_table, 'verb_table', None),
        verbose=args.verbose
    )


def parse_context_flags(values: Union[list, None]) -> dict:
    context = {}
    for value in values or []:
        if '=' not in value:
            raise_bad_input_exception('context must be given as key=value, got "' + value + '"')
        key, _, item = value.partition('=')
        if key == '':
            raise_bad_input_exception('context key must not be empty')
        context[key] = item
    return context


def parse_principal(value: str) -> tuple:
    user, separator, account = value.rpartition('@')
    if separator == '' or user == '' or account == '':
        raise_bad_input_exception('principal must be written as USER@ACCOUNT, got "' + value + '"')
    return user, account
