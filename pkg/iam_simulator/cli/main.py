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

import sys
from os import makedirs, path
from typing import List, Union

from iam_simulator.exceptions import BadInputError
from iam_simulator.logger import enable_debug_logging
from .commands import COMMANDS
from .constants import EXIT_BAD_INPUT, EXIT_IO_ERROR
from .parser import build_parser
from .types import CommandResult
from .utils import load_run_config_file, validate_and_normalise_user_input


def main(argv: Union[List[str], None] = None) -> int:
    args = build_parser().parse_args(argv)
    if args.verbose:
        enable_debug_logging()

    try:
        config = validate_and_normalise_user_input(args, load_run_config_file(args.config))
        result = COMMANDS[config.command](config)
        write_result(result)
    except BadInputError as e:
        sys.stderr.write('error: ' + str(e) + '\n')
        return EXIT_BAD_INPUT
    except OSError as e:
        sys.stderr.write('error: ' + str(e) + '\n')
        return EXIT_IO_ERROR
    return result.exit_code


def write_result(result: CommandResult):
    for file_path, text in result.files.items():
        directory = path.dirname(file_path)
        if directory != '':
            makedirs(directory, exist_ok=True)
        with open(file_path, mode='w', encoding='utf-8') as f:
            f.write(text)
    sys.stdout.write(result.stdout)
    sys.stdout.flush()
    if result.stderr != '':
        sys.stderr.write(result.stderr)
