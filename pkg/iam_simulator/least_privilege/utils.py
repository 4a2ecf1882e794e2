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

from datetime import datetime
from typing import Tuple, Union

from iam_simulator.constants import DEFAULT_MAX_SAMPLES, DEFAULT_SEED
from iam_simulator.exceptions import raise_bad_input_exception
from iam_simulator.policy import ActionLevel, VerbTable
from iam_simulator.utils import parse_timestamp
from .constants import GENERATION_LEVELS


class GenerationConfig:
    def __init__(self, level: ActionLevel, window: Union[Tuple[datetime, datetime], None],
                 verb_table: VerbTable, seed: int, max_samples: int):
        self.level = level
        self.window = window
        self.verb_table = verb_table
        self.seed = seed
        self.max_samples = max_samples


def normalise_window(window: Union[str, Tuple, None]) -> Union[Tuple[datetime, datetime], None]:
    if window is None:
        return None
    if isinstance(window, str):
        parts = window.split('/')
        if len(parts) != 2:
            raise_bad_input_exception('window must be written as START/END')
        window = (parts[0], parts[1])
    start, end = window
    if isinstance(start, str):
        start = parse_timestamp(start)
    if isinstance(end, str):
        end = parse_timestamp(end)
    if start > end:
        raise_bad_input_exception('window start must not be after its end')
    return start, end


def validate_and_normalise_user_input(level: int,
                                      window: Union[str, Tuple, None] = None,
                                      verb_table: Union[VerbTable, None] = None,
                                      seed: Union[int, None] = None,
                                      max_samples: Union[int, None] = None) -> GenerationConfig:
    if isinstance(level, bool) or not isinstance(level, int) or level not in GENERATION_LEVELS:
        raise_bad_input_exception('level must be one of 2, 3 or 4')
    if verb_table is None:
        verb_table = VerbTable.default()
    if seed is None:
        seed = DEFAULT_SEED
    if max_samples is None:
        max_samples = DEFAULT_MAX_SAMPLES
    if max_samples < 0:
        raise_bad_input_exception('max_samples must not be negative')
    return GenerationConfig(ActionLevel(level), normalise_window(window), verb_table, seed, max_samples)
