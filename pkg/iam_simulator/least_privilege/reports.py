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
from datetime import datetime, timedelta
from typing import List, Union

from iam_simulator.exceptions import raise_bad_input_exception
from iam_simulator.organization import Organization
from iam_simulator.policy import ActionLevel, VerbTable, access_type_of, classify_action_level, generalize_action
from iam_simulator.policy.constants import ACCESS_READ, EFFECT_ALLOW
from iam_simulator.utils import format_timestamp
from .constants import REPORT_FORMATS
from .types import NarrowingSuggestion, UnusedStatement, UsageIndex


def unused_report(index: UsageIndex, org: Organization, as_of: datetime,
                  threshold_days: int) -> List[UnusedStatement]:
    if threshold_days < 0:
        raise_bad_input_exception('threshold_days must not be negative')
    cutoff = as_of - timedelta(days=threshold_days)

    rows = []
    for permission_set in org.permission_sets:
        for policy in permission_set.policies:
            for statement_index, statement in enumerate(policy.statements):
                if statement.effect != EFFECT_ALLOW:
                    continue
                last_used = index.last_used_of((permission_set.id, policy.name, statement_index))
                if last_used is None or last_used < cutoff:
                    rows.append(UnusedStatement(permission_set.id, policy.name, statement_index, last_used))

    # never-used first, then oldest first
    rows.sort(key=lambda r: (r.last_used is not None, r.last_used or as_of, r.key()))
    return rows


def narrowing_report(index: UsageIndex, org: Organization,
                     verb_table: Union[VerbTable, None] = None) -> List[NarrowingSuggestion]:
    """Lists Allow statements broader than level 3 with the level-3 patterns actually used."""
    if verb_table is None:
        verb_table = VerbTable.default()

    suggestions = []
    for permission_set in org.permission_sets:
        for policy in permission_set.policies:
            for statement_index, statement in enumerate(policy.statements):
                if statement.effect != EFFECT_ALLOW:
                    continue
                if all(classify_action_level(p) >= ActionLevel.ACCESS_TYPE for p in statement.actions):
                    continue
                used = sorted(index.exercised.get((permission_set.id, policy.name, statement_index), set()))
                exercised = sorted({str(generalize_action(a, ActionLevel.ACCESS_TYPE, verb_table).pattern)
                                    for a in used})
                read_only = len(used) != 0 and all(access_type_of(a, verb_table) == ACCESS_READ for a in used)
                suggestions.append(NarrowingSuggestion(permission_set.id, policy.name, statement_index,
                                                       [str(p) for p in statement.actions], exercised, read_only))
    return suggestions


def render_unused_report(rows: List[UnusedStatement], fmt: str = 'text') -> str:
    _check_format(fmt)
    if fmt == 'json':
        return json.dumps([r.to_json() for r in rows], indent=2) + '\n'
    table = [('PERMISSION SET', 'POLICY', 'STATEMENT', 'LAST USED')]
    for r in rows:
        table.append((r.permission_set, r.policy, str(r.statement_index),
                      'never' if r.last_used is None else format_timestamp(r.last_used)))
    return _render_table(table)


def render_narrowing_report(suggestions: List[NarrowingSuggestion], fmt: str = 'text') -> str:
    _check_format(fmt)
    if fmt == 'json':
        return json.dumps([s.to_json() for s in suggestions], indent=2) + '\n'
    table = [('PERMISSION SET', 'POLICY', 'STATEMENT', 'GRANTED', 'EXERCISED', 'READ ONLY')]
    for s in suggestions:
        table.append((s.permission_set, s.policy, str(s.statement_index), ','.join(s.granted),
                      ','.join(s.exercised) if len(s.exercised) != 0 else '-', 'yes' if s.read_only else 'no'))
    return _render_table(table)


def _check_format(fmt: str):
    if fmt not in REPORT_FORMATS:
        raise_bad_input_exception('format must be one of ' + ', '.join(REPORT_FORMATS))


def _render_table(table: List[tuple]) -> str:
    widths = [max(len(row[c]) for row in table) for c in range(len(table[0]))]
    lines = ['  '.join(cell.ljust(widths[c]) for c, cell in enumerate(row)).rstrip() for row in table]
    return '\n'.join(lines) + '\n'
