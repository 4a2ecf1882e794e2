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
from os import path
from typing import Dict, List

from iam_simulator.audit import (
    EventFilter,
    LogArchive,
    denied_access_summary,
    dumps_events,
    merge_archives,
    query,
    read_log
)
from iam_simulator.audit.constants import ACCOUNT_LOG_SUFFIX, ARCHIVE_FILE_NAME
from iam_simulator.evaluation import (
    AccessRequest,
    ListSink,
    authorize,
    decision_to_json,
    load_requests,
    render_decision,
    simulate
)
from iam_simulator.evaluation.exceptions import InvalidRequestError
from iam_simulator.exceptions import UndecodableFileError
from iam_simulator.least_privilege import (
    build_usage_index,
    generate_least_privilege,
    narrowing_report,
    render_generated_policy,
    render_narrowing_report,
    render_unused_report,
    unused_report
)
from iam_simulator.organization import Organization, dump_scenario, inventory_report, load_scenario
from iam_simulator.policy import VerbTable, load_verb_table
from iam_simulator.utils import format_timestamp, parse_timestamp, read_text_file
from .constants import EXIT_DENY, EXIT_OK, EXPORT_SCENARIO, FORMAT_JSON
from .types import CommandResult, RunConfig
from .utils import parse_context_flags, parse_principal


def cmd_validate(config: RunConfig) -> CommandResult:
    org = load_scenario(config.scenario)
    accounts = len(org.account_ids())
    if config.output_format == FORMAT_JSON:
        return CommandResult(stdout=json.dumps({
            'valid': True,
            'accounts': accounts,
            'users': len(org.users),
            'permission_sets': len(org.permission_sets),
            'resources': len(org.resources)
        }) + '\n')
    return CommandResult(stdout='valid: ' + str(accounts) + ' accounts, ' + str(len(org.users)) + ' users, ' +
                         str(len(org.permission_sets)) + ' permission sets, ' + str(len(org.resources)) +
                         ' resources\n')


def cmd_authorize(config: RunConfig) -> CommandResult:
    org = load_scenario(config.scenario)
    args = config.args
    request = AccessRequest(args.user, args.account, args.action, args.resource, parse_context_flags(args.context))
    decision = authorize(org, request)
    exit_code = EXIT_OK if decision.allowed else EXIT_DENY
    if config.output_format == FORMAT_JSON:
        return CommandResult(exit_code, json.dumps(decision_to_json(decision, args.explain)) + '\n')
    if args.explain:
        return CommandResult(exit_code, render_decision(decision))
    return CommandResult(exit_code, decision.verdict + ' (' + decision.reason + ')\n')


def cmd_simulate(config: RunConfig) -> CommandResult:
    org = load_scenario(config.scenario)
    args = config.args
    try:
        text = read_text_file(args.requests)
    except UndecodableFileError as e:
        raise InvalidRequestError(str(e)) from None
    requests = load_requests(text, args.requests)

    sink = ListSink() if args.emit_log is not None else None
    try:
        decisions = simulate(org, requests, sink, args.base_time, args.workers)
    except InvalidRequestError as e:
        if e.index is None:
            raise
        line_numbers = [n for n, line in enumerate(text.splitlines(), start=1) if line.strip() != '']
        raise InvalidRequestError(args.requests + ':' + str(line_numbers[e.index]) + ': ' + str(e)) from None

    output = ''.join(json.dumps(decision_to_json(d, args.trace)) + '\n' for d in decisions)
    result = CommandResult()
    if args.output is None:
        result.stdout = output
    else:
        result.files[args.output] = output
    if sink is not None:
        result.files[args.emit_log] = dumps_events(LogArchive(sink.events).events)
    result.stderr = _summary_line(decisions)
    return result


def _summary_line(decisions: list) -> str:
    allowed = sum(1 for d in decisions if d.allowed)
    return str(len(decisions)) + ' request(s): ' + str(allowed) + ' allowed, ' + \
        str(len(decisions) - allowed) + ' denied\n'


def cmd_analyze(config: RunConfig) -> CommandResult:
    org = load_scenario(config.scenario)
    args = config.args
    archive = read_archives(args.logs)
    index = build_usage_index(org, archive.events)
    verb_table = _verb_table(config)

    if config.subcommand == 'unused':
        rows = unused_report(index, org, parse_timestamp(args.as_of), args.threshold_days)
        return CommandResult(stdout=render_unused_report(rows, config.output_format))
    if config.subcommand == 'narrow':
        return CommandResult(stdout=render_narrowing_report(narrowing_report(index, org, verb_table),
                                                            config.output_format))

    generated = generate_least_privilege(index, org, parse_principal(args.principal), args.level, args.window,
                                         verb_table, config.seed, args.max_samples)
    return CommandResult(stdout=render_generated_policy(generated, config.output_format))


def cmd_audit(config: RunConfig) -> CommandResult:
    args = config.args
    archive = read_archives(args.logs)

    if config.subcommand == 'merge':
        output = path.join(args.output_dir, ARCHIVE_FILE_NAME)
        return CommandResult(files={output: dumps_events(archive.events)},
                             stderr='merged ' + str(len(archive)) + ' event(s) from ' +
                             str(len(archive.accounts_covered)) + ' account(s) into ' + output + '\n')

    if config.subcommand == 'split':
        files: Dict[str, str] = {}
        for source in sorted(archive.accounts_covered):
            events = [e for e in archive.events if e.source == source]
            files[path.join(args.output_dir, source + ACCOUNT_LOG_SUFFIX)] = dumps_events(events)
        return CommandResult(files=files)

    if config.subcommand == 'denied-summary':
        counts = denied_access_summary(archive, args.bucket)
        if config.output_format == FORMAT_JSON:
            return CommandResult(stdout=json.dumps([c.to_json() for c in counts], indent=2) + '\n')
        return CommandResult(stdout=''.join(format_timestamp(c.bucket_start) + '  ' + c.user + '@' + c.account +
                                            '  ' + str(c.count) + '\n' for c in counts))

    event_filter = EventFilter(args.user, args.account, args.action, args.kind, args.verdict, args.start, args.end)
    events = query(archive, event_filter)
    if config.output_format == FORMAT_JSON:
        return CommandResult(stdout=dumps_events(events))
    return CommandResult(stdout=''.join(
        format_timestamp(e.time) + '  ' + e.kind + '  ' + e.user + '@' + e.account + '  ' +
        (e.action + ' ' + e.resource + '  ' if e.action != '' else '') + e.verdict + '\n' for e in events))


def cmd_export(config: RunConfig) -> CommandResult:
    org: Organization = load_scenario(config.scenario)
    if config.args.what == EXPORT_SCENARIO:
        return CommandResult(stdout=dump_scenario(org) + '\n')
    return CommandResult(stdout=json.dumps(inventory_report(org), indent=2) + '\n')


def read_archives(log_paths: List[str]) -> LogArchive:
    archives = []
    for log_path in log_paths:
        archives.append(read_log(log_path))
    if len(archives) == 1:
        return archives[0]
    return merge_archives(archives)


def _verb_table(config: RunConfig) -> VerbTable:
    if config.verb_table is None:
        return VerbTable.default()
    return load_verb_table(config.verb_table)


COMMANDS = {
    'validate': cmd_validate,
    'authorize': cmd_authorize,
    'simulate': cmd_simulate,
    'analyze': cmd_analyze,
    'audit': cmd_audit,
    'export': cmd_export
}
