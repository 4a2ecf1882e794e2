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

import argparse

from iam_simulator.audit.constants import EVENT_KINDS
from iam_simulator.constants import VERDICTS, VERSION
from iam_simulator.least_privilege.constants import GENERATION_LEVELS
from .constants import EXPORT_INVENTORY, EXPORT_SCENARIO, FORMATS, PROG_NAME


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog=PROG_NAME,
        description='Simulate authorization and audit activity in a multi-account organization.')
    p.add_argument('--version', action='version', version='%(prog)s ' + VERSION)
    p.add_argument('--scenario', dest='scenario', default=None,
                   help='organization scenario file (defaults to the bundled multi-account organization)')
    p.add_argument('--format', dest='format', choices=FORMATS, default=None, help='output format (default: text)')
    p.add_argument('--seed', dest='seed', type=int, default=None, help='seed for complement sampling')
    p.add_argument('--config', dest='config', default=None, help='YAML run-config file')
    p.add_argument('--verb-table', dest='verb_table', default=None, help='verb classification table (TSV)')
    p.add_argument('-v', '--verbose', dest='verbose', action='store_true', default=False,
                   help='log debug messages to stderr')
    commands = p.add_subparsers(dest='command', metavar='COMMAND')
    commands.required = True

    validate = commands.add_parser('validate', help='check a scenario file')
    validate.add_argument('scenario_path', nargs='?', default=None, metavar='SCENARIO')

    authorize = commands.add_parser('authorize', help='decide a single request')
    _add_request_flags(authorize)
    authorize.add_argument('--explain', action='store_true', default=False, help='print the full decision trace')

    simulate = commands.add_parser('simulate', help='decide a batch of requests')
    simulate.add_argument('--requests', required=True, help='JSON Lines file of requests')
    simulate.add_argument('--output', default=None, help='write decisions here instead of stdout')
    simulate.add_argument('--emit-log', dest='emit_log', default=None, help='write the audit events of the batch')
    simulate.add_argument('--trace', action='store_true', default=False, help='include traces in decisions')
    simulate.add_argument('--base-time', dest='base_time', default=None,
                          help='timestamp of the first request that carries no time of its own')
    simulate.add_argument('--workers', type=int, default=None, help='evaluate with this many threads')

    analyze = commands.add_parser('analyze', help='least-privilege analysis of an audit log')
    analyses = analyze.add_subparsers(dest='subcommand', metavar='ANALYSIS')
    analyses.required = True
    unused = analyses.add_parser('unused', help='statements not used within a threshold')
    _add_log_flag(unused)
    unused.add_argument('--as-of', dest='as_of', required=True, help='RFC 3339 timestamp')
    unused.add_argument('--threshold-days', dest='threshold_days', type=int, default=90)
    generate = analyses.add_parser('generate', help='generate a least-privilege policy')
    _add_log_flag(generate)
    generate.add_argument('--principal', required=True, help='USER@ACCOUNT')
    generate.add_argument('--level', type=int, choices=GENERATION_LEVELS, default=4)
    generate.add_argument('--window', default=None, help='START/END, both RFC 3339')
    generate.add_argument('--max-samples', dest='max_samples', type=int, default=None)
    narrow = analyses.add_parser('narrow', help='broad statements and the access types actually used')
    _add_log_flag(narrow)

    audit = commands.add_parser('audit', help='merge and query audit logs')
    audits = audit.add_subparsers(dest='subcommand', metavar='OPERATION')
    audits.required = True
    merge = audits.add_parser('merge', help='merge per-account logs into one archive')
    merge.add_argument('logs', nargs='+', metavar='LOG')
    merge.add_argument('--output-dir', dest='output_dir', default='.', help='directory receiving archive.jsonl')
    query = audits.add_parser('query', help='filter archived events')
    query.add_argument('logs', nargs='+', metavar='LOG')
    query.add_argument('--user', default=None)
    query.add_argument('--account', default=None)
    query.add_argument('--action', default=None, help='action pattern such as s3:Get* or *:Delete*')
    query.add_argument('--kind', choices=EVENT_KINDS, default=None)
    query.add_argument('--verdict', choices=VERDICTS, default=None)
    query.add_argument('--start', default=None, help='inclusive lower bound')
    query.add_argument('--end', default=None, help='exclusive upper bound')
    summary = audits.add_parser('denied-summary', help='denied requests per user, account and time bucket')
    summary.add_argument('logs', nargs='+', metavar='LOG')
    summary.add_argument('--bucket', default='1h', help='bucket width such as 30m, 1h or 1d')
    split = audits.add_parser('split', help='write one log per source account')
    split.add_argument('logs', nargs='+', metavar='LOG')
    split.add_argument('--output-dir', dest='output_dir', required=True)

    export = commands.add_parser('export', help='export the scenario or an account inventory')
    export.add_argument('--what', choices=(EXPORT_SCENARIO, EXPORT_INVENTORY), default=EXPORT_INVENTORY)
    return p


def _add_request_flags(parser: argparse.ArgumentParser):
    parser.add_argument('--user', required=True)
    parser.add_argument('--account', required=True)
    parser.add_argument('--action', required=True)
    parser.add_argument('--resource', required=True)
    parser.add_argument('--context', action='append', default=None, metavar='KEY=VALUE')


def _add_log_flag(parser: argparse.ArgumentParser):
    parser.add_argument('--log', dest='logs', action='append', required=True, metavar='LOG',
                        help='audit log (JSON Lines); repeat to merge several')
