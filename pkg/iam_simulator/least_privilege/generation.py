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
from random import Random
from typing import Dict, List, Sequence, Set, Tuple, Union

from iam_simulator.constants import DEFAULT_MAX_SAMPLES, DEFAULT_SEED, VERDICT_ALLOW
from iam_simulator.evaluation import AccessRequest, authorize
from iam_simulator.exceptions import raise_bad_input_exception
from iam_simulator.logger import log_debug_message
from iam_simulator.organization import Organization, PermissionSet, with_sole_permission_set
from iam_simulator.policy import (
    ActionLevel,
    ActionPattern,
    PolicyDocument,
    ResourcePattern,
    Statement,
    VerbTable,
    generalize_action,
    policy_to_json,
    serialize_policy
)
from iam_simulator.policy.constants import EFFECT_ALLOW
from iam_simulator.utils import format_timestamp
from .constants import BASELINE_PERMISSION_SET_ID, REPORT_FORMATS
from .exceptions import NoObservationsError
from .types import GeneratedPolicy, Observation, Principal, ReplayResult, UsageIndex
from .utils import validate_and_normalise_user_input


def generate_least_privilege(index: UsageIndex, org: Organization, principal: Principal, level: int,
                             window: Union[str, Tuple, None] = None,
                             verb_table: Union[VerbTable, None] = None,
                             seed: Union[int, None] = None,
                             max_samples: Union[int, None] = None) -> GeneratedPolicy:
    """Builds an identity policy granting exactly what principal was observed doing.

    Level 4 keeps the observed resources per action; levels 2 and 3 grant on "*".
    The result is replayed against a what-if copy of org in which the policy is the
    principal's only permission set.
    """
    config = validate_and_normalise_user_input(level, window, verb_table, seed, max_samples)
    observations = index.observations_of(principal, config.window)
    if len(observations) == 0:
        raise NoObservationsError('no allowed activity observed for ' + principal[0] + '@' + principal[1] +
                                  ('' if config.window is None else ' in the requested window'))

    groups: Dict[ActionPattern, Set[str]] = {}
    fallbacks: Set[str] = set()
    for observation in observations:
        generalized = generalize_action(observation.action, config.level, config.verb_table)
        if generalized.fallback:
            fallbacks.add(observation.action)
        groups.setdefault(generalized.pattern, set()).add(observation.resource)

    statements = []
    for pattern in sorted(groups.keys(), key=str):
        if config.level == ActionLevel.ACTION:
            resources = tuple(ResourcePattern(r) for r in sorted(groups[pattern]))
        else:
            resources = (ResourcePattern('*'),)
        statements.append(Statement(EFFECT_ALLOW, (pattern,), resources))

    name = 'least-privilege-level-' + str(int(config.level))
    document = PolicyDocument(tuple(statements), name=name)
    window_used = config.window
    if window_used is None:
        window_used = (observations[0].time, observations[-1].time)
    generated = GeneratedPolicy(document, config.level, principal, window_used, False, fallbacks=sorted(fallbacks))

    sample = complement_sample(index, org, [o.pair() for o in observations], config.seed, config.max_samples)
    result = replay_verify(install_generated_policy(org, generated), principal, observations, sample,
                           baseline=_install_baseline(org, principal))
    generated.verification = result
    generated.verified = result.coverage == 1.0 and (config.level != ActionLevel.ACTION or result.excess == 0.0)
    log_debug_message('generated level-' + str(int(config.level)) + ' policy for ' + principal[0] + '@' +
                      principal[1] + ' with ' + str(len(statements)) + ' statement(s); coverage ' +
                      str(result.coverage) + ', excess ' + str(result.excess))
    return generated


def install_generated_policy(org: Organization, generated: GeneratedPolicy) -> Organization:
    user, account = generated.principal
    permission_set = PermissionSet(generated.permission_set_id, (generated.document,),
                                   'generated from activity between ' + format_timestamp(generated.window[0]) +
                                   ' and ' + format_timestamp(generated.window[1]))
    return with_sole_permission_set(org, user, account, permission_set)


def _install_baseline(org: Organization, principal: Principal) -> Organization:
    return with_sole_permission_set(org, principal[0], principal[1], PermissionSet(BASELINE_PERMISSION_SET_ID))


def complement_sample(index: UsageIndex, org: Organization, observed: Sequence[Tuple[str, str]],
                      seed: int = DEFAULT_SEED, cap: int = DEFAULT_MAX_SAMPLES) -> List[Tuple[str, str]]:
    """Unobserved (action, resource) pairs drawn from actions seen in the log x registered resources.

    The whole complement is returned when it fits under cap; otherwise a seeded uniform
    sample of size cap, in ascending order.
    """
    actions = sorted(index.actions_seen)
    resources = sorted(r.arn for r in org.resources)
    known_actions, known_resources = set(actions), set(resources)
    excluded = {p for p in observed if p[0] in known_actions and p[1] in known_resources}
    total = len(actions) * len(resources)

    def pair_at(i: int) -> Tuple[str, str]:
        return actions[i // len(resources)], resources[i % len(resources)]

    if total - len(excluded) <= cap:
        return [pair_at(i) for i in range(total) if pair_at(i) not in excluded]

    picked = Random(seed).sample(range(total), min(total, cap + len(excluded)))
    sample = [pair_at(i) for i in picked if pair_at(i) not in excluded][:cap]
    return sorted(sample)


def replay_verify(org: Organization, principal: Principal, observations: Sequence[Observation],
                  sample: Sequence[Tuple[str, str]], baseline: Union[Organization, None] = None) -> ReplayResult:
    """Re-authorizes observed activity and sampled unobserved pairs against org.

    A sampled pair counts as excess when org allows it and baseline (if given) does not,
    so grants that stem from resource policies alone are not charged to the identity policy.
    """
    user, account = principal

    def allowed(target: Organization, action: str, resource: str) -> bool:
        return authorize(target, AccessRequest(user, account, action, resource)).verdict == VERDICT_ALLOW

    covered = sum(1 for o in observations if allowed(org, o.action, o.resource))
    excess_allowed = 0
    for action, resource in sample:
        if allowed(org, action, resource) and (baseline is None or not allowed(baseline, action, resource)):
            excess_allowed += 1
    return ReplayResult(len(observations), covered, len(sample), excess_allowed)


def render_generated_policy(generated: GeneratedPolicy, fmt: str = 'text') -> str:
    if fmt not in REPORT_FORMATS:
        raise_bad_input_exception('format must be one of ' + ', '.join(REPORT_FORMATS))
    verification = generated.verification
    if fmt == 'json':
        return json.dumps({
            'principal': generated.principal[0] + '@' + generated.principal[1],
            'level': int(generated.level),
            'window': [format_timestamp(generated.window[0]), format_timestamp(generated.window[1])],
            'policy': policy_to_json(generated.document),
            'verified': generated.verified,
            'verification': None if verification is None else verification.to_json(),
            'fallbacks': generated.fallbacks
        }, indent=2) + '\n'

    lines = [serialize_policy(generated.document, indent=2), '']
    lines.append('# principal: ' + generated.principal[0] + '@' + generated.principal[1])
    lines.append('# level:     ' + str(int(generated.level)))
    lines.append('# window:    ' + format_timestamp(generated.window[0]) + '/' + format_timestamp(generated.window[1]))
    if verification is not None:
        lines.append('# coverage:  ' + '{:.4f}'.format(verification.coverage) +
                     ' (' + str(verification.covered) + '/' + str(verification.observed) + ')')
        lines.append('# excess:    ' + '{:.4f}'.format(verification.excess) +
                     ' (' + str(verification.excess_allowed) + '/' + str(verification.sampled) + ' sampled)')
    lines.append('# verified:  ' + ('yes' if generated.verified else 'no'))
    if len(generated.fallbacks) != 0:
        lines.append('# kept at level 4 (verb not in table): ' + ', '.join(generated.fallbacks))
    return '\n'.join(lines) + '\n'
