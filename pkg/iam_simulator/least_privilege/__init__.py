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
from .generation import (
    generate_least_privilege,
    install_generated_policy,
    complement_sample,
    replay_verify,
    render_generated_policy
)
from .reports import unused_report, narrowing_report, render_unused_report, render_narrowing_report
from .types import GeneratedPolicy, NarrowingSuggestion, Observation, ReplayResult, UnusedStatement, UsageIndex
from .usage import build_usage_index
