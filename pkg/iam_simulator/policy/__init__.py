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
from .action_pattern import ActionLevel, ActionPattern, ResourcePattern, parse_concrete_resource
from .levels import (
    VerbTable,
    GeneralizedAction,
    load_verb_table,
    parse_verb_table,
    classify_action_level,
    generalize_action,
    access_type_of
)
from .matching import action_matches, resource_matches, condition_holds
from .parser import parse_policy, policy_from_json, policy_to_json, serialize_policy
from .types import ConditionBlock, Statement, PolicyDocument
