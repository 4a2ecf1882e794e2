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
REASON_EXPLICIT_DENY = 'ExplicitDeny'
REASON_IMPLICIT_DENY = 'ImplicitDeny'
REASON_SAME_ACCOUNT_ALLOW = 'SameAccountAllow'
REASON_CROSS_ACCOUNT_ALLOW = 'CrossAccountAllow'

RULE_EXPLICIT_DENY = 'explicit-deny'
RULE_SAME_ACCOUNT = 'same-account'
RULE_CROSS_ACCOUNT = 'cross-account'

ORIGIN_IDENTITY = 'identity'
ORIGIN_RESOURCE = 'resource'

DEFAULT_SIMULATION_START = '2022-01-01T00:00:00Z'
