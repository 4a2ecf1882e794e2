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
VERSION = '0.1.0'
POLICY_VERSION = '2012-10-17'
DEFAULT_SEED = 20221017
DEFAULT_MAX_SAMPLES = 10000
TIMESTAMP_FORMAT = '%Y-%m-%dT%H:%M:%SZ'
DEBUG_ENV_VAR = 'IAM_SIMULATOR_DEBUG'
VERB_TABLE_ENV_VAR = 'IAM_SIMULATOR_VERB_TABLE'
LOGGER_NAMESPACE = 'com.iam_simulator'
VERDICT_ALLOW = 'Allow'
VERDICT_DENY = 'Deny'
VERDICTS = (VERDICT_ALLOW, VERDICT_DENY)
