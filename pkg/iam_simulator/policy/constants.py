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
EFFECT_ALLOW = 'Allow'
EFFECT_DENY = 'Deny'
EFFECTS = (EFFECT_ALLOW, EFFECT_DENY)

CONDITION_STRING_EQUALS = 'StringEquals'
CONDITION_STRING_LIKE = 'StringLike'
CONDITION_OPERATORS = (CONDITION_STRING_EQUALS, CONDITION_STRING_LIKE)

UNSUPPORTED_STATEMENT_FIELDS = ('NotAction', 'NotResource', 'NotPrincipal')

POLICY_KIND_IDENTITY = 'identity'
POLICY_KIND_RESOURCE = 'resource'

ACCESS_READ = 'read'
ACCESS_WRITE = 'write'

SERVICE_REGEX = r'[a-z0-9][a-z0-9-]*'
OPERATION_PATTERN_REGEX = r'[A-Za-z0-9]*\*?'
CONCRETE_OPERATION_REGEX = r'[A-Za-z][A-Za-z0-9]*'
VERB_REGEX = r'[A-Z][A-Za-z0-9]*'

DEFAULT_VERB_TABLE_FILE = 'verbs.tsv'
