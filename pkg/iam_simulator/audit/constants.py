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
KIND_LOGIN = 'Login'
KIND_API_CALL = 'ApiCall'
EVENT_KINDS = (KIND_LOGIN, KIND_API_CALL)

ARCHIVE_FILE_NAME = 'archive.jsonl'
ACCOUNT_LOG_SUFFIX = '.jsonl'

EVENT_FIELDS = ('time', 'kind', 'user', 'account', 'action', 'resource', 'verdict', 'source')

DURATION_REGEX = r'^([1-9][0-9]*)([smhd])$'
DURATION_UNIT_SECONDS = {
    's': 1,
    'm': 60,
    'h': 3600,
    'd': 86400
}
