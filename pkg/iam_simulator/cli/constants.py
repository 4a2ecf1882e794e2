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
PROG_NAME = 'iam-simulator'

EXIT_OK = 0
EXIT_DENY = 1
EXIT_BAD_INPUT = 2
EXIT_IO_ERROR = 3

FORMAT_JSON = 'json'
FORMAT_TEXT = 'text'
FORMATS = (FORMAT_TEXT, FORMAT_JSON)
DEFAULT_FORMAT = FORMAT_TEXT

EXPORT_SCENARIO = 'scenario'
EXPORT_INVENTORY = 'inventory'
