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
from os import path

BUNDLED_SCENARIO_FILE = 'multi-account-org.json'
CROSS_ACCOUNT_SCENARIO_FILE = 'cross-account-bucket.json'


def data_file_path(name: str) -> str:
    return path.join(path.abspath(path.dirname(__file__)), name)


def bundled_scenario_path() -> str:
    return data_file_path(BUNDLED_SCENARIO_FILE)


def cross_account_scenario_path() -> str:
    return data_file_path(CROSS_ACCOUNT_SCENARIO_FILE)
