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
from . import exceptions
from . import policy, organization, audit, evaluation, least_privilege
from .constants import VERSION
from .organization import Organization, load_scenario, parse_scenario, build_org
from .evaluation import AccessRequest, Decision, authorize, simulate, explain
from .least_privilege import build_usage_index, unused_report, generate_least_privilege
from .audit import LogArchive, read_log, write_log, merge_archives, query
from .logger import enable_debug_logging, disable_debug_logging

__version__ = VERSION
