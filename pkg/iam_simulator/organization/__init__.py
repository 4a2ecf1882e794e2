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
from .builder import build_org, load_scenario, parse_scenario, export_org, dump_scenario
from .organization import (
    Organization,
    resolve_ou_path,
    accounts_in_subtree,
    resolve_permission_sets,
    resolve_identity_policies,
    resource_lookup,
    shares_covering
)
from .report import inventory_report
from .types import Account, Assignment, OrgUnit, PermissionSet, Resource, ResourceShare, SsoGroup, SsoUser
from .updates import provision_account, add_permission_set, add_assignment, with_sole_permission_set
