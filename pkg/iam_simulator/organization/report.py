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
from __future__ import annotations

from .constants import SUBJECT_GROUP
from .organization import Organization


def inventory_report(org: Organization) -> dict:
    accounts = []
    for account_id in org.account_ids():
        account = org.account(account_id)
        grants = []
        for assignment in org.assignments:
            if assignment.account != account_id:
                continue
            members = [assignment.subject_id]
            if assignment.subject_type == SUBJECT_GROUP:
                members = [u.id for u in org.users if assignment.subject_id in u.groups]
            grants.append({
                'permission_set': assignment.permission_set,
                'subject': {'type': assignment.subject_type, 'id': assignment.subject_id},
                'users': members
            })
        accounts.append({
            'id': account.id,
            'name': account.name,
            'ou': org.ou_path_of(account_id),
            'management': account_id == org.management_account,
            'grants': grants,
            'owned_resources': [r.arn for r in org.resources if r.owner_account == account_id]
        })
    return {
        'management_account': org.management_account,
        'accounts': accounts,
        'permission_sets': [{
            'id': p.id,
            'description': p.description,
            'policies': [d.name for d in p.policies]
        } for p in org.permission_sets],
        'shares': [{'resource': s.resource, 'shared_with': list(s.shared_with)} for s in org.shares]
    }
