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

from dataclasses import dataclass
from typing import Tuple, Union

try:
    from typing import Literal
except ImportError:
    from typing_extensions import Literal

from iam_simulator.policy import PolicyDocument
from .constants import ACCOUNT_ID_REGEX, SUBJECT_TYPES

type_string = {
    'type': 'string',
    'minLength': 1
}

type_account_id = {
    'type': 'string',
    'pattern': ACCOUNT_ID_REGEX
}

SCENARIO_SCHEMA = {
    'type': 'object',
    'definitions': {
        'account': {
            'type': 'object',
            'properties': {
                'id': type_account_id,
                'name': type_string,
                'email': type_string
            },
            'required': ['id', 'name'],
            'additionalProperties': False
        },
        'ou': {
            'type': 'object',
            'properties': {
                'name': type_string,
                'accounts': {
                    'type': 'array',
                    'items': {'$ref': '#/definitions/account'}
                },
                'children': {
                    'type': 'array',
                    'items': {'$ref': '#/definitions/ou'}
                }
            },
            'required': ['name'],
            'additionalProperties': False
        }
    },
    'properties': {
        'organization': {
            'type': 'object',
            'properties': {
                'management_account': type_account_id,
                'root': {'$ref': '#/definitions/ou'}
            },
            'required': ['management_account', 'root'],
            'additionalProperties': False
        },
        'users': {
            'type': 'array',
            'items': {
                'type': 'object',
                'properties': {
                    'id': type_string,
                    'display_name': type_string,
                    'groups': {
                        'type': 'array',
                        'items': type_string
                    }
                },
                'required': ['id'],
                'additionalProperties': False
            }
        },
        'groups': {
            'type': 'array',
            'items': {
                'type': 'object',
                'properties': {
                    'id': type_string,
                    'display_name': type_string
                },
                'required': ['id'],
                'additionalProperties': False
            }
        },
        'permission_sets': {
            'type': 'array',
            'items': {
                'type': 'object',
                'properties': {
                    'id': type_string,
                    'description': {'type': 'string'},
                    'policies': {
                        'type': 'array',
                        'items': {
                            'type': 'object',
                            'properties': {
                                'name': type_string,
                                'document': {'type': 'object'}
                            },
                            'required': ['name', 'document'],
                            'additionalProperties': False
                        }
                    }
                },
                'required': ['id', 'policies'],
                'additionalProperties': False
            }
        },
        'assignments': {
            'type': 'array',
            'items': {
                'type': 'object',
                'properties': {
                    'subject': {
                        'type': 'object',
                        'properties': {
                            'type': {'enum': list(SUBJECT_TYPES)},
                            'id': type_string
                        },
                        'required': ['type', 'id'],
                        'additionalProperties': False
                    },
                    'account': type_account_id,
                    'permission_set': type_string
                },
                'required': ['subject', 'account', 'permission_set'],
                'additionalProperties': False
            }
        },
        'resources': {
            'type': 'array',
            'items': {
                'type': 'object',
                'properties': {
                    'arn': type_string,
                    'owner_account': type_account_id,
                    'policy': {'type': 'object'}
                },
                'required': ['arn', 'owner_account'],
                'additionalProperties': False
            }
        },
        'shares': {
            'type': 'array',
            'items': {
                'type': 'object',
                'properties': {
                    'resource': type_string,
                    'shared_with': {
                        'type': 'array',
                        'items': type_account_id,
                        'minItems': 1
                    }
                },
                'required': ['resource', 'shared_with'],
                'additionalProperties': False
            }
        }
    },
    'required': ['organization'],
    'additionalProperties': False
}


@dataclass(frozen=True)
class Account:
    id: str
    name: str
    email: Union[str, None] = None


@dataclass(frozen=True)
class OrgUnit:
    name: str
    children: Tuple[OrgUnit, ...] = ()
    accounts: Tuple[Account, ...] = ()

    def child(self, name: str) -> Union[OrgUnit, None]:
        for child in self.children:
            if child.name == name:
                return child
        return None


@dataclass(frozen=True)
class SsoUser:
    id: str
    display_name: str
    groups: Tuple[str, ...] = ()


@dataclass(frozen=True)
class SsoGroup:
    id: str
    display_name: str


@dataclass(frozen=True)
class PermissionSet:
    id: str
    policies: Tuple[PolicyDocument, ...] = ()
    description: str = ''


@dataclass(frozen=True)
class Assignment:
    subject_type: Literal['user', 'group']
    subject_id: str
    account: str
    permission_set: str

    def describe(self) -> str:
        return '(' + self.subject_type + ':' + self.subject_id + ', ' + self.account + ', ' + \
            self.permission_set + ')'


@dataclass(frozen=True)
class Resource:
    arn: str
    owner_account: str
    policy: Union[PolicyDocument, None] = None


@dataclass(frozen=True)
class ResourceShare:
    resource: str
    shared_with: Tuple[str, ...]
