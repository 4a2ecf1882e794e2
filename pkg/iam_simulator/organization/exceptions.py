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

from typing import List

from iam_simulator.exceptions import BadInputError


class ScenarioValidationError(BadInputError):
    def __init__(self, violations: List[str]):
        super().__init__(str(len(violations)) + ' scenario violation(s):\n' +
                         '\n'.join('  - ' + v for v in violations))
        self.violations = violations


class UnknownEntityError(BadInputError):
    pass


class UnknownOrgUnitError(UnknownEntityError):
    pass


class DuplicateAccountNameError(BadInputError):
    pass


class ResourceNotFoundError(UnknownEntityError):
    pass
