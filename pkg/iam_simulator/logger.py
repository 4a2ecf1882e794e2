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
import logging
from datetime import datetime, timezone
from os import getenv, path
import inspect

from .constants import DEBUG_ENV_VAR, LOGGER_NAMESPACE, VERSION

_logger = logging.getLogger(LOGGER_NAMESPACE)
_logger.addHandler(logging.NullHandler())


class _DebugFormatter(logging.Formatter):
    def format(self, record: logging.LogRecord) -> str:
        now = datetime.now(timezone.utc).isoformat()
        file_info = getattr(record, 'file_info', '')
        return '{} {} {{t: "{}", message: "{}", file: "{}", sdk_ver: "{}"}}'.format(
            LOGGER_NAMESPACE, record.levelname, now, record.getMessage(), file_info, VERSION)


_handler = logging.StreamHandler()
_handler.setFormatter(_DebugFormatter())


def enable_debug_logging():
    _logger.setLevel(logging.DEBUG)
    if _handler not in _logger.handlers:
        _logger.addHandler(_handler)


def disable_debug_logging():
    _logger.setLevel(logging.WARNING)
    if _handler in _logger.handlers:
        _logger.removeHandler(_handler)


def _caller_file_info() -> str:
    frame = inspect.stack()[2]
    return '{}:{}'.format(path.basename(frame.filename), frame.lineno)


def log_debug_message(message: str):
    if _logger.isEnabledFor(logging.DEBUG):
        _logger.debug(message, extra={'file_info': _caller_file_info()})


def log_warning_message(message: str):
    _logger.warning(message, extra={'file_info': _caller_file_info()})


if getenv(DEBUG_ENV_VAR, '').lower() in ('1', 'true'):
    enable_debug_logging()
