"""Console logging for the library and its scripts."""

# Copyright (C) 2026 sgf contributors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
# http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing,
# software distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions
# and limitations under the License.

import logging
from typing import Union

__all__ = ["UnknownLogLevel", "configure_logger"]

FORMAT_STRING = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


class UnknownLogLevel(Exception):
    """This is raised when the log level option is set incorrectly."""


def configure_logger(level: Union[int, str] = logging.INFO):
    """Configure the root console logger.

    Args:
        level (Union[int, str], optional): Logger Level. Defaults to logging.INFO.

    Raises:
        UnknownLogLevel: ``level`` is a string naming no known level.
    """
    if isinstance(level, str):
        resolved = logging.getLevelName(level.upper())
        if not isinstance(resolved, int):
            raise UnknownLogLevel(f"Unknown log level: {level}")
        level = resolved

    logging.basicConfig(format=FORMAT_STRING, level=level)
    logging.getLogger().setLevel(level)
    for handler in logging.getLogger().handlers:
        handler.setFormatter(logging.Formatter(FORMAT_STRING))
