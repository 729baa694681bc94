"""Get configurable parameters."""

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

import os
from pathlib import Path
from typing import Optional, Sequence, Union

from omegaconf import DictConfig, ListConfig, OmegaConf

CAPS_ENV = "SGF_CAPS"
DEFAULT_CONFIG_PATH = Path(__file__).parent / "config.yaml"


def update_caps_config(config: Union[DictConfig, ListConfig], caps_string: str) -> Union[DictConfig, ListConfig]:
    """Override the enumeration caps from a ``closure,productset,degree`` string.

    Args:
        config (Union[DictConfig, ListConfig]): Configurable parameters object.
        caps_string (str): Three comma separated positive integers.

    Raises:
        ValueError: The string does not hold three positive integers.

    Returns:
        Union[DictConfig, ListConfig]: Configurable parameters with updated caps.
    """
    parts = [part.strip() for part in caps_string.split(",")]
    if len(parts) != 3 or not all(part.isdigit() and int(part) > 0 for part in parts):
        raise ValueError(f"{CAPS_ENV} must be 'closure,productset,degree' with positive integers, got {caps_string!r}")
    config.caps.closure, config.caps.productset, config.caps.degree = (int(part) for part in parts)
    return config


def get_configurable_parameters(
    config_path: Optional[Union[Path, str]] = None,
    overrides: Optional[Sequence[str]] = None,
) -> Union[DictConfig, ListConfig]:
    """Get configurable parameters.

    Args:
        config_path (Optional[Union[Path, str]]): Path to a YAML file. Defaults to the packaged config.
        overrides (Optional[Sequence[str]]): Dotted ``key=value`` overrides, e.g. ``search.max_index=8``.

    Raises:
        ValueError: ``SGF_CAPS`` is malformed.

    Returns:
        Union[DictConfig, ListConfig]: Configurable parameters in DictConfig object.
    """
    config = OmegaConf.load(config_path or DEFAULT_CONFIG_PATH)
    if overrides:
        config = OmegaConf.merge(config, OmegaConf.from_dotlist(list(overrides)))

    caps_string = os.environ.get(CAPS_ENV)
    if caps_string:
        config = update_caps_config(config, caps_string)

    return config
