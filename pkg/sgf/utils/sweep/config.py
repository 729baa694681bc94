"""Grid expansion of benchmark parameters."""

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

import itertools
from typing import Any, Dict, Iterator, List

from omegaconf import DictConfig, ListConfig, OmegaConf


def flatten_sweep_params(params: DictConfig, prefix: str = "") -> Dict[str, List[Any]]:
    """Dotted keys mapped to their candidate values.

    A scalar leaf is treated as a single candidate.

    Example:
        >>> flatten_sweep_params(DictConfig({"group": {"rank": [2, 3]}, "seed": 1}))
        {'group.rank': [2, 3], 'seed': [1]}
    """
    flat: Dict[str, List[Any]] = {}
    for name, value in params.items():
        key = f"{prefix}{name}"
        if isinstance(value, DictConfig):
            flat.update(flatten_sweep_params(value, prefix=f"{key}."))
        elif isinstance(value, ListConfig):
            flat[key] = list(OmegaConf.to_container(value))
        else:
            flat[key] = [value]
    return flat


def get_run_config(params: DictConfig) -> Iterator[DictConfig]:
    """Yield one flat configuration per point of the cartesian grid.

    Example:
        >>> grid = DictConfig({"group": {"rank": [2, 3]}, "seed": [0, 1]})
        >>> [dict(run) for run in get_run_config(grid)][:2]
        [{'group.rank': 2, 'seed': 0}, {'group.rank': 2, 'seed': 1}]
    """
    flat = flatten_sweep_params(params)
    keys = list(flat)
    for combination in itertools.product(*flat.values()):
        yield DictConfig(dict(zip(keys, combination)))


def set_in_nested_config(config: DictConfig, dotted_key: str, value: Any) -> None:
    """Assign ``value`` at a dotted key of a nested configuration."""
    OmegaConf.update(config, dotted_key, value, merge=False)


def apply_config_overrides(config: DictConfig, run_config: DictConfig, prefix: str = "config.") -> DictConfig:
    """Copy the ``prefix``-ed keys of a grid point into the configuration.

    Example:
        >>> config = DictConfig({"search": {"max_index": 6}})
        >>> apply_config_overrides(config, DictConfig({"config.search.max_index": 4, "seed": 1})).search.max_index
        4
    """
    for key, value in run_config.items():
        if str(key).startswith(prefix):
            set_in_nested_config(config, str(key)[len(prefix) :], value)
    return config
