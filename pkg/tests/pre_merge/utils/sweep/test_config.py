"""Tests of sweep grid expansion."""

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

from omegaconf import DictConfig, OmegaConf

from sgf.utils.sweep import apply_config_overrides, flatten_sweep_params, get_run_config, set_in_nested_config


def test_flatten_sweep_params():
    """Nested lists become dotted keys; scalars become single candidates."""
    params = OmegaConf.create({"group": {"rank": [2, 3], "seed": 0}, "epsilon": ["1/2", "1/4"]})
    assert flatten_sweep_params(params) == {
        "group.rank": [2, 3],
        "group.seed": [0],
        "epsilon": ["1/2", "1/4"],
    }


def test_get_run_config():
    """One run per point of the grid."""
    params = OmegaConf.create({"rank": [2, 3], "seed": [0, 1, 2]})
    runs = list(get_run_config(params))
    assert len(runs) == 6
    assert (runs[0].rank, runs[0].seed) == (2, 0)
    assert (runs[-1].rank, runs[-1].seed) == (3, 2)


def test_set_in_nested_config():
    """Dotted keys reach nested values."""
    config = DictConfig({"search": {"max_index": 6}})
    set_in_nested_config(config, "search.max_index", 4)
    set_in_nested_config(config, "caps.degree", 10)
    assert config.search.max_index == 4
    assert config.caps.degree == 10


def test_apply_config_overrides():
    """Grid keys under ``config.`` land in the configuration; other keys are left alone."""
    config = OmegaConf.create({"search": {"max_candidates": 400, "max_index": 6}})
    grid = OmegaConf.create({"seed": [1], "config": {"search": {"max_candidates": [2000]}}})
    run = next(get_run_config(grid))
    apply_config_overrides(config, run)
    assert config.search.max_candidates == 2000
    assert config.search.max_index == 6
    assert "seed" not in config
