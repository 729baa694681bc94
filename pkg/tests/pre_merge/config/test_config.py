"""Test Config Getter."""

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

import pytest
from omegaconf import OmegaConf

from sgf.config import CAPS_ENV, get_configurable_parameters, update_caps_config
from sgf.core import Caps, FreeGroupContext, SearchLimits


class TestConfig:
    """Test Config Getter."""

    def test_defaults_match_the_context(self, monkeypatch):
        """The packaged config gives the default caps and budgets."""
        monkeypatch.delenv(CAPS_ENV, raising=False)
        config = get_configurable_parameters()
        ctx = FreeGroupContext.from_config(config, 2)
        assert ctx.caps == Caps()
        assert ctx.search == SearchLimits()
        assert config.project.seed == 0

    def test_overrides(self, monkeypatch):
        """Dotted overrides replace single values."""
        monkeypatch.delenv(CAPS_ENV, raising=False)
        config = get_configurable_parameters(overrides=["search.max_index=4", "project.seed=9"])
        assert config.search.max_index == 4
        assert config.project.seed == 9
        assert FreeGroupContext.from_config(config, 3).search.max_index == 4

    def test_config_file(self, tmp_path, monkeypatch):
        """A YAML file replaces the packaged config."""
        monkeypatch.delenv(CAPS_ENV, raising=False)
        path = tmp_path / "config.yaml"
        config = get_configurable_parameters()
        config.caps.degree = 77
        OmegaConf.save(config, path)
        assert get_configurable_parameters(config_path=path).caps.degree == 77

    def test_caps_environment(self, monkeypatch):
        """SGF_CAPS sets closure, product-set and degree caps."""
        monkeypatch.setenv(CAPS_ENV, "10,20,30")
        config = get_configurable_parameters()
        assert FreeGroupContext.from_config(config, 2).caps == Caps(closure=10, productset=20, degree=30)

    @pytest.mark.parametrize("caps_string", ["10,20", "10,x,30", "0,1,1", "-1,2,3"])
    def test_malformed_caps(self, caps_string):
        """Malformed cap strings raise."""
        with pytest.raises(ValueError):
            update_caps_config(get_configurable_parameters(), caps_string)
