"""Utils for benchmarking and sweeps."""

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

from .config import apply_config_overrides, flatten_sweep_params, get_run_config, set_in_nested_config

__all__ = ["apply_config_overrides", "flatten_sweep_params", "get_run_config", "set_in_nested_config"]
