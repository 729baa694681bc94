"""Test benchmarking script on a small grid."""

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

import sys
from pathlib import Path

# Since tools is not part of the sgf package, accessing benchmarking requires importlib
sys.path.append(str(Path("tools/benchmarking").resolve()))
from importlib.util import find_spec

if find_spec("benchmark") is not None:
    from benchmark import distribute
else:
    raise Exception("Unable to import benchmarking script for testing")

import pandas as pd
from omegaconf import OmegaConf

from utils import summarize


def test_benchmarking(tmp_path, monkeypatch):
    """Every point of the grid gets a row and every certificate verifies."""
    config = OmegaConf.load("tests/nightly/tools/benchmarking/benchmark_params.yaml")
    monkeypatch.chdir(tmp_path)

    result_path = distribute(config)

    table = pd.read_csv(result_path)
    assert len(table) == 4
    assert set(table["rank"]) == {2, 3}
    assert table.loc[table["strategy"] != "exhausted", "verified"].all()
    assert set(summarize(result_path).columns) >= {"rank", "strategy", "runs", "verified"}
