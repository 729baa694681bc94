"""Methods to store and summarize benchmark rows."""

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

from pathlib import Path
from typing import Dict, Union

import pandas as pd


def write_metrics(run_metrics: Dict[str, Union[str, float, int, bool]], name: str, root: str = "runs") -> Path:
    """Append one row to ``<root>/<name>.csv``, writing the header on first use.

    Args:
        run_metrics (Dict): Row to be written.
        name (str): Name of the sweep.
        root (str): Output directory.

    Returns:
        Path: The CSV file.
    """
    result_path = Path(root) / f"{name}.csv"
    if not run_metrics:
        return result_path

    metrics_df = pd.DataFrame(run_metrics, index=[0])
    result_path.parent.mkdir(parents=True, exist_ok=True)
    if not result_path.is_file():
        metrics_df.to_csv(result_path, index=False)
    else:
        metrics_df.to_csv(result_path, mode="a", header=False, index=False)
    return result_path


def summarize(result_path: Path) -> pd.DataFrame:
    """Success rate, verification rate and mean timings per candidate budget, rank and strategy."""
    table = pd.read_csv(result_path)
    grouped = table.groupby(["max_candidates", "rank", "strategy"], dropna=False)
    return grouped.agg(
        runs=("seed", "count"),
        verified=("verified", "mean"),
        construct_time=("construct_time", "mean"),
        verify_time=("verify_time", "mean"),
        quotient_degree=("quotient_degree", "mean"),
    ).reset_index()
