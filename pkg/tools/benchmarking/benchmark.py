"""Benchmark the certificate construction over random subgroup pairs."""

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
import multiprocessing
import random
import time
from argparse import ArgumentParser
from concurrent.futures import ProcessPoolExecutor, as_completed
from pathlib import Path
from typing import Dict, List, Union

from omegaconf import DictConfig, ListConfig, OmegaConf
from tqdm import tqdm
from utils import summarize, write_metrics

from sgf.config import get_configurable_parameters
from sgf.constructions import olshanskii, verify_olshanskii
from sgf.core import FreeGroupContext, SearchExhausted, rank
from sgf.data import random_subgroup
from sgf.utils.loggers import configure_logger
from sgf.utils.sweep import apply_config_overrides, get_run_config

logger = logging.getLogger(__name__)
configure_logger(level="WARNING")


def sweep(run_config: Union[DictConfig, ListConfig]) -> Dict[str, Union[float, int, str, bool]]:
    """Build and verify one certificate for the subgroups drawn from ``run_config``.

    Args:
        run_config (Union[DictConfig, ListConfig]): One flat point of the grid.

    Returns:
        Dict[str, Union[float, int, str, bool]]: Timings and sizes of the run.
    """
    config = apply_config_overrides(get_configurable_parameters(), run_config)
    ctx = FreeGroupContext.from_config(config, int(run_config.rank))
    rng = random.Random(int(run_config.seed))
    _, a = random_subgroup(rng, ctx, int(run_config.num_generators), int(run_config.max_length))
    _, b = random_subgroup(rng, ctx, int(run_config.num_generators), int(run_config.max_length))

    metrics: Dict[str, Union[float, int, str, bool]] = {
        key: run_config[key] for key in ("rank", "num_generators", "max_length", "seed")
    }
    metrics["max_candidates"] = int(config.search.max_candidates)
    metrics.update({"rank_a": rank(a), "rank_b": rank(b)})

    start_time = time.time()
    try:
        cert = olshanskii(a, b, ctx, seed=int(run_config.seed))
    except SearchExhausted:
        metrics.update(
            strategy="exhausted",
            construct_time=time.time() - start_time,
            verify_time=float("nan"),
            quotient_degree=float("nan"),
            index_b_b0=float("nan"),
            verified=False,
        )
        return metrics
    construct_time = time.time() - start_time

    start_time = time.time()
    report = verify_olshanskii(cert, ctx)
    metrics.update(
        strategy=cert.strategy,
        construct_time=construct_time,
        verify_time=time.time() - start_time,
        quotient_degree=cert.quotient.degree,
        index_b_b0=cert.index_b_b0,
        verified=report.ok,
    )
    return metrics


def compute(run_configs: List[DictConfig]) -> List[Dict[str, Union[float, int, str, bool]]]:
    """Run a split of the grid in one worker."""
    return [sweep(run_config) for run_config in run_configs]


def distribute(config: Union[DictConfig, ListConfig]) -> Path:
    """Split the grid over ``config.workers`` processes and append every row as it arrives.

    Args:
        config: (Union[DictConfig, ListConfig]): Sweep configuration.

    Returns:
        Path: The CSV file holding the rows.
    """
    run_configs = list(get_run_config(config.grid_search))
    workers = max(1, int(config.workers))
    splits = [run_configs[start::workers] for start in range(workers)]
    result_path = Path("runs") / f"{config.name}.csv"
    with ProcessPoolExecutor(max_workers=workers, mp_context=multiprocessing.get_context("spawn")) as executor:
        jobs = [executor.submit(compute, split) for split in splits if split]
        for job in tqdm(as_completed(jobs), total=len(jobs), desc="Benchmarking"):
            try:
                rows = job.result()
            except Exception as exception:
                raise Exception(f"Error occurred while computing benchmark split {job}") from exception
            for row in rows:
                result_path = write_metrics(row, config.name)
    return result_path


if __name__ == "__main__":
    parser = ArgumentParser()
    parser.add_argument("--config", type=Path, help="Path to sweep configuration")
    _args = parser.parse_args()

    _sweep_config = OmegaConf.load(_args.config)
    _result_path = distribute(_sweep_config)
    print(summarize(_result_path).to_string(index=False))
