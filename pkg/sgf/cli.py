"""Command line front end.

Example:
    sgf olshanskii --rank 2 --subgroup A=a --subgroup B=b --seed 7 --out cert.json
    sgf verify cert.json
    sgf dot --subgroup C=a,bb

Exit codes: 0 success, 1 invalid input, 2 construction failure, 3 verification failure.
"""

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
import sys
import time
from argparse import ArgumentParser, Namespace
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple

from sgf.config import get_configurable_parameters
from sgf.constructions import (
    bounded_base,
    kernel_ball_check,
    lemma_weak_ol,
    measure_product_bound,
    olshanskii,
    orbit_size,
    product_witness,
    verify_artifact,
)
from sgf.core import (
    FreeGroupContext,
    InvalidInput,
    SgfError,
    complete,
    intersect,
    join_all,
    parse_word,
)
from sgf.data import COMMANDS, TaskSpec, decode, dumps, encode, encode_report, encode_subgroup_summary, loads
from sgf.data.codec import SCHEMA_VERSION, encode_value, parse_rank
from sgf.data.task import parse_epsilon
from sgf.post_processing import emit_dot
from sgf.quotients import measure_subgroup, rank_gradient_estimate
from sgf.utils.loggers import UnknownLogLevel, configure_logger

logger = logging.getLogger("sgf")

EXIT_OK = 0
EXIT_INVALID_INPUT = 1
EXIT_CONSTRUCTION_FAILURE = 2
EXIT_VERIFICATION_FAILURE = 3


class _Parser(ArgumentParser):
    """Argument parser reporting bad flags as invalid input instead of exiting."""

    def error(self, message: str):
        raise InvalidInput(message, {"field": "arguments"})


def get_parser() -> ArgumentParser:
    """Parser of every command and flag."""
    parser = _Parser(prog="sgf", description="Subgroup joins, profinite measure and certificates on free groups.")
    parser.add_argument("command", type=str, choices=COMMANDS, help="Operation to run")
    parser.add_argument("certificate", type=str, nargs="?", help="Certificate file for verify")
    parser.add_argument("--task", type=str, required=False, help="JSON task file replacing the flags below")
    parser.add_argument("--rank", type=int, default=2, help="Rank k of the free group F_k")
    parser.add_argument("--subgroup", action="append", default=[], help="NAME=word,word,... (repeatable)")
    parser.add_argument("--epsilon", type=str, required=False, help="Exact fraction p/q")
    parser.add_argument("--target", type=int, required=False, help="Target index of a completion")
    parser.add_argument("--avoid", action="append", default=[], help="Word the construction must avoid (repeatable)")
    parser.add_argument("--seed", type=int, required=False, help="Seed; 0 is the canonical choice")
    parser.add_argument("--radius", type=int, required=False, help="Word length bound of kernel-check")
    parser.add_argument("--conjugators", type=int, required=False, help="Number of conjugates for kernel-check")
    parser.add_argument("--point", type=str, required=False, help="Word x naming the point R x for orbit")
    parser.add_argument("--out", type=str, required=False, help="Output path; stdout when omitted")
    parser.add_argument("--format", type=str, default="json", choices=("json", "dot"), help="Output format")
    parser.add_argument("--config", type=str, required=False, help="Path to a config file")
    parser.add_argument("--set", action="append", default=[], help="Config override key=value (repeatable)")
    parser.add_argument(
        "--log-level", type=str, default=None, help="<DEBUG, INFO, WARNING, ERROR>, defaults to logging.level"
    )
    return parser


def get_args(argv: Optional[Sequence[str]] = None) -> Namespace:
    """Get command line arguments.

    Returns:
        Namespace: List of arguments.
    """
    return get_parser().parse_args(argv)


def build_task(args: Namespace, default_seed: int) -> TaskSpec:
    """Task from a task file or from the flags."""
    if args.task is not None:
        spec = TaskSpec.from_json(Path(args.task).read_text(encoding="utf-8"))
        spec.parameters.setdefault("seed", default_seed)
        return spec
    parameters: Dict[str, Any] = {
        "seed": default_seed if args.seed is None else args.seed,
        "target": args.target,
        "epsilon": None if args.epsilon is None else parse_epsilon(args.epsilon),
        "avoid": [parse_word(word, args.rank) for word in args.avoid],
        "radius": args.radius,
        "conjugators": args.conjugators,
        "point": None if args.point is None else parse_word(args.point, args.rank),
        "certificate": args.certificate,
    }
    return TaskSpec.from_args(
        rank=args.rank,
        command=args.command,
        subgroups=args.subgroup,
        parameters=parameters,
        output_path=args.out,
        format=args.format,
    )


def _graph_output(spec: TaskSpec, graph, name: str, **parameters: Any) -> str:
    if spec.format == "dot":
        return emit_dot(graph, name)
    return dumps(encode_subgroup_summary(graph, name, **parameters))


def _envelope(kind: str, rank_k: int, **fields: Any) -> str:
    return dumps({"schema": SCHEMA_VERSION, "kind": kind, "rank": rank_k, **encode_value(fields)})


def _verify(spec: TaskSpec, config) -> Tuple[str, int]:
    path = Path(spec.parameters["certificate"])
    if not path.is_file():
        raise InvalidInput(f"Certificate {path} does not exist.", {"field": "certificate"})
    payload = loads(path.read_text(encoding="utf-8"))
    if not isinstance(payload, dict) or "rank" not in payload:
        raise InvalidInput("The certificate names no rank.", {"field": "rank"})
    ctx = FreeGroupContext.from_config(config, parse_rank(payload["rank"]))
    artifact = decode(payload, ctx)
    logger.info("Verifying a %s certificate", payload["kind"])
    report = verify_artifact(artifact, ctx)
    for check in report.failed:
        logger.warning("Check %s failed: %s %s %s %s", check.name, check.lhs, check.relation, check.rhs, check.note)
    code = EXIT_OK if report.ok else EXIT_VERIFICATION_FAILURE
    return dumps(encode_report(report, ctx.rank_k)), code


def run(spec: TaskSpec, config) -> Tuple[str, int]:
    """Execute a validated task.

    Returns:
        Tuple[str, int]: Output text and exit code.
    """
    if spec.command == "verify":
        return _verify(spec, config)

    ctx = FreeGroupContext.from_config(config, spec.rank)
    params = spec.parameters
    seed = int(params.get("seed") or 0)
    logger.info("Folding %d subgroups in F_%d", len(spec.subgroups), ctx.rank_k)
    named = spec.graphs(ctx)
    names: Tuple[str, ...] = tuple(name for name, _ in named)
    graphs: List = [graph for _, graph in named]
    command = spec.command

    if command == "info":
        summaries = [encode_subgroup_summary(graph, name) for name, graph in named]
        return _envelope("info", ctx.rank_k, subgroups=summaries), EXIT_OK
    if command == "intersect":
        result = graphs[0]
        for graph in graphs[1:]:
            result = intersect(result, graph)
        return _graph_output(spec, result, "∩".join(names), operation="intersect"), EXIT_OK
    if command == "join":
        return _graph_output(spec, join_all(graphs, ctx), "∨".join(names), operation="join"), EXIT_OK
    if command == "complete":
        avoid = params.get("avoid") or None
        cover = complete(graphs[0], int(params["target"]), ctx, avoid=avoid, seed=seed)
        return _graph_output(spec, cover, names[0], target=int(params["target"]), avoid=avoid or [], seed=seed), EXIT_OK
    if command == "dot":
        return emit_dot(graphs[0], names[0]), EXIT_OK
    if command == "measure":
        return dumps(encode(measure_subgroup(graphs[0], int(params["target"]), ctx, seed=seed, name=names[0]))), EXIT_OK
    if command == "measure-product":
        bound = measure_product_bound(graphs, params["epsilon"], ctx, seed=seed, names=names)
        return dumps(encode(bound)), EXIT_OK
    if command == "olshanskii":
        cert = olshanskii(graphs[0], graphs[1], ctx, seed=seed, avoid=params.get("avoid") or None, names=names)
        return dumps(encode(cert)), EXIT_OK
    if command == "lemma":
        return dumps(encode(lemma_weak_ol(graphs[0], graphs[1], ctx, seed=seed))), EXIT_OK
    if command == "product-witness":
        return dumps(encode(product_witness(graphs, ctx, seed=seed, names=names))), EXIT_OK
    if command == "base":
        return dumps(encode(bounded_base(graphs, ctx, seed=seed, names=names))), EXIT_OK
    if command == "kernel-check":
        report = kernel_ball_check(graphs[0], int(params["radius"]), int(params["conjugators"]), ctx, seed=seed)
        return dumps(encode(report)), EXIT_OK
    if command == "orbit":
        point = params["point"]
        size = orbit_size(graphs[0], graphs[1], point)
        return _envelope("orbit", ctx.rank_k, r=names[0], subgroup=names[1], point=str(point), size=size), EXIT_OK
    value = rank_gradient_estimate(graphs, ctx)
    return _envelope("gradient", ctx.rank_k, subgroups=list(names), value=value, expected=ctx.rank_gradient), EXIT_OK


def _output_path(path: Optional[Path], config) -> Optional[Path]:
    """Relative output paths are taken from ``project.path``."""
    if path is None or path.is_absolute():
        return path
    return Path(config.project.path) / path


def _write(text: str, output_path: Optional[Path]) -> None:
    if output_path is None:
        sys.stdout.write(text)
        return
    output_path.parent.mkdir(parents=True, exist_ok=True)
    output_path.write_text(text, encoding="utf-8")
    logger.info("Wrote %s", output_path)


def _load_config(args: Namespace):
    try:
        return get_configurable_parameters(config_path=args.config, overrides=args.set)
    except ValueError as error:
        raise InvalidInput(str(error), {"field": "config"}) from error


def _error_output(error: SgfError) -> str:
    return dumps(error.to_dict())


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Run the CLI and return its exit code."""
    start = time.time()
    try:
        args = get_args(argv)
        config = _load_config(args)
        try:
            configure_logger(level=args.log_level or config.logging.level)
        except UnknownLogLevel as error:
            raise InvalidInput(str(error), {"field": "log-level"}) from error
        spec = build_task(args, default_seed=int(config.project.seed))
        output_path = _output_path(spec.output_path, config)
        text, code = run(spec, config)
    except InvalidInput as error:
        logger.error("Invalid input: %s", error.message)
        sys.stdout.write(_error_output(error))
        return EXIT_INVALID_INPUT
    except SgfError as error:
        logger.error("Construction failed: %s", error.message)
        sys.stdout.write(_error_output(error))
        return EXIT_CONSTRUCTION_FAILURE

    _write(text, output_path)
    logger.info("Finished in %5.2f seconds", time.time() - start)
    return code


if __name__ == "__main__":
    sys.exit(main())
