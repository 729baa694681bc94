"""Task specifications for the command line: subgroup flags, exact epsilons and JSON task files."""

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

import re
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple

from sgf.core.context import FreeGroupContext
from sgf.core.exceptions import InvalidInput
from sgf.core.graph import StallingsGraph
from sgf.core.subgroup import from_generators
from sgf.core.word import Word, parse_word

from .codec import loads, parse_rank

COMMANDS = (
    "info",
    "intersect",
    "join",
    "complete",
    "measure",
    "measure-product",
    "olshanskii",
    "lemma",
    "product-witness",
    "base",
    "kernel-check",
    "verify",
    "dot",
    "orbit",
    "gradient",
)

# (fewest subgroups, most subgroups or None, required parameters)
REQUIREMENTS: Dict[str, Tuple[int, Optional[int], Tuple[str, ...]]] = {
    "info": (1, None, ()),
    "intersect": (2, None, ()),
    "join": (2, None, ()),
    "complete": (1, 1, ("target",)),
    "measure": (1, 1, ("target",)),
    "measure-product": (1, None, ("epsilon",)),
    "olshanskii": (2, 2, ()),
    "lemma": (2, 2, ()),
    "product-witness": (1, None, ()),
    "base": (1, None, ()),
    "kernel-check": (1, 1, ("radius", "conjugators")),
    "verify": (0, 0, ("certificate",)),
    "dot": (1, 1, ()),
    "orbit": (2, 2, ("point",)),
    "gradient": (1, None, ()),
}

_FRACTION = re.compile(r"^\s*(-?\d+)\s*/\s*(\d+)\s*$")
_NAME = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")


def parse_epsilon(text: str) -> Fraction:
    """Exact rational from ``"p/q"``; decimals are rejected.

    Example:
        >>> parse_epsilon("1/64")
        Fraction(1, 64)

    Raises:
        InvalidInput: The text is not ``p/q`` with ``0 < p/q <= 1``.
    """
    match = _FRACTION.match(str(text))
    if match is None:
        raise InvalidInput(f"Epsilon must be an exact fraction 'p/q', got {text!r}.", {"field": "epsilon"})
    numerator, denominator = int(match.group(1)), int(match.group(2))
    if denominator == 0:
        raise InvalidInput("Epsilon has a zero denominator.", {"field": "epsilon"})
    value = Fraction(numerator, denominator)
    if not 0 < value <= 1:
        raise InvalidInput(f"Epsilon must lie in (0, 1], got {value}.", {"field": "epsilon"})
    return value

def parse_subgroup_arg(text: str, rank_k: int) -> Tuple[str, List[Word]]:
    """``NAME=word,word,...`` into a name and its generators; ``NAME=`` is the trivial subgroup."""
    name, separator, words = text.partition("=")
    name = name.strip()
    if not separator or not _NAME.match(name):
        raise InvalidInput(f"Subgroups are given as NAME=word,word,... got {text!r}.", {"field": "subgroup"})
    generators = [parse_word(word, rank_k) for word in words.split(",") if word.strip()]
    return name, generators


@dataclass
class TaskSpec:
    """One command with its subgroups and parameters."""

    rank: int
    command: str
    subgroups: Dict[str, List[Word]] = field(default_factory=dict)
    parameters: Dict[str, Any] = field(default_factory=dict)
    output_path: Optional[Path] = None
    format: str = "json"

    def validate(self) -> "TaskSpec":
        """Check the command and the completeness of its parameters before any computation.

        Raises:
            InvalidInput: Naming the offending field.
        """
        if self.command not in COMMANDS:
            raise InvalidInput(f"Unknown command {self.command!r}.", {"field": "command"})
        FreeGroupContext(rank_k=self.rank)
        fewest, most, required = REQUIREMENTS[self.command]
        count = len(self.subgroups)
        if count < fewest or (most is not None and count > most):
            expected = f"{fewest}" if fewest == most else f"at least {fewest}" if most is None else f"{fewest}..{most}"
            raise InvalidInput(
                f"Command {self.command!r} needs {expected} subgroups, got {count}.", {"field": "subgroup"}
            )
        for name in required:
            if self.parameters.get(name) is None:
                raise InvalidInput(f"Command {self.command!r} needs --{name}.", {"field": name})
        if self.format not in ("json", "dot"):
            raise InvalidInput(f"Unknown format {self.format!r}.", {"field": "format"})
        for name, words in self.subgroups.items():
            for word in words:
                word.check_alphabet(self.rank)
        return self

    def graphs(self, ctx: FreeGroupContext) -> List[Tuple[str, StallingsGraph]]:
        """Folded subgroups in the order they were given."""
        return [(name, from_generators(words, ctx)) for name, words in self.subgroups.items()]

    @classmethod
    def from_args(
        cls,
        rank: int,
        command: str,
        subgroups: Sequence[str],
        parameters: Dict[str, Any],
        output_path: Optional[str] = None,
        format: str = "json",  # pylint: disable=redefined-builtin
    ) -> "TaskSpec":
        """Task from command-line flags."""
        parsed: Dict[str, List[Word]] = {}
        for text in subgroups:
            name, words = parse_subgroup_arg(text, rank)
            if name in parsed:
                raise InvalidInput(f"Subgroup {name!r} is given twice.", {"field": "subgroup"})
            parsed[name] = words
        return cls(
            rank=rank,
            command=command,
            subgroups=parsed,
            parameters=dict(parameters),
            output_path=None if output_path is None else Path(output_path),
            format=format,
        ).validate()

    @classmethod
    def from_json(cls, text: str) -> "TaskSpec":
        """Task from a JSON task file.

        Example:
            ``{"rank": 2, "command": "olshanskii", "subgroups": {"A": ["a"], "B": ["b"]}, "parameters": {"seed": 7}}``
        """
        payload = loads(text)
        if not isinstance(payload, dict):
            raise InvalidInput("A task file holds a JSON object.")
        for key in ("rank", "command"):
            if key not in payload:
                raise InvalidInput(f"Task file lacks {key!r}.", {"field": key})
        rank = parse_rank(payload["rank"])
        subgroups = {
            str(name): [parse_word(word, rank) for word in words]
            for name, words in payload.get("subgroups", {}).items()
        }
        parameters = dict(payload.get("parameters", {}))
        if "epsilon" in parameters and parameters["epsilon"] is not None:
            parameters["epsilon"] = parse_epsilon(parameters["epsilon"])
        if parameters.get("point") is not None:
            parameters["point"] = parse_word(parameters["point"], rank)
        parameters["avoid"] = [parse_word(word, rank) for word in parameters.get("avoid") or []]
        output = payload.get("output_path")
        return cls(
            rank=rank,
            command=str(payload["command"]),
            subgroups=subgroups,
            parameters=parameters,
            output_path=None if output is None else Path(output),
            format=str(payload.get("format", "json")),
        ).validate()
