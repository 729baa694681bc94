"""Artifact formats, task specifications and synthetic inputs."""

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

from .codec import (
    SCHEMA_VERSION,
    decode,
    decode_graph,
    decode_quotient,
    decode_subgroup,
    dumps,
    encode,
    encode_graph,
    encode_quotient,
    encode_report,
    encode_subgroup,
    encode_subgroup_summary,
    loads,
    parse_rank,
)
from .synthetic import random_cover, random_subgroup, random_word
from .task import COMMANDS, TaskSpec, parse_epsilon, parse_subgroup_arg

__all__ = [
    "COMMANDS",
    "SCHEMA_VERSION",
    "TaskSpec",
    "decode",
    "decode_graph",
    "decode_quotient",
    "decode_subgroup",
    "dumps",
    "encode",
    "encode_graph",
    "encode_quotient",
    "encode_report",
    "encode_subgroup",
    "encode_subgroup_summary",
    "loads",
    "parse_epsilon",
    "parse_rank",
    "parse_subgroup_arg",
    "random_cover",
    "random_subgroup",
    "random_word",
]
