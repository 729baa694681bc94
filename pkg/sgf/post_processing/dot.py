"""Graphviz export of Stallings graphs."""

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

from sgf.core.graph import StallingsGraph
from sgf.core.word import generator_name


def emit_dot(graph: StallingsGraph, name: str = "H") -> str:
    """Deterministic DOT text of a Stallings graph.

    Vertices are ``v0 .. v{n-1}`` in canonical order, the base ``v0`` is double-circled
    and every edge is labelled by its generator letter. Equal subgroups give equal bytes.

    Example:
        >>> print(emit_dot(from_generators([parse_word("a")], FreeGroupContext(rank_k=2)), "A"), end="")
        digraph "A" {
          rankdir=LR;
          node [shape=circle];
          v0 [shape=doublecircle];
          v0 -> v0 [label="a"];
        }
    """
    lines = [f'digraph "{name}" {{', "  rankdir=LR;", "  node [shape=circle];"]
    for vertex in range(graph.num_vertices):
        shape = " [shape=doublecircle]" if vertex == graph.base else ""
        lines.append(f"  v{vertex}{shape};")
    for tail, gen, head in graph.edges():
        lines.append(f'  v{tail} -> v{head} [label="{generator_name(gen)}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
