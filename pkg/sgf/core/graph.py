"""Folded, based core graphs in canonical form."""

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

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, List, Optional, Tuple

from .exceptions import InvalidInput

NO_EDGE = -1

Edge = Tuple[int, int, int]


@dataclass(frozen=True)
class StallingsGraph:
    """Stallings graph of a finitely generated subgroup of F_k.

    ``targets[g][v]`` is the head of the edge labelled by generator ``g + 1`` leaving
    ``v``, or ``NO_EDGE``. The base is vertex 0 and vertices are numbered canonically,
    so two graphs compare equal exactly when they describe the same subgroup.
    """

    rank_k: int
    num_vertices: int
    targets: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "targets", tuple(tuple(row) for row in self.targets))
        if self.num_vertices < 1:
            raise InvalidInput("A Stallings graph has at least the base vertex.")
        if len(self.targets) != self.rank_k:
            raise InvalidInput(f"Expected {self.rank_k} edge maps, got {len(self.targets)}.")
        for row in self.targets:
            if len(row) != self.num_vertices:
                raise InvalidInput("Edge map length does not match the vertex count.")
            heads = [head for head in row if head != NO_EDGE]
            if len(heads) != len(set(heads)):
                raise InvalidInput("Graph is not folded: two edges with one label share a head.")
            if any(not 0 <= head < self.num_vertices for head in heads):
                raise InvalidInput("Edge head outside the vertex range.")

    @property
    def base(self) -> int:
        """Base vertex, always 0."""
        return 0

    @cached_property
    def sources(self) -> Tuple[Tuple[int, ...], ...]:
        """``sources[g][w]`` is the tail of the ``g + 1`` edge entering ``w``, or ``NO_EDGE``."""
        rows = []
        for row in self.targets:
            inverse = [NO_EDGE] * self.num_vertices
            for tail, head in enumerate(row):
                if head != NO_EDGE:
                    inverse[head] = tail
            rows.append(tuple(inverse))
        return tuple(rows)

    def step(self, vertex: int, letter: int) -> int:
        """Vertex reached by reading ``letter`` from ``vertex``, or ``NO_EDGE``."""
        if letter > 0:
            return self.targets[letter - 1][vertex]
        return self.sources[-letter - 1][vertex]

    def trace(self, letters: Iterable[int], start: int = 0) -> Tuple[int, int]:
        """Read ``letters`` from ``start`` as far as the edges allow.

        Returns:
            Tuple[int, int]: The last vertex reached and the number of letters read.
        """
        vertex, consumed = start, 0
        for letter in letters:
            nxt = self.step(vertex, letter)
            if nxt == NO_EDGE:
                break
            vertex = nxt
            consumed += 1
        return vertex, consumed

    def read(self, letters: Iterable[int], start: int = 0) -> Optional[int]:
        """End vertex of the whole word, or None when the word leaves the graph."""
        letters = tuple(letters)
        vertex, consumed = self.trace(letters, start)
        return vertex if consumed == len(letters) else None

    def edges(self) -> List[Edge]:
        """Edges ``(tail, generator, head)`` with 1-based generators, ordered by tail then generator."""
        return [
            (tail, gen + 1, self.targets[gen][tail])
            for tail in range(self.num_vertices)
            for gen in range(self.rank_k)
            if self.targets[gen][tail] != NO_EDGE
        ]

    @property
    def num_edges(self) -> int:
        """Number of edges."""
        return sum(1 for row in self.targets for head in row if head != NO_EDGE)

    def degree(self, vertex: int) -> int:
        """Number of edge ends at ``vertex``; a loop counts twice."""
        return sum(
            (self.targets[gen][vertex] != NO_EDGE) + (self.sources[gen][vertex] != NO_EDGE)
            for gen in range(self.rank_k)
        )

    def is_cover(self) -> bool:
        """True when every vertex carries all ``2k`` edge ends."""
        return all(head != NO_EDGE for row in self.targets for head in row)

    def is_trivial(self) -> bool:
        """True for the graph of the trivial subgroup."""
        return self.num_vertices == 1 and self.num_edges == 0

    @classmethod
    def from_edges(cls, rank_k: int, num_vertices: int, edges: Iterable[Edge]) -> "StallingsGraph":
        """Assemble a graph whose vertices are already canonical."""
        rows = [[NO_EDGE] * num_vertices for _ in range(rank_k)]
        for tail, gen, head in edges:
            if not 1 <= gen <= rank_k:
                raise InvalidInput(f"Edge label {gen} outside 1..{rank_k}.")
            if not (0 <= tail < num_vertices and 0 <= head < num_vertices):
                raise InvalidInput(f"Edge ({tail}, {gen}, {head}) leaves the vertex range.")
            if rows[gen - 1][tail] != NO_EDGE:
                raise InvalidInput("Graph is not folded: two edges with one label share a tail.")
            rows[gen - 1][tail] = head
        return cls(rank_k=rank_k, num_vertices=num_vertices, targets=tuple(tuple(row) for row in rows))
