"""Finite-index completion of a core graph (Marshall Hall).

The edge map of every generator on a core graph is a partial injection. Padding the
graph with fresh vertices and closing each partial injection to a permutation turns it
into a finite cover, that is, a finite-index subgroup containing the input.
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
import random
from typing import List, Optional, Sequence, Union

from .context import FreeGroupContext
from .exceptions import AlreadySmaller, AvoidInSubgroup, CapExceeded, InvalidInput
from .folding import core_graph
from .graph import NO_EDGE, StallingsGraph
from .subgroup import contains, index
from .word import Word

logger = logging.getLogger(__name__)


class _PartialCover:
    """Growing edge maps on vertices ``0..n-1``."""

    def __init__(self, graph: StallingsGraph):
        self.rank_k = graph.rank_k
        self.size = graph.num_vertices
        self.out = [list(row) for row in graph.targets]
        self.inn = [list(row) for row in graph.sources]

    def add_vertex(self) -> int:
        for gen in range(self.rank_k):
            self.out[gen].append(NO_EDGE)
            self.inn[gen].append(NO_EDGE)
        self.size += 1
        return self.size - 1

    def link(self, tail: int, gen: int, head: int) -> None:
        self.out[gen][tail] = head
        self.inn[gen][head] = tail

    def step(self, vertex: int, letter: int) -> int:
        if letter > 0:
            return self.out[letter - 1][vertex]
        return self.inn[-letter - 1][vertex]

    def trace_or_extend(self, word: Word) -> int:
        """Follow ``word`` from the base, adding fresh vertices for the part that does not trace."""
        vertex = 0
        for letter in word.letters:
            nxt = self.step(vertex, letter)
            if nxt == NO_EDGE:
                nxt = self.add_vertex()
                if letter > 0:
                    self.link(vertex, letter - 1, nxt)
                else:
                    self.link(nxt, -letter - 1, vertex)
            vertex = nxt
        return vertex

    def pad(self, count: int) -> None:
        """Hang ``count`` fresh vertices off the first free outgoing edge ends."""
        for _ in range(count):
            tail, gen = next(
                (vertex, gen)
                for vertex in range(self.size)
                for gen in range(self.rank_k)
                if self.out[gen][vertex] == NO_EDGE
            )
            self.link(tail, gen, self.add_vertex())

    def close(self, rng: Optional[random.Random]) -> None:
        """Extend every partial injection to a permutation."""
        for gen in range(self.rank_k):
            missing_out = [vertex for vertex in range(self.size) if self.out[gen][vertex] == NO_EDGE]
            missing_in = [vertex for vertex in range(self.size) if self.inn[gen][vertex] == NO_EDGE]
            if not missing_out:
                continue
            if rng is None:
                heads = missing_in[1:] + missing_in[:1]
            else:
                heads = list(missing_in)
                rng.shuffle(heads)
            for tail, head in zip(missing_out, heads):
                self.link(tail, gen, head)

    def to_graph(self) -> StallingsGraph:
        edges = [
            (vertex, gen + 1, self.out[gen][vertex]) for vertex in range(self.size) for gen in range(self.rank_k)
        ]
        return core_graph(self.rank_k, edges, 0)


def complete(
    graph: StallingsGraph,
    target_index: int,
    ctx: FreeGroupContext,
    avoid: Union[None, Word, Sequence[Word]] = None,
    seed: int = 0,
) -> StallingsGraph:
    """Finite-index subgroup containing ``graph`` of index at least ``target_index``.

    Args:
        graph (StallingsGraph): Subgroup H to complete.
        target_index (int): Lower bound on the index of the result.
        ctx (FreeGroupContext): Ambient free group and caps.
        avoid (Union[None, Word, Sequence[Word]]): Words the result must not contain.
        seed (int): 0 closes partial permutations by rotation, a positive seed by a
            seeded shuffle.

    Raises:
        InvalidInput: ``target_index`` is not positive.
        CapExceeded: ``target_index`` exceeds the degree cap.
        AvoidInSubgroup: An avoid word already lies in H.
        AlreadySmaller: H has finite index below ``target_index``.

    Returns:
        StallingsGraph: Canonical cover U with ``H <= U`` and ``[F:U] >= target_index``.
    """
    if target_index < 1:
        raise InvalidInput(f"Target index must be positive, got {target_index}.", {"field": "target"})
    if target_index > ctx.caps.degree:
        raise CapExceeded("degree", ctx.caps.degree, target_index)
    if avoid is None:
        avoid_words: List[Word] = []
    elif isinstance(avoid, Word):
        avoid_words = [avoid]
    else:
        avoid_words = list(avoid)
    for word in avoid_words:
        if contains(graph, word):
            raise AvoidInSubgroup(f"The word {word} lies in the subgroup.", {"avoid": str(word)})

    current = index(graph, ctx)
    if current.is_finite:
        if current.value < target_index:
            raise AlreadySmaller(
                f"The subgroup has index {current.value} < {target_index}.",
                {"index": current.value, "target": target_index},
            )
        return graph

    cover = _PartialCover(graph)
    for word in avoid_words:
        cover.trace_or_extend(word)
    cover.pad(max(target_index - cover.size, 0))
    if cover.size > ctx.caps.degree:
        raise CapExceeded("degree", ctx.caps.degree, cover.size)
    cover.close(random.Random(seed) if seed > 0 else None)
    result = cover.to_graph()
    logger.debug("Completed a %d-vertex core graph to a cover of index %d", graph.num_vertices, result.num_vertices)
    return result
