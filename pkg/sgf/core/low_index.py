"""Low-index subgroups of F_k containing given words.

Sims' backtracking over standardized coset tables. A table is filled slot by slot, the
first undefined slot first (cosets in order, generators in order, outgoing before
incoming); a new coset always takes the next free number, so every table is produced in
canonical form and exactly once.
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
from typing import Iterator, List, Optional, Sequence, Tuple

from .context import FreeGroupContext
from .exceptions import InvalidInput
from .folding import core_graph
from .graph import NO_EDGE, StallingsGraph
from .word import Word

logger = logging.getLogger(__name__)


class _CosetTable:
    def __init__(self, rank_k: int, max_index: int, words: Sequence[Word]):
        self.rank_k = rank_k
        self.max_index = max_index
        self.words = [word.letters for word in words if word.letters]
        self.out = [[NO_EDGE] * max_index for _ in range(rank_k)]
        self.inn = [[NO_EDGE] * max_index for _ in range(rank_k)]
        self.size = 1
        self.nodes = 0

    def first_open_slot(self) -> Optional[Tuple[int, int, bool]]:
        for coset in range(self.size):
            for gen in range(self.rank_k):
                if self.out[gen][coset] == NO_EDGE:
                    return coset, gen, True
                if self.inn[gen][coset] == NO_EDGE:
                    return coset, gen, False
        return None

    def read(self, letters: Tuple[int, ...]) -> Optional[int]:
        coset = 0
        for letter in letters:
            coset = self.out[letter - 1][coset] if letter > 0 else self.inn[-letter - 1][coset]
            if coset == NO_EDGE:
                return None
        return coset

    def consistent(self) -> bool:
        """False once some required word reads all the way round to a coset other than the base."""
        for letters in self.words:
            end = self.read(letters)
            if end is not None and end != 0:
                return False
        return True

    def assign(self, coset: int, gen: int, forward: bool, other: int) -> None:
        tail, head = (coset, other) if forward else (other, coset)
        self.out[gen][tail] = head
        self.inn[gen][head] = tail

    def clear(self, coset: int, gen: int, forward: bool, other: int) -> None:
        tail, head = (coset, other) if forward else (other, coset)
        self.out[gen][tail] = NO_EDGE
        self.inn[gen][head] = NO_EDGE

    def to_graph(self) -> StallingsGraph:
        edges = [(coset, gen + 1, self.out[gen][coset]) for coset in range(self.size) for gen in range(self.rank_k)]
        return core_graph(self.rank_k, edges, 0)


def low_index_covers(
    ctx: FreeGroupContext,
    max_index: int,
    contains: Sequence[Word] = (),
    max_nodes: Optional[int] = None,
) -> Iterator[StallingsGraph]:
    """Every subgroup of index at most ``max_index`` containing the given words.

    Args:
        ctx (FreeGroupContext): Ambient free group.
        max_index (int): Largest index to enumerate.
        contains (Sequence[Word]): Words every subgroup must contain.
        max_nodes (Optional[int]): Search-tree budget, ``ctx.search.max_nodes`` by default.
            Running out stops the search and keeps what was found.

    Yields:
        StallingsGraph: Canonical covers ordered by index, then by discovery order.
    """
    if max_index < 1:
        raise InvalidInput(f"max_index must be positive, got {max_index}.", {"field": "max_index"})
    budget = ctx.search.max_nodes if max_nodes is None else max_nodes
    for word in contains:
        word.check_alphabet(ctx.rank_k)
    table = _CosetTable(ctx.rank_k, max_index, contains)
    found: List[StallingsGraph] = []
    exhausted = False

    def search() -> None:
        nonlocal exhausted
        table.nodes += 1
        if table.nodes > budget:
            exhausted = True
            return
        slot = table.first_open_slot()
        if slot is None:
            if all(table.read(letters) == 0 for letters in table.words):
                found.append(table.to_graph())
            return
        coset, gen, forward = slot
        partners = [
            other
            for other in range(table.size)
            if (table.inn[gen][other] if forward else table.out[gen][other]) == NO_EDGE
        ]
        if table.size < max_index:
            partners.append(table.size)
        for other in partners:
            if exhausted:
                return
            fresh = other == table.size
            if fresh:
                table.size += 1
            table.assign(coset, gen, forward, other)
            if table.consistent():
                search()
            table.clear(coset, gen, forward, other)
            if fresh:
                table.size -= 1

    search()
    if exhausted:
        logger.warning(
            "Low-index search stopped after %d nodes with %d subgroups found (index <= %d)",
            budget,
            len(found),
            max_index,
        )
    logger.debug("Found %d subgroups of index <= %d", len(found), max_index)
    yield from sorted(found, key=lambda graph: graph.num_vertices)
