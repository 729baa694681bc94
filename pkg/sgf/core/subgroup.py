"""Subgroup calculus on Stallings graphs.

Membership, rank, index, intersection, join, conjugation, free bases, relative indices
and transversals. Every function returns canonical graphs so results can be compared
with ``==``.
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
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .context import FreeGroupContext
from .exceptions import InfiniteIndex, InvalidInput
from .folding import FoldingGraph, core_graph
from .graph import NO_EDGE, Edge, StallingsGraph
from .word import Word, generator_name, reduce

logger = logging.getLogger(__name__)

OUT = "out"
IN = "in"


@dataclass(frozen=True)
class Deficiency:
    """A missing edge end proving that a graph is not a cover."""

    vertex: int
    generator: int
    direction: str

    def describe(self) -> str:
        """Human readable form, e.g. ``v0 lacks an outgoing b-edge``."""
        kind = "outgoing" if self.direction == OUT else "incoming"
        return f"v{self.vertex} lacks an {kind} {generator_name(self.generator)}-edge"


@dataclass(frozen=True)
class IndexResult:
    """Index of a subgroup: a positive integer, or infinite with a deficiency witness."""

    value: Optional[int]
    deficiency: Optional[Deficiency] = None

    @property
    def is_finite(self) -> bool:
        """True for a finite index."""
        return self.value is not None

    def require_finite(self, what: str = "subgroup") -> int:
        """Return the index, raising ``InfiniteIndex`` when it is infinite."""
        if self.value is None:
            details = {}
            if self.deficiency is not None:
                details["deficiency"] = self.deficiency.describe()
            raise InfiniteIndex(f"The {what} has infinite index.", details)
        return self.value

    def __str__(self) -> str:
        return "infinite" if self.value is None else str(self.value)


def _check_rank(graph: StallingsGraph, ctx: Optional[FreeGroupContext]) -> None:
    if ctx is not None and graph.rank_k != ctx.rank_k:
        raise InvalidInput(f"Graph lives in F_{graph.rank_k}, context is F_{ctx.rank_k}.")


def _same_rank(first: StallingsGraph, second: StallingsGraph) -> int:
    if first.rank_k != second.rank_k:
        raise InvalidInput(f"Subgroups of F_{first.rank_k} and F_{second.rank_k} cannot be combined.")
    return first.rank_k


def from_generators(generators: Iterable[Word], ctx: FreeGroupContext) -> StallingsGraph:
    """Canonical Stallings graph of the subgroup generated by ``generators``.

    Example:
        >>> ctx = FreeGroupContext(rank_k=2)
        >>> graph = from_generators([parse_word("b"), parse_word("aa"), parse_word("abA")], ctx)
        >>> graph.num_vertices, index(graph).value
        (2, 2)
    """
    builder = FoldingGraph(ctx.rank_k)
    base = builder.add_vertex()
    for word in generators:
        word.check_alphabet(ctx.rank_k)
        if word.letters:
            builder.add_path(base, word.letters, base)
    return builder.to_graph(base)


def trivial_subgroup(ctx: FreeGroupContext) -> StallingsGraph:
    """Graph of the trivial subgroup: the base vertex alone."""
    return StallingsGraph.from_edges(ctx.rank_k, 1, [])


def whole_group(ctx: FreeGroupContext) -> StallingsGraph:
    """Graph of F_k itself: one vertex carrying a loop per generator."""
    return StallingsGraph.from_edges(ctx.rank_k, 1, [(0, gen, 0) for gen in range(1, ctx.rank_k + 1)])


def contains(graph: StallingsGraph, word: Word) -> bool:
    """True iff ``word`` reads a closed path at the base."""
    word.check_alphabet(graph.rank_k)
    return graph.read(word.letters) == graph.base


def rank(graph: StallingsGraph) -> int:
    """Nielsen rank ``|E| - |V| + 1`` of the subgroup."""
    return graph.num_edges - graph.num_vertices + 1


def index(graph: StallingsGraph, ctx: Optional[FreeGroupContext] = None) -> IndexResult:
    """Index of the subgroup in F_k.

    Finite exactly when the graph is a cover, and then equal to the vertex count. For
    an infinite index the first missing edge end is reported, scanning vertices in
    order, generators in order and outgoing before incoming ends.
    """
    _check_rank(graph, ctx)
    for vertex in range(graph.num_vertices):
        for gen in range(graph.rank_k):
            if graph.targets[gen][vertex] == NO_EDGE:
                return IndexResult(None, Deficiency(vertex, gen + 1, OUT))
            if graph.sources[gen][vertex] == NO_EDGE:
                return IndexResult(None, Deficiency(vertex, gen + 1, IN))
    return IndexResult(graph.num_vertices)


def _product_component(
    first: StallingsGraph, second: StallingsGraph
) -> Tuple[List[Tuple[int, int]], List[Tuple[int, int, int]]]:
    """Component of the base pair in the fiber product, with pairs numbered in discovery order."""
    numbering: Dict[Tuple[int, int], int] = {(0, 0): 0}
    pairs = [(0, 0)]
    edges: List[Tuple[int, int, int]] = []
    position = 0
    while position < len(pairs):
        left, right = pairs[position]
        for gen in range(first.rank_k):
            for forward in (True, False):
                if forward:
                    nxt = (first.targets[gen][left], second.targets[gen][right])
                else:
                    nxt = (first.sources[gen][left], second.sources[gen][right])
                if NO_EDGE in nxt:
                    continue
                if nxt not in numbering:
                    numbering[nxt] = len(pairs)
                    pairs.append(nxt)
                if forward:
                    edges.append((position, gen + 1, numbering[nxt]))
        position += 1
    return pairs, edges


def intersect(first: StallingsGraph, second: StallingsGraph) -> StallingsGraph:
    """Canonical graph of the intersection, from the fiber product at the pair of bases."""
    rank_k = _same_rank(first, second)
    _, edges = _product_component(first, second)
    return core_graph(rank_k, edges, 0)


def _copy_into(builder: FoldingGraph, graph: StallingsGraph, base: int) -> None:
    mapping = [base] + [builder.add_vertex() for _ in range(graph.num_vertices - 1)]
    for tail, gen, head in graph.edges():
        builder.add_edge(mapping[tail], gen, mapping[head])


def join(first: StallingsGraph, second: StallingsGraph) -> StallingsGraph:
    """Canonical graph of the subgroup generated by both inputs: wedge at the bases, then fold."""
    builder = FoldingGraph(_same_rank(first, second))
    base = builder.add_vertex()
    _copy_into(builder, first, base)
    _copy_into(builder, second, base)
    return builder.to_graph(base)


def join_all(graphs: Sequence[StallingsGraph], ctx: FreeGroupContext) -> StallingsGraph:
    """Join of a family of subgroups; the trivial subgroup for an empty family."""
    builder = FoldingGraph(ctx.rank_k)
    base = builder.add_vertex()
    for graph in graphs:
        _check_rank(graph, ctx)
        _copy_into(builder, graph, base)
    return builder.to_graph(base)


def conjugate(graph: StallingsGraph, conjugator: Word) -> StallingsGraph:
    """Graph of ``g^-1 H g``: a path reading ``g^-1`` joins a new base to the old one."""
    conjugator.check_alphabet(graph.rank_k)
    builder = FoldingGraph(graph.rank_k)
    old_base = builder.add_vertex()
    _copy_into(builder, graph, old_base)
    new_base = builder.add_vertex()
    builder.add_path(new_base, conjugator.inverse().letters, old_base)
    return builder.to_graph(new_base)


def spanning_paths(graph: StallingsGraph) -> Tuple[List[Word], List[Optional[Edge]]]:
    """Breadth-first spanning tree at the base.

    Returns:
        Tuple[List[Word], List[Optional[Edge]]]: For every vertex the tree path from the
        base, and the tree edge through which it was reached (None for the base).
    """
    paths: List[Optional[Tuple[int, ...]]] = [None] * graph.num_vertices
    via: List[Optional[Edge]] = [None] * graph.num_vertices
    paths[0] = ()
    order = [0]
    position = 0
    while position < len(order):
        vertex = order[position]
        position += 1
        for gen in range(graph.rank_k):
            head, tail = graph.targets[gen][vertex], graph.sources[gen][vertex]
            if head != NO_EDGE and paths[head] is None:
                paths[head] = paths[vertex] + (gen + 1,)
                via[head] = (vertex, gen + 1, head)
                order.append(head)
            if tail != NO_EDGE and paths[tail] is None:
                paths[tail] = paths[vertex] + (-(gen + 1),)
                via[tail] = (tail, gen + 1, vertex)
                order.append(tail)
    return [Word(path) for path in paths], via


def basis(graph: StallingsGraph) -> List[Word]:
    """Free basis read off the non-tree edges of a breadth-first spanning tree.

    Each non-tree edge ``u --x--> w`` contributes ``path(u) x path(w)^-1``.
    """
    paths, via = spanning_paths(graph)
    tree_edges = {edge for edge in via if edge is not None}
    return [
        reduce(paths[tail].letters + (gen,) + paths[head].inverse().letters)
        for tail, gen, head in graph.edges()
        if (tail, gen, head) not in tree_edges
    ]


def _relative_walk(
    big: StallingsGraph, small: StallingsGraph
) -> Optional[Tuple[List[Tuple[int, int]], List[Tuple[int, ...]]]]:
    """Lift the graph of ``big`` into the product with ``small`` from the base pair.

    Returns None as soon as an edge of ``big`` fails to lift, which happens exactly when
    ``[big : big ∩ small]`` is infinite. Otherwise returns the pairs of the component in
    discovery order with their tree paths.
    """
    _same_rank(big, small)
    numbering = {(0, 0): 0}
    pairs = [(0, 0)]
    paths: List[Tuple[int, ...]] = [()]
    position = 0
    while position < len(pairs):
        left, right = pairs[position]
        for gen in range(big.rank_k):
            for letter in (gen + 1, -(gen + 1)):
                left_next = big.step(left, letter)
                if left_next == NO_EDGE:
                    continue
                right_next = small.step(right, letter)
                if right_next == NO_EDGE:
                    return None
                pair = (left_next, right_next)
                if pair not in numbering:
                    numbering[pair] = len(pairs)
                    pairs.append(pair)
                    paths.append(paths[position] + (letter,))
        position += 1
    return pairs, paths


def relative_index(big: StallingsGraph, small: StallingsGraph) -> Optional[int]:
    """``[L : L ∩ H]`` for ``L = big`` and ``H = small``, or None when infinite."""
    walk = _relative_walk(big, small)
    if walk is None:
        return None
    pairs, _ = walk
    return sum(1 for left, _ in pairs if left == big.base)


def right_transversal(big: StallingsGraph, small: StallingsGraph) -> List[Word]:
    """Words ``t`` of ``L`` with ``L`` the disjoint union of the cosets ``(L ∩ H) t``.

    The identity comes first; the rest follow the discovery order of the product walk.

    Raises:
        InfiniteIndex: ``L ∩ H`` has infinite index in ``L``.
    """
    walk = _relative_walk(big, small)
    if walk is None:
        raise InfiniteIndex("The intersection has infinite index in the larger subgroup.")
    pairs, paths = walk
    return [reduce(path) for (left, _), path in zip(pairs, paths) if left == big.base]


def left_transversal(big: StallingsGraph, small: StallingsGraph) -> List[Word]:
    """Words ``l`` of ``L`` with ``L`` the disjoint union of the cosets ``l (L ∩ H)``."""
    return [word.inverse() for word in right_transversal(big, small)]


def is_subgroup(small: StallingsGraph, big: StallingsGraph) -> bool:
    """True iff every basis element of ``small`` lies in ``big``."""
    return all(contains(big, word) for word in basis(small))
