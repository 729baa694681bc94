"""Stallings folding with union-find vertex merging, core trimming and canonical renumbering."""

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

import random
from collections import deque
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .graph import Edge, StallingsGraph


class UnionFind:
    """Disjoint sets over ``0..n-1`` with path compression and union by rank."""

    def __init__(self):
        self.parent: List[int] = []
        self.rank: List[int] = []

    def add(self) -> int:
        """Create a singleton set and return its element."""
        self.parent.append(len(self.parent))
        self.rank.append(0)
        return len(self.parent) - 1

    def find(self, item: int) -> int:
        """Representative of the set holding ``item``."""
        root = item
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[item] != root:
            self.parent[item], item = root, self.parent[item]
        return root

    def union(self, first: int, second: int) -> Tuple[int, int]:
        """Merge two sets.

        Returns:
            Tuple[int, int]: The surviving representative and the absorbed one.
        """
        first, second = self.find(first), self.find(second)
        if self.rank[first] < self.rank[second]:
            first, second = second, first
        elif self.rank[first] == self.rank[second]:
            self.rank[first] += 1
        self.parent[second] = first
        return first, second

    def __len__(self) -> int:
        return len(self.parent)


class FoldingGraph:
    """Mutable labelled graph that folds itself.

    Clashing edges are not stored twice: adding an edge whose label is already used at
    one of its endpoints queues a merge of the two far ends instead. ``fold`` drains the
    queue; its order does not change the resulting core graph.
    """

    def __init__(self, rank_k: int):
        self.rank_k = rank_k
        self._classes = UnionFind()
        self._out: List[Dict[int, int]] = []
        self._in: List[Dict[int, int]] = []
        self._pending: List[Tuple[int, int]] = []

    def add_vertex(self) -> int:
        """Add an isolated vertex."""
        self._out.append({})
        self._in.append({})
        return self._classes.add()

    def add_edge(self, tail: int, gen: int, head: int) -> None:
        """Add the edge ``tail --gen--> head`` with a 1-based generator."""
        tail, head = self._classes.find(tail), self._classes.find(head)
        existing_head = self._out[tail].get(gen)
        if existing_head is not None:
            self._pending.append((existing_head, head))
            return
        existing_tail = self._in[head].get(gen)
        if existing_tail is not None:
            self._pending.append((existing_tail, tail))
            return
        self._out[tail][gen] = head
        self._in[head][gen] = tail

    def add_path(self, start: int, letters: Sequence[int], end: Optional[int] = None) -> int:
        """Add a path reading ``letters`` from ``start``, with fresh inner vertices.

        Args:
            start (int): First vertex of the path.
            letters (Sequence[int]): Signed letters to read.
            end (Optional[int]): Last vertex; a fresh one when omitted.

        Returns:
            int: The last vertex of the path.
        """
        current = start
        for position, letter in enumerate(letters):
            last = position == len(letters) - 1
            nxt = end if last and end is not None else self.add_vertex()
            if letter > 0:
                self.add_edge(current, letter, nxt)
            else:
                self.add_edge(nxt, -letter, current)
            current = nxt
        if not letters and end is not None:
            self._pending.append((start, end))
            return end
        return current

    def find(self, vertex: int) -> int:
        """Current representative of ``vertex``."""
        return self._classes.find(vertex)

    def fold(self, rng: Optional[random.Random] = None) -> None:
        """Merge vertices until no two edges with one label share an endpoint.

        Args:
            rng (Optional[random.Random]): When given, queued merges are processed in a
                random order instead of first-in first-out.
        """
        while self._pending:
            if rng is None:
                first, second = self._pending.pop()
            else:
                position = rng.randrange(len(self._pending))
                self._pending[position], self._pending[-1] = self._pending[-1], self._pending[position]
                first, second = self._pending.pop()
            first, second = self._classes.find(first), self._classes.find(second)
            if first == second:
                continue
            root, absorbed = self._classes.union(first, second)
            out_edges, in_edges = self._out[absorbed], self._in[absorbed]
            self._out[absorbed], self._in[absorbed] = {}, {}
            for gen, head in out_edges.items():
                if gen in self._out[root]:
                    self._pending.append((self._out[root][gen], head))
                else:
                    self._out[root][gen] = head
            for gen, tail in in_edges.items():
                if gen in self._in[root]:
                    self._pending.append((self._in[root][gen], tail))
                else:
                    self._in[root][gen] = tail

    def edges(self) -> List[Edge]:
        """Edges between representatives, valid once folded."""
        find = self._classes.find
        return [
            (vertex, gen, find(head))
            for vertex in range(len(self._classes))
            if find(vertex) == vertex
            for gen, head in self._out[vertex].items()
        ]

    def to_graph(self, base: int = 0) -> StallingsGraph:
        """Fold and return the canonical core graph based at ``base``."""
        self.fold()
        return core_graph(self.rank_k, self.edges(), self._classes.find(base))


def _trim(edges: Iterable[Edge], base: int) -> List[Edge]:
    """Strip hanging trees so that only the core relative to ``base`` remains."""
    incident: Dict[int, List[int]] = {}
    edge_list = list(edges)
    for position, (tail, _, head) in enumerate(edge_list):
        incident.setdefault(tail, []).append(position)
        incident.setdefault(head, []).append(position)
    degree = {vertex: len(positions) for vertex, positions in incident.items()}
    alive = [True] * len(edge_list)
    queue = deque(vertex for vertex, value in degree.items() if value <= 1 and vertex != base)
    while queue:
        vertex = queue.popleft()
        if degree[vertex] > 1:
            continue
        for position in incident[vertex]:
            if not alive[position]:
                continue
            alive[position] = False
            tail, _, head = edge_list[position]
            other = head if tail == vertex else tail
            degree[vertex] -= 1
            degree[other] -= 1
            if other != base and degree[other] == 1:
                queue.append(other)
    return [edge for position, edge in enumerate(edge_list) if alive[position]]


def canonical_relabel(rank_k: int, edges: Iterable[Edge], base: int) -> Tuple[int, List[Edge], Dict[int, int]]:
    """Renumber the component of ``base`` breadth first.

    Edge ends are visited in the order generator 1 out, generator 1 in, generator 2 out
    and so on; the base becomes 0.

    Returns:
        Tuple[int, List[Edge], Dict[int, int]]: Vertex count, relabelled edges and the
        map from old to new vertex numbers.
    """
    out_map: Dict[int, Dict[int, int]] = {}
    in_map: Dict[int, Dict[int, int]] = {}
    for tail, gen, head in edges:
        out_map.setdefault(tail, {})[gen] = head
        in_map.setdefault(head, {})[gen] = tail
    numbering = {base: 0}
    order = [base]
    position = 0
    while position < len(order):
        vertex = order[position]
        position += 1
        for gen in range(1, rank_k + 1):
            for neighbour in (out_map.get(vertex, {}).get(gen), in_map.get(vertex, {}).get(gen)):
                if neighbour is not None and neighbour not in numbering:
                    numbering[neighbour] = len(order)
                    order.append(neighbour)
    relabelled = [
        (numbering[vertex], gen, numbering[head])
        for vertex in order
        for gen, head in sorted(out_map.get(vertex, {}).items())
    ]
    return len(order), relabelled, numbering


def core_graph(rank_k: int, edges: Iterable[Edge], base: int) -> StallingsGraph:
    """Trim a folded graph to its core at ``base`` and renumber it canonically."""
    count, relabelled, _ = canonical_relabel(rank_k, _trim(edges, base), base)
    return StallingsGraph.from_edges(rank_k, count, relabelled)
