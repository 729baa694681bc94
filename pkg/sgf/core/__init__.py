"""Free groups, words and Stallings graphs."""

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

from .completion import complete
from .context import Caps, FreeGroupContext, SearchLimits
from .exceptions import (
    AlphabetError,
    AlreadySmaller,
    AvoidInSubgroup,
    CapExceeded,
    InfiniteIndex,
    InvalidInput,
    LiftNotFound,
    SearchExhausted,
    SgfError,
)
from .folding import FoldingGraph, UnionFind, core_graph
from .graph import NO_EDGE, StallingsGraph
from .low_index import low_index_covers
from .subgroup import (
    IN,
    OUT,
    Deficiency,
    IndexResult,
    basis,
    conjugate,
    contains,
    from_generators,
    index,
    intersect,
    is_subgroup,
    join,
    join_all,
    left_transversal,
    rank,
    relative_index,
    right_transversal,
    trivial_subgroup,
    whole_group,
)
from .word import Word, iter_reduced_words, letter_order, parse_word, reduce

__all__ = [
    "AlphabetError",
    "AlreadySmaller",
    "AvoidInSubgroup",
    "CapExceeded",
    "Caps",
    "Deficiency",
    "FoldingGraph",
    "FreeGroupContext",
    "IN",
    "IndexResult",
    "InfiniteIndex",
    "InvalidInput",
    "LiftNotFound",
    "NO_EDGE",
    "OUT",
    "SearchExhausted",
    "SearchLimits",
    "SgfError",
    "StallingsGraph",
    "UnionFind",
    "Word",
    "basis",
    "complete",
    "conjugate",
    "contains",
    "core_graph",
    "from_generators",
    "index",
    "intersect",
    "is_subgroup",
    "iter_reduced_words",
    "join",
    "join_all",
    "left_transversal",
    "letter_order",
    "low_index_covers",
    "parse_word",
    "rank",
    "reduce",
    "relative_index",
    "right_transversal",
    "trivial_subgroup",
    "whole_group",
]
