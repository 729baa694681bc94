"""Subgroup builders, brute-force oracles and hypothesis strategies."""

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

from typing import Iterable, List, Optional, Set

from hypothesis import strategies as st

from sgf.config import get_configurable_parameters
from sgf.core import FreeGroupContext, StallingsGraph, Word, from_generators, parse_word, reduce


def get_test_context(rank_k: int = 2, overrides: Optional[List[str]] = None) -> FreeGroupContext:
    """Context built from the packaged config, optionally with dotted overrides."""
    config = get_configurable_parameters(overrides=overrides)
    return FreeGroupContext.from_config(config, rank_k)


def subgroup(*words: str, rank_k: int = 2) -> StallingsGraph:
    """Folded subgroup generated by words in text form."""
    ctx = FreeGroupContext(rank_k=rank_k)
    return from_generators([parse_word(word, rank_k) for word in words], ctx)


def words(*texts: str) -> List[Word]:
    """Parse several words."""
    return [parse_word(text) for text in texts]


def product_closure(generators: Iterable[Word], max_factors: int) -> Set[Word]:
    """Every reduced product of at most ``max_factors`` generators and their inverses."""
    letters = []
    for word in generators:
        if not word.is_identity():
            letters.extend([word, word.inverse()])
    found = {Word()}
    level = {Word()}
    for _ in range(max_factors):
        level = {word * letter for word in level for letter in letters}
        found |= level
    return found


def set_product_closure(factors: List[Set[Word]]) -> Set[Word]:
    """Reduced products ``h_1 ... h_n`` with ``h_i`` drawn from the given sets."""
    result = {Word()}
    for factor in factors:
        result = {left * right for left in result for right in factor}
    return result


def reduced_words(rank_k: int = 2, max_size: int = 8) -> st.SearchStrategy:
    """Hypothesis strategy of reduced words built from random signed letters."""
    alphabet = [letter for gen in range(1, rank_k + 1) for letter in (gen, -gen)]
    return st.lists(st.sampled_from(alphabet), max_size=max_size).map(reduce)


def generator_lists(rank_k: int = 2, max_words: int = 3, max_size: int = 6) -> st.SearchStrategy:
    """Hypothesis strategy of short generator lists."""
    return st.lists(reduced_words(rank_k, max_size), min_size=1, max_size=max_words)
