"""Seeded random words, subgroups and covers for sweeps and tests."""

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
from typing import List, Tuple

from sgf.core.context import FreeGroupContext
from sgf.core.exceptions import InvalidInput
from sgf.core.graph import StallingsGraph
from sgf.core.subgroup import from_generators, index
from sgf.core.word import Word, letter_order
from sgf.quotients.quotient import FiniteQuotient, stabilizer_cover

logger = logging.getLogger(__name__)


def random_word(rng: random.Random, rank_k: int, min_length: int, max_length: int) -> Word:
    """Uniform length in ``[min_length, max_length]``, then a uniform reduced word of that length."""
    length = rng.randint(min_length, max_length)
    order = letter_order(rank_k)
    letters: List[int] = []
    while len(letters) < length:
        letter = rng.choice(order)
        if letters and letters[-1] == -letter:
            continue
        letters.append(letter)
    return Word(tuple(letters))


def random_subgroup(
    rng: random.Random,
    ctx: FreeGroupContext,
    num_generators: int,
    max_length: int,
    max_tries: int = 200,
) -> Tuple[List[Word], StallingsGraph]:
    """Non-trivial subgroup of infinite index generated by at most ``num_generators`` random words.

    Draws are repeated until the folded subgroup has infinite index.

    Raises:
        InvalidInput: No draw within ``max_tries`` had infinite index.
    """
    for _ in range(max_tries):
        count = rng.randint(1, num_generators)
        words = [random_word(rng, ctx.rank_k, 1, max_length) for _ in range(count)]
        graph = from_generators(words, ctx)
        if not graph.is_trivial() and not index(graph, ctx).is_finite:
            return words, graph
    raise InvalidInput(f"No infinite-index subgroup drawn in {max_tries} tries.", {"field": "num_generators"})


def random_cover(rng: random.Random, ctx: FreeGroupContext, degree: int, max_tries: int = 200) -> StallingsGraph:
    """Finite-index subgroup: the stabilizer of a point under random transitive permutations.

    Raises:
        InvalidInput: ``degree`` is not positive or no transitive draw was found.
    """
    if degree < 1:
        raise InvalidInput(f"Degree must be positive, got {degree}.", {"field": "degree"})
    for _ in range(max_tries):
        perms = []
        for _ in range(ctx.rank_k):
            images = list(range(degree))
            rng.shuffle(images)
            perms.append(tuple(images))
        quotient = FiniteQuotient(degree=degree, perms=tuple(perms))
        if quotient.is_transitive():
            return stabilizer_cover(quotient)
    raise InvalidInput(f"No transitive action of degree {degree} drawn in {max_tries} tries.", {"field": "degree"})
