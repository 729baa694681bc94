"""A bounded base for a finite family of subgroups and a falsification check of its kernel.

``bounded_base`` folds the family into a single infinite-index R containing a
finite-index subgroup of every member, so every member has a finite orbit on the point
``R`` of ``R\\F``. ``kernel_ball_check`` looks for short non-trivial words fixing R and a
few of its conjugates; for a free group none should exist.
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
from dataclasses import dataclass
from itertools import groupby
from typing import List, Optional, Sequence, Tuple

from sgf.core.context import FreeGroupContext
from sgf.core.exceptions import InvalidInput
from sgf.core.graph import NO_EDGE, StallingsGraph
from sgf.core.subgroup import conjugate, index, intersect, relative_index
from sgf.core.word import Word, iter_reduced_words, letter_order

from .olshanskii import OlshanskiiCertificate, olshanskii

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BaseRecord:
    """R together with the relative indices ``[L_i : L_i ∩ R]`` and the certificates that built it."""

    subgroups: Tuple[StallingsGraph, ...]
    r: StallingsGraph
    relative_indices: Tuple[int, ...]
    orbit_sizes: Tuple[int, ...]
    chain: Tuple[OlshanskiiCertificate, ...]
    seed: int = 0
    names: Tuple[str, ...] = ()


def orbit_size(r: StallingsGraph, subgroup: StallingsGraph, point: Word) -> Optional[int]:
    """Size of the orbit of the point ``R x`` under L, or None when infinite."""
    return relative_index(subgroup, conjugate(r, point))


def bounded_base(
    subgroups: Sequence[StallingsGraph], ctx: FreeGroupContext, seed: int = 0, names: Tuple[str, ...] = ()
) -> BaseRecord:
    """Infinite-index R with ``[L_i : L_i ∩ R]`` finite for every member.

    Starting from ``R = L_1``, each further member L is absorbed through
    ``R <- <R ∪ B0>`` with ``B0 <= L`` from ``olshanskii(R, L)``.

    Raises:
        InvalidInput: The family is empty or a member has finite index.
    """
    if not subgroups:
        raise InvalidInput("The family must not be empty.", {"field": "subgroups"})
    for position, subgroup in enumerate(subgroups):
        if index(subgroup, ctx).is_finite:
            raise InvalidInput(f"Member {position + 1} has finite index.", {"member": position + 1})
    names = tuple(names) or tuple(f"L{position + 1}" for position in range(len(subgroups)))

    current = subgroups[0]
    chain: List[OlshanskiiCertificate] = []
    for position, subgroup in enumerate(subgroups[1:], start=1):
        logger.info("Absorbing %s", names[position])
        cert = olshanskii(current, subgroup, ctx, seed=seed, names=("R", names[position]))
        chain.append(cert)
        current = cert.c

    relative = tuple(relative_index(subgroup, current) for subgroup in subgroups)
    orbits = tuple(orbit_size(current, subgroup, Word()) for subgroup in subgroups)
    return BaseRecord(
        subgroups=tuple(subgroups),
        r=current,
        relative_indices=relative,
        orbit_sizes=orbits,
        chain=tuple(chain),
        seed=seed,
        names=names,
    )


@dataclass(frozen=True)
class KernelReport:
    """Conjugators used, the intersection they cut out and any short survivors."""

    r: StallingsGraph
    radius: int
    conjugators: Tuple[Word, ...]
    intersection: StallingsGraph
    survivors: Tuple[Word, ...]
    seed: int = 0

    @property
    def ok(self) -> bool:
        """True when no short non-trivial word survived."""
        return not self.survivors


def choose_conjugators(r: StallingsGraph, count: int, ctx: FreeGroupContext, seed: int = 0) -> List[Word]:
    """Up to ``count`` words giving pairwise distinct conjugates of R, none equal to R."""
    seen = {r}
    chosen: List[Word] = []
    rng = random.Random(seed) if seed > 0 else None
    words = iter_reduced_words(ctx.rank_k, ctx.max_conjugator_length, min_length=1)
    for _, layer in groupby(words, key=len):
        layer = list(layer)
        if rng is not None:
            rng.shuffle(layer)
        for word in layer:
            if len(chosen) >= count:
                return chosen
            image = conjugate(r, word)
            if image not in seen:
                seen.add(image)
                chosen.append(word)
    if len(chosen) < count:
        logger.warning("Only %d distinct conjugates up to length %d", len(chosen), ctx.max_conjugator_length)
    return chosen


def closed_reduced_walks(graph: StallingsGraph, max_length: int) -> List[Word]:
    """Non-trivial reduced words of length at most ``max_length`` reading a loop at the base."""
    order = letter_order(graph.rank_k)
    found: List[Word] = []
    stack: List[Tuple[int, Tuple[int, ...]]] = [(graph.base, ())]
    while stack:
        vertex, letters = stack.pop()
        if letters and vertex == graph.base:
            found.append(Word(letters))
        if len(letters) == max_length:
            continue
        for letter in reversed(order):
            if letters and letters[-1] == -letter:
                continue
            nxt = graph.step(vertex, letter)
            if nxt != NO_EDGE:
                stack.append((nxt, letters + (letter,)))
    return sorted(found, key=lambda word: word.shortlex_key(graph.rank_k))


def kernel_ball_check(
    r: StallingsGraph, radius: int, conjugators: int, ctx: FreeGroupContext, seed: int = 0
) -> KernelReport:
    """Short non-trivial words lying in R and in ``conjugators`` conjugates of R.

    Any survivor is a word that might act trivially on ``R\\F``. This is a bounded search,
    not a proof that the kernel is trivial.
    """
    if radius < 0 or conjugators < 0:
        raise InvalidInput("Radius and conjugator count must be non-negative.", {"field": "radius"})
    if index(r, ctx).is_finite:
        logger.warning("R has finite index; its normal core is a non-trivial kernel")
    words = choose_conjugators(r, conjugators, ctx, seed)
    intersection = r
    for word in words:
        intersection = intersect(intersection, conjugate(r, word))
    survivors = closed_reduced_walks(intersection, radius)
    logger.info("Kernel check: %d conjugators, %d survivors up to length %d", len(words), len(survivors), radius)
    return KernelReport(
        r=r,
        radius=radius,
        conjugators=tuple(words),
        intersection=intersection,
        survivors=tuple(survivors),
        seed=seed,
    )
