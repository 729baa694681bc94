"""Searches for finite quotients in which a product of two subgroups is small.

Two routes are tried. The direct route scans low-index covers ``W ⊇ A``: in the coset
action of W the point set ``x0 A B = x0 B`` has ``[B : B ∩ W]`` points, so
``[B : B ∩ W] <= eps [F:W]`` bounds ``|phi(A) phi(B)| / |K|`` by ``eps``. The fallback
completes the subgroup C of ``lemma_weak_ol`` to a cover of index at least
``|L| |R| / eps``, where L and R are transversals of ``A0`` in A and ``B0`` in B.
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
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from sgf.core.completion import complete
from sgf.core.context import FreeGroupContext
from sgf.core.exceptions import CapExceeded, InvalidInput
from sgf.core.graph import StallingsGraph
from sgf.core.low_index import low_index_covers
from sgf.core.subgroup import basis, index, left_transversal, relative_index, right_transversal
from sgf.core.word import Word
from sgf.quotients.measure import exact_product_ratio
from sgf.quotients.quotient import FiniteQuotient, coset_action, orbit_product_bound

from .lemma import LemmaResult, lemma_weak_ol

logger = logging.getLogger(__name__)

STRATEGY_SMALL_COVER = "small-cover"
STRATEGY_JOIN_COMPLETION = "join-completion"
STRATEGY_LEMMA_QUOTIENT = "lemma-quotient"


@dataclass(frozen=True)
class QuotientSearchResult:
    """A quotient with ``|phi(A) phi(B)| / |K| <= eps`` and how it was found.

    ``ratio`` is the exact product ratio when it was enumerated and the orbit bound
    otherwise.
    """

    quotient: FiniteQuotient
    cover: StallingsGraph
    strategy: str
    ratio: Fraction
    left_transversal: Tuple[Word, ...] = ()
    right_transversal: Tuple[Word, ...] = ()
    lemma: Optional[LemmaResult] = None


def check_epsilon(epsilon: Fraction) -> Fraction:
    """Validate ``0 < eps <= 1``."""
    if not 0 < epsilon <= 1:
        raise InvalidInput(f"Epsilon must lie in (0, 1], got {epsilon}.", {"field": "epsilon"})
    return Fraction(epsilon)


def covers_containing(subgroup: StallingsGraph, ctx: FreeGroupContext) -> List[StallingsGraph]:
    """Covers of index at most ``search.max_index`` containing the subgroup."""
    logger.debug("Searching covers up to index %d", ctx.search.max_index)
    return list(low_index_covers(ctx, ctx.search.max_index, basis(subgroup)))


def best_small_cover(
    covers: Sequence[StallingsGraph], b: StallingsGraph, epsilon: Fraction
) -> Optional[StallingsGraph]:
    """Cover with ``[B : B ∩ W] <= eps [F:W]``: smallest index, then smallest ``|K|``, then first found."""
    by_index = {}
    for cover in covers:
        orbit_size = relative_index(b, cover)
        if orbit_size is not None and orbit_size <= epsilon * cover.num_vertices:
            by_index.setdefault(cover.num_vertices, []).append(cover)
    if not by_index:
        return None
    candidates = by_index[min(by_index)]
    return min(enumerate(candidates), key=lambda item: (coset_action(item[1]).order, item[0]))[1]


def lemma_quotient(
    a: StallingsGraph, b: StallingsGraph, epsilon: Fraction, ctx: FreeGroupContext, seed: int = 0
) -> QuotientSearchResult:
    """Quotient from completing the lemma's C to index at least ``|L| |R| / eps``.

    Raises:
        CapExceeded: The product set cannot be enumerated to confirm the bound.
    """
    lemma = lemma_weak_ol(a, b, ctx, seed=seed)
    left = left_transversal(a, lemma.a0)
    right = right_transversal(b, lemma.b0)
    target = max(math.ceil(len(left) * len(right) / epsilon), 1)
    logger.info("Completing C to a cover of index >= %d (|L| = %d, |R| = %d)", target, len(left), len(right))
    cover = complete(lemma.c, target, ctx, seed=seed)
    quotient = coset_action(cover)
    ratio = orbit_product_bound(quotient, [a, b])
    if ratio > epsilon:
        exact = exact_product_ratio(quotient, [a, b], ctx)
        if exact is None:
            raise CapExceeded("closure", ctx.caps.closure)
        ratio = exact
    return QuotientSearchResult(
        quotient=quotient,
        cover=cover,
        strategy=STRATEGY_LEMMA_QUOTIENT,
        ratio=ratio,
        left_transversal=tuple(left),
        right_transversal=tuple(right),
        lemma=lemma,
    )


def find_small_product_quotient(
    a: StallingsGraph, b: StallingsGraph, epsilon: Fraction, ctx: FreeGroupContext, seed: int = 0
) -> QuotientSearchResult:
    """Finite quotient with ``|phi(A) phi(B)| / |K| <= eps``.

    Args:
        a (StallingsGraph): Infinite-index subgroup A.
        b (StallingsGraph): Infinite-index subgroup B.
        epsilon (Fraction): Target ratio in ``(0, 1]``.
        ctx (FreeGroupContext): Ambient free group, caps and budgets.
        seed (int): Seed of the fallback completions.

    Raises:
        InvalidInput: A or B has finite index, or ``eps`` is out of range.
        CapExceeded: The fallback quotient is too large to confirm.

    Returns:
        QuotientSearchResult: The quotient, its cover and the certified ratio.
    """
    epsilon = check_epsilon(epsilon)
    for name, graph in (("A", a), ("B", b)):
        if index(graph, ctx).is_finite:
            raise InvalidInput(f"Subgroup {name} has finite index.", {"field": name})
    cover = best_small_cover(covers_containing(a, ctx), b, epsilon)
    if cover is not None:
        quotient = coset_action(cover)
        ratio = orbit_product_bound(quotient, [a, b])
        exact = exact_product_ratio(quotient, [a, b], ctx)
        logger.info("Found a cover of index %d with |K| = %d", cover.num_vertices, quotient.order)
        return QuotientSearchResult(
            quotient=quotient,
            cover=cover,
            strategy=STRATEGY_SMALL_COVER,
            ratio=ratio if exact is None else min(ratio, exact),
        )
    logger.info("No cover of index <= %d works, falling back to the lemma route", ctx.search.max_index)
    return lemma_quotient(a, b, epsilon, ctx, seed=seed)
