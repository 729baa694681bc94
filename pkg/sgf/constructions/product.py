"""Products of infinite-index subgroups: measure bounds and non-covering witnesses.

``measure_product_bound`` shrinks ``H_1 ... H_n`` from the right: for the last two
factors, the certificate of ``olshanskii(H_{n-1}, H_n)`` gives ``B0`` of finite index in
``H_n`` with right transversal ``R``, so ``H_{n-1} H_n ⊆ C R`` where
``C = <H_{n-1} ∪ B0>`` has infinite index. Once a single C is left, completing it to a
cover of index at least ``|R_total| / eps`` confines ``x0 H_1 ... H_n`` to the points
``x0 r``.
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
from typing import Dict, List, Optional, Sequence, Tuple

from sgf.core.completion import complete
from sgf.core.context import FreeGroupContext
from sgf.core.exceptions import CapExceeded, InvalidInput, LiftNotFound
from sgf.core.graph import StallingsGraph
from sgf.core.subgroup import index, right_transversal
from sgf.core.word import Word, letter_order, reduce
from sgf.quotients.measure import MeasureBound, certify
from sgf.quotients.quotient import FiniteQuotient, coset_action, image_product_size, is_enumerable, orbit_product

from .olshanskii import olshanskii
from .search import best_small_cover, check_epsilon, covers_containing

logger = logging.getLogger(__name__)


def _check_factors(subgroups: Sequence[StallingsGraph], ctx: FreeGroupContext) -> None:
    if not subgroups:
        raise InvalidInput("A product needs at least one subgroup.", {"field": "subgroups"})
    for position, subgroup in enumerate(subgroups):
        if subgroup.rank_k != ctx.rank_k:
            raise InvalidInput(f"Factor {position + 1} lives in F_{subgroup.rank_k}.", {"factor": position + 1})
        if index(subgroup, ctx).is_finite:
            raise InvalidInput(f"Factor {position + 1} has finite index.", {"factor": position + 1})


def reduce_product(
    subgroups: Sequence[StallingsGraph], ctx: FreeGroupContext, seed: int = 0
) -> Tuple[StallingsGraph, List[Word]]:
    """Single infinite-index C and words R with ``H_1 ... H_n ⊆ C R``."""
    items = list(subgroups)
    transversal: List[Word] = [Word()]
    while len(items) > 1:
        left, right = items[-2], items[-1]
        cert = olshanskii(left, right, ctx, seed=seed)
        step = right_transversal(right, cert.b0)
        merged: Dict[Word, None] = {}
        for head in step:
            for tail in transversal:
                merged.setdefault(head * tail, None)
        transversal = list(merged)
        items = items[:-2] + [cert.c]
        logger.debug("Reduced to %d factors with %d transversal words", len(items), len(transversal))
    return items[0], transversal


def measure_product_bound(
    subgroups: Sequence[StallingsGraph],
    epsilon: Fraction,
    ctx: FreeGroupContext,
    seed: int = 0,
    names: Tuple[str, ...] = (),
) -> MeasureBound:
    """Certified bound ``<= eps`` on the measure of ``H_1 ... H_n``.

    Raises:
        InvalidInput: A factor has finite index, the list is empty or ``eps`` is out of range.
        CapExceeded: The completion would exceed the degree cap.
    """
    epsilon = check_epsilon(epsilon)
    _check_factors(subgroups, ctx)
    extra = dict(epsilon=epsilon, seed=seed, names=tuple(names))

    if len(subgroups) == 2:
        cover = best_small_cover(covers_containing(subgroups[0], ctx), subgroups[1], epsilon)
        if cover is not None:
            logger.info("Direct cover of index %d bounds the product", cover.num_vertices)
            return certify(coset_action(cover), subgroups, ctx, **extra)

    core, transversal = reduce_product(subgroups, ctx, seed=seed)
    # C contains H_1 whole, so the left transversal is the identity alone.
    left = (Word(),)
    target = max(math.ceil(len(left) * len(transversal) / epsilon), 1)
    logger.info("Completing the reduced subgroup to index >= %d (|R| = %d)", target, len(transversal))
    cover = complete(core, target, ctx, seed=seed)
    return certify(
        coset_action(cover), subgroups, ctx, left_transversal=left, right_transversal=tuple(transversal), **extra
    )


@dataclass(frozen=True)
class ProductWitness:
    """A word outside ``H_1 ... H_n``, proved by a finite quotient.

    ``x0 witness`` lies outside the point set ``x0 H_1 ... H_n``, so ``phi(witness)``
    is not in ``phi(H_1) ... phi(H_n)``.
    """

    subgroups: Tuple[StallingsGraph, ...]
    quotient: FiniteQuotient
    witness: Word
    orbit_size: int
    image_product_size: Optional[int]
    epsilon: Fraction
    seed: int = 0
    names: Tuple[str, ...] = ()


def shortest_escape(quotient: FiniteQuotient, inside: set, max_length: int) -> Optional[Word]:
    """Shortlex-first word moving point 0 outside ``inside``, or None within ``max_length``."""
    order = letter_order(quotient.rank_k)
    paths: Dict[int, Tuple[int, ...]] = {0: ()}
    frontier = [0]
    if 0 not in inside:
        return Word()
    for _ in range(max_length):
        next_frontier = []
        for point in frontier:
            for letter in order:
                image = quotient.letter_perm(letter)[point]
                if image in paths:
                    continue
                paths[image] = paths[point] + (letter,)
                if image not in inside:
                    return reduce(paths[image])
                next_frontier.append(image)
        frontier = next_frontier
        if not frontier:
            break
    return None


def product_witness(
    subgroups: Sequence[StallingsGraph], ctx: FreeGroupContext, seed: int = 0, names: Tuple[str, ...] = ()
) -> ProductWitness:
    """Word outside ``H_1 ... H_n`` with a quotient proving it.

    ``eps`` halves from 1/2 for at most ``search.epsilon_rounds`` rounds until the
    product's point set misses a point reachable by a word of length at most
    ``search.lift_length``.

    Raises:
        InvalidInput: A factor has finite index or the list is empty.
        LiftNotFound: No round produced a short enough witness.
    """
    _check_factors(subgroups, ctx)
    epsilon = Fraction(1, 2)
    for round_number in range(1, ctx.search.epsilon_rounds + 1):
        bound = measure_product_bound(subgroups, epsilon, ctx, seed=seed, names=names)
        quotient = bound.witness_quotient
        inside = orbit_product(quotient, subgroups)
        word = None
        if len(inside) < quotient.degree:
            word = shortest_escape(quotient, inside, ctx.search.lift_length)
        if word is not None:
            image_size = None
            if is_enumerable(quotient, ctx):
                try:
                    image_size = image_product_size(quotient, subgroups, ctx)
                except CapExceeded:
                    image_size = None
            logger.info("Round %d: witness %s in a quotient of degree %d", round_number, word, quotient.degree)
            return ProductWitness(
                subgroups=tuple(subgroups),
                quotient=quotient,
                witness=word,
                orbit_size=len(inside),
                image_product_size=image_size,
                epsilon=epsilon,
                seed=seed,
                names=tuple(names),
            )
        logger.debug("Round %d with eps = %s gave no short witness", round_number, epsilon)
        epsilon /= 2
    raise LiftNotFound(
        f"No witness of length <= {ctx.search.lift_length} after {ctx.search.epsilon_rounds} rounds.",
        {"lift_length": ctx.search.lift_length, "rounds": ctx.search.epsilon_rounds},
    )
