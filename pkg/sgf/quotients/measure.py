"""Profinite measure of subgroups through finite quotients.

A finite quotient ``phi: F -> K`` bounds the measure of a set S by ``|phi(S)| / |K|``.
For a finite-index subgroup the coset action attains the exact value ``1 / [F:U]``; for
an infinite-index subgroup a completion to a large cover gives an arbitrarily small
certified bound.
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
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from sgf.core.completion import complete
from sgf.core.context import FreeGroupContext
from sgf.core.exceptions import CapExceeded, InfiniteIndex, InvalidInput
from sgf.core.graph import StallingsGraph
from sgf.core.subgroup import index, rank
from sgf.core.word import Word

from .quotient import FiniteQuotient, coset_action, image_product_size, is_enumerable, orbit_product_bound

logger = logging.getLogger(__name__)

METHOD_INDEX = "index"
METHOD_ORBIT = "orbit"
METHOD_PRODUCT_SET = "product-set"


@dataclass(frozen=True)
class MeasureBound:
    """Certified upper bound on the measure of ``H_1 ... H_n``.

    ``orbit_bound`` is always present; ``product_ratio`` is the exact
    ``|phi(H_1) ... phi(H_n)| / |K|`` when ``K`` was small enough to enumerate.
    ``bound`` is the smaller of the two.
    """

    subgroups: Tuple[StallingsGraph, ...]
    bound: Fraction
    method: str
    witness_quotient: FiniteQuotient
    orbit_bound: Fraction
    product_ratio: Optional[Fraction] = None
    left_transversal: Tuple[Word, ...] = ()
    right_transversal: Tuple[Word, ...] = ()
    epsilon: Optional[Fraction] = None
    seed: int = 0
    names: Tuple[str, ...] = field(default=())


def exact_product_ratio(
    quotient: FiniteQuotient, subgroups: Sequence[StallingsGraph], ctx: FreeGroupContext
) -> Optional[Fraction]:
    """``|phi(H_1) ... phi(H_n)| / |K|``, or None when ``K`` is too large to enumerate."""
    if not is_enumerable(quotient, ctx):
        return None
    try:
        return Fraction(image_product_size(quotient, subgroups, ctx), quotient.order)
    except CapExceeded as error:
        logger.debug("Exact product ratio skipped: %s", error)
        return None


def certify(
    quotient: FiniteQuotient,
    subgroups: Sequence[StallingsGraph],
    ctx: FreeGroupContext,
    **extra,
) -> MeasureBound:
    """Bound the product in a transitive quotient by the orbit bound and, when possible, exactly."""
    orbit_bound = orbit_product_bound(quotient, subgroups)
    ratio = exact_product_ratio(quotient, subgroups, ctx)
    if ratio is None:
        bound, method = orbit_bound, METHOD_ORBIT
    else:
        bound, method = min(orbit_bound, ratio), METHOD_PRODUCT_SET
    return MeasureBound(
        subgroups=tuple(subgroups),
        bound=bound,
        method=method,
        witness_quotient=quotient,
        orbit_bound=orbit_bound,
        product_ratio=ratio,
        **extra,
    )


def measure_subgroup(
    subgroup: StallingsGraph, target: int, ctx: FreeGroupContext, seed: int = 0, name: str = "H"
) -> MeasureBound:
    """Measure of a single subgroup.

    A finite-index subgroup gets the exact value ``1 / [F:H]`` attained by its own coset
    action (``method == "index"``). An infinite-index subgroup is completed to a cover of
    index at least ``target``, whose coset action bounds the measure by ``1 / [F:W]``.

    Raises:
        InvalidInput: ``target`` is not positive.
    """
    if target < 1:
        raise InvalidInput(f"Target must be positive, got {target}.", {"field": "target"})
    result = index(subgroup, ctx)
    if result.is_finite:
        quotient = coset_action(subgroup)
        exact = Fraction(1, result.value)
        return MeasureBound(
            subgroups=(subgroup,),
            bound=exact,
            method=METHOD_INDEX,
            witness_quotient=quotient,
            orbit_bound=exact,
            product_ratio=exact,
            seed=seed,
            names=(name,),
        )
    cover = complete(subgroup, target, ctx, seed=seed)
    logger.info("Completed %s to a cover of index %d", name, cover.num_vertices)
    return certify(coset_action(cover), [subgroup], ctx, epsilon=Fraction(1, target), seed=seed, names=(name,))


def rank_gradient_estimate(covers: Sequence[StallingsGraph], ctx: FreeGroupContext) -> Fraction:
    """Smallest ``(d(U) - 1) / [F:U]`` over a family of finite-index subgroups.

    For a free group every member gives exactly ``k - 1``.

    Raises:
        InvalidInput: The family is empty.
        InfiniteIndex: A member has infinite index.
    """
    if not covers:
        raise InvalidInput("The rank gradient estimate needs at least one subgroup.")
    values: List[Fraction] = []
    for cover in covers:
        result = index(cover, ctx)
        if not result.is_finite:
            raise InfiniteIndex("Rank gradient terms need finite-index subgroups.")
        values.append(Fraction(rank(cover) - 1, result.value))
    return min(values)
