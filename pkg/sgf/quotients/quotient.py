"""Finite quotients of F_k given by permutation images of the generators."""

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
from fractions import Fraction
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, Sequence, Set, Tuple

from sgf.core.context import FreeGroupContext
from sgf.core.exceptions import CapExceeded, InvalidInput
from sgf.core.folding import core_graph
from sgf.core.graph import StallingsGraph
from sgf.core.subgroup import basis, index
from sgf.core.word import Word

from .permutation import (
    Perm,
    check_permutation,
    closure,
    compose,
    group_order,
    identity,
    invert,
    orbit_union,
    product_set,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class FiniteQuotient:
    """Homomorphism from F_k onto the permutation group K generated by ``perms``.

    ``perms[g]`` is the 0-indexed image of generator ``g + 1``; points are acted on from
    the right. The kernel is implicit: a word lies in it iff its image is the identity.
    """

    degree: int
    perms: Tuple[Perm, ...]

    def __post_init__(self):
        if self.degree < 1:
            raise InvalidInput("A quotient acts on at least one point.")
        object.__setattr__(self, "perms", tuple(check_permutation(perm, self.degree) for perm in self.perms))

    @property
    def rank_k(self) -> int:
        """Number of generators of the free group."""
        return len(self.perms)

    @cached_property
    def inverse_perms(self) -> Tuple[Perm, ...]:
        """Images of the inverse generators."""
        return tuple(invert(perm) for perm in self.perms)

    @cached_property
    def order(self) -> int:
        """``|K|``, computed once with Schreier-Sims."""
        return group_order(self.perms, self.degree)

    def letter_perm(self, letter: int) -> Perm:
        """Image of a signed letter."""
        return self.perms[letter - 1] if letter > 0 else self.inverse_perms[-letter - 1]

    def act(self, point: int, word: Word) -> int:
        """Image of ``point`` under the word, read left to right."""
        for letter in word.letters:
            point = self.letter_perm(letter)[point]
        return point

    def is_transitive(self) -> bool:
        """True when the action on the points has a single orbit."""
        return len(orbit(self, [0], self.perms)) == self.degree


def coset_action(cover: StallingsGraph) -> FiniteQuotient:
    """Action of F_k on the cosets of a finite-index subgroup.

    Point 0 is the base coset, whose stabilizer is the subgroup itself.

    Raises:
        InfiniteIndex: The subgroup has infinite index.
    """
    index(cover).require_finite("subgroup to act on")
    return FiniteQuotient(degree=cover.num_vertices, perms=cover.targets)


def stabilizer_cover(quotient: FiniteQuotient, point: int = 0) -> StallingsGraph:
    """Cover of the stabilizer of ``point``: the Schreier graph on its orbit."""
    points = sorted(orbit(quotient, [point], quotient.perms))
    edges = [(source, gen + 1, quotient.perms[gen][source]) for source in points for gen in range(quotient.rank_k)]
    return core_graph(quotient.rank_k, edges, point)


def eval_word(quotient: FiniteQuotient, word: Word) -> Perm:
    """Image of a word, ``eval(uv) = eval(u)`` then ``eval(v)``."""
    word.check_alphabet(quotient.rank_k)
    result = identity(quotient.degree)
    for letter in word.letters:
        result = compose(result, quotient.letter_perm(letter))
    return result


def image_generators(quotient: FiniteQuotient, subgroup: StallingsGraph) -> List[Perm]:
    """Images of a free basis of the subgroup; they generate ``phi(H)``."""
    return [eval_word(quotient, word) for word in basis(subgroup)]


def image_subgroup(quotient: FiniteQuotient, subgroup: StallingsGraph, ctx: FreeGroupContext) -> int:
    """``|phi(H)|``.

    Raises:
        CapExceeded: The image has more than ``caps.closure`` elements.
    """
    order = group_order(image_generators(quotient, subgroup), quotient.degree)
    if order > ctx.caps.closure:
        raise CapExceeded("closure", ctx.caps.closure, order)
    return order


def image_elements(quotient: FiniteQuotient, subgroup: StallingsGraph, ctx: FreeGroupContext) -> FrozenSet[Perm]:
    """Element set of ``phi(H)``."""
    return closure(image_generators(quotient, subgroup), quotient.degree, ctx.caps.closure)


def group_elements(quotient: FiniteQuotient, ctx: FreeGroupContext) -> FrozenSet[Perm]:
    """Element set of ``K``."""
    return closure(quotient.perms, quotient.degree, ctx.caps.closure)


def image_product_set(
    quotient: FiniteQuotient, subgroups: Sequence[StallingsGraph], ctx: FreeGroupContext
) -> FrozenSet[Perm]:
    """The set ``phi(H_1) ... phi(H_n)``."""
    factors = [image_elements(quotient, subgroup, ctx) for subgroup in subgroups]
    return product_set(factors, quotient.degree, ctx.caps.productset)


def image_product_size(quotient: FiniteQuotient, subgroups: Sequence[StallingsGraph], ctx: FreeGroupContext) -> int:
    """``|phi(H_1) ... phi(H_n)|``.

    Raises:
        CapExceeded: An image or the product set is beyond its cap.
    """
    if len(subgroups) == 1:
        return image_subgroup(quotient, subgroups[0], ctx)
    return len(image_product_set(quotient, subgroups, ctx))


def normal_core_data(cover: StallingsGraph) -> int:
    """``[F : U_F]`` for the normal core of ``U``, which is ``|K|`` of its coset action."""
    return coset_action(cover).order


def is_enumerable(quotient: FiniteQuotient, ctx: FreeGroupContext) -> bool:
    """True when element sets of ``K`` may be listed under the current caps."""
    return quotient.degree <= ctx.exact_degree and quotient.order <= ctx.caps.closure


def orbit(quotient: FiniteQuotient, points: Iterable[int], perms: Sequence[Perm]) -> Set[int]:
    """Closure of a point set under the given permutations."""
    return orbit_union(perms, quotient.degree, points)


def orbit_product(quotient: FiniteQuotient, subgroups: Sequence[StallingsGraph], point: int = 0) -> Set[int]:
    """The point set ``x H_1 H_2 ... H_n``, grown left to right by orbits."""
    reached = {point}
    for subgroup in subgroups:
        reached = orbit(quotient, reached, image_generators(quotient, subgroup))
    return reached


def orbit_product_bound(quotient: FiniteQuotient, subgroups: Sequence[StallingsGraph], point: int = 0) -> Fraction:
    """``|x H_1 ... H_n| / N``.

    For a transitive action the fibres of ``k -> x k`` all have ``|K| / N`` elements, so
    this is an upper bound on ``|phi(H_1) ... phi(H_n)| / |K|`` that needs no closure.

    Raises:
        InvalidInput: The action is not transitive.
    """
    if not quotient.is_transitive():
        raise InvalidInput("The orbit bound needs a transitive quotient.")
    return Fraction(len(orbit_product(quotient, subgroups, point)), quotient.degree)


def preimage_cover(
    quotient: FiniteQuotient, subgroup_elements: FrozenSet[Perm], group: FrozenSet[Perm], ctx: FreeGroupContext
) -> StallingsGraph:
    """Cover of the preimage of a subgroup ``P`` of ``K``.

    Vertices are the right cosets ``P k``, each named by its smallest element; the
    generators act by right multiplication and the base is ``P`` itself.

    Raises:
        CapExceeded: ``[K : P]`` exceeds the degree cap.
    """
    coset_count = len(group) // len(subgroup_elements)
    if coset_count > ctx.caps.degree:
        raise CapExceeded("degree", ctx.caps.degree, coset_count)
    members = sorted(subgroup_elements)

    def representative(element: Perm) -> Perm:
        return min(compose(member, element) for member in members)

    start = representative(identity(quotient.degree))
    numbering: Dict[Perm, int] = {start: 0}
    cosets = [start]
    edges = []
    position = 0
    while position < len(cosets):
        current = cosets[position]
        for gen, perm in enumerate(quotient.perms):
            target = representative(compose(current, perm))
            if target not in numbering:
                numbering[target] = len(cosets)
                cosets.append(target)
            edges.append((position, gen + 1, numbering[target]))
        position += 1
    logger.debug("Built a preimage cover with %d cosets", len(cosets))
    return core_graph(quotient.rank_k, edges, 0)
