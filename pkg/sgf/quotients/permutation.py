"""Permutations of ``0..n-1`` as tuples acting on the right.

``compose(p, q)`` applies ``p`` first, so a word's image is the left to right
composition of its letters' images. Group orders come from sympy's Schreier-Sims;
element sets are only materialized below the configured caps.
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

from typing import FrozenSet, Iterable, List, Sequence, Set, Tuple

from sympy.combinatorics import Permutation, PermutationGroup

from sgf.core.exceptions import CapExceeded, InvalidInput

Perm = Tuple[int, ...]


def identity(degree: int) -> Perm:
    """Identity permutation of the given degree."""
    return tuple(range(degree))


def is_permutation(images: Sequence[int], degree: int) -> bool:
    """True when ``images`` is a bijection of ``0..degree-1``."""
    return len(images) == degree and sorted(images) == list(range(degree))


def compose(first: Perm, second: Perm) -> Perm:
    """``first`` then ``second``."""
    return tuple(second[point] for point in first)


def invert(perm: Perm) -> Perm:
    """Inverse permutation."""
    inverse = [0] * len(perm)
    for point, image in enumerate(perm):
        inverse[image] = point
    return tuple(inverse)


def to_cycles(perm: Perm) -> str:
    """1-indexed cycle notation without fixed points; ``id`` for the identity.

    Example:
        >>> to_cycles((1, 2, 0))
        '(1 2 3)'
    """
    seen = set()
    cycles: List[str] = []
    for start in range(len(perm)):
        if start in seen or perm[start] == start:
            continue
        cycle = [start]
        seen.add(start)
        point = perm[start]
        while point != start:
            cycle.append(point)
            seen.add(point)
            point = perm[point]
        cycles.append("(" + " ".join(str(point + 1) for point in cycle) + ")")
    return "".join(cycles) or "id"


def to_sympy_group(generators: Iterable[Perm], degree: int) -> PermutationGroup:
    """sympy group generated by the given permutations."""
    perms = [Permutation(list(perm)) for perm in generators if perm != identity(degree)]
    if not perms:
        perms = [Permutation(list(identity(degree)))]
    return PermutationGroup(perms)


def group_order(generators: Iterable[Perm], degree: int) -> int:
    """Order of the group generated by ``generators``; 1 for no generators."""
    generators = [perm for perm in generators if perm != identity(degree)]
    if not generators:
        return 1
    return int(to_sympy_group(generators, degree).order())


def group_contains(generators: Iterable[Perm], degree: int, perm: Perm) -> bool:
    """Membership of ``perm`` in the group generated by ``generators``."""
    if perm == identity(degree):
        return True
    return bool(to_sympy_group(generators, degree).contains(Permutation(list(perm))))


def closure(generators: Iterable[Perm], degree: int, cap: int) -> FrozenSet[Perm]:
    """All elements of the group generated by ``generators``, listed by sympy's Schreier–Sims.

    Raises:
        CapExceeded: The group has more than ``cap`` elements.
    """
    group = to_sympy_group(set(generators), degree)
    order = int(group.order())
    if order > cap:
        raise CapExceeded("closure", cap, order)
    return frozenset(tuple(element) for element in group.generate(af=True))


def orbit_union(generators: Sequence[Perm], degree: int, points: Iterable[int]) -> Set[int]:
    """Union of the orbits of ``points`` under the group generated by ``generators``."""
    return set(to_sympy_group(generators, degree).orbit(list(points), action="union"))


def product_set(factors: Sequence[FrozenSet[Perm]], degree: int, cap: int) -> FrozenSet[Perm]:
    """The set ``S_1 S_2 ... S_n`` of left to right products of subgroup element sets.

    Every factor must be a subgroup; each step adds a coset ``s S_i`` only for an ``s``
    not already covered.

    Raises:
        CapExceeded: The product set grows beyond ``cap`` elements.
    """
    if not factors:
        return frozenset({identity(degree)})
    current: Set[Perm] = set(factors[0])
    for factor in factors[1:]:
        result: Set[Perm] = set()
        for element in sorted(current):
            if element in result:
                continue
            result.update(compose(element, member) for member in factor)
            if len(result) > cap:
                raise CapExceeded("productset", cap, len(result))
        current = result
    if len(current) > cap:
        raise CapExceeded("productset", cap, len(current))
    return frozenset(current)


def check_permutation(images: Sequence[int], degree: int) -> Perm:
    """Validate and freeze a permutation given as a 0-indexed image list."""
    if not is_permutation(images, degree):
        raise InvalidInput(f"{list(images)} is not a permutation of {degree} points.")
    return tuple(images)
