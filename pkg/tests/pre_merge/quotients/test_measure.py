"""Tests of certified measure bounds."""

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
from fractions import Fraction

import pytest

from sgf.core import FreeGroupContext, InfiniteIndex, InvalidInput, index, intersect, join, rank
from sgf.data import random_cover, random_subgroup, random_word
from sgf.quotients import (
    METHOD_INDEX,
    coset_action,
    eval_word,
    image_elements,
    measure_subgroup,
    rank_gradient_estimate,
)
from sgf.quotients.permutation import compose
from tests.helpers.groups import subgroup

CTX = FreeGroupContext(rank_k=2)


class TestMeasureSubgroup:
    """Measure of a single subgroup."""

    def test_finite_index_is_exact(self):
        """A cover of index n has measure exactly 1/n."""
        cover = subgroup("a", "bb", "bab")
        bound = measure_subgroup(cover, 1, CTX)
        assert bound.method == METHOD_INDEX
        assert bound.bound == Fraction(1, 2)
        assert bound.witness_quotient == coset_action(cover)

    @pytest.mark.parametrize("target", [4, 10, 100])
    def test_infinite_index_bound(self, target):
        """Completing to index >= n bounds the measure by 1/n."""
        bound = measure_subgroup(subgroup("a"), target, CTX)
        assert bound.method != METHOD_INDEX
        assert bound.bound <= Fraction(1, target)
        assert bound.epsilon == Fraction(1, target)
        assert bound.witness_quotient.degree >= target

    def test_bad_target(self):
        """The target must be positive."""
        with pytest.raises(InvalidInput):
            measure_subgroup(subgroup("a"), 0, CTX)

    @pytest.mark.parametrize("seed", range(5))
    def test_random_covers(self, seed):
        """Seeded covers of small index measure exactly 1 / index."""
        cover = random_cover(random.Random(seed), CTX, degree=seed + 2)
        assert measure_subgroup(cover, 1, CTX).bound == Fraction(1, index(cover).value)


class TestRankGradient:
    """Schreier's formula on finite-index subgroups."""

    @pytest.mark.parametrize(["rank_k", "seed"], [(2, 0), (2, 1), (3, 2), (3, 3)])
    def test_schreier_equality(self, rank_k, seed):
        """d(U) - 1 = [F:U](k - 1) exactly."""
        ctx = FreeGroupContext(rank_k=rank_k)
        cover = random_cover(random.Random(seed), ctx, degree=5 + seed)
        assert rank(cover) - 1 == index(cover).value * (rank_k - 1)
        assert rank_gradient_estimate([cover], ctx) == ctx.rank_gradient

    def test_rejects_infinite_index(self):
        """Every term needs a finite index."""
        with pytest.raises(InfiniteIndex):
            rank_gradient_estimate([subgroup("a")], CTX)
        with pytest.raises(InvalidInput):
            rank_gradient_estimate([], CTX)


class TestQuotientMeasureLaws:
    """Monotonicity, subadditivity and translation invariance of |phi(S)| / |K|."""

    @pytest.mark.parametrize("seed", range(10))
    def test_laws(self, seed):
        """Exact per-quotient laws on seeded subgroups."""
        rng = random.Random(seed)
        quotient = coset_action(random_cover(rng, CTX, degree=rng.randint(3, 5)))
        _, first = random_subgroup(rng, CTX, 2, 4)
        _, second = random_subgroup(rng, CTX, 2, 4)
        image_first = image_elements(quotient, first, CTX)
        image_meet = image_elements(quotient, intersect(first, second), CTX)
        image_join = image_elements(quotient, join(first, second), CTX)
        image_second = image_elements(quotient, second, CTX)

        assert image_meet <= image_first <= image_join
        assert len(image_first | image_second) <= len(image_first) + len(image_second)
        shift = eval_word(quotient, random_word(rng, CTX.rank_k, 0, 6))
        assert len({compose(shift, element) for element in image_first}) == len(image_first)
