"""Tests of product measure bounds and product witnesses."""

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

from dataclasses import replace
from fractions import Fraction

import pytest

from sgf.constructions import (
    measure_product_bound,
    product_witness,
    verify_measure,
    verify_product_witness,
)
from sgf.constructions.product import reduce_product, shortest_escape
from sgf.core import FreeGroupContext, InvalidInput, contains, index, is_subgroup
from sgf.quotients import METHOD_ORBIT, FiniteQuotient, eval_word, image_product_set
from tests.helpers.groups import subgroup, words

CTX = FreeGroupContext(rank_k=2)


class TestMeasureProductBound:
    """Certified bounds on the measure of H_1 ... H_n."""

    def test_two_cyclic_factors(self):
        """<a><b> at eps = 1/64 completes past the reduced subgroup."""
        bound = measure_product_bound([subgroup("a"), subgroup("b")], Fraction(1, 64), CTX)
        assert bound.bound <= Fraction(1, 64)
        assert bound.method == METHOD_ORBIT
        assert bound.left_transversal == tuple(words(""))
        assert bound.right_transversal == tuple(words("", "b"))
        assert bound.witness_quotient.degree == 128
        assert verify_measure(bound, CTX).ok

    @pytest.mark.parametrize("epsilon", [Fraction(1, 2), Fraction(1, 5), Fraction(1, 16)])
    def test_bound_below_epsilon(self, epsilon):
        """The certified bound never exceeds eps."""
        bound = measure_product_bound([subgroup("a"), subgroup("b"), subgroup("ab")], epsilon, CTX)
        assert bound.bound <= epsilon
        assert verify_measure(bound, CTX).ok

    def test_tampered_transversals(self):
        """Transversals too large for the quotient degree are caught."""
        bound = measure_product_bound([subgroup("a"), subgroup("b")], Fraction(1, 64), CTX)
        report = verify_measure(replace(bound, left_transversal=tuple(words("", "a"))), CTX)
        assert [check.name for check in report.failed] == ["transversal_size"]

    def test_tampered_bound(self):
        """A smaller claimed bound is caught."""
        bound = measure_product_bound([subgroup("a"), subgroup("b")], Fraction(1, 8), CTX)
        report = verify_measure(replace(bound, bound=bound.bound / 2), CTX)
        assert not report.ok

    @pytest.mark.parametrize("epsilon", [Fraction(0), Fraction(3, 2)])
    def test_epsilon_range(self, epsilon):
        """eps lies in (0, 1]."""
        with pytest.raises(InvalidInput):
            measure_product_bound([subgroup("a")], epsilon, CTX)

    def test_finite_index_factor(self):
        """Factors need infinite index."""
        with pytest.raises(InvalidInput):
            measure_product_bound([subgroup("a"), subgroup("a", "bb", "bab")], Fraction(1, 2), CTX)

    def test_reduce_product(self):
        """H_1 H_2 lies in C R with C of infinite index."""
        core, transversal = reduce_product([subgroup("a"), subgroup("b")], CTX)
        assert core == subgroup("a", "bb")
        assert transversal == words("", "b")
        assert not index(core, CTX).is_finite
        assert is_subgroup(subgroup("a"), core)


class TestProductWitness:
    """Words outside a product of subgroups."""

    @pytest.mark.parametrize(
        ["factors", "expected"],
        [([("a",)], "b"), ([("a",), ("b",)], "ba")],
    )
    def test_witness(self, factors, expected):
        """The shortlex-first escaping word is found."""
        witness = product_witness([subgroup(*factor) for factor in factors], CTX)
        assert witness.witness == words(expected)[0]
        assert verify_product_witness(witness, CTX).ok

    def test_image_outside_product(self):
        """phi(w) is not in phi(A) phi(B)."""
        factors = [subgroup("a"), subgroup("b")]
        witness = product_witness(factors, CTX)
        product = image_product_set(witness.quotient, factors, CTX)
        assert eval_word(witness.quotient, witness.witness) not in product
        assert witness.image_product_size == len(product)
        assert not contains(factors[0], witness.witness)

    def test_tampered_witness(self):
        """A word inside the product fails verification."""
        witness = product_witness([subgroup("a"), subgroup("b")], CTX)
        report = verify_product_witness(replace(witness, witness=words("ab")[0]), CTX)
        assert "orbit_escape" in [check.name for check in report.failed]

    def test_empty_family(self):
        """At least one factor is needed."""
        with pytest.raises(InvalidInput):
            product_witness([], CTX)


def test_shortest_escape():
    """Breadth-first search from point 0 in shortlex order."""
    quotient = FiniteQuotient(degree=3, perms=((1, 2, 0), (0, 1, 2)))
    assert shortest_escape(quotient, {0}, 2) == words("a")[0]
    assert shortest_escape(quotient, {0, 1}, 2) == words("A")[0]
    assert shortest_escape(quotient, {0, 1, 2}, 2) is None
    assert shortest_escape(quotient, set(), 2) == words("")[0]
