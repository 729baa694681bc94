"""Tests of Stallings graphs: folding, membership, index and subgroup operations."""

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

import pytest
from hypothesis import given, settings

from sgf.core import (
    OUT,
    Deficiency,
    FreeGroupContext,
    InfiniteIndex,
    InvalidInput,
    StallingsGraph,
    basis,
    conjugate,
    contains,
    from_generators,
    index,
    intersect,
    is_subgroup,
    join,
    join_all,
    left_transversal,
    parse_word,
    rank,
    relative_index,
    right_transversal,
    trivial_subgroup,
    whole_group,
)
from sgf.core.folding import FoldingGraph
from sgf.data import dumps, encode_graph, random_word
from tests.helpers.groups import generator_lists, product_closure, reduced_words, subgroup, words


CTX = FreeGroupContext(rank_k=2)


class TestFolding:
    """Folding produces canonical graphs."""

    def test_index_two_example(self):
        """<b, a^2, aba^-1> folds to the two-vertex cover."""
        graph = subgroup("b", "aa", "abA")
        assert graph.num_vertices == 2
        assert graph.is_cover()
        assert index(graph).value == 2
        assert rank(graph) == 3

    def test_canonical_form(self):
        """Different generating sets of one subgroup give equal graphs."""
        assert subgroup("a", "bb") == subgroup("bb", "a", "abbA", "bbabb")
        assert subgroup("aa", "aaa") == subgroup("a")

    def test_trim_hanging_trees(self):
        """A generator conjugated by a hanging path folds back to the core."""
        graph = subgroup("baB")
        assert graph.num_vertices == 2
        assert rank(graph) == 1

    @pytest.mark.parametrize("seed", range(200))
    def test_fold_order_does_not_matter(self, seed):
        """Random merge orders of a random generator set serialize identically."""
        rng = random.Random(seed)
        generators = [random_word(rng, 2, 1, 6) for _ in range(rng.randint(1, 4))]
        expected = dumps(encode_graph(from_generators(generators, CTX)))
        for _ in range(3):
            builder = FoldingGraph(2)
            base = builder.add_vertex()
            for word in rng.sample(generators, len(generators)):
                builder.add_path(base, word.letters, base)
            builder.fold(random.Random(rng.randrange(2**32)))
            assert dumps(encode_graph(builder.to_graph(base))) == expected

    def test_graph_validation(self):
        """Unfolded edge maps are rejected."""
        with pytest.raises(InvalidInput):
            StallingsGraph(rank_k=2, num_vertices=2, targets=((1, 1), (-1, -1)))
        with pytest.raises(InvalidInput):
            StallingsGraph.from_edges(2, 2, [(0, 1, 1), (0, 1, 0)])

    def test_trivial_and_whole(self):
        """The trivial subgroup is the bare base; F_k is a bouquet of loops."""
        assert trivial_subgroup(CTX).is_trivial()
        assert from_generators([], CTX) == trivial_subgroup(CTX)
        assert index(whole_group(CTX)).value == 1
        assert subgroup("a", "b") == whole_group(CTX)


class TestMembership:
    """Membership is a closed path at the base."""

    @pytest.mark.parametrize(
        ["generators", "word", "expected"],
        [
            (("a", "bb"), "abba", True),
            (("a", "bb"), "b", False),
            (("a", "bb"), "bab", False),
            (("ab",), "abab", True),
            (("ab",), "ba", False),
            (("abA",), "abbA", True),
        ],
    )
    def test_contains(self, generators, word, expected):
        """Known members and non-members."""
        assert contains(subgroup(*generators), parse_word(word)) is expected

    @settings(max_examples=40, deadline=None)
    @given(generator_lists(max_words=2, max_size=4))
    def test_products_are_members(self, generators):
        """Every short product of generators is accepted."""
        graph = from_generators(generators, CTX)
        for word in product_closure(generators, 3):
            assert contains(graph, word)


class TestIndex:
    """Index and deficiency witnesses."""

    def test_infinite_index_witness(self):
        """<a> lacks an outgoing b-edge at the base."""
        result = index(subgroup("a"))
        assert not result.is_finite
        assert result.deficiency == Deficiency(0, 2, OUT)
        assert result.deficiency.describe() == "v0 lacks an outgoing b-edge"

    def test_join_example_witness(self):
        """<a, b^2> lacks an outgoing a-edge at its second vertex."""
        assert index(subgroup("a", "bb")).deficiency == Deficiency(1, 1, OUT)

    def test_require_finite(self):
        """Asking for the index of an infinite-index subgroup raises."""
        with pytest.raises(InfiniteIndex):
            index(subgroup("a")).require_finite()

    def test_rank_mismatch(self):
        """The context must match the graph."""
        with pytest.raises(InvalidInput):
            index(subgroup("a"), FreeGroupContext(rank_k=3))


class TestOperations:
    """Intersections, joins, conjugates and transversals."""

    def test_intersect_powers(self):
        """<a^2> ∩ <a^3> = <a^6>."""
        assert intersect(subgroup("aa"), subgroup("aaa")) == subgroup("aaaaaa")

    def test_intersect_disjoint(self):
        """<a> ∩ <b> is trivial."""
        assert intersect(subgroup("a"), subgroup("b")).is_trivial()

    def test_join_powers(self):
        """<a^2> ∨ <a^3> = <a>."""
        assert join(subgroup("aa"), subgroup("aaa")) == subgroup("a")

    def test_join_all(self):
        """Joining the generators' cyclic subgroups gives F_2."""
        assert join_all([subgroup("a"), subgroup("b")], CTX) == whole_group(CTX)
        assert join_all([], CTX).is_trivial()

    def test_conjugate(self):
        """b^-1 <a> b contains b^-1 a b and not a."""
        graph = conjugate(subgroup("a"), parse_word("b"))
        assert contains(graph, parse_word("Bab"))
        assert not contains(graph, parse_word("a"))
        assert conjugate(graph, parse_word("B")) == subgroup("a")

    def test_basis(self):
        """A free basis is read off the non-tree edges."""
        assert basis(subgroup("bb", "a")) == words("a", "bb")
        assert basis(subgroup("a", "bb", "abbA")) == words("a", "bb")

    def test_relative_index(self):
        """[<b> : <b> ∩ <a, b^2>] = 2 with transversal {1, b}."""
        b, c = subgroup("b"), subgroup("a", "bb")
        assert relative_index(b, c) == 2
        assert right_transversal(b, c) == words("", "b")
        assert left_transversal(b, c) == words("", "B")

    def test_relative_index_infinite(self):
        """<a> meets <b> trivially, so the relative index is infinite."""
        assert relative_index(subgroup("a"), subgroup("b")) is None
        with pytest.raises(InfiniteIndex):
            right_transversal(subgroup("a"), subgroup("b"))

    def test_is_subgroup(self):
        """Inclusion is decided on a basis."""
        assert is_subgroup(subgroup("aa"), subgroup("a"))
        assert not is_subgroup(subgroup("a"), subgroup("aa"))

    @settings(max_examples=40, deadline=None)
    @given(generator_lists(max_words=2, max_size=4), generator_lists(max_words=2, max_size=4), reduced_words())
    def test_intersection_is_conjunction(self, first, second, word):
        """w lies in H ∩ K exactly when it lies in both."""
        h, k = from_generators(first, CTX), from_generators(second, CTX)
        assert contains(intersect(h, k), word) == (contains(h, word) and contains(k, word))

    @settings(max_examples=40, deadline=None)
    @given(generator_lists(max_words=2, max_size=4), generator_lists(max_words=2, max_size=4))
    def test_join_contains_both(self, first, second):
        """H and K lie in H ∨ K, which lies in any subgroup containing both."""
        h, k = from_generators(first, CTX), from_generators(second, CTX)
        joined = join(h, k)
        assert is_subgroup(h, joined) and is_subgroup(k, joined)
        assert joined == from_generators(list(first) + list(second), CTX)

    @settings(max_examples=40, deadline=None)
    @given(generator_lists(max_words=3, max_size=5))
    def test_basis_generates(self, generators):
        """The basis generates the subgroup and has d(H) elements."""
        graph = from_generators(generators, CTX)
        assert from_generators(basis(graph), CTX) == graph
        assert len(basis(graph)) == rank(graph)
