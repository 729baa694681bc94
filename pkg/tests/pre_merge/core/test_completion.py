"""Tests of finite-index completion and the low-index search."""

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

import pytest

from sgf.core import (
    AlreadySmaller,
    AvoidInSubgroup,
    CapExceeded,
    Caps,
    FreeGroupContext,
    InvalidInput,
    contains,
    complete,
    index,
    is_subgroup,
    low_index_covers,
    parse_word,
    whole_group,
)
from tests.helpers.groups import subgroup, words

CTX = FreeGroupContext(rank_k=2)


class TestComplete:
    """Completion of a core graph to a cover."""

    @pytest.mark.parametrize("target", [1, 2, 5, 12])
    def test_reaches_target(self, target):
        """The cover contains H and has exactly the padded index."""
        cover = complete(subgroup("a"), target, CTX)
        assert cover.is_cover()
        assert index(cover).value == max(target, 1)
        assert is_subgroup(subgroup("a"), cover)

    def test_canonical_closing(self):
        """Seed 0 closes <a> at index 2 to the b-parity subgroup."""
        assert complete(subgroup("a"), 2, CTX) == subgroup("a", "bb", "bab")

    @pytest.mark.parametrize("seed", [1, 2, 3, 7])
    def test_seeded_closing(self, seed):
        """A positive seed still gives a cover containing H, and the same one each time."""
        first = complete(subgroup("ab", "bba"), 9, CTX, seed=seed)
        assert first.is_cover() and first.num_vertices == 9
        assert is_subgroup(subgroup("ab", "bba"), first)
        assert complete(subgroup("ab", "bba"), 9, CTX, seed=seed) == first

    def test_avoid(self):
        """The avoided word traces to a vertex other than the base."""
        cover = complete(subgroup("a"), 2, CTX, avoid=parse_word("b"))
        assert not contains(cover, parse_word("b"))
        cover = complete(subgroup("a"), 4, CTX, avoid=words("b", "bab", "aab"))
        assert not any(contains(cover, word) for word in words("b", "bab", "aab"))

    def test_avoid_member(self):
        """A word of H cannot be avoided."""
        with pytest.raises(AvoidInSubgroup):
            complete(subgroup("a"), 3, CTX, avoid=[parse_word("aa")])

    def test_finite_index_input(self):
        """A cover is returned unchanged, or rejected when its index is too small."""
        cover = subgroup("a", "bb", "bab")
        assert complete(cover, 2, CTX) == cover
        with pytest.raises(AlreadySmaller):
            complete(whole_group(CTX), 2, CTX)

    def test_bad_target(self):
        """Targets must be positive and within the degree cap."""
        with pytest.raises(InvalidInput):
            complete(subgroup("a"), 0, CTX)
        small = FreeGroupContext(rank_k=2, caps=Caps(degree=10))
        with pytest.raises(CapExceeded):
            complete(subgroup("a"), 11, small)


class TestLowIndex:
    """Enumeration of finite-index subgroups."""

    def test_counts_in_f2(self):
        """F_2 has 1, 3 and 13 subgroups of index 1, 2 and 3."""
        found = list(low_index_covers(CTX, 3))
        assert [sum(1 for cover in found if cover.num_vertices == n) for n in (1, 2, 3)] == [1, 3, 13]
        assert len(set(found)) == len(found)

    def test_containing(self):
        """Only F_2 and the b-parity subgroup of index <= 2 contain a."""
        found = list(low_index_covers(CTX, 2, contains=words("a")))
        assert found == [whole_group(CTX), subgroup("a", "bb", "bab")]

    def test_sorted_by_index(self):
        """Covers come out in increasing index."""
        indices = [cover.num_vertices for cover in low_index_covers(CTX, 4, contains=words("ab"))]
        assert indices == sorted(indices)

    def test_node_budget(self):
        """A tiny budget stops the search and keeps what was found."""
        found = list(low_index_covers(CTX, 4, max_nodes=5))
        assert len(found) < 1 + 3 + 13 + 71

    def test_bad_index(self):
        """max_index must be positive."""
        with pytest.raises(InvalidInput):
            list(low_index_covers(CTX, 0))
