"""Tests of bounded bases and the kernel ball check."""

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

import pytest

from sgf.constructions import (
    bounded_base,
    choose_conjugators,
    kernel_ball_check,
    orbit_size,
    verify_base,
    verify_kernel_report,
)
from sgf.constructions.base import closed_reduced_walks
from sgf.core import FreeGroupContext, InvalidInput, contains, index
from tests.helpers.groups import subgroup, words

CTX = FreeGroupContext(rank_k=2)


class TestBoundedBase:
    """Infinite-index R meeting every member in finite index."""

    @pytest.fixture(scope="class")
    def record(self):
        return bounded_base([subgroup("a"), subgroup("b")], CTX)

    def test_values(self, record):
        """R = <a, bb> meets <a> fully and <b> in index 2."""
        assert record.r == subgroup("a", "bb")
        assert record.relative_indices == (1, 2)
        assert record.orbit_sizes == (1, 2)
        assert len(record.chain) == 1
        assert record.names == ("L1", "L2")
        assert not index(record.r, CTX).is_finite

    def test_verifies(self, record):
        """The chain and the relative indices verify."""
        assert verify_base(record, CTX).ok

    def test_tampered_indices(self, record):
        """Edited relative indices are caught."""
        report = verify_base(replace(record, relative_indices=(1, 1)), CTX)
        assert "relative_index_2" in [check.name for check in report.failed]

    def test_single_member(self):
        """A single member is its own base."""
        record = bounded_base([subgroup("ab")], CTX)
        assert record.r == subgroup("ab")
        assert record.relative_indices == (1,)
        assert record.chain == ()

    @pytest.mark.parametrize("members", [[], [("a",), ("a", "b")]])
    def test_invalid(self, members):
        """Empty families and finite-index members are rejected."""
        with pytest.raises(InvalidInput):
            bounded_base([subgroup(*member) for member in members], CTX)

    def test_orbit_size(self):
        """Orbit of the base point of R\\F under a member."""
        r = subgroup("a", "bb")
        assert orbit_size(r, subgroup("b"), words("")[0]) == 2
        assert orbit_size(r, subgroup("a"), words("")[0]) == 1
        assert orbit_size(subgroup("a"), subgroup("b"), words("")[0]) is None


class TestKernelBallCheck:
    """Short words in the intersection of conjugates."""

    def test_cyclic_subgroup_has_no_survivors(self):
        """Two conjugates of <a> already meet trivially."""
        report = kernel_ball_check(subgroup("a"), 4, 2, CTX)
        assert report.conjugators == tuple(words("b", "B"))
        assert report.survivors == ()
        assert report.ok
        assert verify_kernel_report(report, CTX).ok

    def test_normal_subgroup_survives(self):
        """A normal subgroup equals all its conjugates."""
        r = subgroup("a", "bb", "bab")
        report = kernel_ball_check(r, 2, 3, CTX)
        assert report.conjugators == ()
        assert words("a")[0] in report.survivors
        assert not report.ok
        assert all(contains(r, word) for word in report.survivors)
        verification = verify_kernel_report(report, CTX)
        assert [check.name for check in verification.failed] == ["no_survivors"]

    def test_seeded_selection(self):
        """A positive seed shuffles within each length."""
        first = choose_conjugators(subgroup("a"), 3, CTX, seed=5)
        assert first == choose_conjugators(subgroup("a"), 3, CTX, seed=5)
        assert len(first) == 3
        assert len({len(word) for word in first[:2]}) == 1

    def test_negative_radius(self):
        """Radius and count are non-negative."""
        with pytest.raises(InvalidInput):
            kernel_ball_check(subgroup("a"), -1, 2, CTX)

    def test_closed_walks(self):
        """Loops at the base of <a> up to length 2."""
        assert closed_reduced_walks(subgroup("a"), 2) == words("a", "A", "aa", "AA")
        assert closed_reduced_walks(subgroup("a"), 0) == []
