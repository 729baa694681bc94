"""Tests of the finite-index pair construction with its rank chain."""

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
from dataclasses import replace

import pytest

from sgf.constructions import lemma_weak_ol, verify_lemma
from sgf.constructions.lemma import completion_target
from sgf.core import Deficiency, FreeGroupContext, InvalidInput, index, is_subgroup
from sgf.data import random_subgroup
from tests.helpers.groups import subgroup

CTX = FreeGroupContext(rank_k=2)


class TestLemma:
    """Lemma on the two cyclic factors of F_2."""

    @pytest.fixture(scope="class")
    def result(self):
        return lemma_weak_ol(subgroup("a"), subgroup("b"), CTX)

    def test_values(self, result):
        """Covers of index 2 cut out the squares of the generators."""
        report = result.report
        assert report.completion_index == 2
        assert report.index_u == report.index_v == 2
        assert report.index_uv == 4
        assert result.a0 == subgroup("aa")
        assert result.b0 == subgroup("bb")
        assert result.c == subgroup("aa", "bb")
        assert report.rank_c == 2
        assert report.ok

    def test_join_has_infinite_index(self, result):
        """C witnesses its infinite index by a deficient vertex."""
        assert not index(result.c, CTX).is_finite
        assert isinstance(result.report.deficiency, Deficiency)
        assert is_subgroup(result.a0, result.a) and is_subgroup(result.b0, result.b)

    def test_verifies(self, result):
        """The recorded result verifies."""
        assert verify_lemma(result, CTX).ok

    def test_tampered_join_fails(self, result):
        """A wrong C is caught."""
        report = verify_lemma(replace(result, c=subgroup("aa")), CTX)
        assert not report.ok
        assert "c_definition" in [check.name for check in report.failed]

    def test_finite_index_input(self):
        """Finite-index inputs are rejected."""
        with pytest.raises(InvalidInput):
            lemma_weak_ol(subgroup("a", "b"), subgroup("b"), CTX)


@pytest.mark.parametrize(
    ["rank_a", "rank_b", "rank_k", "expected"],
    [(1, 1, 2, 2), (0, 0, 2, 1), (2, 1, 2, 4), (3, 1, 3, 3), (1, 1, 4, 1)],
)
def test_completion_target(rank_a, rank_b, rank_k, expected):
    """``ceil(2 max(d(A), d(B)) / (k - 1))``, at least 1."""
    assert completion_target(rank_a, rank_b, rank_k) == expected


@pytest.mark.parametrize("seed", range(6))
def test_random_pairs(seed):
    """The chain holds on seeded random pairs."""
    rng = random.Random(seed)
    _, a = random_subgroup(rng, CTX, 2, 4)
    _, b = random_subgroup(rng, CTX, 2, 4)
    result = lemma_weak_ol(a, b, CTX, seed=seed)
    assert result.report.ok
    assert not index(result.c, CTX).is_finite
    assert verify_lemma(result, CTX).ok
