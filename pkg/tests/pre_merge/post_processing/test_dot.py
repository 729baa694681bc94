"""Tests of the DOT export."""

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

from sgf.post_processing import emit_dot
from tests.helpers.groups import subgroup

EXPECTED = """digraph "H" {
  rankdir=LR;
  node [shape=circle];
  v0 [shape=doublecircle];
  v1;
  v0 -> v0 [label="a"];
  v0 -> v1 [label="b"];
  v1 -> v0 [label="b"];
}
"""


def test_emit_dot():
    """Vertices in canonical order, then edges by tail and generator."""
    assert emit_dot(subgroup("a", "bb"), "H") == EXPECTED


def test_equal_subgroups_give_equal_bytes():
    """Different generating sets of one subgroup print the same."""
    assert emit_dot(subgroup("bb", "a", "abbA")) == emit_dot(subgroup("a", "bb"))


def test_trivial_subgroup():
    """The trivial subgroup is a lone base vertex."""
    assert emit_dot(subgroup(), "E").splitlines() == [
        'digraph "E" {',
        "  rankdir=LR;",
        "  node [shape=circle];",
        "  v0 [shape=doublecircle];",
        "}",
    ]
