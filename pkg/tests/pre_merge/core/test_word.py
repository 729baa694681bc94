"""Tests of reduced words."""

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
from hypothesis import given

from sgf.core import AlphabetError, InvalidInput, Word, iter_reduced_words, letter_order, parse_word, reduce
from sgf.core.word import generator_index, generator_name
from tests.helpers.groups import reduced_words

PARSE_CASES = [
    ("", ()),
    ("a", (1,)),
    ("abA", (1, 2, -1)),
    ("aA", ()),
    ("abBA", ()),
    ("aabAB", (1, 1, 2, -1, -2)),
]


class TestWord:
    """Parsing, reduction and ordering of words."""

    @pytest.mark.parametrize(["text", "letters"], PARSE_CASES)
    def test_parse_reduces(self, text, letters):
        """Parsing cancels adjacent inverse pairs."""
        assert parse_word(text).letters == letters

    def test_str_round_trip(self):
        """The text form reads back to the same word."""
        word = parse_word("abAB")
        assert str(word) == "abAB"
        assert parse_word(str(word)) == word

    def test_constructor_rejects_unreduced(self):
        """Words must be built reduced."""
        with pytest.raises(InvalidInput):
            Word((1, -1))

    def test_alphabet_is_checked(self):
        """A letter beyond the rank is rejected."""
        with pytest.raises(AlphabetError):
            parse_word("c", rank_k=2)
        with pytest.raises(AlphabetError):
            parse_word("a1")

    def test_multiplication_reduces(self):
        """Products are freely reduced."""
        assert parse_word("ab") * parse_word("Ba") == parse_word("aa")
        assert (parse_word("abA") * parse_word("aBA")).is_identity()

    def test_letter_order(self):
        """Lower case letters precede upper case ones."""
        assert letter_order(2) == [1, 2, -1, -2]

    def test_shortlex_enumeration(self):
        """Words come out by length, then by letter order."""
        listed = [str(word) for word in iter_reduced_words(2, 1)]
        assert listed == ["", "a", "b", "A", "B"]

    @pytest.mark.parametrize(["rank_k", "length", "count"], [(2, 2, 12), (2, 3, 36), (3, 2, 30)])
    def test_reduced_word_count(self, rank_k, length, count):
        """There are 2k (2k - 1)^(n - 1) reduced words of length n."""
        assert sum(1 for _ in iter_reduced_words(rank_k, length, min_length=length)) == count

    def test_generator_names(self):
        """Generator names and indices are inverse to each other."""
        assert generator_name(3) == "c"
        assert generator_index("c") == 3
        with pytest.raises(AlphabetError):
            generator_index("c", rank_k=2)

    @given(reduced_words())
    def test_inverse_cancels(self, word):
        """w w^-1 is the identity."""
        assert (word * word.inverse()).is_identity()
        assert (word.inverse() * word).is_identity()

    @given(reduced_words(), reduced_words(), reduced_words())
    def test_associative(self, first, second, third):
        """Reduction makes multiplication associative."""
        assert (first * second) * third == first * (second * third)

    @given(reduced_words())
    def test_reduce_is_idempotent(self, word):
        """Reducing a reduced word changes nothing."""
        assert reduce(word.letters) == word
