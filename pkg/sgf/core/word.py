"""Freely reduced words over the generators of F_k.

Letters are signed integers: ``+i`` is the generator x_i and ``-i`` its inverse, for
``1 <= i <= k <= 26``. The text syntax uses ``a..z`` for the generators and ``A..Z``
for their inverses; the empty string is the identity.
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

import string
from dataclasses import dataclass
from typing import Iterable, Iterator, List, Optional, Tuple

from .exceptions import AlphabetError, InvalidInput

MAX_RANK = 26


def letter_order(rank_k: int) -> List[int]:
    """Letters in shortlex order: ``a, b, ..., A, B, ...``."""
    return list(range(1, rank_k + 1)) + [-gen for gen in range(1, rank_k + 1)]


def letter_name(letter: int) -> str:
    """Text form of a single signed letter."""
    if letter == 0 or abs(letter) > MAX_RANK:
        raise AlphabetError(f"Letter {letter} is outside the alphabet.")
    name = string.ascii_lowercase[abs(letter) - 1]
    return name if letter > 0 else name.upper()


def generator_name(generator: int) -> str:
    """Name of the generator with 1-based index ``generator``."""
    return letter_name(generator)


def generator_index(name: str, rank_k: Optional[int] = None) -> int:
    """Inverse of :func:`generator_name`."""
    if len(name) != 1 or name not in string.ascii_lowercase:
        raise AlphabetError(f"Unknown generator name {name!r}.")
    generator = string.ascii_lowercase.index(name) + 1
    if rank_k is not None and generator > rank_k:
        raise AlphabetError(f"Generator {name!r} does not exist in F_{rank_k}.")
    return generator


def _check_letter(letter: int, rank_k: Optional[int]) -> None:
    bound = MAX_RANK if rank_k is None else rank_k
    if letter == 0 or abs(letter) > bound:
        raise AlphabetError(f"Letter {letter} is outside 1..{bound}.", {"letter": letter, "rank": bound})


@dataclass(frozen=True)
class Word:
    """Freely reduced word; the empty word is the identity.

    Use :func:`reduce` or :func:`parse_word` to build words from arbitrary letter
    sequences; the constructor insists on reduced input.
    """

    letters: Tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "letters", tuple(self.letters))
        for letter in self.letters:
            _check_letter(letter, None)
        for left, right in zip(self.letters, self.letters[1:]):
            if left == -right:
                raise InvalidInput(f"Word {self.letters} is not freely reduced.")

    @classmethod
    def identity(cls) -> "Word":
        """Empty word."""
        return cls(())

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __str__(self) -> str:
        return "".join(letter_name(letter) for letter in self.letters)

    def __mul__(self, other: "Word") -> "Word":
        return reduce(self.letters + other.letters)

    def inverse(self) -> "Word":
        """Formal inverse, which is again reduced."""
        return Word(tuple(-letter for letter in reversed(self.letters)))

    def is_identity(self) -> bool:
        """True for the empty word."""
        return not self.letters

    def check_alphabet(self, rank_k: int) -> "Word":
        """Raise ``AlphabetError`` unless every letter belongs to F_k."""
        for letter in self.letters:
            _check_letter(letter, rank_k)
        return self

    def shortlex_key(self, rank_k: int = MAX_RANK) -> Tuple[int, Tuple[int, ...]]:
        """Sort key of the shortlex order used for every enumeration."""
        position = {letter: pos for pos, letter in enumerate(letter_order(rank_k))}
        return len(self.letters), tuple(position[letter] for letter in self.letters)


def reduce(raw: Iterable[int], rank_k: Optional[int] = None) -> Word:
    """Freely reduce a sequence of signed letters.

    Args:
        raw (Iterable[int]): Signed letters, ``+i`` for x_i and ``-i`` for its inverse.
        rank_k (Optional[int]): Rank of the free group used for the alphabet check.
            Defaults to the full 26-letter alphabet.

    Example:
        >>> str(reduce([1, 2, -2, -1]))
        ''
        >>> str(reduce([1, 2, -1]))
        'abA'

    Raises:
        AlphabetError: A letter lies outside ``1..k``.

    Returns:
        Word: The unique freely reduced form.
    """
    stack: List[int] = []
    for letter in raw:
        _check_letter(letter, rank_k)
        if stack and stack[-1] == -letter:
            stack.pop()
        else:
            stack.append(letter)
    return Word(tuple(stack))


def parse_word(text: str, rank_k: Optional[int] = None) -> Word:
    """Parse the ``a..z`` / ``A..Z`` syntax and reduce the result.

    Example:
        >>> str(parse_word("aA"))
        ''
        >>> parse_word("abA").letters
        (1, 2, -1)
    """
    letters: List[int] = []
    for char in text.strip():
        if char in string.ascii_lowercase:
            letters.append(string.ascii_lowercase.index(char) + 1)
        elif char in string.ascii_uppercase:
            letters.append(-(string.ascii_uppercase.index(char) + 1))
        else:
            raise AlphabetError(f"Unexpected character {char!r} in word {text!r}.", {"word": text})
    return reduce(letters, rank_k)


def iter_reduced_words(rank_k: int, max_length: int, min_length: int = 0) -> Iterator[Word]:
    """Reduced words of F_k in shortlex order with ``min_length <= len <= max_length``."""
    order = letter_order(rank_k)
    layer: List[Tuple[int, ...]] = [()]
    for length in range(max_length + 1):
        if length >= min_length:
            for letters in layer:
                yield Word(letters)
        layer = [letters + (letter,) for letters in layer for letter in order if not letters or letters[-1] != -letter]
