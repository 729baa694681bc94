"""Ambient free group and the enumeration limits every operation runs under."""

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

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

from omegaconf import DictConfig, ListConfig

from .exceptions import InvalidInput
from .word import MAX_RANK


@dataclass(frozen=True)
class Caps:
    """Upper limits on enumerations; exceeding one raises ``CapExceeded``."""

    closure: int = 200_000
    productset: int = 200_000
    degree: int = 5_000

    def __post_init__(self):
        for name in ("closure", "productset", "degree"):
            if getattr(self, name) < 1:
                raise InvalidInput(f"Cap {name} must be a positive integer.", {"cap": name})


@dataclass(frozen=True)
class SearchLimits:
    """Budgets of the quotient searches."""

    max_index: int = 6
    max_nodes: int = 200_000
    max_candidates: int = 400
    lift_length: int = 16
    epsilon_rounds: int = 20


@dataclass(frozen=True)
class FreeGroupContext:
    """The free group F_k together with caps and search budgets.

    Args:
        rank_k (int): Number of free generators, ``2 <= k <= 26``.
        caps (Caps): Enumeration caps.
        search (SearchLimits): Search budgets.
        exact_degree (int): Largest quotient degree for which exact image sets are enumerated.
        max_conjugator_length (int): Longest conjugator tried by the kernel check.
    """

    rank_k: int
    caps: Caps = field(default_factory=Caps)
    search: SearchLimits = field(default_factory=SearchLimits)
    exact_degree: int = 24
    max_conjugator_length: int = 6

    def __post_init__(self):
        if not 2 <= self.rank_k <= MAX_RANK:
            raise InvalidInput(f"Rank must lie in 2..{MAX_RANK}, got {self.rank_k}.", {"field": "rank"})

    @property
    def rank_gradient(self) -> Fraction:
        """Rank gradient of F_k, which Schreier's formula pins to ``k - 1``."""
        return Fraction(self.rank_k - 1)

    @classmethod
    def from_config(cls, config: Union[DictConfig, ListConfig], rank_k: int) -> "FreeGroupContext":
        """Build the context from a configuration loaded by ``get_configurable_parameters``."""
        caps = Caps(
            closure=int(config.caps.closure),
            productset=int(config.caps.productset),
            degree=int(config.caps.degree),
        )
        search = SearchLimits(
            max_index=int(config.search.max_index),
            max_nodes=int(config.search.max_nodes),
            max_candidates=int(config.search.max_candidates),
            lift_length=int(config.search.lift_length),
            epsilon_rounds=int(config.search.epsilon_rounds),
        )
        return cls(
            rank_k=rank_k,
            caps=caps,
            search=search,
            exact_degree=int(config.measure.exact_degree),
            max_conjugator_length=int(config.kernel.max_conjugator_length),
        )
