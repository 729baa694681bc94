"""Finite quotients of free groups and the profinite measure."""

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

from .measure import (
    METHOD_INDEX,
    METHOD_ORBIT,
    METHOD_PRODUCT_SET,
    MeasureBound,
    certify,
    exact_product_ratio,
    measure_subgroup,
    rank_gradient_estimate,
)
from .permutation import Perm, closure, compose, group_order, identity, invert, product_set, to_cycles
from .quotient import (
    FiniteQuotient,
    coset_action,
    eval_word,
    group_elements,
    image_elements,
    image_generators,
    image_product_set,
    image_product_size,
    image_subgroup,
    is_enumerable,
    normal_core_data,
    orbit,
    orbit_product,
    orbit_product_bound,
    preimage_cover,
    stabilizer_cover,
)

__all__ = [
    "FiniteQuotient",
    "METHOD_INDEX",
    "METHOD_ORBIT",
    "METHOD_PRODUCT_SET",
    "MeasureBound",
    "Perm",
    "certify",
    "closure",
    "compose",
    "coset_action",
    "eval_word",
    "exact_product_ratio",
    "group_elements",
    "group_order",
    "identity",
    "image_elements",
    "image_generators",
    "image_product_set",
    "image_product_size",
    "image_subgroup",
    "invert",
    "is_enumerable",
    "measure_subgroup",
    "normal_core_data",
    "orbit",
    "orbit_product",
    "orbit_product_bound",
    "preimage_cover",
    "product_set",
    "rank_gradient_estimate",
    "stabilizer_cover",
    "to_cycles",
]
