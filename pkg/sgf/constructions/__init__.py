"""Certified constructions: joins of infinite index, product witnesses and bounded bases."""

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

from .base import BaseRecord, KernelReport, bounded_base, choose_conjugators, kernel_ball_check, orbit_size
from .checks import Check, VerificationReport
from .lemma import LemmaReport, LemmaResult, lemma_weak_ol
from .olshanskii import (
    NA_PREIMAGE,
    NA_STABILIZER,
    AvoidSection,
    OlshanskiiCertificate,
    epsilon_for,
    olshanskii,
    verify_olshanskii,
)
from .product import ProductWitness, measure_product_bound, product_witness
from .search import QuotientSearchResult, find_small_product_quotient
from .verification import (
    verify_artifact,
    verify_base,
    verify_kernel_report,
    verify_lemma,
    verify_measure,
    verify_product_witness,
)

__all__ = [
    "AvoidSection",
    "BaseRecord",
    "Check",
    "KernelReport",
    "LemmaReport",
    "LemmaResult",
    "NA_PREIMAGE",
    "NA_STABILIZER",
    "OlshanskiiCertificate",
    "ProductWitness",
    "QuotientSearchResult",
    "VerificationReport",
    "bounded_base",
    "choose_conjugators",
    "epsilon_for",
    "find_small_product_quotient",
    "kernel_ball_check",
    "lemma_weak_ol",
    "measure_product_bound",
    "olshanskii",
    "orbit_size",
    "product_witness",
    "verify_artifact",
    "verify_base",
    "verify_kernel_report",
    "verify_lemma",
    "verify_measure",
    "verify_product_witness",
]
