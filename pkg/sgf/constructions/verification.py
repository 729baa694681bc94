"""Independent re-derivation of every artifact a construction emits."""

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

import logging
from fractions import Fraction
from typing import Callable, Union

from sgf.core.context import FreeGroupContext
from sgf.core.exceptions import CapExceeded, InvalidInput, SgfError
from sgf.core.subgroup import conjugate, contains, index, intersect, is_subgroup, join, rank, relative_index
from sgf.core.word import Word
from sgf.quotients.measure import METHOD_INDEX, MeasureBound, exact_product_ratio
from sgf.quotients.quotient import (
    coset_action,
    eval_word,
    image_product_set,
    is_enumerable,
    orbit_product,
    orbit_product_bound,
)

from .base import BaseRecord, KernelReport, choose_conjugators, closed_reduced_walks
from .checks import VerificationReport, assert_true, compare, skip
from .lemma import LemmaResult, completion_target, rank_chain
from .olshanskii import OlshanskiiCertificate, verify_olshanskii
from .product import ProductWitness

logger = logging.getLogger(__name__)

Artifact = Union[OlshanskiiCertificate, LemmaResult, MeasureBound, ProductWitness, BaseRecord, KernelReport]


def _guarded(kind: str, body: Callable[[VerificationReport], None]) -> VerificationReport:
    report = VerificationReport(kind=kind)
    try:
        body(report)
    except SgfError as error:
        report.add(assert_true("recomputation", False, f"{error.reason}: {error.message}"))
    return report


def verify_lemma(result: LemmaResult, ctx: FreeGroupContext) -> VerificationReport:
    """Recompute the rank chain of a lemma run from its covers."""

    def body(report: VerificationReport) -> None:
        a, b, u, v = result.a, result.b, result.u, result.v
        report.add(assert_true("inputs_infinite_index", not index(a, ctx).is_finite and not index(b, ctx).is_finite))
        report.add(assert_true("u_cover", u.is_cover() and is_subgroup(a, u), "A <= U, [F:U] finite"))
        report.add(assert_true("v_cover", v.is_cover() and is_subgroup(b, v), "B <= V, [F:V] finite"))
        if report.failed:
            return
        target = completion_target(rank(a), rank(b), ctx.rank_k)
        report.add(compare("completion_target", result.report.completion_index, "==", target))
        report.add(compare("index_u", u.num_vertices, ">=", target))
        report.add(compare("index_v", v.num_vertices, ">=", target))
        a0, b0 = intersect(a, v), intersect(b, u)
        c = join(a0, b0)
        report.add(assert_true("a0_definition", result.a0 == a0, "A0 = A ∩ V"))
        report.add(assert_true("b0_definition", result.b0 == b0, "B0 = B ∩ U"))
        report.add(assert_true("c_definition", result.c == c, "C = <A0 ∪ B0>"))
        values = dict(
            index_u=u.num_vertices,
            index_v=v.num_vertices,
            index_uv=index(intersect(u, v)).require_finite("intersection of the covers"),
            index_a_a0=relative_index(a, v),
            index_b_b0=relative_index(b, u),
            rank_a=rank(a),
            rank_b=rank(b),
            rank_a0=rank(a0),
            rank_b0=rank(b0),
            rank_c=rank(c),
        )
        mismatched = sorted(key for key, value in values.items() if getattr(result.report, key) != value)
        report.add(assert_true("report_values", not mismatched, ", ".join(mismatched)))
        report.extend(rank_chain(values, ctx.rank_k))
        c_index = index(c, ctx)
        report.add(assert_true("infinite_index", not c_index.is_finite, f"[F:C] = {c_index}"))
        report.add(assert_true("deficiency_witness", c_index.deficiency == result.report.deficiency))

    return _guarded("lemma", body)


def verify_measure(bound: MeasureBound, ctx: FreeGroupContext) -> VerificationReport:
    """Recompute a measure bound in its witness quotient."""

    def body(report: VerificationReport) -> None:
        quotient, subgroups = bound.witness_quotient, list(bound.subgroups)
        report.add(assert_true("rank", all(h.rank_k == ctx.rank_k == quotient.rank_k for h in subgroups)))
        report.add(assert_true("quotient_transitive", quotient.is_transitive()))
        if report.failed:
            return
        if bound.method == METHOD_INDEX:
            (subgroup,) = subgroups
            result = index(subgroup, ctx)
            report.add(assert_true("finite_index", result.is_finite, f"[F:H] = {result}"))
            if report.failed:
                return
            report.add(compare("exact_measure", bound.bound, "==", Fraction(1, result.value), "mu(H) = 1/[F:H]"))
            report.add(assert_true("index_quotient", quotient == coset_action(subgroup), "phi is the coset action"))
            return
        orbit_bound = orbit_product_bound(quotient, subgroups)
        report.add(compare("orbit_bound", bound.orbit_bound, "==", orbit_bound, "|x0 H_1 ... H_n| / N"))
        ratio = exact_product_ratio(quotient, subgroups, ctx)
        if ratio is None:
            report.add(skip("product_ratio", "image group too large to enumerate"))
            expected = orbit_bound
        else:
            report.add(compare("product_ratio", bound.product_ratio, "==", ratio, "|phi(H_1) ... phi(H_n)| / |K|"))
            expected = min(orbit_bound, ratio)
        report.add(compare("bound", bound.bound, "==", expected, "min of the orbit and exact ratios"))
        if bound.epsilon is not None:
            report.add(compare("epsilon_bound", bound.bound, "<=", bound.epsilon))
        if bound.left_transversal or bound.right_transversal:
            left = bound.left_transversal or (Word(),)
            right = bound.right_transversal or (Word(),)
            reached = {quotient.act(0, head * tail) for head in left for tail in right}
            report.add(
                assert_true(
                    "transversal_cover",
                    orbit_product(quotient, subgroups) <= reached,
                    "x0 H_1 ... H_n lies in {x0 l r}",
                )
            )
            if bound.epsilon is not None:
                report.add(
                    compare(
                        "transversal_size",
                        len(left) * len(right),
                        "<=",
                        bound.epsilon * quotient.degree,
                        "|L| |R| <= eps N",
                    )
                )

    return _guarded("measure", body)


def verify_product_witness(witness: ProductWitness, ctx: FreeGroupContext) -> VerificationReport:
    """Re-check that the witness maps outside the product in its quotient."""

    def body(report: VerificationReport) -> None:
        quotient, subgroups = witness.quotient, list(witness.subgroups)
        report.add(
            assert_true(
                "inputs_infinite_index",
                all(not index(subgroup, ctx).is_finite for subgroup in subgroups),
                "every factor has infinite index",
            )
        )
        inside = orbit_product(quotient, subgroups)
        report.add(compare("orbit_size", witness.orbit_size, "==", len(inside)))
        report.add(
            assert_true("orbit_escape", quotient.act(0, witness.witness) not in inside, "x0 w outside x0 H_1 ... H_n")
        )
        if not is_enumerable(quotient, ctx):
            report.add(skip("image_escape", "image group too large to enumerate"))
            return
        try:
            product = image_product_set(quotient, subgroups, ctx)
        except CapExceeded as error:
            report.add(skip("image_escape", str(error)))
            return
        report.add(assert_true("image_escape", eval_word(quotient, witness.witness) not in product))
        if witness.image_product_size is not None:
            report.add(compare("image_product_size", witness.image_product_size, "==", len(product)))

    return _guarded("product-witness", body)


def verify_base(record: BaseRecord, ctx: FreeGroupContext) -> VerificationReport:
    """Re-check R, its relative indices and every certificate of the chain."""

    def body(report: VerificationReport) -> None:
        subgroups, r = record.subgroups, record.r
        report.add(compare("chain_length", len(record.chain), "==", len(subgroups) - 1))
        if report.failed:
            return
        current = subgroups[0]
        for position, cert in enumerate(record.chain, start=1):
            linked = cert.a == current and cert.b == subgroups[position]
            report.add(assert_true(f"chain_{position}_inputs", linked, "(R_i, L_i+1)"))
            failed = [check.name for check in verify_olshanskii(cert, ctx).failed]
            report.add(assert_true(f"chain_{position}_certificate", not failed, ", ".join(failed)))
            current = cert.c
        report.add(assert_true("r_definition", r == current, "R is the last join"))
        r_index = index(r, ctx)
        report.add(assert_true("infinite_index", not r_index.is_finite, f"[F:R] = {r_index}"))
        for position, subgroup in enumerate(subgroups):
            value = relative_index(subgroup, r)
            report.add(assert_true(f"relative_index_{position + 1}_finite", value is not None))
            if value is None:
                continue
            report.add(compare(f"relative_index_{position + 1}", record.relative_indices[position], "==", value))
            report.add(compare(f"orbit_size_{position + 1}", record.orbit_sizes[position], "==", value))

    return _guarded("base", body)


def verify_kernel_report(kernel: KernelReport, ctx: FreeGroupContext) -> VerificationReport:
    """Recompute the intersection and the survivors of a kernel check."""

    def body(report: VerificationReport) -> None:
        r = kernel.r
        expected = choose_conjugators(r, len(kernel.conjugators), ctx, kernel.seed)
        report.add(assert_true("conjugators", list(kernel.conjugators) == expected, "selection recomputed"))
        intersection = r
        for word in kernel.conjugators:
            intersection = intersect(intersection, conjugate(r, word))
        report.add(assert_true("intersection", intersection == kernel.intersection))
        survivors = closed_reduced_walks(intersection, kernel.radius)
        report.add(assert_true("survivors", list(kernel.survivors) == survivors, "survivor list recomputed"))
        members = all(contains(r, word) for word in kernel.survivors)
        report.add(assert_true("survivors_in_r", members))
        report.add(compare("no_survivors", len(survivors), "==", 0, "no short word acts trivially"))

    return _guarded("kernel-check", body)


def verify_artifact(artifact: Artifact, ctx: FreeGroupContext) -> VerificationReport:
    """Dispatch to the verifier of the artifact's kind.

    Raises:
        InvalidInput: The object is not a certificate.
    """
    if isinstance(artifact, OlshanskiiCertificate):
        return verify_olshanskii(artifact, ctx)
    if isinstance(artifact, LemmaResult):
        return verify_lemma(artifact, ctx)
    if isinstance(artifact, MeasureBound):
        return verify_measure(artifact, ctx)
    if isinstance(artifact, ProductWitness):
        return verify_product_witness(artifact, ctx)
    if isinstance(artifact, BaseRecord):
        return verify_base(artifact, ctx)
    if isinstance(artifact, KernelReport):
        return verify_kernel_report(artifact, ctx)
    raise InvalidInput(f"Cannot verify an object of type {type(artifact).__name__}.", {"field": "kind"})
