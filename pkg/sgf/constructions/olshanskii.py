"""Finite-index ``B0 <= B`` such that ``<A ∪ B0>`` still has infinite index.

With ``r = max(d(A), d(B))`` and ``eps = (k - 1) / (2r)``, find a quotient
``phi: F -> K`` with ``|phi(A) phi(B)| / |K| <= eps``, let NA be the preimage of
``phi(A)`` and set ``B0 = B ∩ NA``, ``C = <A ∪ B0>``. Then
``[B : B0] <= eps [F : NA]`` and Schreier's formula bounds ``d(C)`` below what a
finite-index subgroup of NA would need, so C has infinite index. Every quantity of that
argument is recorded in the certificate and re-derived by ``verify_olshanskii``.
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

import logging
import math
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

from sgf.core.completion import complete
from sgf.core.context import FreeGroupContext
from sgf.core.exceptions import CapExceeded, InvalidInput, SearchExhausted, SgfError
from sgf.core.graph import StallingsGraph
from sgf.core.subgroup import (
    Deficiency,
    basis,
    contains,
    from_generators,
    index,
    intersect,
    is_subgroup,
    join,
    rank,
    relative_index,
)
from sgf.core.word import Word
from sgf.quotients.permutation import group_contains, group_order, product_set
from sgf.quotients.quotient import (
    FiniteQuotient,
    coset_action,
    group_elements,
    image_elements,
    image_generators,
    is_enumerable,
    orbit_product_bound,
    preimage_cover,
)

from .checks import Check, VerificationReport, assert_true, compare, skip
from .search import (
    STRATEGY_JOIN_COMPLETION,
    STRATEGY_LEMMA_QUOTIENT,
    STRATEGY_SMALL_COVER,
    best_small_cover,
    covers_containing,
    lemma_quotient,
)

logger = logging.getLogger(__name__)

NA_PREIMAGE = "preimage"
NA_STABILIZER = "stabilizer"


@dataclass(frozen=True)
class AvoidSection:
    """Variant of the construction whose join also avoids a finite set of words.

    ``U ⊇ A`` is a cover missing every avoid word, ``H0 = B0 ∩ U`` and
    ``C_S = <A ∪ H0>``.
    """

    words: Tuple[Word, ...]
    u: StallingsGraph
    h0: StallingsGraph
    h0_generators: Tuple[Word, ...]
    index_b_h0: int
    c: StallingsGraph
    deficiency: Optional[Deficiency]


@dataclass(frozen=True)
class OlshanskiiCertificate:
    """Full transcript of one construction run."""

    a: StallingsGraph
    b: StallingsGraph
    r: int
    epsilon: Fraction
    strategy: str
    quotient: FiniteQuotient
    na_mode: str
    na_cover: StallingsGraph
    b0: StallingsGraph
    b0_generators: Tuple[Word, ...]
    index_b_b0: int
    c: StallingsGraph
    deficiency: Optional[Deficiency]
    chain: Dict[str, Any] = field(default_factory=dict)
    seed: int = 0
    names: Tuple[str, str] = ("A", "B")
    avoiding: Optional[AvoidSection] = None

    @property
    def rank_k(self) -> int:
        """Rank of the ambient free group."""
        return self.a.rank_k


def epsilon_for(rank_a: int, rank_b: int, rank_k: int) -> Tuple[int, Fraction]:
    """``r = max(d(A), d(B), 1)`` and ``eps = (k - 1) / (2r)``."""
    r = max(rank_a, rank_b, 1)
    return r, Fraction(rank_k - 1, 2 * r)


def _interleave(*streams: Iterable[StallingsGraph]) -> Iterator[StallingsGraph]:
    """Round-robin over the streams until all of them run dry."""
    pending = deque(iter(stream) for stream in streams)
    while pending:
        stream = pending.popleft()
        for candidate in stream:
            yield candidate
            pending.append(stream)
            break


def _completion_cuts(a: StallingsGraph, b: StallingsGraph, ctx: FreeGroupContext) -> Iterator[StallingsGraph]:
    for target in range(2, 2 * ctx.search.max_index + 1):
        for seed in range(4):
            yield intersect(b, complete(a, target, ctx, seed=seed))


def _pair_cuts(cuts: Sequence[StallingsGraph], covers: Sequence[StallingsGraph]) -> Iterator[StallingsGraph]:
    for first, cut in enumerate(cuts):
        for second in range(first + 1, len(covers)):
            yield intersect(cut, covers[second])


def join_candidates(
    b: StallingsGraph, covers: Sequence[StallingsGraph], a: StallingsGraph, ctx: FreeGroupContext
) -> Iterator[StallingsGraph]:
    """Finite-index subgroups of B to join with A.

    B itself comes first. After it, cuts of B by completions of A, cuts by single low-index covers
    containing A and cuts by pairs of such covers are taken in turn, one from each, with covers
    ordered by index.
    """
    yield b
    covers = sorted(covers, key=lambda cover: cover.num_vertices)
    cuts = [intersect(b, cover) for cover in covers]
    yield from _interleave(_completion_cuts(a, b, ctx), cuts, _pair_cuts(cuts, covers))


def _join_completion(
    a: StallingsGraph,
    b: StallingsGraph,
    covers: Sequence[StallingsGraph],
    epsilon: Fraction,
    ctx: FreeGroupContext,
    seed: int,
) -> Tuple[Optional[StallingsGraph], bool]:
    """Cover ``W ⊇ <A ∪ B1>`` of index at least ``[B : B1] / eps``.

    ``B1`` is the first candidate whose join with A has infinite index. The flag is True when
    ``search.max_candidates`` ran out before the candidates did.
    """
    seen = set()
    tried = 0
    for candidate in join_candidates(b, covers, a, ctx):
        if candidate in seen:
            continue
        seen.add(candidate)
        tried += 1
        if tried > ctx.search.max_candidates:
            logger.warning("Join-completion search stopped after %d candidates", ctx.search.max_candidates)
            return None, True
        joined = join(a, candidate)
        if index(joined, ctx).is_finite:
            continue
        cut = relative_index(b, candidate)
        target = max(math.ceil(cut / epsilon), 1)
        if target > ctx.caps.degree:
            continue
        logger.debug("Candidate %d: [B:B1] = %d, completing the join to index >= %d", tried, cut, target)
        return complete(joined, target, ctx, seed=seed), False
    return None, False


def _select_quotient(
    a: StallingsGraph, b: StallingsGraph, epsilon: Fraction, ctx: FreeGroupContext, seed: int
) -> Tuple[str, FiniteQuotient, Optional[StallingsGraph]]:
    """Quotient with small product ratio; the cover is returned when it contains A."""
    covers = covers_containing(a, ctx)
    cover = best_small_cover(covers, b, epsilon)
    if cover is not None:
        logger.info("Using a cover of index %d found by low-index search", cover.num_vertices)
        return STRATEGY_SMALL_COVER, coset_action(cover), cover
    cover, out_of_candidates = _join_completion(a, b, covers, epsilon, ctx, seed)
    if cover is not None:
        logger.info("Using a completed join of index %d", cover.num_vertices)
        return STRATEGY_JOIN_COMPLETION, coset_action(cover), cover
    logger.info("Falling back to the lemma quotient")
    try:
        found = lemma_quotient(a, b, epsilon, ctx, seed=seed)
    except CapExceeded as error:
        message = "No quotient with a small product set was found."
        details = dict(error.details)
        if out_of_candidates:
            message += f" The join search stopped after {ctx.search.max_candidates} candidates."
            details["max_candidates"] = ctx.search.max_candidates
        raise SearchExhausted(message, details) from error
    return STRATEGY_LEMMA_QUOTIENT, found.quotient, None


def _normal_subgroup_cover(
    a: StallingsGraph, quotient: FiniteQuotient, cover: Optional[StallingsGraph], ctx: FreeGroupContext
) -> Tuple[str, StallingsGraph]:
    """NA as the preimage of ``phi(A)`` when ``K`` is small enough, otherwise the cover itself."""
    if is_enumerable(quotient, ctx):
        image_order = group_order(image_generators(quotient, a), quotient.degree)
        if cover is not None and image_order * quotient.degree == quotient.order:
            return NA_PREIMAGE, cover
        if quotient.order // image_order <= ctx.caps.degree:
            image = image_elements(quotient, a, ctx)
            return NA_PREIMAGE, preimage_cover(quotient, image, group_elements(quotient, ctx), ctx)
    if cover is None:
        raise SearchExhausted(
            "The quotient is too large to build the preimage of phi(A).",
            {"degree": quotient.degree},
        )
    return NA_STABILIZER, cover


def chain_values(
    a: StallingsGraph,
    b: StallingsGraph,
    quotient: FiniteQuotient,
    na_cover: StallingsGraph,
    b0: StallingsGraph,
    c: StallingsGraph,
    r: int,
    epsilon: Fraction,
    ctx: FreeGroupContext,
) -> Dict[str, Any]:
    """Every number of the inequality chain, image-level ones None when ``K`` is too large."""
    index_na = na_cover.num_vertices
    index_b_b0 = relative_index(b, na_cover)
    values: Dict[str, Any] = {
        "index_na": index_na,
        "index_b_b0": index_b_b0,
        "epsilon_index_na": epsilon * index_na,
        "orbit_bound": orbit_product_bound(quotient, [a, b]),
        "rank_a": rank(a),
        "rank_b": rank(b),
        "rank_b0": rank(b0),
        "rank_c": rank(c),
        "rank_join_bound": rank(a) + rank(b0),
        "rank_schreier_bound": 2 * r * index_b_b0,
        "rank_index_bound": index_na * (ctx.rank_k - 1),
        "order_k": None,
        "image_a": None,
        "image_b": None,
        "image_b0": None,
        "image_ab_intersection": None,
        "image_product": None,
        "product_ratio": None,
    }
    if not is_enumerable(quotient, ctx):
        return values
    try:
        image_a = image_elements(quotient, a, ctx)
        image_b = image_elements(quotient, b, ctx)
        image_b0 = image_elements(quotient, b0, ctx)
        product = product_set([image_a, image_b], quotient.degree, ctx.caps.productset)
    except CapExceeded as error:
        logger.debug("Image-level chain skipped: %s", error)
        return values
    values.update(
        order_k=quotient.order,
        image_a=len(image_a),
        image_b=len(image_b),
        image_b0=len(image_b0),
        image_ab_intersection=len(image_a & image_b),
        image_product=len(product),
        product_ratio=Fraction(len(product), quotient.order),
    )
    return values


def _avoid_section(
    a: StallingsGraph,
    b: StallingsGraph,
    na_cover: StallingsGraph,
    b0: StallingsGraph,
    words: Sequence[Word],
    ctx: FreeGroupContext,
    seed: int,
) -> AvoidSection:
    u = complete(a, 1, ctx, avoid=list(words), seed=seed)
    h0 = intersect(b0, u)
    c_s = join(a, h0)
    return AvoidSection(
        words=tuple(words),
        u=u,
        h0=h0,
        h0_generators=tuple(basis(h0)),
        index_b_h0=relative_index(b, intersect(na_cover, u)),
        c=c_s,
        deficiency=index(c_s, ctx).deficiency,
    )


def olshanskii(
    a: StallingsGraph,
    b: StallingsGraph,
    ctx: FreeGroupContext,
    seed: int = 0,
    avoid: Optional[Sequence[Word]] = None,
    names: Tuple[str, str] = ("A", "B"),
) -> OlshanskiiCertificate:
    """Certified finite-index ``B0 <= B`` with ``[F : <A ∪ B0>]`` infinite.

    Args:
        a (StallingsGraph): Finitely generated infinite-index subgroup A.
        b (StallingsGraph): Finitely generated infinite-index subgroup B.
        ctx (FreeGroupContext): Ambient free group, caps and search budgets.
        seed (int): Seed of every completion; recorded in the certificate.
        avoid (Optional[Sequence[Word]]): Words outside A that the variant join must avoid.
        names (Tuple[str, str]): Names of the inputs, carried into the certificate.

    Raises:
        InvalidInput: A or B has finite index, or lives in another free group.
        AvoidInSubgroup: An avoid word lies in A.
        SearchExhausted: No suitable quotient was found within the budgets.

    Returns:
        OlshanskiiCertificate: The certificate.
    """
    for name, graph in zip(names, (a, b)):
        if graph.rank_k != ctx.rank_k:
            raise InvalidInput(f"Subgroup {name} lives in F_{graph.rank_k}.", {"field": name})
        if index(graph, ctx).is_finite:
            raise InvalidInput(f"Subgroup {name} has finite index.", {"field": name})

    r, epsilon = epsilon_for(rank(a), rank(b), ctx.rank_k)
    logger.info("r = %d, eps = %s", r, epsilon)
    strategy, quotient, cover = _select_quotient(a, b, epsilon, ctx, seed)
    na_mode, na_cover = _normal_subgroup_cover(a, quotient, cover, ctx)
    logger.info("NA has index %d (%s)", na_cover.num_vertices, na_mode)

    b0 = intersect(b, na_cover)
    c = join(a, b0)
    c_index = index(c, ctx)
    if c_index.is_finite:
        raise SearchExhausted(f"The join has finite index {c_index.value}.", {"strategy": strategy})
    chain = chain_values(a, b, quotient, na_cover, b0, c, r, epsilon, ctx)
    logger.info("[B:B0] = %d, C has rank %d and infinite index", chain["index_b_b0"], chain["rank_c"])

    avoiding = None
    if avoid:
        avoiding = _avoid_section(a, b, na_cover, b0, avoid, ctx, seed)
    return OlshanskiiCertificate(
        a=a,
        b=b,
        r=r,
        epsilon=epsilon,
        strategy=strategy,
        quotient=quotient,
        na_mode=na_mode,
        na_cover=na_cover,
        b0=b0,
        b0_generators=tuple(basis(b0)),
        index_b_b0=chain["index_b_b0"],
        c=c,
        deficiency=c_index.deficiency,
        chain=chain,
        seed=seed,
        names=names,
        avoiding=avoiding,
    )


def _check_na(cert: OlshanskiiCertificate, ctx: FreeGroupContext) -> List[Check]:
    quotient, na_cover, a = cert.quotient, cert.na_cover, cert.a
    checks = [
        assert_true("na_cover", index(na_cover, ctx).is_finite, "NA must be a cover"),
        assert_true("na_contains_a", is_subgroup(a, na_cover), "A <= NA"),
    ]
    if cert.na_mode == NA_STABILIZER:
        checks.append(assert_true("na_stabilizer", coset_action(na_cover) == quotient, "phi is the action on NA\\F"))
        return checks
    if cert.na_mode != NA_PREIMAGE:
        checks.append(assert_true("na_mode", False, f"unknown mode {cert.na_mode!r}"))
        return checks
    image_a = image_generators(quotient, a)
    inside = all(group_contains(image_a, quotient.degree, perm) for perm in image_generators(quotient, na_cover))
    checks.append(assert_true("na_preimage", inside, "phi(NA) <= phi(A)"))
    checks.append(
        compare(
            "na_preimage_index",
            na_cover.num_vertices * group_order(image_a, quotient.degree),
            "==",
            quotient.order,
            "[F:NA] |phi(A)| = |K|",
        )
    )
    return checks


def _check_images(cert: OlshanskiiCertificate, chain: Dict[str, Any]) -> List[Check]:
    names = [
        "image_index",
        "relative_index_image",
        "image_intersection_inclusion",
        "relative_index_bound",
        "product_identity",
        "product_epsilon_bound",
    ]
    if chain["order_k"] is None:
        return [skip(name, "image group too large to enumerate") for name in names]
    index_image_a = Fraction(chain["order_k"], chain["image_a"])
    index_relation = "==" if cert.na_mode == NA_PREIMAGE else "<="
    return [
        compare("image_index", chain["index_na"], index_relation, index_image_a, "[F:NA] vs [K:phi(A)]"),
        compare(
            "relative_index_image",
            chain["index_b_b0"],
            "==",
            Fraction(chain["image_b"], chain["image_b0"]),
            "[B:B0] = |phi(B)| / |phi(B0)|",
        ),
        compare(
            "image_intersection_inclusion",
            chain["image_ab_intersection"],
            "<=",
            chain["image_b0"],
            "phi(A) ∩ phi(B) <= phi(B0)",
        ),
        compare(
            "relative_index_bound",
            Fraction(chain["image_b"], chain["image_b0"]),
            "<=",
            Fraction(chain["image_b"], chain["image_ab_intersection"]),
        ),
        compare(
            "product_identity",
            Fraction(chain["image_b"], chain["image_ab_intersection"]),
            "==",
            Fraction(chain["image_product"], chain["image_a"]),
        ),
        compare(
            "product_epsilon_bound",
            Fraction(chain["image_product"], chain["image_a"]),
            "<=",
            cert.epsilon * index_image_a,
        ),
    ]


def _check_inclusion(cert: OlshanskiiCertificate, ctx: FreeGroupContext) -> Check:
    """Element-wise ``phi(A) ∩ phi(B) ⊆ phi(B0)``."""
    quotient = cert.quotient
    if not is_enumerable(quotient, ctx):
        return skip("image_intersection_elements", "image group too large to enumerate")
    try:
        image_a = image_elements(quotient, cert.a, ctx)
        image_b = image_elements(quotient, cert.b, ctx)
        image_b0 = image_elements(quotient, cert.b0, ctx)
    except CapExceeded as error:
        return skip("image_intersection_elements", str(error))
    return assert_true("image_intersection_elements", (image_a & image_b) <= image_b0)


def _check_avoid(cert: OlshanskiiCertificate, ctx: FreeGroupContext) -> List[Check]:
    section = cert.avoiding
    if section is None:
        return []
    u_index = index(section.u, ctx)
    h0 = intersect(cert.b0, section.u)
    c_s = join(cert.a, section.h0)
    c_index = index(c_s, ctx)
    return [
        assert_true("avoid_u_cover", u_index.is_finite and is_subgroup(cert.a, section.u), "A <= U, [F:U] finite"),
        assert_true("avoid_u_excludes", not any(contains(section.u, word) for word in section.words)),
        assert_true("avoid_h0_definition", section.h0 == h0, "H0 = B0 ∩ U"),
        assert_true(
            "avoid_h0_generators",
            from_generators(section.h0_generators, ctx) == section.h0,
            "generators of H0 match its graph",
        ),
        compare(
            "avoid_relative_index",
            section.index_b_h0,
            "==",
            relative_index(cert.b, intersect(cert.na_cover, section.u)) or 0,
        ),
        assert_true("avoid_c_definition", section.c == c_s, "C_S = <A ∪ H0>"),
        assert_true("avoid_excluded", not any(contains(c_s, word) for word in section.words)),
        assert_true("avoid_infinite_index", not c_index.is_finite, f"[F:C_S] = {c_index}"),
        assert_true("avoid_deficiency_witness", c_index.deficiency == section.deficiency),
    ]


def verify_olshanskii(cert: OlshanskiiCertificate, ctx: FreeGroupContext) -> VerificationReport:
    """Re-derive every claim of a certificate from its inputs.

    Never raises: a recomputation that fails is recorded as a failed check.
    """
    report = VerificationReport(kind="olshanskii")
    try:
        _verify(cert, ctx, report)
    except SgfError as error:
        report.add(assert_true("recomputation", False, f"{error.reason}: {error.message}"))
    return report


def _verify(cert: OlshanskiiCertificate, ctx: FreeGroupContext, report: VerificationReport) -> None:
    a, b = cert.a, cert.b
    report.add(assert_true("rank", a.rank_k == b.rank_k == ctx.rank_k == cert.quotient.rank_k))
    if report.failed:
        return
    report.add(
        assert_true(
            "inputs_infinite_index",
            not index(a, ctx).is_finite and not index(b, ctx).is_finite,
            "A and B must have infinite index",
        )
    )
    r, epsilon = epsilon_for(rank(a), rank(b), ctx.rank_k)
    report.add(compare("r_definition", cert.r, "==", r))
    report.add(compare("epsilon_definition", cert.epsilon, "==", epsilon, "eps = (k - 1) / 2r"))
    report.add(assert_true("quotient_transitive", cert.quotient.is_transitive()))
    if report.failed:
        return

    report.extend(_check_na(cert, ctx))
    b0 = intersect(b, cert.na_cover)
    report.add(assert_true("b0_definition", cert.b0 == b0, "B0 = B ∩ NA"))
    report.add(
        assert_true(
            "b0_generators",
            from_generators(cert.b0_generators, ctx) == cert.b0,
            "B0's generators generate B0",
        )
    )
    c = join(a, cert.b0)
    report.add(assert_true("c_definition", cert.c == c, "C = <A ∪ B0>"))

    chain = chain_values(a, b, cert.quotient, cert.na_cover, cert.b0, c, r, epsilon, ctx)
    if chain["product_ratio"] is not None:
        report.add(compare("product_ratio", chain["product_ratio"], "<=", epsilon, "|phi(AB)| / |K| <= eps"))
    else:
        report.add(compare("product_ratio", chain["orbit_bound"], "<=", epsilon, "orbit bound |x0 A B| / N <= eps"))
    index_b_b0 = chain["index_b_b0"]
    if index_b_b0 is None:
        report.add(assert_true("relative_index", False, "[B : B ∩ NA] is infinite"))
        return
    report.add(compare("relative_index", cert.index_b_b0, "==", index_b_b0, "[B:B0] recomputed"))
    report.add(compare("epsilon_index_bound", index_b_b0, "<=", chain["epsilon_index_na"], "[B:B0] <= eps [F:NA]"))
    report.extend(_check_images(cert, chain))
    report.add(_check_inclusion(cert, ctx))
    report.add(compare("rank_bound_join", chain["rank_c"], "<=", chain["rank_join_bound"], "d(C) <= d(A) + d(B0)"))
    report.add(
        compare(
            "rank_bound_schreier",
            chain["rank_join_bound"],
            "<=",
            chain["rank_schreier_bound"],
            "d(A) + d(B0) <= 2r [B:B0]",
        )
    )
    report.add(
        compare(
            "rank_bound_index",
            chain["rank_schreier_bound"],
            "<=",
            chain["rank_index_bound"],
            "2r [B:B0] <= [F:NA] (k - 1)",
        )
    )
    c_index = index(c, ctx)
    report.add(assert_true("infinite_index", not c_index.is_finite, f"[F:<A ∪ B0>] = {c_index}"))
    witness = cert.deficiency
    report.add(
        assert_true(
            "deficiency_witness",
            witness is not None and witness == index(cert.c, ctx).deficiency,
            "first missing edge end of C",
        )
    )
    mismatched = sorted(key for key, value in chain.items() if cert.chain.get(key) != value)
    report.add(assert_true("chain_values", not mismatched, ", ".join(mismatched)))
    report.extend(_check_avoid(cert, ctx))
