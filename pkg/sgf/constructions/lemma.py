"""Finite-index subgroups of two infinite-index subgroups that still generate an infinite-index subgroup.

Both subgroups are completed to covers U, V of index at least
``t = ceil(2 max(d(A), d(B)) / (k - 1))``; then ``A0 = A ∩ V`` and ``B0 = B ∩ U`` have
finite index in A and B, and ``C = <A0 ∪ B0>`` lies in ``U ∩ V`` with too small a rank
to have finite index there.
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
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional

from sgf.core.completion import complete
from sgf.core.context import FreeGroupContext
from sgf.core.exceptions import InvalidInput
from sgf.core.graph import StallingsGraph
from sgf.core.subgroup import Deficiency, index, intersect, join, rank, relative_index

from .checks import Check, assert_true, compare

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LemmaReport:
    """Every quantity of the rank chain ``d(C) <= [F : U ∩ V](k - 1)``."""

    completion_index: int
    index_u: int
    index_v: int
    index_uv: int
    index_a_a0: int
    index_b_b0: int
    rank_a: int
    rank_b: int
    rank_a0: int
    rank_b0: int
    rank_c: int
    deficiency: Optional[Deficiency]
    checks: List[Check] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        """True when every recorded inequality holds."""
        return all(check.passed for check in self.checks)


@dataclass(frozen=True)
class LemmaResult:
    """Outcome of ``lemma_weak_ol``."""

    a: StallingsGraph
    b: StallingsGraph
    u: StallingsGraph
    v: StallingsGraph
    a0: StallingsGraph
    b0: StallingsGraph
    c: StallingsGraph
    report: LemmaReport
    seed: int = 0


def completion_target(rank_a: int, rank_b: int, rank_k: int) -> int:
    """Smallest admissible index of the completions, at least 1."""
    return max(math.ceil(Fraction(2 * max(rank_a, rank_b), rank_k - 1)), 1)


def rank_chain(report_values: dict, rank_k: int) -> List[Check]:
    """Recompute the rank chain from the raw quantities of a report."""
    values = report_values
    gradient = rank_k - 1
    index_u, index_v, index_uv = values["index_u"], values["index_v"], values["index_uv"]
    rank_a, rank_b = values["rank_a"], values["rank_b"]
    weighted = Fraction(index_uv) * (Fraction(rank_a, index_u) + Fraction(rank_b, index_v))
    return [
        compare("rank_join", values["rank_c"], "<=", values["rank_a0"] + values["rank_b0"]),
        compare(
            "rank_schreier",
            values["rank_a0"] + values["rank_b0"],
            "<=",
            values["index_a_a0"] * rank_a + values["index_b_b0"] * rank_b,
        ),
        compare("index_a_a0", values["index_a_a0"], "<=", Fraction(index_uv, index_u)),
        compare("index_b_b0", values["index_b_b0"], "<=", Fraction(index_uv, index_v)),
        compare(
            "rank_weighted",
            values["index_a_a0"] * rank_a + values["index_b_b0"] * rank_b,
            "<=",
            weighted,
        ),
        compare(
            "rank_min_index",
            weighted,
            "<=",
            Fraction(2 * index_uv * max(rank_a, rank_b), min(index_u, index_v)),
        ),
        compare("rank_bound", values["rank_c"], "<=", index_uv * gradient),
        compare("completion_index", min(index_u, index_v), ">=", Fraction(2 * max(rank_a, rank_b), gradient)),
    ]


def lemma_weak_ol(a: StallingsGraph, b: StallingsGraph, ctx: FreeGroupContext, seed: int = 0) -> LemmaResult:
    """Finite-index ``A0 <= A`` and ``B0 <= B`` generating an infinite-index subgroup.

    Args:
        a (StallingsGraph): Infinite-index subgroup A.
        b (StallingsGraph): Infinite-index subgroup B.
        ctx (FreeGroupContext): Ambient free group and caps.
        seed (int): Seed of the completions.

    Raises:
        InvalidInput: A or B has finite index.

    Returns:
        LemmaResult: The subgroups and a report with every value of the rank chain.
    """
    for name, graph in (("A", a), ("B", b)):
        if index(graph, ctx).is_finite:
            raise InvalidInput(f"Subgroup {name} has finite index.", {"field": name})

    rank_a, rank_b = rank(a), rank(b)
    target = completion_target(rank_a, rank_b, ctx.rank_k)
    logger.info("Completing both subgroups to covers of index >= %d", target)
    u = complete(a, target, ctx, seed=seed)
    v = complete(b, target, ctx, seed=seed)
    a0 = intersect(a, v)
    b0 = intersect(b, u)
    c = join(a0, b0)
    uv = intersect(u, v)

    values = dict(
        index_u=u.num_vertices,
        index_v=v.num_vertices,
        index_uv=index(uv).require_finite("intersection of the covers"),
        index_a_a0=relative_index(a, v),
        index_b_b0=relative_index(b, u),
        rank_a=rank_a,
        rank_b=rank_b,
        rank_a0=rank(a0),
        rank_b0=rank(b0),
        rank_c=rank(c),
    )
    c_index = index(c, ctx)
    checks = rank_chain(values, ctx.rank_k)
    checks.append(assert_true("infinite_index", not c_index.is_finite, f"[F:C] = {c_index}"))
    report = LemmaReport(completion_index=target, deficiency=c_index.deficiency, checks=checks, **values)
    if not report.ok:
        logger.warning("Lemma chain has failing steps: %s", [check.name for check in checks if not check.passed])
    return LemmaResult(a=a, b=b, u=u, v=v, a0=a0, b0=b0, c=c, report=report, seed=seed)
