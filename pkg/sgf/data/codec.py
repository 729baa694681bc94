"""JSON form of graphs, quotients and every certificate.

Every artifact carries ``"schema": 1``, its ``"kind"`` and the rank of the free group.
Subgroups are stored as specs ``{"rank", "name", "generators"}`` whose generators are a
free basis, so decoding re-folds them into the identical canonical graph. Rationals are
``{"num": p, "den": q}`` and permutations are 1-indexed.
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

import json
from fractions import Fraction
from typing import Any, Dict, List, Optional, Sequence, Tuple

from sgf.constructions.base import BaseRecord, KernelReport
from sgf.constructions.checks import Check, VerificationReport
from sgf.constructions.lemma import LemmaReport, LemmaResult
from sgf.constructions.olshanskii import AvoidSection, OlshanskiiCertificate
from sgf.constructions.product import ProductWitness
from sgf.core.context import FreeGroupContext
from sgf.core.exceptions import InvalidInput, SgfError
from sgf.core.folding import core_graph
from sgf.core.graph import StallingsGraph
from sgf.core.subgroup import Deficiency, basis, from_generators, index, rank
from sgf.core.word import Word, generator_index, generator_name, parse_word
from sgf.quotients.measure import MeasureBound
from sgf.quotients.quotient import FiniteQuotient

SCHEMA_VERSION = 1

KIND_SUBGROUP = "subgroup"
KIND_OLSHANSKII = "olshanskii"
KIND_LEMMA = "lemma"
KIND_MEASURE = "measure"
KIND_PRODUCT_WITNESS = "product-witness"
KIND_BASE = "base"
KIND_KERNEL = "kernel-check"
KIND_VERIFICATION = "verification"

CERTIFICATE_KINDS = (KIND_OLSHANSKII, KIND_LEMMA, KIND_MEASURE, KIND_PRODUCT_WITNESS, KIND_BASE, KIND_KERNEL)


def encode_value(value: Any) -> Any:
    """JSON form of numbers, words and containers of them."""
    if isinstance(value, Fraction):
        return {"num": value.numerator, "den": value.denominator}
    if isinstance(value, Word):
        return str(value)
    if isinstance(value, dict):
        return {str(key): encode_value(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [encode_value(item) for item in value]
    return value


def decode_value(value: Any) -> Any:
    """Inverse of :func:`encode_value` for numbers; words stay strings."""
    if isinstance(value, dict):
        if set(value) == {"num", "den"}:
            return Fraction(value["num"], value["den"])
        return {key: decode_value(item) for key, item in value.items()}
    if isinstance(value, list):
        return [decode_value(item) for item in value]
    return value


def decode_fraction(value: Any, field: str) -> Fraction:
    """A rational stored as ``{"num", "den"}``."""
    decoded = decode_value(value)
    if isinstance(decoded, bool) or not isinstance(decoded, (int, Fraction)):
        raise InvalidInput(f"Field {field!r} must be a rational.", {"field": field})
    return Fraction(decoded)


def _field(payload: Dict[str, Any], key: str) -> Any:
    if key not in payload:
        raise InvalidInput(f"Missing field {key!r}.", {"field": key})
    return payload[key]


def parse_rank(value: Any) -> int:
    """Rank field of a task, certificate or subgroup spec.

    Raises:
        InvalidInput: The value is not an integer.
    """
    if isinstance(value, bool) or (isinstance(value, float) and not value.is_integer()):
        raise InvalidInput(f"Rank must be an integer, got {value!r}.", {"field": "rank"})
    try:
        return int(value)
    except (TypeError, ValueError) as error:
        raise InvalidInput(f"Rank must be an integer, got {value!r}.", {"field": "rank"}) from error


def encode_words(words: Sequence[Word]) -> List[str]:
    """Text forms of words."""
    return [str(word) for word in words]


def decode_words(texts: Sequence[str], rank_k: int) -> Tuple[Word, ...]:
    """Parse a list of words of F_k."""
    return tuple(parse_word(text, rank_k) for text in texts)


def encode_graph(graph: StallingsGraph) -> Dict[str, Any]:
    """``{"base", "vertices", "edges": [[v, "a", w], ...]}`` in canonical order."""
    return {
        "base": graph.base,
        "vertices": graph.num_vertices,
        "edges": [[tail, generator_name(gen), head] for tail, gen, head in graph.edges()],
    }


def decode_graph(payload: Dict[str, Any], rank_k: int) -> StallingsGraph:
    """Graph from its JSON form, re-canonicalized."""
    count = int(_field(payload, "vertices"))
    base = int(_field(payload, "base"))
    if not 0 <= base < count:
        raise InvalidInput("The base lies outside the vertex range.", {"field": "base"})
    edges = [(int(tail), generator_index(name, rank_k), int(head)) for tail, name, head in _field(payload, "edges")]
    for tail, _, head in edges:
        if not (0 <= tail < count and 0 <= head < count):
            raise InvalidInput("An edge leaves the vertex range.", {"field": "edges"})
    return core_graph(rank_k, edges, base)


def encode_quotient(quotient: FiniteQuotient) -> Dict[str, Any]:
    """``{"degree", "perms": {"a": [1-indexed images], ...}}``."""
    return {
        "degree": quotient.degree,
        "perms": {
            generator_name(gen + 1): [image + 1 for image in perm] for gen, perm in enumerate(quotient.perms)
        },
    }


def decode_quotient(payload: Dict[str, Any], rank_k: int) -> FiniteQuotient:
    """Quotient from its JSON form."""
    degree = int(_field(payload, "degree"))
    perms = _field(payload, "perms")
    missing = [generator_name(gen) for gen in range(1, rank_k + 1) if generator_name(gen) not in perms]
    if missing or len(perms) != rank_k:
        raise InvalidInput(f"The quotient must map exactly the {rank_k} generators.", {"field": "perms"})
    return FiniteQuotient(
        degree=degree,
        perms=tuple(tuple(image - 1 for image in perms[generator_name(gen)]) for gen in range(1, rank_k + 1)),
    )


def encode_subgroup(graph: StallingsGraph, name: str) -> Dict[str, Any]:
    """Subgroup spec whose generators are a free basis."""
    return {"rank": graph.rank_k, "name": name, "generators": encode_words(basis(graph))}


def decode_subgroup(payload: Dict[str, Any], ctx: FreeGroupContext) -> Tuple[str, StallingsGraph]:
    """Name and graph of a subgroup spec."""
    if parse_rank(_field(payload, "rank")) != ctx.rank_k:
        raise InvalidInput(f"Subgroup spec lives in F_{payload['rank']}, expected F_{ctx.rank_k}.", {"field": "rank"})
    words = decode_words(_field(payload, "generators"), ctx.rank_k)
    return str(payload.get("name", "H")), from_generators(words, ctx)


def _graph(payload: Dict[str, Any], ctx: FreeGroupContext) -> StallingsGraph:
    return decode_subgroup(payload, ctx)[1]


def encode_deficiency(deficiency: Optional[Deficiency]) -> Optional[Dict[str, Any]]:
    """Missing edge end as ``{"vertex", "generator", "direction"}``."""
    if deficiency is None:
        return None
    return {
        "vertex": deficiency.vertex,
        "generator": generator_name(deficiency.generator),
        "direction": deficiency.direction,
    }


def decode_deficiency(payload: Optional[Dict[str, Any]], rank_k: int) -> Optional[Deficiency]:
    """Inverse of :func:`encode_deficiency`."""
    if payload is None:
        return None
    return Deficiency(
        vertex=int(payload["vertex"]),
        generator=generator_index(payload["generator"], rank_k),
        direction=str(payload["direction"]),
    )


def encode_check(check: Check) -> Dict[str, Any]:
    """One check with both sides of its comparison."""
    return {
        "name": check.name,
        "passed": check.passed,
        "relation": check.relation,
        "lhs": encode_value(check.lhs),
        "rhs": encode_value(check.rhs),
        "note": check.note,
    }


def decode_check(payload: Dict[str, Any]) -> Check:
    """Inverse of :func:`encode_check`."""
    return Check(
        name=payload["name"],
        passed=payload["passed"],
        relation=payload.get("relation", ""),
        lhs=decode_value(payload.get("lhs")),
        rhs=decode_value(payload.get("rhs")),
        note=payload.get("note", ""),
    )


def _encode_certificate_body(cert: OlshanskiiCertificate) -> Dict[str, Any]:
    avoiding = None
    if cert.avoiding is not None:
        section = cert.avoiding
        avoiding = {
            "words": encode_words(section.words),
            "u": encode_subgroup(section.u, "U"),
            "h0": encode_subgroup(section.h0, "H0"),
            "h0_generators": encode_words(section.h0_generators),
            "index_b_h0": section.index_b_h0,
            "c": encode_subgroup(section.c, "C_S"),
            "deficiency": encode_deficiency(section.deficiency),
        }
    return {
        "names": list(cert.names),
        "a": encode_subgroup(cert.a, cert.names[0]),
        "b": encode_subgroup(cert.b, cert.names[1]),
        "r": cert.r,
        "epsilon": encode_value(cert.epsilon),
        "strategy": cert.strategy,
        "quotient": encode_quotient(cert.quotient),
        "na_mode": cert.na_mode,
        "na_cover": encode_subgroup(cert.na_cover, "NA"),
        "b0": encode_subgroup(cert.b0, "B0"),
        "b0_generators": encode_words(cert.b0_generators),
        "index_B_B0": cert.index_b_b0,
        "c": encode_subgroup(cert.c, "C"),
        "deficiency": encode_deficiency(cert.deficiency),
        "chain": encode_value(cert.chain),
        "seed": cert.seed,
        "avoiding": avoiding,
    }


def _decode_certificate_body(payload: Dict[str, Any], ctx: FreeGroupContext) -> OlshanskiiCertificate:
    rank_k = ctx.rank_k
    avoiding = None
    section = payload.get("avoiding")
    if section is not None:
        avoiding = AvoidSection(
            words=decode_words(section["words"], rank_k),
            u=_graph(section["u"], ctx),
            h0=_graph(section["h0"], ctx),
            h0_generators=decode_words(section["h0_generators"], rank_k),
            index_b_h0=int(section["index_b_h0"]),
            c=_graph(section["c"], ctx),
            deficiency=decode_deficiency(section.get("deficiency"), rank_k),
        )
    return OlshanskiiCertificate(
        a=_graph(_field(payload, "a"), ctx),
        b=_graph(_field(payload, "b"), ctx),
        r=int(_field(payload, "r")),
        epsilon=decode_fraction(_field(payload, "epsilon"), "epsilon"),
        strategy=str(payload.get("strategy", "")),
        quotient=decode_quotient(_field(payload, "quotient"), rank_k),
        na_mode=str(_field(payload, "na_mode")),
        na_cover=_graph(_field(payload, "na_cover"), ctx),
        b0=_graph(_field(payload, "b0"), ctx),
        b0_generators=decode_words(_field(payload, "b0_generators"), rank_k),
        index_b_b0=int(_field(payload, "index_B_B0")),
        c=_graph(_field(payload, "c"), ctx),
        deficiency=decode_deficiency(payload.get("deficiency"), rank_k),
        chain=decode_value(_field(payload, "chain")),
        seed=int(payload.get("seed", 0)),
        names=tuple(payload.get("names", ("A", "B"))),
        avoiding=avoiding,
    )


def _names(names: Sequence[str], count: int, prefix: str = "H") -> List[str]:
    return list(names) if len(names) == count else [f"{prefix}{position + 1}" for position in range(count)]


def _encode_body(artifact: Any) -> Tuple[str, Dict[str, Any]]:
    if isinstance(artifact, OlshanskiiCertificate):
        return KIND_OLSHANSKII, _encode_certificate_body(artifact)
    if isinstance(artifact, LemmaResult):
        report = artifact.report
        values = {
            key: getattr(report, key)
            for key in (
                "completion_index",
                "index_u",
                "index_v",
                "index_uv",
                "index_a_a0",
                "index_b_b0",
                "rank_a",
                "rank_b",
                "rank_a0",
                "rank_b0",
                "rank_c",
            )
        }
        values["deficiency"] = encode_deficiency(report.deficiency)
        values["checks"] = [encode_check(check) for check in report.checks]
        graphs = {
            key: encode_subgroup(getattr(artifact, key), key.upper()) for key in ("a", "b", "u", "v", "a0", "b0", "c")
        }
        return KIND_LEMMA, {**graphs, "report": values, "seed": artifact.seed}
    if isinstance(artifact, MeasureBound):
        names = _names(artifact.names, len(artifact.subgroups))
        return KIND_MEASURE, {
            "subgroups": [encode_subgroup(graph, name) for graph, name in zip(artifact.subgroups, names)],
            "bound": encode_value(artifact.bound),
            "method": artifact.method,
            "quotient": encode_quotient(artifact.witness_quotient),
            "orbit_bound": encode_value(artifact.orbit_bound),
            "product_ratio": encode_value(artifact.product_ratio),
            "left_transversal": encode_words(artifact.left_transversal),
            "right_transversal": encode_words(artifact.right_transversal),
            "epsilon": encode_value(artifact.epsilon),
            "seed": artifact.seed,
        }
    if isinstance(artifact, ProductWitness):
        names = _names(artifact.names, len(artifact.subgroups))
        return KIND_PRODUCT_WITNESS, {
            "subgroups": [encode_subgroup(graph, name) for graph, name in zip(artifact.subgroups, names)],
            "quotient": encode_quotient(artifact.quotient),
            "witness": str(artifact.witness),
            "orbit_size": artifact.orbit_size,
            "image_product_size": artifact.image_product_size,
            "epsilon": encode_value(artifact.epsilon),
            "seed": artifact.seed,
        }
    if isinstance(artifact, BaseRecord):
        names = _names(artifact.names, len(artifact.subgroups), prefix="L")
        return KIND_BASE, {
            "subgroups": [encode_subgroup(graph, name) for graph, name in zip(artifact.subgroups, names)],
            "r": encode_subgroup(artifact.r, "R"),
            "relative_indices": list(artifact.relative_indices),
            "orbit_sizes": list(artifact.orbit_sizes),
            "chain": [_encode_certificate_body(cert) for cert in artifact.chain],
            "seed": artifact.seed,
        }
    if isinstance(artifact, KernelReport):
        return KIND_KERNEL, {
            "r": encode_subgroup(artifact.r, "R"),
            "radius": artifact.radius,
            "conjugators": encode_words(artifact.conjugators),
            "intersection": encode_subgroup(artifact.intersection, "I"),
            "survivors": encode_words(artifact.survivors),
            "ok": artifact.ok,
            "seed": artifact.seed,
        }
    raise InvalidInput(f"Cannot encode an object of type {type(artifact).__name__}.")


def encode(artifact: Any) -> Dict[str, Any]:
    """JSON object of a certificate, with schema, kind and rank."""
    kind, body = _encode_body(artifact)
    rank_k = _artifact_rank(artifact)
    return {"schema": SCHEMA_VERSION, "kind": kind, "rank": rank_k, **body}


def _artifact_rank(artifact: Any) -> int:
    if isinstance(artifact, OlshanskiiCertificate):
        return artifact.rank_k
    if isinstance(artifact, LemmaResult):
        return artifact.a.rank_k
    if isinstance(artifact, (MeasureBound, ProductWitness, BaseRecord)):
        return artifact.subgroups[0].rank_k
    return artifact.r.rank_k


def encode_report(report: VerificationReport, rank_k: int) -> Dict[str, Any]:
    """JSON object of a verification report."""
    return {
        "schema": SCHEMA_VERSION,
        "kind": KIND_VERIFICATION,
        "rank": rank_k,
        "verified_kind": report.kind,
        "ok": report.ok,
        "checks": [encode_check(check) for check in report.checks],
    }


def encode_subgroup_summary(graph: StallingsGraph, name: str, **parameters: Any) -> Dict[str, Any]:
    """Spec, graph, rank and index of a single subgroup."""
    result = index(graph)
    return {
        "schema": SCHEMA_VERSION,
        "kind": KIND_SUBGROUP,
        "rank": graph.rank_k,
        "name": name,
        "generators": encode_words(basis(graph)),
        "graph": encode_graph(graph),
        "subgroup_rank": rank(graph),
        "index": result.value,
        "deficiency": encode_deficiency(result.deficiency),
        "parameters": encode_value(parameters),
    }


def _decode_list(payload: Dict[str, Any], ctx: FreeGroupContext) -> Tuple[Tuple[StallingsGraph, ...], Tuple[str, ...]]:
    decoded = [decode_subgroup(spec, ctx) for spec in _field(payload, "subgroups")]
    if not decoded:
        raise InvalidInput("The artifact lists no subgroups.", {"field": "subgroups"})
    return tuple(graph for _, graph in decoded), tuple(name for name, _ in decoded)


def decode(payload: Dict[str, Any], ctx: Optional[FreeGroupContext] = None) -> Any:
    """Certificate object of a JSON artifact.

    Args:
        payload (Dict[str, Any]): Parsed JSON.
        ctx (Optional[FreeGroupContext]): Context to decode into; built from ``rank`` when omitted.

    Raises:
        InvalidInput: Unknown schema or kind, a missing field or a malformed value.
    """
    if not isinstance(payload, dict):
        raise InvalidInput("An artifact must be a JSON object.")
    if payload.get("schema") != SCHEMA_VERSION:
        raise InvalidInput(f"Unsupported schema {payload.get('schema')!r}.", {"field": "schema"})
    kind = _field(payload, "kind")
    if kind not in CERTIFICATE_KINDS:
        raise InvalidInput(f"Artifacts of kind {kind!r} carry no certificate.", {"field": "kind"})
    rank_k = parse_rank(_field(payload, "rank"))
    if ctx is None:
        ctx = FreeGroupContext(rank_k=rank_k)
    elif ctx.rank_k != rank_k:
        raise InvalidInput(f"Artifact lives in F_{rank_k}, context is F_{ctx.rank_k}.", {"field": "rank"})

    try:
        return _decode_kind(kind, payload, ctx)
    except SgfError:
        raise
    except (KeyError, TypeError, ValueError) as error:
        raise InvalidInput(f"Malformed {kind} artifact: {error}", {"field": str(error)}) from error


def _decode_kind(kind: str, payload: Dict[str, Any], ctx: FreeGroupContext) -> Any:
    rank_k = ctx.rank_k
    if kind == KIND_OLSHANSKII:
        return _decode_certificate_body(payload, ctx)
    if kind == KIND_LEMMA:
        values = payload["report"]
        report = LemmaReport(
            completion_index=int(values["completion_index"]),
            index_u=int(values["index_u"]),
            index_v=int(values["index_v"]),
            index_uv=int(values["index_uv"]),
            index_a_a0=int(values["index_a_a0"]),
            index_b_b0=int(values["index_b_b0"]),
            rank_a=int(values["rank_a"]),
            rank_b=int(values["rank_b"]),
            rank_a0=int(values["rank_a0"]),
            rank_b0=int(values["rank_b0"]),
            rank_c=int(values["rank_c"]),
            deficiency=decode_deficiency(values.get("deficiency"), rank_k),
            checks=[decode_check(check) for check in values.get("checks", [])],
        )
        graphs = {key: _graph(payload[key], ctx) for key in ("a", "b", "u", "v", "a0", "b0", "c")}
        return LemmaResult(report=report, seed=int(payload.get("seed", 0)), **graphs)
    if kind == KIND_MEASURE:
        subgroups, names = _decode_list(payload, ctx)
        product_ratio = payload.get("product_ratio")
        epsilon = payload.get("epsilon")
        return MeasureBound(
            subgroups=subgroups,
            bound=decode_fraction(payload["bound"], "bound"),
            method=str(payload["method"]),
            witness_quotient=decode_quotient(payload["quotient"], rank_k),
            orbit_bound=decode_fraction(payload["orbit_bound"], "orbit_bound"),
            product_ratio=None if product_ratio is None else decode_fraction(product_ratio, "product_ratio"),
            left_transversal=decode_words(payload.get("left_transversal", []), rank_k),
            right_transversal=decode_words(payload.get("right_transversal", []), rank_k),
            epsilon=None if epsilon is None else decode_fraction(epsilon, "epsilon"),
            seed=int(payload.get("seed", 0)),
            names=names,
        )
    if kind == KIND_PRODUCT_WITNESS:
        subgroups, names = _decode_list(payload, ctx)
        image_size = payload.get("image_product_size")
        return ProductWitness(
            subgroups=subgroups,
            quotient=decode_quotient(payload["quotient"], rank_k),
            witness=parse_word(payload["witness"], rank_k),
            orbit_size=int(payload["orbit_size"]),
            image_product_size=None if image_size is None else int(image_size),
            epsilon=decode_fraction(payload["epsilon"], "epsilon"),
            seed=int(payload.get("seed", 0)),
            names=names,
        )
    if kind == KIND_BASE:
        subgroups, names = _decode_list(payload, ctx)
        return BaseRecord(
            subgroups=subgroups,
            r=_graph(payload["r"], ctx),
            relative_indices=tuple(int(value) for value in payload["relative_indices"]),
            orbit_sizes=tuple(int(value) for value in payload["orbit_sizes"]),
            chain=tuple(_decode_certificate_body(body, ctx) for body in payload["chain"]),
            seed=int(payload.get("seed", 0)),
            names=names,
        )
    return KernelReport(
        r=_graph(payload["r"], ctx),
        radius=int(payload["radius"]),
        conjugators=decode_words(payload["conjugators"], rank_k),
        intersection=_graph(payload["intersection"], ctx),
        survivors=decode_words(payload["survivors"], rank_k),
        seed=int(payload.get("seed", 0)),
    )


def dumps(payload: Dict[str, Any]) -> str:
    """Canonical text: sorted keys, two-space indent, trailing newline."""
    return json.dumps(payload, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def loads(text: str) -> Dict[str, Any]:
    """Parse artifact text.

    Raises:
        InvalidInput: The text is not JSON.
    """
    try:
        return json.loads(text)
    except json.JSONDecodeError as error:
        raise InvalidInput(f"Not a JSON document: {error.msg} at line {error.lineno}.") from error
