"""Ring-spec JSON grammar: nested constructor documents.

    {"zmod": n}
    {"product": [spec, spec]}
    {"table": {"add": [[..]], "mul": [[..]]}}
    {"ideal_subrng": {"of": spec, "gens": [..]}}
    {"quotient": {"of": spec, "ideal_gens": [..]}}
    {"unitization": {"of": spec, "mod": m}}

Any node may carry an optional "label". An ideal_subrng document used as a
ring denotes the sub-ring itself.
"""

from __future__ import annotations

from typing import Any

from .errors import SpecParseError
from .ideals import generated_ideal
from .rng import (
    FiniteRng,
    IExtension,
    build_product,
    build_table,
    build_zmod,
    ideal_subrng,
    quotient,
    unitization,
)

_CONSTRUCTORS = ("zmod", "product", "table", "ideal_subrng", "quotient", "unitization")


def _node_kind(doc: Any) -> str:
    if not isinstance(doc, dict):
        raise SpecParseError(f"ring spec must be an object, got {type(doc).__name__}")
    kinds = [k for k in doc if k in _CONSTRUCTORS]
    extra = [k for k in doc if k not in _CONSTRUCTORS and k != "label"]
    if len(kinds) != 1 or extra:
        raise SpecParseError(f"ring spec needs exactly one constructor key, got {sorted(doc)}")
    return kinds[0]


def strip_labels(doc: Any) -> Any:
    """Structural form of a document, for comparing nested 'of' references."""
    if isinstance(doc, dict):
        return {k: strip_labels(v) for k, v in doc.items() if k != "label"}
    if isinstance(doc, list):
        return [strip_labels(v) for v in doc]
    return doc


def build_ring(doc: Any) -> FiniteRng:
    kind = _node_kind(doc)
    body = doc[kind]
    if kind == "zmod":
        if not isinstance(body, int) or body < 1:
            raise SpecParseError("zmod takes a positive integer")
        return build_zmod(body)
    if kind == "product":
        if not isinstance(body, list) or len(body) != 2:
            raise SpecParseError("product takes a pair of ring specs")
        return build_product(build_ring(body[0]), build_ring(body[1]))
    if kind == "table":
        if not isinstance(body, dict) or set(body) != {"add", "mul"}:
            raise SpecParseError("table takes {'add': .., 'mul': ..}")
        return build_table(body["add"], body["mul"], label=str(doc.get("label", "")))
    if kind == "ideal_subrng":
        return build_subrng_extension(doc).sub
    if kind == "quotient":
        if not isinstance(body, dict) or set(body) != {"of", "ideal_gens"}:
            raise SpecParseError("quotient takes {'of': spec, 'ideal_gens': [..]}")
        base = build_ring(body["of"])
        ideal = generated_ideal(base, _int_list(body["ideal_gens"]))
        return quotient(base, ideal.members)[0]
    if kind == "unitization":
        return build_unitization_extension(doc).amb
    raise SpecParseError(f"unknown constructor {kind}")


def build_subrng_extension(doc: Any) -> IExtension:
    kind = _node_kind(doc)
    if kind != "ideal_subrng":
        raise SpecParseError("expected an ideal_subrng document")
    body = doc[kind]
    if not isinstance(body, dict) or set(body) != {"of", "gens"}:
        raise SpecParseError("ideal_subrng takes {'of': spec, 'gens': [..]}")
    return ideal_subrng(build_ring(body["of"]), _int_list(body["gens"]))


def build_unitization_extension(doc: Any) -> IExtension:
    kind = _node_kind(doc)
    if kind != "unitization":
        raise SpecParseError("expected a unitization document")
    body = doc[kind]
    if not isinstance(body, dict) or set(body) != {"of", "mod"}:
        raise SpecParseError("unitization takes {'of': spec, 'mod': m}")
    if not isinstance(body["mod"], int) or body["mod"] < 1:
        raise SpecParseError("unitization modulus must be a positive integer")
    try:
        return unitization(build_ring(body["of"]), body["mod"])
    except ValueError as exc:
        raise SpecParseError(str(exc)) from exc


def build_extension_pair(sub_doc: Any, amb_doc: Any) -> IExtension:
    """The extension named by a (sub, amb) document pair: the sub document
    must be an ideal_subrng of the ambient one, or the ambient document a
    unitization of the sub one."""
    if _node_kind(sub_doc) == "ideal_subrng" and strip_labels(sub_doc["ideal_subrng"]["of"]) == strip_labels(amb_doc):
        return build_subrng_extension(sub_doc)
    if _node_kind(amb_doc) == "unitization" and strip_labels(amb_doc["unitization"]["of"]) == strip_labels(sub_doc):
        return build_unitization_extension(amb_doc)
    raise SpecParseError(
        "the sub spec must be an ideal_subrng of the ambient spec, "
        "or the ambient spec a unitization of the sub spec")


def _int_list(body: Any) -> list[int]:
    if not isinstance(body, list) or not all(isinstance(v, int) for v in body):
        raise SpecParseError("expected a list of integers")
    return body
