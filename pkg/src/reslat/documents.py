"""Canonical JSON documents for algebras and V-formations.

An algebra document is a single JSON object with keys, in order: ``name``,
``size``, ``labels``, ``order`` (the string "chain" or an n x n 0/1 array),
``unit``, ``product``, optional ``ldiv``/``rdiv`` (derived when absent),
optional ``zero``, optional ``masks`` (whose presence marks a partial
algebra).  Unknown keys are rejected.  Canonical serialization keeps that
key order and uses no insignificant whitespace, so equal documents are
byte-equal.
"""

from __future__ import annotations

import json
import os
import tempfile

from .algebra import (
    CHAIN,
    FiniteRL,
    FormatError,
    PartialIRL,
    make_algebra,
    make_partial,
)
from .constructions import builtin
from . import amalgamation as _am

_ALGEBRA_KEYS = ("name", "size", "labels", "order", "unit", "product", "ldiv", "rdiv", "zero", "masks")
_MASK_KEYS = ("product", "ldiv", "rdiv")
_VF_KEYS = ("name", "A", "B", "C", "i", "j")


def _table_out(table):
    return [list(row) for row in table]


def _mask_out(mask):
    return [[1 if v else 0 for v in row] for row in mask]


def algebra_to_document(alg: FiniteRL | PartialIRL) -> dict:
    doc = {
        "name": alg.name,
        "size": alg.size,
        "labels": list(alg.labels),
        "order": CHAIN if alg.leq is None else _mask_out(alg.leq),
        "unit": alg.unit,
        "product": _table_out(alg.product),
        "ldiv": _table_out(alg.ldiv),
        "rdiv": _table_out(alg.rdiv),
    }
    if alg.zero is not None:
        doc["zero"] = alg.zero
    if isinstance(alg, PartialIRL):
        doc["masks"] = {
            "product": _mask_out(alg.product_mask),
            "ldiv": _mask_out(alg.ldiv_mask),
            "rdiv": _mask_out(alg.rdiv_mask),
        }
    return doc


def document_to_algebra(doc: dict) -> FiniteRL | PartialIRL:
    if not isinstance(doc, dict):
        raise FormatError("algebra document must be a JSON object")
    unknown = set(doc) - set(_ALGEBRA_KEYS)
    if unknown:
        raise FormatError(f"unknown document fields: {sorted(unknown)}")
    for key in ("size", "labels", "order", "unit", "product"):
        if key not in doc:
            raise FormatError(f"missing document field {key!r}")
    size = doc["size"]
    order = doc["order"]
    if order != CHAIN and not isinstance(order, list):
        raise FormatError("order must be \"chain\" or a 0/1 array")
    common = dict(
        product=doc["product"],
        unit=doc["unit"],
        order=order,
        labels=doc["labels"],
        zero=doc.get("zero"),
        name=doc.get("name", ""),
    )
    if "masks" in doc:
        masks = doc["masks"]
        if set(masks) != set(_MASK_KEYS):
            raise FormatError("masks must contain exactly product, ldiv, rdiv")
        if "ldiv" not in doc or "rdiv" not in doc:
            raise FormatError("partial algebras must carry explicit divisions")
        alg = make_partial(
            ldiv=doc["ldiv"],
            rdiv=doc["rdiv"],
            product_mask=masks["product"],
            ldiv_mask=masks["ldiv"],
            rdiv_mask=masks["rdiv"],
            **common,
        )
    else:
        alg = make_algebra(ldiv=doc.get("ldiv"), rdiv=doc.get("rdiv"), **common)
    if alg.size != size:
        raise FormatError("size field disagrees with the tables")
    return alg


def vformation_to_document(vf) -> dict:
    return {
        "name": vf.name,
        "A": algebra_to_document(vf.A),
        "B": algebra_to_document(vf.B),
        "C": algebra_to_document(vf.C),
        "i": list(vf.i.map),
        "j": list(vf.j.map),
    }


def _component(value):
    if isinstance(value, str):
        alg = builtin(value)
        if not isinstance(alg, FiniteRL):
            raise FormatError(f"builtin {value!r} is not an algebra")
        return alg
    return document_to_algebra(value)


def document_to_vformation(doc: dict):
    if not isinstance(doc, dict):
        raise FormatError("V-formation document must be a JSON object")
    unknown = set(doc) - set(_VF_KEYS)
    if unknown:
        raise FormatError(f"unknown V-formation fields: {sorted(unknown)}")
    for key in ("A", "B", "C", "i", "j"):
        if key not in doc:
            raise FormatError(f"missing V-formation field {key!r}")
    A, B, C = _component(doc["A"]), _component(doc["B"]), _component(doc["C"])
    return _am.make_vformation(A, B, C, doc["i"], doc["j"], name=doc.get("name", ""))


def dumps_canonical(doc) -> str:
    """Serialize with documented key order and no insignificant whitespace."""
    return json.dumps(doc, ensure_ascii=False, separators=(",", ":"))


def canonical_tables_json(alg: FiniteRL) -> str:
    """Canonical serialization of the structural fields only (no name or
    labels); byte-equality of these strings is table identity."""
    doc = {
        "size": alg.size,
        "order": CHAIN if alg.leq is None else _mask_out(alg.leq),
        "unit": alg.unit,
        "product": _table_out(alg.product),
        "ldiv": _table_out(alg.ldiv),
        "rdiv": _table_out(alg.rdiv),
        "zero": alg.zero,
    }
    return dumps_canonical(doc)


def load_algebra(path: str) -> FiniteRL | PartialIRL:
    with open(path, encoding="utf-8") as fh:
        return document_to_algebra(json.load(fh))


def load_vformation(path: str):
    with open(path, encoding="utf-8") as fh:
        return document_to_vformation(json.load(fh))


def write_atomic(path: str, text: str):
    """Write via a temp file and rename, so readers never see partial output."""
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
