"""Canonical JSON forms for every value the command line reads or writes.

Formats:
  finite set      {"labels": [...]}
  relation        {"source": set, "target": set, "pairs": [[a, b], ...]}
  valued relation {"source": set, "target": set, "values": [[a, b, v], ...]}
  quantale        {"elements": [...], "mul": [[...]], "unit": v,
                   "join": [[...]]} or "leq" as a 0/1 matrix, row-major
  quantum set     {"atoms": [{"label": ..., "dim": n}, ...]}
  quantum rel     {"source": qset, "target": qset,
                   "blocks": [{"from": a, "to": b, "basis": [matrix, ...]}]}
                  with each matrix a list of rows of exact scalar strings

Output iteration orders are canonical (by label), so serialization is
deterministic and roundtrips to an equal value.
"""

from __future__ import annotations

import json
from typing import Any

from .exact import ExactMatrix, OperatorSubspace, format_scalar, parse_scalar, span_of
from .finrel import BoolRelation, FiniteSet
from .matr import MatrInstance, MatrMorphism, MatrObject
from .quantale import FiniteQuantale, QuantaleError, VRelation, quantale_from_tables


class SerializeError(ValueError):
    pass


def _label_from_json(x: Any):
    if isinstance(x, list):
        return tuple(_label_from_json(y) for y in x)
    return x


def _label_to_json(x: Any):
    if isinstance(x, tuple):
        return [_label_to_json(y) for y in x]
    return x


# -- sets and boolean relations ---------------------------------------------------

def set_to_json(a: FiniteSet) -> dict:
    return {"labels": [_label_to_json(x) for x in a.labels]}


def set_from_json(doc: dict) -> FiniteSet:
    if not isinstance(doc, dict) or "labels" not in doc:
        raise SerializeError("a set needs a 'labels' list")
    return FiniteSet(tuple(_label_from_json(x) for x in doc["labels"]))


def relation_to_json(r: BoolRelation) -> dict:
    return {
        "source": set_to_json(r.source),
        "target": set_to_json(r.target),
        "pairs": sorted(
            [[_label_to_json(a), _label_to_json(b)] for a, b in r.pairs], key=repr
        ),
    }


def relation_from_json(doc: dict) -> BoolRelation:
    try:
        src = set_from_json(doc["source"])
        tgt = set_from_json(doc["target"])
        pairs = frozenset(
            (_label_from_json(a), _label_from_json(b)) for a, b in doc["pairs"]
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise SerializeError(f"malformed relation: {exc}") from exc
    for a, b in pairs:
        if a not in src or b not in tgt:
            raise SerializeError(f"pair {(a, b)!r} outside source x target")
    return BoolRelation(src, tgt, pairs)


# -- quantales and valued relations ---------------------------------------------------

def quantale_to_json(q: FiniteQuantale) -> dict:
    elems = list(q.elements)
    return {
        "elements": elems,
        "mul": [[q.mul(a, b) for b in elems] for a in elems],
        "join": [[q.join(a, b) for b in elems] for a in elems],
        "unit": q.unit,
    }


def quantale_from_json(doc: dict) -> FiniteQuantale:
    try:
        elems = [_label_from_json(x) for x in doc["elements"]]
        unit = _label_from_json(doc["unit"])
        mul = _table_from_json(elems, doc["mul"], "mul")
        join = None
        leq = None
        if "join" in doc:
            join = _table_from_json(elems, doc["join"], "join")
        if "leq" in doc:
            rows = doc["leq"]
            leq = {
                (a, b)
                for i, a in enumerate(elems)
                for j, b in enumerate(elems)
                if rows[i][j]
            }
        return quantale_from_tables(elems, mul, unit, join=join, leq=leq)
    except (KeyError, TypeError, IndexError, QuantaleError) as exc:
        raise SerializeError(f"malformed quantale: {exc}") from exc


def _table_from_json(elems: list, rows: list, what: str) -> dict:
    if len(rows) != len(elems) or any(len(r) != len(elems) for r in rows):
        raise SerializeError(f"{what} table must be {len(elems)}x{len(elems)}")
    table = {}
    for i, a in enumerate(elems):
        for j, b in enumerate(elems):
            v = _label_from_json(rows[i][j])
            if v not in elems:
                raise SerializeError(f"{what} entry {v!r} is not an element")
            table[(a, b)] = v
    return table


def vrelation_to_json(r: VRelation) -> dict:
    vals = []
    for a in r.source.labels:
        for b in r.target.labels:
            v = r.at(a, b)
            if v != r.quantale.bottom:
                vals.append([_label_to_json(a), _label_to_json(b), _label_to_json(v)])
    return {
        "source": set_to_json(r.source),
        "target": set_to_json(r.target),
        "values": vals,
    }


def vrelation_from_json(q: FiniteQuantale, doc: dict) -> VRelation:
    try:
        src = set_from_json(doc["source"])
        tgt = set_from_json(doc["target"])
        values = {
            (_label_from_json(a), _label_from_json(b)): _label_from_json(v)
            for a, b, v in doc["values"]
        }
    except (KeyError, TypeError, ValueError) as exc:
        raise SerializeError(f"malformed valued relation: {exc}") from exc
    for (a, b), v in values.items():
        if a not in src or b not in tgt:
            raise SerializeError(f"pair {(a, b)!r} outside source x target")
        if v not in q.elements:
            raise SerializeError(f"value {v!r} is not a quantale element")
    return VRelation(q, src, tgt, values)


# -- quantum sets and quantum relations -----------------------------------------------

def qset_to_json(x: MatrObject) -> dict:
    return {
        "atoms": [
            {"label": _label_to_json(lab), "dim": d} for lab, d in x.components
        ]
    }


def qset_from_json(inst: MatrInstance, doc: dict) -> MatrObject:
    try:
        comps = [
            (_label_from_json(a["label"]), int(a["dim"])) for a in doc["atoms"]
        ]
    except (KeyError, TypeError, ValueError) as exc:
        raise SerializeError(f"malformed quantum set: {exc}") from exc
    for _, d in comps:
        if d <= 0:
            raise SerializeError("atom dimensions must be positive")
    return inst.obj(comps)


def _matrix_to_json(m: ExactMatrix) -> list:
    return [
        [format_scalar(m.at(i, j)) for j in range(m.cols)] for i in range(m.rows)
    ]


def _matrix_from_json(rows: list) -> ExactMatrix:
    parsed = [[parse_scalar(s) for s in row] for row in rows]
    return ExactMatrix.from_rows(parsed)


def qrelation_to_json(f: MatrMorphism) -> dict:
    blocks = []
    for (a, b), v in f.blocks:
        blocks.append(
            {
                "from": _label_to_json(a),
                "to": _label_to_json(b),
                "basis": [_matrix_to_json(m) for m in v.basis],
            }
        )
    return {
        "source": qset_to_json(f.source),
        "target": qset_to_json(f.target),
        "blocks": blocks,
    }


def qrelation_from_json(inst: MatrInstance, doc: dict) -> MatrMorphism:
    try:
        src = qset_from_json(inst, doc["source"])
        tgt = qset_from_json(inst, doc["target"])
        blocks = {}
        for blk in doc["blocks"]:
            a = _label_from_json(blk["from"])
            b = _label_from_json(blk["to"])
            mats = [_matrix_from_json(rows) for rows in blk["basis"]]
            da, db = src.base_obj(a), tgt.base_obj(b)
            for m in mats:
                if (m.rows, m.cols) != (db, da):
                    raise SerializeError(
                        f"basis matrix for block {(a, b)!r} must be {db}x{da}"
                    )
            if mats:
                blocks[(a, b)] = span_of(*mats)
    except (KeyError, TypeError, ValueError) as exc:
        if isinstance(exc, SerializeError):
            raise
        raise SerializeError(f"malformed quantum relation: {exc}") from exc
    return inst.mor(src, tgt, blocks)


# -- instance dispatch -------------------------------------------------------------

def morphism_to_json(kind: str, inst: MatrInstance, f: MatrMorphism) -> dict:
    from .matr import matr_to_relation, matr_to_vrelation

    if kind == "rel":
        return relation_to_json(matr_to_relation(f))
    if kind == "vrel":
        return vrelation_to_json(matr_to_vrelation(inst, f))
    if kind == "qrel":
        return qrelation_to_json(f)
    raise SerializeError(f"unknown instance kind {kind!r}")


def morphism_from_json(kind: str, inst: MatrInstance, doc: dict) -> MatrMorphism:
    from .matr import relation_to_matr, vrelation_to_matr

    if kind == "rel":
        return relation_to_matr(inst, relation_from_json(doc))
    if kind == "vrel":
        return vrelation_to_matr(
            inst, vrelation_from_json(inst.base.quantale, doc)
        )
    if kind == "qrel":
        return qrelation_from_json(inst, doc)
    raise SerializeError(f"unknown instance kind {kind!r}")


def dumps(doc: Any) -> str:
    return json.dumps(doc, indent=2, sort_keys=True)
