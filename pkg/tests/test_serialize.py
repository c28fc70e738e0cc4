"""JSON serialization roundtrips for sets, quantales, and all three relation kinds."""

import json

import pytest

from qlab.exact import ExactMatrix, span_of
from qlab.finrel import BoolRelation, fset
from qlab.matr import qrel_instance
from qlab.qrel import qmor, qset
from qlab.quantale import BUILTIN_QUANTALES, VRelation, lukasiewicz3_quantale
from qlab.serialize import (
    SerializeError,
    dumps,
    qrelation_from_json,
    qrelation_to_json,
    qset_from_json,
    qset_to_json,
    quantale_from_json,
    quantale_to_json,
    relation_from_json,
    relation_to_json,
    set_from_json,
    set_to_json,
    vrelation_from_json,
    vrelation_to_json,
)

L3 = lukasiewicz3_quantale()
QREL = qrel_instance()


def test_set_roundtrip():
    s = fset("a", "b", "c")
    assert set_from_json(set_to_json(s)) == s


def test_relation_roundtrip():
    a = fset("a", "b")
    x = fset("x", "y")
    r = BoolRelation(a, x, frozenset([("a", "x"), ("b", "y")]))
    doc = relation_to_json(r)
    assert relation_from_json(doc) == r


def test_relation_rejects_foreign_pairs():
    doc = {
        "source": {"labels": ["a"]},
        "target": {"labels": ["x"]},
        "pairs": [["a", "nope"]],
    }
    with pytest.raises(SerializeError):
        relation_from_json(doc)


def test_quantale_roundtrip_all_builtins():
    for name, q in BUILTIN_QUANTALES.items():
        doc = quantale_to_json(q)
        back = quantale_from_json(doc)
        assert back == q, name


def test_quantale_from_leq_matrix():
    doc = quantale_to_json(BUILTIN_QUANTALES["bool"])
    els = doc["elements"]
    doc2 = dict(doc)
    del doc2["join"]
    doc2["leq"] = [
        [1 if BUILTIN_QUANTALES["bool"].leq(a, b) else 0 for b in els] for a in els
    ]
    assert quantale_from_json(doc2) == BUILTIN_QUANTALES["bool"]


def test_vrelation_roundtrip():
    a = fset("a", "b")
    x = fset("x")
    r = VRelation(L3, a, x, {("a", "x"): "1/2", ("b", "x"): "0"})
    doc = vrelation_to_json(r)
    assert vrelation_from_json(L3, doc) == r


def test_qset_roundtrip():
    x = qset([("u", 2), ("v", 1)])
    assert qset_from_json(QREL, qset_to_json(x)) == x


def test_qrelation_roundtrip():
    x = qset([("u", 2)])
    y = qset([("v", 1)])
    r = qmor(x, y, {("u", "v"): span_of(ExactMatrix.from_ints([[1, 2]]))})
    doc = qrelation_to_json(r)
    assert qrelation_from_json(QREL, doc) == r


def test_qrelation_scalar_entries():
    x = qset([("u", 2)])
    m = ExactMatrix.from_ints([[1, -1], [0, 2]])
    r = qmor(x, x, {("u", "u"): span_of(m)})
    doc = qrelation_to_json(r)
    entries = doc["blocks"][0]["basis"][0]
    assert all(isinstance(e, str) for row in entries for e in row)
    assert qrelation_from_json(QREL, doc) == r


def test_qrelation_rejects_bad_shape():
    doc = {
        "source": {"atoms": [{"label": "u", "dim": 2}]},
        "target": {"atoms": [{"label": "v", "dim": 1}]},
        "blocks": [{"from": "u", "to": "v", "basis": [[["1", "0"], ["0", "1"]]]}],
    }
    with pytest.raises(SerializeError):
        qrelation_from_json(QREL, doc)


def test_dumps_deterministic():
    x = qset([("u", 2)])
    r = qmor(x, x, {("u", "u"): span_of(ExactMatrix.from_ints([[1, 0], [0, 1]]))})
    a = dumps(qrelation_to_json(r))
    b = dumps(qrelation_to_json(r))
    assert a == b
    json.loads(a)
