"""Quantum relations: orthocomplements, dagger kernels, zero-monos, effects."""

import random
from fractions import Fraction

import pytest

from qlab.core import is_dagger_iso, is_map, trace_of
from qlab.exact import ExactMatrix, GaussianRational, parse_scalar, span_of
from qlab.matr import MatrError
from qlab.qrel import (
    _norm_obstruction,
    _orthonormal_columns,
    _two_squares,
    dagger_kernel,
    effect_to_map,
    instance,
    invertible_not_dagger_iso,
    is_perp_blockwise,
    is_zero_mono,
    map_to_effect,
    orthocomplement,
    qmor,
    qrel_omega,
    qset,
)

INST = instance()
X2 = qset([("x", 2)])
X21 = qset([("x", 2), ("y", 1)])


def _ints(rows):
    return span_of(ExactMatrix.from_ints(rows))


def _random_block(rng, dc, dr):
    k = rng.randrange(0, 3)
    mats = []
    for _ in range(k):
        mats.append(ExactMatrix.from_ints(
            [[rng.choice((-1, 0, 0, 1, 2)) for _ in range(dc)] for _ in range(dr)]
        ))
    mats = [m for m in mats if not m.is_zero()]
    if not mats:
        return None
    return span_of(*mats)


def _random_mor(rng, src, tgt):
    blocks = {}
    for a, da in src.components:
        for b, db in tgt.components:
            v = _random_block(rng, da, db)
            if v is not None:
                blocks[(a, b)] = v
    return INST.mor(src, tgt, blocks)


def test_orthocomplement_involutive_and_lattice():
    rng = random.Random(7)
    for _ in range(60):
        r = _random_mor(rng, X21, X2)
        n = orthocomplement(r)
        assert INST.equal(orthocomplement(n), r)
        assert INST.equal(INST.meet2(r, n), INST.bottom(X21, X2))
        assert INST.equal(INST.join2(r, n), INST.top(X21, X2))


def test_orthocomplement_reverses_order():
    rng = random.Random(11)
    for _ in range(60):
        r = _random_mor(rng, X2, X2)
        s = INST.join2(r, _random_mor(rng, X2, X2))
        assert INST.leq(r, s)
        assert INST.leq(orthocomplement(s), orthocomplement(r))


def test_is_perp_routes_agree():
    rng = random.Random(13)
    for _ in range(80):
        r = _random_mor(rng, X2, X21)
        s = _random_mor(rng, X2, X21)
        via_trace = INST.equal(
            trace_of(INST, INST.compose(INST.dagger(s), r)),
            INST.bottom(INST.unit_obj(), INST.unit_obj()),
        )
        assert via_trace == is_perp_blockwise(r, s)


def test_kernel_of_projection_effect():
    e = qmor(X2, qset([("u", 1)]), {("x", "u"): _ints([[1, 0]])})
    ker, incl = dagger_kernel([e])
    assert ker.components == ((("k", "x"), 1),)
    assert INST.equal(INST.compose(e, incl), INST.bottom(ker, e.target))
    assert INST.equal(INST.compose(INST.dagger(incl), incl), INST.identity(ker))


def test_kernel_factorization_random():
    rng = random.Random(17)
    for _ in range(40):
        r = _random_mor(rng, X21, X2)
        ker, incl = dagger_kernel([r])
        assert INST.equal(INST.compose(r, incl), INST.bottom(ker, X2))
        s = INST.compose(incl, _random_mor(rng, X2, ker))
        assert INST.equal(INST.compose(r, s), INST.bottom(X2, X2))
        t = INST.compose(INST.dagger(incl), s)
        assert INST.equal(INST.compose(incl, t), s)


def test_kernel_of_full_morphism_is_empty():
    f = qmor(X2, X2, {("x", "x"): _ints([[1, 0], [0, 1]])})
    ker, incl = dagger_kernel([f])
    assert ker.components == ()
    assert incl.blocks == ()


def test_zero_mono_examples():
    full = INST.top(X2, qset([("u", 1)]))
    assert is_zero_mono(full)
    nil = qmor(X2, X2, {("x", "x"): _ints([[0, 1], [0, 0]])})
    assert not is_zero_mono(nil)
    idm = INST.identity(X21)
    assert is_zero_mono(idm)


def test_norm_obstruction_classes():
    # 3 and 7 are primes of the form 4k+3: their class is the prime itself.
    assert _norm_obstruction(Fraction(1)) == 1
    assert _norm_obstruction(Fraction(2)) == 1
    assert _norm_obstruction(Fraction(5)) == 1
    assert _norm_obstruction(Fraction(3)) == 3
    assert _norm_obstruction(Fraction(9)) == 1
    assert _norm_obstruction(Fraction(21)) == 21
    assert _norm_obstruction(Fraction(3, 4)) == 3


def test_two_squares_values():
    for q in (Fraction(1), Fraction(2), Fraction(5), Fraction(13, 4), Fraction(9)):
        z = _two_squares(q)
        assert z is not None
        norm = z * z.conjugate()
        assert norm == GaussianRational(q, Fraction(0))
    assert _two_squares(Fraction(3)) is None


def test_orthonormal_columns_mixed_norm_classes_rejected():
    # squared norms 1 and 2 lie in the same class of Q*/N(Q(i)): fine
    _orthonormal_columns([
        ExactMatrix.from_ints([[1], [0], [0]]),
        ExactMatrix.from_ints([[0], [1], [1]]),
    ])
    # squared norms 1 and 3 lie in different classes: no common rescaling exists
    with pytest.raises(MatrError):
        _orthonormal_columns([
            ExactMatrix.from_ints([[1], [0], [0], [0]]),
            ExactMatrix.from_ints([[0], [1], [1], [1]]),
        ])


def test_effect_map_roundtrip():
    rng = random.Random(23)
    data = qrel_omega()
    for _ in range(40):
        blocks = {}
        for a, da in X21.components:
            v = _random_block(rng, da, 1)
            if v is not None:
                blocks[(a, "*")] = v
        r = INST.mor(X21, INST.unit_obj(), blocks)
        f = effect_to_map(data, r)
        assert is_map(INST, f)
        assert INST.equal(map_to_effect(data, f), r)


def test_invertible_not_dagger_iso_fixture():
    v, w = invertible_not_dagger_iso()
    x = v.source
    assert INST.equal(INST.compose(w, v), INST.identity(x))
    assert INST.equal(INST.compose(v, w), INST.identity(x))
    assert not is_dagger_iso(INST, v)
    assert not is_map(INST, v)
