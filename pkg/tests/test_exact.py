"""Exact scalar and matrix arithmetic, and the canonical subspace form."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qlab.exact import (
    ExactError,
    ExactMatrix,
    GaussianRational,
    OperatorSubspace,
    canonical_basis,
    commutation_matrix,
    format_scalar,
    full_subspace,
    gq,
    hs_orthocomplement,
    kernel_intersection,
    kronecker,
    parse_scalar,
    span_of,
    subspace_adjoint,
    subspace_join,
    subspace_leq,
    subspace_meet,
    subspace_product,
    zero_subspace,
)

fractions = st.fractions(min_value=-50, max_value=50, max_denominator=12)
scalars = st.builds(GaussianRational, fractions, fractions)


@given(scalars)
def test_scalar_string_roundtrip(z):
    assert parse_scalar(format_scalar(z)) == z


@given(scalars)
def test_scalar_roundtrip_ignores_whitespace(z):
    s = format_scalar(z)
    assert parse_scalar(" " + s.replace("", " ")) == z


@pytest.mark.parametrize(
    "text,expected",
    [
        ("0", gq(0)),
        ("3", gq(3)),
        ("1/2 i", gq(0, Fraction(1, 2))),
        ("-1+2 i", gq(-1, 2)),
        ("i", gq(0, 1)),
        ("-i", gq(0, -1)),
        ("2/3", gq(Fraction(2, 3))),
        ("-3/4-5/6 i", gq(Fraction(-3, 4), Fraction(-5, 6))),
    ],
)
def test_scalar_parse_examples(text, expected):
    assert parse_scalar(text) == expected
    assert parse_scalar(format_scalar(expected)) == expected


@given(scalars, scalars)
def test_scalar_field_ops(a, b):
    assert a + b == b + a
    assert a * b == b * a
    assert (a - b) + b == a
    if not b.is_zero():
        assert (a / b) * b == a
    assert (a * b).conjugate() == a.conjugate() * b.conjugate()


def test_matrix_identities():
    a = ExactMatrix.from_ints([[1, 2], [3, 4]])
    b = ExactMatrix.from_ints([[0, 1], [1, 0]])
    assert (a @ b).adjoint() == b.adjoint() @ a.adjoint()
    assert a.trace() == gq(5)
    assert (a @ b).trace() == (b @ a).trace()
    i2 = ExactMatrix.identity(2)
    assert a @ i2 == a and i2 @ a == a


def test_kron_mixed_product():
    a = ExactMatrix.from_ints([[1, 2], [3, 4]])
    b = ExactMatrix.from_ints([[0, 1], [1, 1]])
    c = ExactMatrix.from_ints([[2, 0], [0, 1]])
    d = ExactMatrix.from_ints([[1, 1], [0, 1]])
    lhs = a.kron(b) @ c.kron(d)
    rhs = (a @ c).kron(b @ d)
    assert lhs == rhs


def test_commutation_matrix_swaps_factors():
    k = commutation_matrix(2, 3)
    a = ExactMatrix.from_ints([[1, 2], [3, 4]])
    b = ExactMatrix.from_ints([[1, 0, 1], [2, 1, 0], [0, 0, 3]])
    k_back = commutation_matrix(3, 2)
    assert k @ a.kron(b) @ k_back == b.kron(a)


def test_canonical_basis_is_rref_and_value_equal():
    m1 = ExactMatrix.from_ints([[1, 0], [0, 0]])
    m2 = ExactMatrix.from_ints([[0, 0], [0, 1]])
    v = span_of(m1, m2)
    w = span_of(m1 + m2, m1 - m2)
    assert v == w
    assert v.dim == 2


def test_subspace_lattice_and_product():
    e11 = ExactMatrix.from_ints([[1, 0], [0, 0]])
    e12 = ExactMatrix.from_ints([[0, 1], [0, 0]])
    v = span_of(e11)
    w = span_of(e12)
    j = subspace_join(v, w)
    assert subspace_leq(v, j) and subspace_leq(w, j)
    assert subspace_meet(v, w).is_zero()
    prod = subspace_product(v, w)
    assert prod == span_of(e11 @ e12)


def test_hs_orthocomplement_involutive():
    v = span_of(ExactMatrix.from_ints([[1, 1], [0, 1]]))
    assert hs_orthocomplement(hs_orthocomplement(v)) == v
    assert hs_orthocomplement(zero_subspace(2, 2)) == full_subspace(2, 2)
    w = hs_orthocomplement(v)
    assert subspace_meet(v, w).is_zero()
    assert subspace_join(v, w) == full_subspace(2, 2)


def test_kernel_intersection():
    v = span_of(ExactMatrix.from_ints([[1, 0], [0, 0]]))
    k = kernel_intersection(v)
    assert k.dim == 1
    col = k.basis[0]
    for m in v.basis:
        assert (m @ col).is_zero()


def test_adjoint_subspace():
    v = span_of(ExactMatrix.from_rows([[gq(0, 1), gq(1)]]))
    w = subspace_adjoint(v)
    assert subspace_adjoint(w) == v
    assert (w.domain_dim, w.codomain_dim) == (v.codomain_dim, v.domain_dim)


def test_shape_mismatch_raises():
    with pytest.raises(ExactError):
        canonical_basis(
            [ExactMatrix.identity(2), ExactMatrix.identity(3)], 2, 2
        )
