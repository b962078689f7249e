"""Property-based checks of the exact linear algebra layer."""

from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from ezdlab.linalg import Field, Matrix, inverse, kernel_basis, rank, rref, solve

GF101 = Field.prime(101)
GF2 = Field.prime(2)
QQ = Field.rationals()

FIELDS = [GF101, GF2, QQ]


def _matrices(field, max_dim=6):
    if field.p is not None:
        scalars = st.integers(min_value=0, max_value=field.p - 1)
    else:
        scalars = st.fractions(
            min_value=-5, max_value=5, max_denominator=4
        )
    return st.integers(1, max_dim).flatmap(
        lambda r: st.integers(1, max_dim).flatmap(
            lambda c: st.lists(
                st.lists(scalars, min_size=c, max_size=c), min_size=r, max_size=r
            ).map(lambda rows: Matrix.from_rows(field, rows))
        )
    )


@pytest.mark.parametrize("field", FIELDS, ids=str)
@settings(max_examples=60, deadline=None)
@given(data=st.data())
def test_rank_nullity(field, data):
    m = data.draw(_matrices(field))
    k = kernel_basis(m)
    assert rank(m) + k.cols == m.cols
    if k.cols:
        assert (m @ k).is_zero()


@pytest.mark.parametrize("field", FIELDS, ids=str)
@settings(max_examples=60, deadline=None)
@given(data=st.data())
def test_rref_idempotent(field, data):
    m = data.draw(_matrices(field))
    r1 = rref(m)
    r2 = rref(r1.reduced)
    assert r1.reduced == r2.reduced
    assert r1.pivot_columns == r2.pivot_columns


@pytest.mark.parametrize("field", FIELDS, ids=str)
@settings(max_examples=60, deadline=None)
@given(data=st.data())
def test_solve_consistency(field, data):
    """a x = b is solvable exactly when b lies in the column space, and any
    returned solution actually solves the system."""
    a = data.draw(_matrices(field))
    coeffs = data.draw(
        st.lists(
            st.integers(0, 3) if field.p is not None else st.fractions(
                min_value=-2, max_value=2, max_denominator=2
            ),
            min_size=a.cols,
            max_size=a.cols,
        )
    )
    b = a @ Matrix.from_rows(field, [[c] for c in coeffs])
    x = solve(a, b)
    assert x is not None
    assert a @ x == b


def test_inverse_roundtrip():
    m = Matrix.from_rows(GF101, [[1, 2], [3, 5]])
    mi = inverse(m)
    assert mi is not None
    assert m @ mi == Matrix.identity(GF101, 2)
    singular = Matrix.from_rows(GF101, [[1, 2], [2, 4]])
    assert inverse(singular) is None


def test_rational_exactness():
    """No floating point: a classically ill-conditioned system solves exactly."""
    n = 6
    hilbert = Matrix.from_rows(
        QQ, [[Fraction(1, i + j + 1) for j in range(n)] for i in range(n)]
    )
    assert rank(hilbert) == n
    hi = inverse(hilbert)
    assert hilbert @ hi == Matrix.identity(QQ, n)
