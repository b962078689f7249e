"""Shared fixtures: small benchmark algebras and element helpers."""

import pytest

from ezdlab.algebra import Algebra
from ezdlab.groebner import QuotientPresentation
from ezdlab.linalg import Field
from ezdlab.poly import PolyRing

GF101 = Field(101)
GF2 = Field(2)
QQ = Field(None)


def make_algebra(field, names, gen_specs):
    """Build k[names]/(ideal) from generator specs {monomial: coeff}."""
    ring = PolyRing(field, list(names))
    gens = [ring.poly({m: field.canon(c) for m, c in spec.items()}) for spec in gen_specs]
    return Algebra(QuotientPresentation(ring, gens))


def var(algebra, i, power=1):
    """The element x_i^power of the algebra."""
    mono = tuple(power if j == i else 0 for j in range(algebra.nvars))
    return algebra.element_from_poly(algebra.ring.monomial(mono))


@pytest.fixture(scope="session")
def hyper2():
    """k[x]/(x^2) over GF(101)."""
    return make_algebra(GF101, ["x"], [{(2,): 1}])


@pytest.fixture(scope="session")
def hyper4():
    """k[x]/(x^4) over GF(101)."""
    return make_algebra(GF101, ["x"], [{(4,): 1}])


@pytest.fixture(scope="session")
def square_zero():
    """R = k[x,y]/(x,y)^2 over GF(101), dim 3."""
    return make_algebra(GF101, ["x", "y"], [{(2, 0): 1}, {(1, 1): 1}, {(0, 2): 1}])


@pytest.fixture(scope="session")
def ci():
    """k[x,y]/(x*y, x^2 - y^2) over GF(101), dim 4; (x, y) is an exact
    zero-divisor pair."""
    return make_algebra(
        GF101, ["x", "y"], [{(1, 1): 1}, {(2, 0): 1, (0, 2): -1}]
    )


@pytest.fixture(scope="session")
def sprime():
    """S' = (k[x,y]/(x,y)^2)[u]/(u^2) over GF(101), dim 6; (u, u) is an
    exact zero-divisor pair."""
    return make_algebra(
        GF101,
        ["x", "y", "u"],
        [{(2, 0, 0): 1}, {(1, 1, 0): 1}, {(0, 2, 0): 1}, {(0, 0, 2): 1}],
    )
