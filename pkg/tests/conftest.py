import pytest

from drinfeld.dmodule import DrinfeldModule
from drinfeld.ff import make_tower
from drinfeld.poly import DensePolynomial


@pytest.fixture(scope="session")
def tower53():
    """GF(5^3) over F_5 with the default modulus z^3 + 3z + 3."""
    return make_tower(5, 1, 3)


@pytest.fixture(scope="session")
def phi_ex(tower53):
    """The rank-3 module T |--> z + t^2 + t^3."""
    tw = tower53
    return DrinfeldModule(tw, [tw.gen_K(), 0, 1, 1])


@pytest.fixture(scope="session")
def phi_mor(tower53):
    """The rank-3 module T |--> z + t^2 + z*t^3 used for morphisms."""
    tw = tower53
    return DrinfeldModule(tw, [tw.gen_K(), 0, 1, tw.gen_K()])


def fq_poly(tower, ints, var="T"):
    """F_q[T] polynomial from ascending int coefficients."""
    return DensePolynomial([tower.element("q", c) for c in ints],
                           tower.zero("q"), var)
