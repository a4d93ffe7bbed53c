"""Shared fixtures: rings and the built-in modules at small truncation degrees."""

import logging

import pytest

from paracyclic.constructions import default_registry, duchain_to_duplicial, simplex_chains
from paracyclic.linalg import CoefficientRing, Matrix
from paracyclic.modules import DuchainComplex, TruncatedDuplicialModule


@pytest.fixture()
def QQ() -> CoefficientRing:
    return CoefficientRing.rationals()


@pytest.fixture()
def ZZ() -> CoefficientRing:
    return CoefficientRing.integers()


def build(name: str, ring: CoefficientRing, n_max: int = 3, twist: str = "2"):
    return default_registry().build(name, ring, n_max, twist)


@pytest.fixture()
def ground(QQ) -> TruncatedDuplicialModule:
    return build("ground-ring", QQ, 4)


@pytest.fixture()
def simplex1(QQ) -> TruncatedDuplicialModule:
    return build("simplex-1", QQ, 3)


@pytest.fixture()
def simplicial1(QQ) -> TruncatedDuplicialModule:
    """Chains on the 1-simplex without the cyclic promotion."""
    return simplex_chains(1, 3, QQ)


@pytest.fixture()
def dual(QQ) -> TruncatedDuplicialModule:
    return build("dual-numbers", QQ, 3)


@pytest.fixture()
def dual_twisted(QQ) -> TruncatedDuplicialModule:
    return build("dual-numbers-twisted", QQ, 3)


@pytest.fixture()
def twisted2(QQ) -> TruncatedDuplicialModule:
    return build("scalar-twisted-u", QQ, 4, "2")


@pytest.fixture()
def non_paracyclic(QQ) -> TruncatedDuplicialModule:
    """Reconstruction of V_0 = V_1 = Q with b_1 = d_0 = 1."""
    one = Matrix.from_rows(QQ, [[1]])
    V = DuchainComplex.from_maps(QQ, [1, 1], b={1: one}, d={0: one}, name="V")
    return duchain_to_duplicial(V)


@pytest.fixture(autouse=True)
def _reset_logging():
    yield
    root = logging.getLogger("paracyclic")
    for handler in list(root.handlers):
        root.removeHandler(handler)
