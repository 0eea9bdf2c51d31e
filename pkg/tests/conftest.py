import pytest

from orbitstar import su2, sphere_casimir


@pytest.fixture(scope="session")
def alg():
    return su2()


@pytest.fixture(scope="session")
def unit_spec(alg):
    return sphere_casimir(1, alg)
