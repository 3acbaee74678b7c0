import pytest

from hermite_heat import chebyshev_rule, control_problem, legendre_rule


@pytest.fixture(scope="session")
def legendre():
    return legendre_rule()


@pytest.fixture(scope="session")
def chebyshev():
    return chebyshev_rule()


@pytest.fixture(scope="session")
def control():
    return control_problem()
