import pytest

from ringwalk import verify


@pytest.fixture(scope="session")
def unitary_sweep_16():
    """Every catalog ring of order <= 16 against the unitary-family checks."""
    return verify.sweep(16, "unitary")


@pytest.fixture(scope="session")
def quadratic_sweep_16():
    """Every catalog ring of order <= 16 against the quadratic-family checks."""
    return verify.sweep(16, "quadratic")
