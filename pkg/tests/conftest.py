import pytest

from sumrank.fields import FieldTower


@pytest.fixture(scope="session")
def f25():
    """F_5 < F_25 = F_5[u], u^2 = 2 (the pinned quadratic model)."""
    return FieldTower(5, 1, 2)


@pytest.fixture(scope="session")
def f169():
    return FieldTower(13, 1, 2)


@pytest.fixture(scope="session")
def f81():
    """p=3, m=2: a tower whose middle field is itself an extension (q=9)."""
    return FieldTower(3, 2, 2)


@pytest.fixture(scope="session")
def f2401():
    """p=7, m=2 (q=49), for the square-table agreement sweep."""
    return FieldTower(7, 2, 2)
