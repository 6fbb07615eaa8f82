import pytest

from coxcells.session import CoxeterGroup

_CACHE: dict[str, CoxeterGroup] = {}


def group(spec: str) -> CoxeterGroup:
    """Session-wide cache so each group's mu-data is computed once."""
    if spec not in _CACHE:
        _CACHE[spec] = CoxeterGroup.from_spec(spec)
    return _CACHE[spec]


@pytest.fixture(scope="session")
def grp():
    return group
