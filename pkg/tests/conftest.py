import pytest

from mkbranch.field import ParameterPoint
from mkbranch.verify import nonresonant_points

EXAMPLE = "q=1/3,t=1/2,t0=1/5,t1=2/7,t2=1/4,t3=3/8"


@pytest.fixture(scope="session")
def params():
    return ParameterPoint.parse(EXAMPLE)


@pytest.fixture(scope="session")
def random_points():
    return nonresonant_points(seed=2014, count=3)
