import pathlib
import sys

import pytest
from hypothesis import settings

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parent))

settings.register_profile("ci", deadline=None)
settings.load_profile("ci")

from ujla import corpus  # noqa: E402
from ujla.fields import PrimeField  # noqa: E402


@pytest.fixture(scope="session")
def F2():
    return PrimeField(2)


@pytest.fixture(scope="session")
def F3():
    return PrimeField(3)


@pytest.fixture(scope="session")
def F5():
    return PrimeField(5)


@pytest.fixture(scope="session")
def dual():
    return corpus.dual_numbers()


@pytest.fixture(scope="session")
def heis():
    return corpus.heisenberg()


@pytest.fixture(scope="session")
def upper2():
    return corpus.upper_triangular_2x2()


@pytest.fixture(scope="session")
def standard_corpus():
    return corpus.standard_corpus()


@pytest.fixture(scope="session")
def golden():
    import json
    path = pathlib.Path(__file__).resolve().parent / "golden" / "classification.json"
    return json.loads(path.read_text())["cases"]
