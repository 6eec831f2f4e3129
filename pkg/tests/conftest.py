import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from quasidesign.constructions import construct_26_pmd, construct_26_quasigroup, golden_26  # noqa: E402
from quasidesign.designs import MendelsohnDesign  # noqa: E402


@pytest.fixture(scope="session")
def q26():
    return construct_26_quasigroup(check=False)


@pytest.fixture(scope="session")
def pmd26():
    return construct_26_pmd()


@pytest.fixture(scope="session")
def golden():
    return [golden_26(d) for d in range(3)]


@pytest.fixture
def mts3():
    return MendelsohnDesign(3, 3, 1, ((0, 1, 2), (0, 2, 1)))
