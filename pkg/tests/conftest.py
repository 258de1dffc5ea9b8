from pathlib import Path

import pytest

from spanwitness import CANONICAL, witness_matrix

DATA_DIR = Path(__file__).parent / "data"


@pytest.fixture(scope="session")
def canonical_witness():
    return witness_matrix(CANONICAL)


@pytest.fixture(scope="session")
def data_dir():
    return DATA_DIR
