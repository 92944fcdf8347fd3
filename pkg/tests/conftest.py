import numpy as np
import pytest

from schubert_gb import LinearCode, build_coset_leader_table, coset_engine
from schubert_gb.fixtures import TAGS, load_code
from schubert_gb.verify import random_codes

# the four reference codes, keyed by the alpha tag used in the fixture files
A_1_4 = np.array(
    [
        [1, 0, 0, 0, 1, 1, 1],
        [0, 1, 0, 1, 1, 1, 0],
        [0, 0, 1, 1, 1, 0, 1],
    ]
)

A_2_3 = np.array(
    [
        [1, 0, 0, 0, 1, 1, 1],
        [0, 1, 0, 1, 1, 0, 1],
        [0, 0, 1, 1, 0, 1, 1],
    ]
)


@pytest.fixture(scope="session")
def codes() -> dict[str, LinearCode]:
    return {tag: load_code(tag) for tag in TAGS}


@pytest.fixture(scope="session")
def bases(codes):
    return {tag: coset_engine(code) for tag, code in codes.items()}


@pytest.fixture(scope="session")
def tables(codes):
    return {tag: build_coset_leader_table(code) for tag, code in codes.items()}


@pytest.fixture(scope="session")
def small_random_codes():
    return random_codes(count=8, seed=11)
