import math

import numpy as np
import pytest

import hypergroups as hg
from hypergroups.builders import (
    catalog,
    catalog_names,
    class_hypergroup,
    corpus,
    fibonacci,
    group_ring,
    ising,
    near_group,
    rep_ring,
)
from hypergroups.tolerance import DEFAULT_TOL

NILPOTENT_CATALOG = {
    "C2", "C3", "C4", "C5", "C6", "C7", "C8",
    "C2xC2", "C2xC2xC2", "D4", "Q8",
}


@pytest.fixture(scope="session")
def tol():
    return DEFAULT_TOL


@pytest.fixture(scope="session")
def ising_ring():
    return ising()


@pytest.fixture(scope="session")
def ising_table(ising_ring):
    return hg.character_table(ising_ring)


@pytest.fixture(scope="session")
def fib_ring():
    return fibonacci()


@pytest.fixture(scope="session")
def fib_table(fib_ring):
    return hg.character_table(fib_ring)


@pytest.fixture(scope="session")
def z2_ring():
    return group_ring(catalog("C2"))


@pytest.fixture(scope="session")
def s3_rep():
    return rep_ring(catalog("S3"))


@pytest.fixture(scope="session")
def s3_table(s3_rep):
    return hg.character_table(s3_rep)


@pytest.fixture(scope="session")
def q8_rep():
    return rep_ring(catalog("Q8"))


@pytest.fixture(scope="session")
def q8_table(q8_rep):
    return hg.character_table(q8_rep)


@pytest.fixture(scope="session")
def full_corpus():
    return corpus()


@pytest.fixture(scope="session")
def corpus_with_tables(full_corpus):
    return [(r, hg.character_table(r)) for r in full_corpus]


def s3_indices(s3_rep):
    """(index of s, index of t) in the rep ring of S3, found from the tensor."""
    m = s3_rep.rank
    for i in range(1, m):
        if s3_rep.tensor[i, i, 0] == 1 and all(
            s3_rep.tensor[i, i, k] == 0 for k in range(1, m)
        ):
            s = i
    t = next(i for i in range(1, m) if i != s)
    return s, t


def match_columns(values: np.ndarray, expected_columns, tol=1e-8) -> bool:
    """Multiset comparison of table columns against expected value vectors."""
    cols = [values[:, j] for j in range(values.shape[1])]
    remaining = list(expected_columns)
    for c in cols:
        hit = None
        for idx, e in enumerate(remaining):
            if np.abs(c - np.asarray(e, dtype=complex)).max() <= tol:
                hit = idx
                break
        if hit is None:
            return False
        remaining.pop(hit)
    return not remaining


PHI = (1 + math.sqrt(5)) / 2
SQRT2 = math.sqrt(2)
