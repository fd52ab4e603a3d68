import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from cycont.extremal import classify
from cycont.words import alphabet_of_size, enumerate_class

from oracles import positive_compositions


@pytest.fixture(scope="session")
def ab():
    return alphabet_of_size(2)


@pytest.fixture(scope="session")
def abc():
    return alphabet_of_size(3)


@pytest.fixture(scope="session")
def abcd():
    return alphabet_of_size(4)


@pytest.fixture(scope="session")
def ab5v():
    return alphabet_of_size(5, values=(2, 3, 4, 5, 6))


@pytest.fixture(scope="session")
def survey8():
    """Every cyclic Abelian class with positive counts and total <= 8.

    Maps (letters, counts) to the list of (canonical indices, membership)
    over the whole class; the shared brute-force base for the uniqueness,
    singularity, and constructor cross-check suites.
    """
    data = {}
    for k in range(1, 9):
        alphabet = alphabet_of_size(k)
        for total in range(k, 9):
            for counts in positive_compositions(total, k):
                vector = alphabet.vector(counts)
                rows = [
                    (word.indices, classify(word))
                    for word in enumerate_class(vector)
                ]
                data[(k, counts)] = rows
    return data
