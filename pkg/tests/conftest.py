import numpy as np
import pytest

# 4x5 running example: rows g1..g4, columns m1..m5 (0-based in code)
TABLE1 = np.array(
    [
        [1, 2, 2, 1, 6],
        [2, 1, 1, 0, 6],
        [2, 2, 1, 7, 6],
        [8, 9, 2, 6, 7],
    ],
    dtype=float,
)

# all pairwise column differences of TABLE1, pairs in lexicographic order
TABLE2 = np.array(
    [
        [-1, -1, 0, -5, 0, 1, -4, 1, -4, -5],
        [1, 1, 2, -4, 0, 1, -5, 1, -5, -6],
        [0, 1, -5, -4, 1, -5, -4, -6, -5, 1],
        [-1, 6, 2, 1, 7, 3, 2, -4, -5, -1],
    ],
    dtype=float,
)


@pytest.fixture
def table1():
    return TABLE1.copy()


@pytest.fixture
def table2():
    return TABLE2.copy()
