"""
Cayley-table oracles.

Direct numpy checks on binary operation tables, independent of the
formula evaluator; tests and demos cross-check the two.
"""
from itertools import product
from typing import Iterator

import numpy as np
from numpy.typing import NDArray

from .finite_model import FiniteModel


def cayley_table(model: FiniteModel, function: str = "mul") -> NDArray[np.int64]:
    """Binary table of ``function`` as an n x n array."""
    n = model.size
    table = model.func_tables[function]
    return np.array([[table[(i, j)] for j in range(n)] for i in range(n)], dtype=np.int64)


def is_square(a: NDArray) -> bool:
    return a.ndim == 2 and a.shape[0] == a.shape[1]


def is_bijection(row: NDArray) -> bool:
    return np.array_equal(np.sort(row), np.arange(len(row)))


def is_left_cancellative(a: NDArray) -> bool:
    return all(is_bijection(row) for row in a)


def is_right_cancellative(a: NDArray) -> bool:
    return is_left_cancellative(a.T)


def is_latin_square(a: NDArray) -> bool:
    return is_square(a) and is_left_cancellative(a) and is_right_cancellative(a)


is_cancellative = is_latin_square


def is_commutative(a: NDArray) -> bool:
    return is_square(a) and bool((a.T == a).all())


def is_associative(a: NDArray) -> bool:
    # (xy)z against x(yz) for all x, y, z at once
    left = a[a, :]          # left[x, y, z] = a[a[x, y], z]
    right = a[:, a]         # right[x, y, z] = a[x, a[y, z]]
    return bool((left == right).all())


def identity_element(a: NDArray) -> int:
    """Two-sided identity, or -1 when there is none."""
    n = a.shape[0]
    units = np.arange(n)
    for e in range(n):
        if (a[e] == units).all() and (a[:, e] == units).all():
            return e
    return -1


def is_group_table(a: NDArray) -> bool:
    """Finite associative Latin squares are exactly the group tables."""
    return is_latin_square(a) and is_associative(a)


def all_tables(n: int) -> Iterator[NDArray[np.int64]]:
    """Every n x n table over {0..n-1}, in lexicographic order."""
    for flat in product(range(n), repeat=n * n):
        yield np.array(flat, dtype=np.int64).reshape(n, n)
