from fractions import Fraction
from itertools import combinations

import numpy as np
import pytest

from quasilie.catalog import builtin, canonical_names
from quasilie.tensor import Tensor


def rand_frac(rng, lo=-3, hi=3, denoms=(1, 2)):
    return Fraction(rng.randint(lo, hi), rng.choice(denoms))


def rand_vector(rng, n):
    return np.array([rand_frac(rng) for _ in range(n)], dtype=object)


def rand_tensor(rng, n, degree):
    data = np.empty((n,) * degree, dtype=object)
    for idx in np.ndindex(data.shape):
        data[idx] = rand_frac(rng)
    return Tensor(n, data)


def rand_antisym(rng, n, degree=2):
    entries = []
    for combo in combinations(range(n), degree):
        entries.append((combo, rand_frac(rng)))
    return Tensor.from_alternating_entries(n, degree, entries)


def rand_cocycle_array(rng, n):
    d = np.empty((n, n, n), dtype=object)
    d[...] = Fraction(0)
    for i in range(n):
        for j in range(n):
            for k in range(j + 1, n):
                v = rand_frac(rng)
                d[i, j, k] = v
                d[i, k, j] = -v
    return d


@pytest.fixture(scope="session")
def catalog_entries():
    return [builtin(name) for name in canonical_names()]
