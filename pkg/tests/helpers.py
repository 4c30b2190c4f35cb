"""Shared generators for the property tests."""

import numpy as np
from hypothesis import strategies as st

from g2solitons.exterior import DIM, random_form
from g2solitons.scalar import Scalar, identity

seeds = st.integers(0, 2**32 - 1)


def random_invertible(rng, steps=10, irrational=False):
    """Exact unimodular-ish matrix from elementary operations and a diagonal."""
    h = identity(DIM)
    for _ in range(steps):
        i, j = rng.choice(DIM, 2, replace=False)
        E = identity(DIM)
        v = Scalar(int(rng.integers(-2, 3)))
        if irrational:
            v = v + Scalar(0, int(rng.integers(-1, 2)))
        E[i, j] = v
        h = E @ h
    d = [Scalar(int(rng.choice([-2, -1, 1, 2]))) for _ in range(DIM)]
    return h @ np.diag(np.array(d, dtype=object))


def forms(rng, degree, n=1, **kw):
    return [random_form(rng, degree, **kw) for _ in range(n)]
