"""Compensated, order-deterministic reductions.

Scalar reductions go through :func:`math.fsum`, which is correctly rounded:
the result does not depend on evaluation order, so serial and parallel
callers agree bit for bit. Pointwise reductions over a stack of arrays use
Neumaier's variant of Kahan summation applied elementwise, always in the
order terms are added.
"""

import math

import numpy as np


def compensated_sum(values):
    """Correctly rounded sum of a real array."""
    return math.fsum(np.asarray(values, dtype=np.float64).ravel().tolist())


class ArrayAccumulator:
    """Elementwise Neumaier accumulator for same-shaped float arrays."""

    def __init__(self, shape):
        self.total = np.zeros(shape, dtype=np.float64)
        self.comp = np.zeros(shape, dtype=np.float64)

    def add(self, term):
        term = np.asarray(term, dtype=np.float64)
        t = self.total + term
        big = np.abs(self.total) >= np.abs(term)
        self.comp += np.where(big, (self.total - t) + term, (term - t) + self.total)
        self.total = t
        return self

    def result(self):
        return self.total + self.comp
