import math

import numpy as np
from hypothesis import given, settings
from hypothesis import strategies as st

from lplab.summation import ArrayAccumulator, compensated_sum


def test_compensated_sum_beats_naive_cancellation():
    vals = np.array([1e16, 1.0, -1e16, 1.0])
    assert compensated_sum(vals) == 2.0


@given(st.lists(st.floats(-1e6, 1e6), min_size=1, max_size=200), st.randoms())
@settings(max_examples=50, deadline=None)
def test_compensated_sum_is_order_independent(values, rnd):
    shuffled = list(values)
    rnd.shuffle(shuffled)
    assert compensated_sum(values) == compensated_sum(shuffled) == math.fsum(values)


def test_array_accumulator_recovers_small_terms():
    acc = ArrayAccumulator(3)
    acc.add(np.full(3, 1e16))
    for _ in range(10):
        acc.add(np.ones(3))
    acc.add(np.full(3, -1e16))
    np.testing.assert_array_equal(acc.result(), np.full(3, 10.0))
