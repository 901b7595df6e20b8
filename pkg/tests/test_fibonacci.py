import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cayleynav.errors import DomainError
from cayleynav.fibonacci import TAU, fib, zeckendorf, zeckendorf_length_bound


def test_fib_small_values():
    assert [fib(n) for n in range(11)] == [0, 1, 1, 2, 3, 5, 8, 13, 21, 34, 55]
    assert fib(20) == 6765
    assert fib(50) == 12586269025
    assert fib(100) == 354224848179261915075


def test_fib_recurrence():
    for n in range(2, 300):
        assert fib(n) == fib(n - 1) + fib(n - 2)


def test_fib_rejects_negative():
    with pytest.raises(DomainError):
        fib(-1)


def test_fib_dominates_golden_ratio_power():
    # F_n >= (tau^n - 1)/sqrt(5), checked in exact integer arithmetic:
    # the claim is equivalent to sqrt(5)*F_n >= F_n + 2*F_{n-1} - 2
    a, b = 1, 0  # F_{-1}, F_0
    for n in range(0, 400):
        base = b + 2 * a - 2
        assert base < 0 or 5 * b * b >= base * base, n
        a, b = b, a + b


def test_zeckendorf_known_cases():
    assert zeckendorf(1).indices == (2,)
    assert zeckendorf(2).indices == (3,)
    assert zeckendorf(3).indices == (4,)
    assert zeckendorf(4).indices == (2, 4)
    assert zeckendorf(34).indices == (9,)
    assert zeckendorf(100).indices == (4, 6, 11)
    assert zeckendorf(100).summands() == (3, 8, 89)
    assert zeckendorf(100).m == 100


def test_zeckendorf_rejects_nonpositive():
    with pytest.raises(DomainError):
        zeckendorf(-1)
    with pytest.raises(DomainError):
        zeckendorf(0)


@given(st.integers(1, 10**15))
def test_zeckendorf_reconstruction_and_gaps(m):
    z = zeckendorf(m)
    assert sum(fib(k) for k in z.indices) == m
    assert z.indices[0] >= 2
    assert all(b - a >= 2 for a, b in zip(z.indices, z.indices[1:]))
    assert z.indices == tuple(sorted(z.indices))


def test_zeckendorf_is_the_unique_sparse_representation():
    # every subset of {2..20} with gaps >= 2 gives a distinct sum, the sums
    # cover [0, F_21), and the greedy decomposition returns that subset
    subsets = [()]
    for k in range(2, 21):
        subsets += [s + (k,) for s in subsets if not s or k - s[-1] >= 2]
    sums = {}
    for s in subsets:
        total = sum(fib(k) for k in s)
        assert total not in sums
        sums[total] = s
    assert sorted(sums) == list(range(fib(21)))
    for total, s in sums.items():
        if total:
            assert zeckendorf(total).indices == s


def test_zeckendorf_length_bound_value():
    assert zeckendorf_length_bound(1) == pytest.approx(18.64252054247534)
    assert zeckendorf_length_bound(10**6) == pytest.approx(
        4.0 + 6.0 * math.log(1 + 10**6 * math.sqrt(5.0), TAU)
    )


def test_zeckendorf_length_bound_monotone():
    last = 0.0
    for m in (1, 2, 3, 10, 100, 10**4, 10**9, 10**18):
        cur = zeckendorf_length_bound(m)
        assert cur > last
        last = cur


def test_zeckendorf_length_bound_domain():
    with pytest.raises(DomainError):
        zeckendorf_length_bound(0)
    with pytest.raises(DomainError):
        zeckendorf_length_bound(-5)
