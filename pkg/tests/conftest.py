import itertools
import math

import pytest


def brute_partitions(n):
    """Partitions of n by explicit enumeration of nonincreasing part lists."""
    def rec(rem, cap):
        if rem == 0:
            yield ()
            return
        for p in range(min(rem, cap), 0, -1):
            for rest in rec(rem - p, p):
                yield (p,) + rest
    return sum(1 for _ in rec(n, n))


def brute_multisets(weights, n):
    """Multisets of typed items with total size n; ``weights[s]`` types of size s."""
    types = [s for s in range(1, len(weights)) for _ in range(weights[s])]
    count = 0
    for combo in itertools.product(*(range(n // s + 1) for s in types)):
        if sum(c * s for c, s in zip(combo, types)) == n:
            count += 1
    return count


def brute_compositions(parts, n):
    """Compositions of n into the given parts: arrangements of each multiset of parts."""
    total = 0
    for mult in itertools.product(*(range(n // p + 1) for p in parts)):
        if sum(m * p for m, p in zip(mult, parts)) == n:
            total += math.factorial(sum(mult)) // math.prod(math.factorial(m) for m in mult)
    return total


@pytest.fixture(scope="session")
def partitions():
    return [brute_partitions(n) for n in range(31)]


def binom_table(k, n_max):
    return [math.comb(n + k, k) for n in range(n_max + 1)]
