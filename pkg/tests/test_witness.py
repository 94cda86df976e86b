import itertools
import math

import pytest

from cellprofile import check_factorial_floor, count_coded_graphs
from cellprofile.errors import CapacityError, InputError
from cellprofile.witness import (
    count_by_burnside,
    count_by_enumeration,
    matrix_orbits,
    parallel_jobs,
)


def brute_b(n):
    """Min-image over all row and column permutations of every n-one matrix."""
    total = 0
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            cells = list(itertools.product(range(a), range(b)))
            seen = set()
            for ones in itertools.combinations(cells, n):
                if len({r for r, _ in ones}) < a or len({c for _, c in ones}) < b:
                    continue
                seen.add(
                    min(
                        tuple(sorted((p[r], q[c]) for r, c in ones))
                        for p in itertools.permutations(range(a))
                        for q in itertools.permutations(range(b))
                    )
                )
            total += len(seen)
    return total


def test_small_values():
    assert count_coded_graphs(0).value == 1
    assert count_coded_graphs(1).value == 1
    assert count_coded_graphs(2).value == 3


@pytest.mark.parametrize("n", range(1, 5))
def test_methods_match_brute_force(n):
    assert count_by_enumeration(n) == count_by_burnside(n) == brute_b(n)


def test_agreement_and_growth_through_seven():
    values = []
    for n in range(1, 8):
        w = count_coded_graphs(n)
        assert w.methods_agreed and w.methods == ("burnside", "enumerate")
        values.append(w.value)
    assert values == [1, 3, 6, 16, 34, 90, 211]
    assert all(x < y for x, y in zip(values[1:], values[2:]))


def test_matrix_orbits_small():
    # 2x2 matrices with two ones under row and column swaps: diagonal, row, column
    assert matrix_orbits(2, 2, 2) == 3
    assert matrix_orbits(3, 1, 2) == 1
    assert matrix_orbits(0, 3, 0) == 1


def test_capacity_and_input():
    with pytest.raises(CapacityError):
        count_coded_graphs(13)
    with pytest.raises(CapacityError):
        count_by_enumeration(9)
    with pytest.raises(InputError):
        count_coded_graphs(-1)


def test_factorial_floor_small():
    assert check_factorial_floor(3) is False  # 1 > 0! fails at the boundary
    assert check_factorial_floor(12) is True
    assert count_coded_graphs(4).value > math.factorial(3)


def test_jobs_env(monkeypatch):
    monkeypatch.setenv("CELLPROFILE_JOBS", "3")
    assert parallel_jobs() == 3
    monkeypatch.setenv("CELLPROFILE_JOBS", "x")
    with pytest.raises(InputError):
        parallel_jobs()
    monkeypatch.setenv("CELLPROFILE_JOBS", "2")
    assert count_by_burnside(10) == 3908


def test_json():
    assert count_coded_graphs(4).to_json() == {
        "n": 4,
        "value": "16",
        "methods_agreed": True,
        "methods": ["burnside", "enumerate"],
    }
