"""Counting bipartite graphs with distinguished parts, n edges, no isolated vertices.

``B(n)`` equals the number of 0/1 matrices with ``n`` ones and no zero row or
column, up to independent row and column permutations. Two methods:

``enumerate``  grow orbit representatives one edge at a time and deduplicate
               by a canonical form (n <= 8).
``burnside``   count orbits of S_a x S_b on a x b matrices with n ones via cycle
               types, then strip zero rows/columns by finite differences (n <= 12).
"""
from __future__ import annotations

import itertools
import math
import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache

from .errors import CapacityError, InputError, VerificationError

MAX_ENUMERATE = 8
MAX_BURNSIDE = 12
JOBS_ENV = "CELLPROFILE_JOBS"

Graph = frozenset  # of (row, col) pairs; rows 0..a-1 and cols 0..b-1 all used


@dataclass(frozen=True)
class WitnessCount:
    n: int
    value: int
    methods_agreed: bool
    methods: tuple[str, ...]

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "value": str(self.value),
            "methods_agreed": self.methods_agreed,
            "methods": list(self.methods),
        }


def parallel_jobs() -> int:
    """Worker count from the environment; 0 or unset means automatic."""
    raw = os.environ.get(JOBS_ENV, "0").strip() or "0"
    try:
        jobs = int(raw)
    except ValueError as exc:
        raise InputError(f"{JOBS_ENV} must be an integer, got {raw!r}") from exc
    if jobs < 0:
        raise InputError(f"{JOBS_ENV} must be >= 0")
    return jobs


# -- canonical enumeration ---------------------------------------------------

def _refine(rows: list[set[int]], cols: list[set[int]]) -> tuple[list[int], list[int]]:
    """Color refinement on both sides; colors are isomorphism-invariant ranks."""
    rc = [len(r) for r in rows]
    cc = [len(c) for c in cols]
    while True:
        rsig = [(rc[i], tuple(sorted(cc[j] for j in rows[i]))) for i in range(len(rows))]
        csig = [(cc[j], tuple(sorted(rc[i] for i in cols[j]))) for j in range(len(cols))]
        rrank = {s: k for k, s in enumerate(sorted(set(rsig)))}
        crank = {s: k for k, s in enumerate(sorted(set(csig)))}
        new_rc = [rrank[s] for s in rsig]
        new_cc = [crank[s] for s in csig]
        if len(rrank) == len(set(rc)) and len(crank) == len(set(cc)):
            return new_rc, new_cc
        rc, cc = new_rc, new_cc


def _cells_cost(colors: list[int]) -> int:
    return math.prod(math.factorial(m) for m in Counter(colors).values())


def _side_form(adj: list[set[int]], own: list[int], other: list[int]) -> tuple:
    """Minimum over color-respecting orderings of ``adj``'s side of the sorted other side."""
    order = sorted(range(len(adj)), key=lambda i: own[i])
    cells = [list(g) for _, g in itertools.groupby(order, key=lambda i: own[i])]
    n_other = len(other)
    best = None
    for choice in itertools.product(*(itertools.permutations(c) for c in cells)):
        seq = [i for cell in choice for i in cell]
        cols = [[other[j]] for j in range(n_other)]
        for i in seq:
            nbrs = adj[i]
            for j in range(n_other):
                cols[j].append(1 if j in nbrs else 0)
        form = tuple(sorted(tuple(c) for c in cols))
        if best is None or form < best:
            best = form
    return (tuple(sorted(own)), best)


def canonical_form(g: Graph) -> tuple:
    """Isomorphism-invariant form under part-preserving relabelling."""
    a = 1 + max(r for r, _ in g)
    b = 1 + max(c for _, c in g)
    rows = [set() for _ in range(a)]
    cols = [set() for _ in range(b)]
    for r, c in g:
        rows[r].add(c)
        cols[c].add(r)
    rc, cc = _refine(rows, cols)
    # permute the side with fewer color-respecting orderings; the choice is invariant
    if _cells_cost(rc) <= _cells_cost(cc):
        return ("rows", a, b) + _side_form(rows, rc, cc)
    return ("cols", a, b) + _side_form(cols, cc, rc)


def _extensions(g: Graph):
    a = 1 + max(r for r, _ in g)
    b = 1 + max(c for _, c in g)
    for r in range(a + 1):
        for c in range(b + 1):
            if (r, c) not in g:
                yield g | {(r, c)}


def count_by_enumeration(n: int) -> int:
    if n > MAX_ENUMERATE:
        raise CapacityError(f"canonical enumeration is limited to n <= {MAX_ENUMERATE}")
    if n == 0:
        return 1
    level = {canonical_form(Graph({(0, 0)})): Graph({(0, 0)})}
    for _ in range(n - 1):
        nxt = {}
        for g in level.values():
            for h in _extensions(g):
                nxt.setdefault(canonical_form(h), h)
        level = nxt
    return len(level)


# -- Burnside over cycle types -----------------------------------------------

@lru_cache(maxsize=None)
def _cycle_classes(n: int) -> tuple[tuple[tuple[tuple[int, int], ...], int], ...]:
    """(cycle type as (length, multiplicity) pairs, class size) for S_n."""
    out = []

    def rec(rem, cap, acc):
        if rem == 0:
            mult = Counter(acc)
            z = math.prod(p**m * math.factorial(m) for p, m in mult.items())
            out.append((tuple(sorted(mult.items())), math.factorial(n) // z))
            return
        for p in range(min(rem, cap), 0, -1):
            rec(rem - p, p, acc + [p])

    rec(n, n, [])
    return tuple(out)


def _fixed_matrices(lam, mu, n: int) -> list[int]:
    """[t^m] prod over cell cycles (1 + t^lcm)^gcd, m <= n."""
    poly = [1] + [0] * n
    for i, ri in lam:
        for j, cj in mu:
            length = i * j // math.gcd(i, j)
            if length > n:
                continue
            e = math.gcd(i, j) * ri * cj
            factor = [0] * (n + 1)
            for m in range(0, min(e, n // length) + 1):
                factor[m * length] = math.comb(e, m)
            new = [0] * (n + 1)
            for x, px in enumerate(poly):
                if px:
                    for y in range(0, n + 1 - x, length):
                        if factor[y]:
                            new[x + y] += px * factor[y]
            poly = new
    return poly


def matrix_orbits(a: int, b: int, n: int) -> int:
    """Orbits of S_a x S_b on a x b 0/1 matrices with n ones (zero lines allowed)."""
    if a == 0 or b == 0:
        return 1 if n == 0 else 0
    total = 0
    for lam, wl in _cycle_classes(a):
        for mu, wm in _cycle_classes(b):
            total += wl * wm * _fixed_matrices(lam, mu, n)[n]
    q, r = divmod(total, math.factorial(a) * math.factorial(b))
    if r:
        raise VerificationError(f"Burnside sum for {a}x{b}, n={n} is not divisible by the group order")
    return q


def _row_of_orbits(args):
    a, n = args
    return [matrix_orbits(a, b, n) for b in range(n + 1)]


def exact_part_counts(n: int) -> dict[tuple[int, int], int]:
    """Orbit counts with exactly a nonzero rows and b nonzero columns."""
    jobs = parallel_jobs()
    if jobs == 0:
        jobs = (os.cpu_count() or 1) if n >= 10 else 1
    tasks = [(a, n) for a in range(n + 1)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            table = list(pool.map(_row_of_orbits, tasks))
    else:
        table = [_row_of_orbits(t) for t in tasks]
    exact = {}
    for a in range(1, n + 1):
        for b in range(1, n + 1):
            e = table[a][b] - table[a - 1][b] - table[a][b - 1] + table[a - 1][b - 1]
            if e:
                exact[(a, b)] = e
    return exact


def count_by_burnside(n: int) -> int:
    if n > MAX_BURNSIDE:
        raise CapacityError(f"Burnside counting is limited to n <= {MAX_BURNSIDE}")
    if n == 0:
        return 1
    return sum(exact_part_counts(n).values())


def count_coded_graphs(n: int) -> WitnessCount:
    """B(n), by every method whose capacity allows it; all must agree."""
    if not isinstance(n, int) or n < 0:
        raise InputError(f"edge count must be a nonnegative int, got {n!r}")
    if n > MAX_BURNSIDE:
        raise CapacityError(f"B(n) is computable for n <= {MAX_BURNSIDE}, got {n}")
    results = {"burnside": count_by_burnside(n)}
    if n <= MAX_ENUMERATE:
        results["enumerate"] = count_by_enumeration(n)
    values = set(results.values())
    if len(values) != 1:
        raise VerificationError(f"methods disagree on B({n}): {results}")
    return WitnessCount(n, values.pop(), True, tuple(sorted(results)))


def check_factorial_floor(n: int) -> bool:
    """Whether B(floor(n/3)) > floor(n/4)!  (False at the degenerate n < 12 floor)."""
    return count_coded_graphs(n // 3).value > math.factorial(n // 4)
