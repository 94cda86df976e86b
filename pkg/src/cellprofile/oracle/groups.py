"""Permutation groups for orbit counting on subsets.

Two representations share one small interface:

* :class:`PermGroup` lists every element explicitly.
* :class:`Wreath`, :class:`Product` and :class:`OrderedBlocks` are built
  structurally from smaller groups and never list their elements.

Each group offers two unrelated routes to the number of orbits on
``n``-subsets:

``burnside_totals``
    the sum over group elements of the fixed-subset polynomial
    ``prod_cycles (1 + t^len)``; dividing by the order gives orbit counts.
``canonical`` / ``extensions``
    a canonical form (minimum image) of an explicit subset, and a generator of
    one-point extensions used to enumerate orbit representatives.
"""
from __future__ import annotations

import itertools
import math
from collections import Counter
from functools import lru_cache
from typing import Hashable, Iterator, Sequence

from ..errors import CapacityError, ConsistencyError, InputError
from .structures import FiniteStructure

Subset = tuple[int, ...]

MAX_AUT_UNIVERSE = 10
CANONICAL_BUDGET = 10**8


# polynomial helpers, coefficient lists truncated at a fixed length

def _pmul(a: list[int], b: list[int], n: int) -> list[int]:
    out = [0] * (n + 1)
    for i, x in enumerate(a[: n + 1]):
        if x:
            for j, y in enumerate(b[: n + 1 - i]):
                if y:
                    out[i + j] += x * y
    return out


def _psubst(a: list[int], m: int, n: int) -> list[int]:
    """a(t^m) truncated at degree n."""
    out = [0] * (n + 1)
    for i in range(0, n // m + 1):
        out[i * m] = a[i]
    return out


def _fixed_poly(cycle_lengths: Sequence[int], n: int) -> list[int]:
    """[t^i] prod (1 + t^l) for i <= n: the i-subsets fixed by a permutation."""
    out = [1] + [0] * n
    for ell in cycle_lengths:
        if ell > n:
            continue
        for i in range(n, ell - 1, -1):
            out[i] += out[i - ell]
    return out


def _divide(totals: list[int], order: int, where: str) -> list[int]:
    out = []
    for v in totals:
        q, r = divmod(v, order)
        if r:
            raise ConsistencyError(
                f"Burnside sum {v} not divisible by group order {order} in {where}; "
                "the element list is not closed under composition"
            )
        out.append(q)
    return out


@lru_cache(maxsize=None)
def _partitions(n: int) -> tuple[tuple[int, ...], ...]:
    """Partitions of n as non-increasing tuples."""
    if n == 0:
        return ((),)
    out = []

    def rec(rem: int, cap: int, acc: list[int]):
        if rem == 0:
            out.append(tuple(acc))
            return
        for p in range(min(rem, cap), 0, -1):
            acc.append(p)
            rec(rem - p, p, acc)
            acc.pop()

    rec(n, n, [])
    return tuple(out)


def _class_size(shape: tuple[int, ...]) -> int:
    """Number of permutations of S_n with the given cycle type: n!/z_shape."""
    z = 1
    for part, mult in Counter(shape).items():
        z *= part**mult * math.factorial(mult)
    return math.factorial(sum(shape)) // z


class Group:
    """Interface shared by explicit and structural groups."""

    degree: int
    order: int

    def burnside_totals(self, n: int) -> list[int]:
        raise NotImplementedError

    def orbit_counts(self, n: int) -> list[int]:
        """Orbit counts on i-subsets, i = 0..n, by Burnside averaging."""
        return _divide(self.burnside_totals(n), self.order, type(self).__name__)

    def canonical(self, s: Subset) -> Hashable:
        raise NotImplementedError

    def canonical_cost(self, size: int) -> int:
        raise NotImplementedError

    def extensions(self, s: Subset) -> Iterator[Subset]:
        raise NotImplementedError


class PermGroup(Group):
    """A permutation group on ``0..degree-1`` given by its full element list."""

    def __init__(self, degree: int, elements: Sequence[Sequence[int]], verify: bool = False):
        self.degree = degree
        self.elements = tuple(tuple(g) for g in elements)
        if not self.elements:
            raise InputError("a group needs at least the identity")
        for g in self.elements:
            if sorted(g) != list(range(degree)):
                raise InputError(f"{g} is not a permutation of {degree} points")
        self.order = len(self.elements)
        self._canon: dict[Subset, Subset] = {}
        if verify:
            self.verify()

    def verify(self, max_order: int = 5000) -> None:
        """Check identity, inverses and closure (quadratic; capped)."""
        if self.order > max_order:
            raise CapacityError(f"closure check capped at order {max_order}, got {self.order}")
        elems = set(self.elements)
        if len(elems) != self.order:
            raise ConsistencyError("duplicate group elements")
        if tuple(range(self.degree)) not in elems:
            raise ConsistencyError("identity missing")
        for g in self.elements:
            inv = [0] * self.degree
            for i, gi in enumerate(g):
                inv[gi] = i
            if tuple(inv) not in elems:
                raise ConsistencyError(f"inverse of {g} missing")
            for h in self.elements:
                if tuple(g[x] for x in h) not in elems:
                    raise ConsistencyError(f"product of {g} and {h} missing")

    @staticmethod
    def cycle_type(g: Sequence[int]) -> tuple[int, ...]:
        seen = [False] * len(g)
        lengths = []
        for start in range(len(g)):
            if seen[start]:
                continue
            ell, x = 0, start
            while not seen[x]:
                seen[x] = True
                x = g[x]
                ell += 1
            lengths.append(ell)
        return tuple(sorted(lengths, reverse=True))

    def burnside_totals(self, n: int) -> list[int]:
        types = Counter(self.cycle_type(g) for g in self.elements)
        totals = [0] * (n + 1)
        for shape, count in types.items():
            for i, v in enumerate(_fixed_poly(shape, n)):
                totals[i] += count * v
        return totals

    def canonical(self, s: Subset) -> Subset:
        hit = self._canon.get(s)
        if hit is None:
            hit = min(tuple(sorted(g[x] for x in s)) for g in self.elements)
            self._canon[s] = hit
        return hit

    def canonical_cost(self, size: int) -> int:
        return self.order * max(size, 1)

    def extensions(self, s: Subset) -> Iterator[Subset]:
        present = set(s)
        for x in range(self.degree):
            if x not in present:
                yield tuple(sorted(s + (x,)))

    def __repr__(self):
        return f"PermGroup(degree={self.degree}, order={self.order})"


def symmetric_group(n: int) -> PermGroup:
    return PermGroup(n, itertools.permutations(range(n)))


def trivial_group(n: int) -> PermGroup:
    return PermGroup(n, [tuple(range(n))])


def _split(s: Subset, block: int) -> dict[int, Subset]:
    parts: dict[int, list[int]] = {}
    for x in s:
        parts.setdefault(x // block, []).append(x % block)
    return {b: tuple(v) for b, v in parts.items()}


class Wreath(Group):
    """``base`` wreath ``S_copies``: independent copies of ``base``, freely permuted.

    Copy ``i`` occupies points ``i*d .. i*d + d - 1`` with ``d = base.degree``.
    """

    def __init__(self, base: Group, copies: int):
        if copies < 1:
            raise InputError("a wreath product needs at least one copy")
        self.base, self.copies = base, copies
        self.degree = base.degree * copies
        self.order = base.order**copies * math.factorial(copies)

    def burnside_totals(self, n: int) -> list[int]:
        base_t = self.base.burnside_totals(n)
        h = self.base.order
        # a block-cycle of length m contributes |H|^(m-1) * T_H(t^m)
        per_len = {
            m: [h ** (m - 1) * v for v in _psubst(base_t, m, n)] for m in range(1, self.copies + 1)
        }
        totals = [0] * (n + 1)
        for shape in _partitions(self.copies):
            term = [1] + [0] * n
            for m in shape:
                term = _pmul(term, per_len[m], n)
            size = _class_size(shape)
            for i, v in enumerate(term):
                totals[i] += size * v
        return totals

    def canonical(self, s: Subset) -> Hashable:
        parts = _split(s, self.base.degree)
        return tuple(sorted(self.base.canonical(p) for p in parts.values()))

    def canonical_cost(self, size: int) -> int:
        return size + self.base.canonical_cost(size)

    def extensions(self, s: Subset) -> Iterator[Subset]:
        d = self.base.degree
        parts = _split(s, d)
        for b, local in parts.items():
            rest = tuple(x for x in s if x // d != b)
            for ext in self.base.extensions(local):
                yield tuple(sorted(rest + tuple(b * d + x for x in ext)))
        # every empty copy is interchangeable with the first one
        empty = next((b for b in range(self.copies) if b not in parts), None)
        if empty is not None:
            for ext in self.base.extensions(()):
                yield tuple(sorted(s + tuple(empty * d + x for x in ext)))

    def __repr__(self):
        return f"Wreath({self.base!r}, {self.copies})"


class Product(Group):
    """Direct product acting on the disjoint union of the factors' points."""

    def __init__(self, factors: Sequence[Group]):
        self.factors = tuple(factors)
        self.offsets = []
        off = 0
        for f in self.factors:
            self.offsets.append(off)
            off += f.degree
        self.degree = off
        self.order = math.prod(f.order for f in self.factors)

    def burnside_totals(self, n: int) -> list[int]:
        totals = [1] + [0] * n
        for f in self.factors:
            totals = _pmul(totals, f.burnside_totals(n), n)
        return totals

    def _restrict(self, s: Subset) -> list[Subset]:
        out = []
        for f, off in zip(self.factors, self.offsets):
            out.append(tuple(x - off for x in s if off <= x < off + f.degree))
        return out

    def canonical(self, s: Subset) -> Hashable:
        return tuple(f.canonical(p) for f, p in zip(self.factors, self._restrict(s)))

    def canonical_cost(self, size: int) -> int:
        return size + max(f.canonical_cost(size) for f in self.factors)

    def extensions(self, s: Subset) -> Iterator[Subset]:
        parts = self._restrict(s)
        for i, (f, off) in enumerate(zip(self.factors, self.offsets)):
            rest = tuple(x for x in s if not off <= x < off + f.degree)
            for ext in f.extensions(parts[i]):
                yield tuple(sorted(rest + tuple(off + x for x in ext)))

    def __repr__(self):
        return f"Product({list(self.factors)!r})"


class OrderedBlocks(Group):
    """Copies of ``base`` arranged along a finite chain of a dense linear order.

    This is not a permutation group of the finite truncation: two subsets are
    equivalent when an order-preserving bijection between their occupied
    blocks, composed with base-group elements inside blocks, maps one to the
    other. For Burnside purposes the node reports ``order = 1`` with totals
    equal to the orbit generating function, which composes correctly under
    :class:`Wreath` and :class:`Product`.
    """

    def __init__(self, base: Group, copies: int):
        if copies < 1:
            raise InputError("need at least one block")
        self.base, self.copies = base, copies
        self.degree = base.degree * copies
        self.order = 1

    def burnside_totals(self, n: int) -> list[int]:
        h = self.base.order
        nonempty = self.base.burnside_totals(n)
        nonempty[0] -= h
        totals = [1] + [0] * n
        power = [1] + [0] * n
        # j occupied blocks in a fixed order: Burnside over base^j with every block nonempty
        for j in range(1, min(self.copies, n) + 1):
            power = _pmul(power, nonempty, n)
            for i, v in enumerate(_divide(power, h**j, "OrderedBlocks")):
                totals[i] += v
        return totals

    def canonical(self, s: Subset) -> Hashable:
        parts = _split(s, self.base.degree)
        return tuple(self.base.canonical(parts[b]) for b in sorted(parts))

    def canonical_cost(self, size: int) -> int:
        return size + self.base.canonical_cost(size)

    def extensions(self, s: Subset) -> Iterator[Subset]:
        d = self.base.degree
        parts = _split(s, d)
        occupied = sorted(parts)
        for b in occupied:
            rest = tuple(x for x in s if x // d != b)
            for ext in self.base.extensions(parts[b]):
                yield tuple(sorted(rest + tuple(b * d + x for x in ext)))
        j = len(occupied)
        if j >= self.copies:
            return
        # a new block may enter any gap; re-embed the occupied blocks as 0..j
        for gap in range(j + 1):
            moved = []
            for pos, b in enumerate(occupied):
                target = pos if pos < gap else pos + 1
                moved.extend(target * d + x for x in parts[b])
            for ext in self.base.extensions(()):
                yield tuple(sorted(moved + [gap * d + x for x in ext]))

    def __repr__(self):
        return f"OrderedBlocks({self.base!r}, {self.copies})"


def automorphisms(s: FiniteStructure) -> PermGroup:
    """All relation- and color-preserving permutations of a finite structure."""
    u = s.universe
    if u > MAX_AUT_UNIVERSE:
        raise CapacityError(f"automorphism enumeration is limited to {MAX_AUT_UNIVERSE} points, got {u}")
    colors = s.color_of()
    rels = [(r.tuples, r.arity) for r in s.relations]
    # invariant used for pruning: color plus per-relation, per-position occurrence counts
    inv = []
    for x in range(u):
        sig = [colors[x]]
        for tuples, arity in rels:
            sig.append(tuple(sum(1 for t in tuples if t[p] == x) for p in range(arity)))
        inv.append(tuple(sig))
    # tuples whose largest point is x are checked once x is assigned
    by_last: list[list[tuple[frozenset, tuple[int, ...]]]] = [[] for _ in range(u)]
    for tuples, _ in rels:
        for t in tuples:
            by_last[max(t)].append((tuples, t))

    images = [-1] * u
    used = [False] * u
    found: list[tuple[int, ...]] = []

    def extend(x: int):
        if x == u:
            found.append(tuple(images))
            return
        for y in range(u):
            if used[y] or inv[y] != inv[x]:
                continue
            images[x] = y
            ok = all(tuple(images[p] for p in t) in tuples for tuples, t in by_last[x])
            if ok:
                used[y] = True
                extend(x + 1)
                used[y] = False
        images[x] = -1

    extend(0)
    return PermGroup(u, found)


def burnside_subset_orbits(g: Group, n: int) -> int:
    """Orbits on n-subsets as the exact average of fixed n-subsets."""
    if n < 0:
        raise InputError("subset size must be >= 0")
    return g.orbit_counts(n)[n]


def orbit_representatives(g: Group, n: int, budget: int = CANONICAL_BUDGET) -> list[dict[Hashable, Subset]]:
    """Canonical form -> representative subset, for every size 0..n.

    Level ``i`` is grown from level ``i - 1`` by one-point extensions and
    deduplicated by canonical form.
    """
    levels: list[dict[Hashable, Subset]] = [{g.canonical(()): ()}]
    work = 0
    for size in range(1, n + 1):
        cost = g.canonical_cost(size)
        nxt: dict[Hashable, Subset] = {}
        for rep in levels[-1].values():
            for ext in g.extensions(rep):
                work += cost
                if work > budget:
                    raise CapacityError(
                        f"canonical enumeration exceeded the work budget of {budget} at size {size}"
                    )
                nxt.setdefault(g.canonical(ext), ext)
        levels.append(nxt)
    return levels


def canonical_subset_orbits(g: Group, n: int, budget: int = CANONICAL_BUDGET) -> int:
    """Orbits on n-subsets counted as distinct canonical forms."""
    if n < 0:
        raise InputError("subset size must be >= 0")
    return len(orbit_representatives(g, n, budget)[n])
