"""Exact orbit-growth profiles of cell trees."""
from __future__ import annotations

from dataclasses import dataclass

from .. import series as S
from ..errors import CapacityError, InputError
from ..oracle.groups import MAX_AUT_UNIVERSE, automorphisms
from ..oracle.structures import FiniteStructure
from .tree import CellTree, Leaf, MSetInf, MSetK, SeqDLO, Union, contains_seq, finite_size


class NotHereditarilyCellular(InputError):
    """Raised by :func:`depth` on trees containing an ordered (seq_dlo) node."""


@dataclass(frozen=True)
class Profile:
    tree: CellTree
    values: S.Series

    @property
    def order(self) -> int:
        return self.values.order

    def __getitem__(self, n: int) -> int:
        return self.values[n]


def leaf_profile(s: FiniteStructure) -> S.Series:
    """Orbits of Aut(s) on i-subsets for i = 0..|s|."""
    if s.universe > MAX_AUT_UNIVERSE:
        raise CapacityError(f"leaf has {s.universe} points; leaves are limited to {MAX_AUT_UNIVERSE}")
    return S.Series.of(automorphisms(s).orbit_counts(s.universe))


def _pad(series: S.Series, order: int) -> S.Series:
    c = series.coeffs
    if len(c) > order + 1:
        return S.Series(c[: order + 1])
    return S.Series(c + (0,) * (order + 1 - len(c)))


def _values(tree: CellTree, order: int, leaf_cache: dict) -> S.Series:
    if isinstance(tree, Leaf):
        hit = leaf_cache.get(tree.structure)
        if hit is None:
            hit = leaf_cache[tree.structure] = leaf_profile(tree.structure)
        return _pad(hit, order)
    if isinstance(tree, Union):
        acc = _values(tree.children[0], order, leaf_cache)
        for c in tree.children[1:]:
            acc = S.mul(acc, _values(c, order, leaf_cache), order)
        return acc
    child = _values(tree.child, order, leaf_cache)
    if isinstance(tree, MSetK):
        return S.mset_k_transform(child, tree.k, order)
    if isinstance(tree, MSetInf):
        return S.euler_transform(child, order)
    return S.seq_transform(child, order)


def profile(tree: CellTree, order: int) -> Profile:
    """f(0..order): orbits on n-subsets of the structure the tree denotes."""
    if not isinstance(order, int) or order < 1:
        raise InputError(f"profile order must be >= 1, got {order!r}")
    return Profile(tree, _values(tree, order, {}))


def depth(tree: CellTree) -> int:
    """Nesting depth of infinite stretches; finite structures have depth 0."""
    if contains_seq(tree):
        raise NotHereditarilyCellular("trees with seq_dlo are not hereditarily cellular; depth is undefined")
    return _depth(tree)


def _depth(tree: CellTree) -> int:
    if isinstance(tree, Leaf):
        return 0
    if isinstance(tree, Union):
        return max(_depth(c) for c in tree.children)
    if isinstance(tree, MSetK):
        return _depth(tree.child)
    return _depth(tree.child) + 1


def is_finite(tree: CellTree) -> bool:
    return finite_size(tree) is not None
