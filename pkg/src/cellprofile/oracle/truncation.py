"""Finite truncations of cell trees.

Infinitely many copies become ``width`` copies. The structural group of the
truncation is assembled from the leaves' automorphism groups; the explicit
relational structure is only emitted for small universes.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product as _cartesian

from ..cellcalc.tree import CellTree, Leaf, MSetInf, MSetK, SeqDLO, Union
from ..errors import CapacityError, InputError
from .groups import Group, OrderedBlocks, Product, Wreath, automorphisms
from .structures import MAX_UNIVERSE, FiniteStructure, Relation


def structural_group(tree: CellTree, width: int) -> Group:
    if isinstance(tree, Leaf):
        return automorphisms(tree.structure)
    if isinstance(tree, Union):
        return Product([structural_group(c, width) for c in tree.children])
    if isinstance(tree, MSetK):
        return Wreath(structural_group(tree.child, width), tree.k)
    if isinstance(tree, MSetInf):
        return Wreath(structural_group(tree.child, width), width)
    return OrderedBlocks(structural_group(tree.child, width), width)


def universe_size(tree: CellTree, width: int) -> int:
    if isinstance(tree, Leaf):
        return tree.structure.universe
    if isinstance(tree, Union):
        return sum(universe_size(c, width) for c in tree.children)
    copies = tree.k if isinstance(tree, MSetK) else width
    return copies * universe_size(tree.child, width)


@dataclass
class _Emitter:
    relations: dict[str, tuple[int, set[tuple[int, ...]]]]
    color_keys: dict[int, tuple]

    def add(self, name: str, arity: int, tuples):
        entry = self.relations.setdefault(name, (arity, set()))
        entry[1].update(tuples)


def _emit(tree: CellTree, width: int, offset: int, path: str, union_sig: tuple, out: _Emitter) -> int:
    """Write the truncation of ``tree`` at ``offset``; returns its size."""
    if isinstance(tree, Leaf):
        s = tree.structure
        for rel in s.relations:
            out.add(f"{path}:{rel.name}", rel.arity, (tuple(offset + x for x in t) for t in rel.tuples))
        colors = s.color_of()
        for x in range(s.universe):
            out.color_keys[offset + x] = (union_sig, colors[x])
        return s.universe
    if isinstance(tree, Union):
        size = 0
        for i, c in enumerate(tree.children):
            size += _emit(c, width, offset + size, f"{path}.{i}", union_sig + (i,), out)
        return size
    copies = tree.k if isinstance(tree, MSetK) else width
    blocks = []
    pos = offset
    for _ in range(copies):
        d = _emit(tree.child, width, pos, f"{path}.c", union_sig, out)
        blocks.append(range(pos, pos + d))
        pos += d
    out.add(f"{path}:copy", 2, (pair for b in blocks for pair in _cartesian(b, b)))
    if isinstance(tree, SeqDLO):
        out.add(
            f"{path}:lt",
            2,
            ((x, y) for i, bx in enumerate(blocks) for by in blocks[i + 1 :] for x in bx for y in by),
        )
    return pos - offset


@dataclass
class Truncation:
    tree: CellTree
    width: int

    def __post_init__(self):
        if self.width < 1:
            raise InputError(f"truncation width must be >= 1, got {self.width}")

    @property
    def universe(self) -> int:
        return universe_size(self.tree, self.width)

    @cached_property
    def group(self) -> Group:
        return structural_group(self.tree, self.width)

    @cached_property
    def structure(self) -> FiniteStructure:
        u = self.universe
        if u > MAX_UNIVERSE:
            raise CapacityError(f"truncation has {u} points; structures are emitted up to {MAX_UNIVERSE}")
        out = _Emitter({}, {})
        _emit(self.tree, self.width, 0, "r", (), out)
        relations = tuple(
            Relation(name, arity, frozenset(tuples)) for name, (arity, tuples) in sorted(out.relations.items())
        )
        by_key: dict[tuple, list[int]] = {}
        for x in range(u):
            by_key.setdefault(out.color_keys[x], []).append(x)
        colors = tuple(tuple(v) for _, v in sorted(by_key.items())) if len(by_key) > 1 else ()
        return FiniteStructure(u, relations, colors)


def truncate(tree: CellTree, width: int) -> Truncation:
    return Truncation(tree, width)
