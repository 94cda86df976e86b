"""Cell trees: recursive descriptions of structures built from finite leaves.

``Leaf``      a finite structure.
``Union``     invariant disjoint union; children stay distinguishable.
``MSetK``     k interchangeable copies of the child.
``MSetInf``   infinitely many interchangeable copies (full symmetric action on copies).
``SeqDLO``    copies indexed by a dense linear order.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterator, Union as _U

from ..errors import InputError
from ..oracle.structures import FiniteStructure

_PRESETS = {"point", "edge", "path3"}


@dataclass(frozen=True)
class Leaf:
    structure: FiniteStructure

    @property
    def name(self) -> str | None:
        return self.structure.name


@dataclass(frozen=True)
class Union:
    children: tuple["CellTree", ...]

    def __post_init__(self):
        if len(self.children) < 2:
            raise InputError("union needs at least two children")


@dataclass(frozen=True)
class MSetK:
    k: int
    child: "CellTree"

    def __post_init__(self):
        if not isinstance(self.k, int) or self.k < 1:
            raise InputError(f"mset needs a positive multiplicity, got {self.k!r}")


@dataclass(frozen=True)
class MSetInf:
    child: "CellTree"


@dataclass(frozen=True)
class SeqDLO:
    child: "CellTree"


CellTree = _U[Leaf, Union, MSetK, MSetInf, SeqDLO]


def children(tree: CellTree) -> tuple[CellTree, ...]:
    if isinstance(tree, Leaf):
        return ()
    if isinstance(tree, Union):
        return tree.children
    return (tree.child,)


def walk(tree: CellTree, path: str = "root") -> Iterator[tuple[str, CellTree]]:
    """Pre-order traversal yielding ``(path, node)``."""
    yield path, tree
    if isinstance(tree, Union):
        for i, c in enumerate(tree.children):
            yield from walk(c, f"{path}/union[{i}]")
    elif not isinstance(tree, Leaf):
        yield from walk(tree.child, f"{path}/{node_label(tree)}")


def node_label(tree: CellTree) -> str:
    if isinstance(tree, Leaf):
        return "leaf"
    if isinstance(tree, Union):
        return "union"
    if isinstance(tree, MSetK):
        return f"mset({tree.k})"
    if isinstance(tree, MSetInf):
        return "mset_inf"
    return "seq_dlo"


def contains_seq(tree: CellTree) -> bool:
    return any(isinstance(node, SeqDLO) for _, node in walk(tree))


def finite_size(tree: CellTree) -> int | None:
    """Number of points if the tree denotes a finite structure, else None."""
    if isinstance(tree, Leaf):
        return tree.structure.universe
    if isinstance(tree, (MSetInf, SeqDLO)):
        return None
    if isinstance(tree, MSetK):
        s = finite_size(tree.child)
        return None if s is None else tree.k * s
    total = 0
    for c in tree.children:
        s = finite_size(c)
        if s is None:
            return None
        total += s
    return total


def to_expr(tree: CellTree) -> str:
    """Render a tree back into the expression language."""
    if isinstance(tree, Leaf):
        name = tree.name
        if name in _PRESETS or (name or "").startswith("kset("):
            return name
        return "fin(" + json.dumps(tree.structure.to_json(), separators=(",", ":")) + ")"
    if isinstance(tree, Union):
        return "union(" + ",".join(to_expr(c) for c in tree.children) + ")"
    if isinstance(tree, MSetK):
        return f"mset({tree.k},{to_expr(tree.child)})"
    if isinstance(tree, MSetInf):
        if isinstance(tree.child, Leaf) and tree.child.name == "point":
            return "set"
        return f"mset_inf({to_expr(tree.child)})"
    return f"seq_dlo({to_expr(tree.child)})"
