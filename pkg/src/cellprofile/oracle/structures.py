"""Explicit finite relational structures and their JSON encoding.

JSON layout::

    {"universe": 3,
     "relations": [{"name": "E", "arity": 2, "tuples": [[0, 1], [1, 0]]}],
     "colors": [[0], [2]]}
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from ..errors import InputError

MAX_UNIVERSE = 14


@dataclass(frozen=True)
class Relation:
    name: str
    arity: int
    tuples: frozenset[tuple[int, ...]]


@dataclass(frozen=True)
class FiniteStructure:
    universe: int
    relations: tuple[Relation, ...] = ()
    colors: tuple[tuple[int, ...], ...] = ()
    name: str | None = field(default=None, compare=False)

    def __post_init__(self):
        if not isinstance(self.universe, int) or self.universe < 1:
            raise InputError(f"universe size must be a positive int, got {self.universe!r}")
        if self.universe > MAX_UNIVERSE:
            raise InputError(f"universe size {self.universe} exceeds {MAX_UNIVERSE}")
        seen_names = set()
        for rel in self.relations:
            if rel.name in seen_names:
                raise InputError(f"duplicate relation name {rel.name!r}")
            seen_names.add(rel.name)
            if rel.arity < 1:
                raise InputError(f"relation {rel.name!r} has arity {rel.arity}")
            for tup in rel.tuples:
                if len(tup) != rel.arity:
                    raise InputError(f"tuple {tup} does not match arity {rel.arity} of {rel.name!r}")
                if any(not 0 <= x < self.universe for x in tup):
                    raise InputError(f"tuple {tup} of {rel.name!r} leaves the universe")
        used: set[int] = set()
        for color in self.colors:
            for x in color:
                if not 0 <= x < self.universe:
                    raise InputError(f"color member {x} leaves the universe")
                if x in used:
                    raise InputError(f"colors are not disjoint (point {x})")
                used.add(x)

    def color_of(self) -> list[int]:
        """Color index per point; -1 for uncolored points."""
        out = [-1] * self.universe
        for i, color in enumerate(self.colors):
            for x in color:
                out[x] = i
        return out

    def to_json(self) -> dict[str, Any]:
        return {
            "universe": self.universe,
            "relations": [
                {"name": r.name, "arity": r.arity, "tuples": [list(t) for t in sorted(r.tuples)]}
                for r in self.relations
            ],
            "colors": [list(c) for c in self.colors],
        }

    @classmethod
    def from_json(cls, data: Any, name: str | None = None) -> "FiniteStructure":
        if not isinstance(data, dict) or "universe" not in data:
            raise InputError("finite structure JSON must be an object with a 'universe' key")
        try:
            relations = tuple(
                Relation(
                    str(r["name"]),
                    int(r["arity"]),
                    frozenset(tuple(int(x) for x in t) for t in r.get("tuples", [])),
                )
                for r in data.get("relations", [])
            )
            colors = tuple(tuple(int(x) for x in c) for c in data.get("colors", []))
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"malformed finite structure JSON: {exc}") from exc
        return cls(data["universe"], relations, colors, name)


def load_structure(path: str | Path) -> FiniteStructure:
    path = Path(path)
    try:
        data = json.loads(path.read_text())
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from exc
    return FiniteStructure.from_json(data, name=None)


def _graph(n: int, edges: list[tuple[int, int]], name: str) -> FiniteStructure:
    tuples = frozenset([(a, b) for a, b in edges] + [(b, a) for a, b in edges])
    return FiniteStructure(n, (Relation("E", 2, tuples),), (), name)


def point() -> FiniteStructure:
    return FiniteStructure(1, (), (), "point")


def kset(k: int) -> FiniteStructure:
    if not isinstance(k, int) or k < 1:
        raise InputError(f"kset needs k >= 1, got {k!r}")
    return FiniteStructure(k, (), (), f"kset({k})")


def edge() -> FiniteStructure:
    return _graph(2, [(0, 1)], "edge")


def path3() -> FiniteStructure:
    return _graph(3, [(0, 1), (1, 2)], "path3")
