"""Recursive-descent parser for the cell-tree expression language.

    expr   := "point" | "set" | "fin" | preset | "fin" "(" path-or-json ")"
            | "union" "(" expr ("," expr)+ ")"
            | "mset" "(" INT "," expr ")"
            | "mset_inf" "(" expr ")"
            | "seq_dlo" "(" expr ")"
    preset := "edge" | "kset" "(" INT ")" | "path3"

A bare ``fin`` refers to a structure supplied by the caller (the CLI's
``--fin`` flag).
"""
from __future__ import annotations

import json
import re

from ..errors import InputError, ParseError
from ..oracle import structures as st
from .tree import CellTree, Leaf, MSetInf, MSetK, SeqDLO, Union

_TOKEN = re.compile(r"\s*(?:(?P<int>-?\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<punct>[(),]))")


class _Parser:
    def __init__(self, text: str, fin: st.FiniteStructure | None):
        self.text = text
        self.pos = 0
        self.fin = fin

    def _skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self) -> tuple[str, str, int] | None:
        m = _TOKEN.match(self.text, self.pos)
        if not m or m.end() == m.start():
            self._skip_ws()
            if self.pos >= len(self.text):
                return None
            raise ParseError(f"unexpected character {self.text[self.pos]!r}", self.pos)
        kind = m.lastgroup
        return kind, m.group(kind), m.start(kind)

    def next(self) -> tuple[str, str, int]:
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of expression", len(self.text))
        m = _TOKEN.match(self.text, self.pos)
        self.pos = m.end()
        return tok

    def expect(self, punct: str):
        kind, value, where = self.next()
        if kind != "punct" or value != punct:
            raise ParseError(f"expected {punct!r}, found {value!r}", where)

    def integer(self) -> tuple[int, int]:
        kind, value, where = self.next()
        if kind != "int":
            raise ParseError(f"expected an integer, found {value!r}", where)
        return int(value), where

    def at(self, punct: str) -> bool:
        tok = self.peek()
        return tok is not None and tok[0] == "punct" and tok[1] == punct

    def parse(self) -> CellTree:
        tree = self.expr()
        self._skip_ws()
        if self.pos != len(self.text):
            raise ParseError(f"trailing input {self.text[self.pos:]!r}", self.pos)
        return tree

    def expr(self) -> CellTree:
        kind, value, where = self.next()
        if kind != "name":
            raise ParseError(f"expected a constructor or preset, found {value!r}", where)
        if value == "point":
            return Leaf(st.point())
        if value == "set":
            return MSetInf(Leaf(st.point()))
        if value == "edge":
            return Leaf(st.edge())
        if value == "path3":
            return Leaf(st.path3())
        if value == "kset":
            self.expect("(")
            k, kpos = self.integer()
            self.expect(")")
            if k <= 0:
                raise ParseError(f"kset needs k >= 1, got {k}", kpos)
            return Leaf(st.kset(k))
        if value == "fin":
            if not self.at("("):
                if self.fin is None:
                    raise ParseError("bare 'fin' used but no finite structure was supplied", where)
                return Leaf(self.fin)
            return Leaf(self.fin_argument())
        if value == "union":
            self.expect("(")
            kids = [self.expr()]
            while self.at(","):
                self.next()
                kids.append(self.expr())
            self.expect(")")
            if len(kids) < 2:
                raise ParseError("union needs at least two arguments", where)
            return Union(tuple(kids))
        if value == "mset":
            self.expect("(")
            k, kpos = self.integer()
            if k <= 0:
                raise ParseError(f"mset needs k >= 1, got {k}", kpos)
            self.expect(",")
            child = self.expr()
            self.expect(")")
            return MSetK(k, child)
        if value in ("mset_inf", "seq_dlo"):
            self.expect("(")
            child = self.expr()
            self.expect(")")
            return MSetInf(child) if value == "mset_inf" else SeqDLO(child)
        raise ParseError(f"unknown constructor or preset {value!r}", where)

    def fin_argument(self) -> st.FiniteStructure:
        """Raw text up to the matching ')': inline JSON object or a file path."""
        self.expect("(")
        start = self.pos
        depth, in_str, esc = 0, False, False
        i = start
        while i < len(self.text):
            ch = self.text[i]
            if in_str:
                if esc:
                    esc = False
                elif ch == "\\":
                    esc = True
                elif ch == '"':
                    in_str = False
            elif ch == '"':
                in_str = True
            elif ch in "{[(":
                depth += 1
            elif ch in "}])":
                if depth == 0:
                    break
                depth -= 1
            i += 1
        else:
            raise ParseError("unterminated fin(...)", start)
        raw = self.text[start:i].strip()
        self.pos = i + 1
        if not raw:
            raise ParseError("fin(...) needs a JSON object or a path", start)
        try:
            if raw.startswith("{"):
                try:
                    data = json.loads(raw)
                except json.JSONDecodeError as exc:
                    raise ParseError(f"invalid inline JSON: {exc.msg}", start + exc.pos) from exc
                return st.FiniteStructure.from_json(data)
            if raw[0] in "'\"" and raw[-1] == raw[0]:
                raw = raw[1:-1]
            return st.load_structure(raw)
        except ParseError:
            raise
        except InputError as exc:
            raise ParseError(str(exc), start) from exc


def parse(text: str, fin: st.FiniteStructure | None = None) -> CellTree:
    """Parse an expression into a :class:`CellTree`."""
    if not isinstance(text, str):
        raise ParseError("expression must be a string")
    return _Parser(text, fin).parse()
