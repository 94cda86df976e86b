"""Finite-n checks of the growth-rate inequalities for unions, copies and colors.

Each check compares exact profiles of related trees for every n <= N:

``sandwich``      f_mset(k,X) <= f_(k labeled copies of X) <= k! f_mset(k,X)
``colors``        f_(k labeled copies of X) <= (2^k)^n f_mset(k,X)
``product``       f_union(A,B) <= (n+1) f_A f_B       (A, B infinite)
                  f_union(A,B) <= (|B|+1) f_A max f_B  (B finite)
``monotone``      f(n+1) >= f(n) for n >= 1 on infinite subtrees
``subexponential`` f(N)^(1/N) <= f(N/2)^(2/N) under an infinite stretch
"""
from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field

from .. import series as S
from .profile import profile
from .tree import CellTree, MSetInf, MSetK, Union, contains_seq, finite_size, walk


@dataclass
class BoundCheck:
    lemma: str
    path: str
    passed: bool
    failures: list[int] = field(default_factory=list)
    detail: str = ""

    def to_json(self) -> dict:
        return {
            "lemma": self.lemma,
            "path": self.path,
            "passed": self.passed,
            "failures": self.failures,
            "detail": self.detail,
        }


@dataclass
class BoundsReport:
    order: int
    checks: list[BoundCheck]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def by_lemma(self, lemma: str) -> list[BoundCheck]:
        return [c for c in self.checks if c.lemma == lemma]

    def to_json(self) -> dict:
        return {"n": self.order, "passed": self.passed, "checks": [c.to_json() for c in self.checks]}


def _check(lemma, path, order, ok, detail="") -> BoundCheck:
    failures = [n for n in range(order + 1) if not ok(n)]
    return BoundCheck(lemma, path, not failures, failures, detail)


def _copies_checks(x: CellTree, k: int, path: str, order: int, prof) -> list[BoundCheck]:
    unlabeled = S.mset_k_transform(prof(x), k, order)
    labeled = S.Series((1,) + (0,) * order)
    for _ in range(k):
        labeled = S.mul(labeled, prof(x), order)
    fact = math.factorial(k)
    return [
        _check(
            "sandwich",
            path,
            order,
            lambda n: unlabeled[n] <= labeled[n] <= fact * unlabeled[n],
            f"{k} copies, index {fact}",
        ),
        _check(
            "colors",
            path,
            order,
            lambda n: labeled[n] <= 2 ** (k * n) * unlabeled[n],
            f"{k} unary predicates",
        ),
    ]


def check_bounds(tree: CellTree, order: int) -> BoundsReport:
    """Evaluate every applicable inequality on every subtree for n <= order."""
    cache: dict[CellTree, S.Series] = {}

    def prof(t: CellTree) -> S.Series:
        if t not in cache:
            cache[t] = profile(t, order).values
        return cache[t]

    checks: list[BoundCheck] = []
    for path, node in walk(tree):
        if isinstance(node, MSetK) and node.k >= 2:
            checks.extend(_copies_checks(node.child, node.k, path, order, prof))
        if isinstance(node, Union):
            for child, mult in Counter(node.children).items():
                if mult >= 2:
                    checks.extend(_copies_checks(child, mult, f"{path}[repeated]", order, prof))
            # fold the union left to right: union(prefix, next child)
            acc = prof(node.children[0])
            acc_size = finite_size(node.children[0])
            for i, child in enumerate(node.children[1:], start=1):
                nxt = prof(child)
                combined = S.mul(acc, nxt, order)
                size = finite_size(child)
                if acc_size is None and size is None:
                    checks.append(
                        _check(
                            "product",
                            f"{path}[0..{i}]",
                            order,
                            lambda n, a=acc, b=nxt, c=combined: c[n] <= (n + 1) * a[n] * b[n],
                        )
                    )
                elif acc_size is None or size is None:
                    inf_side, fin_side, k = (acc, nxt, size) if size is not None else (nxt, acc, acc_size)
                    peak = max(fin_side.coeffs)
                    checks.append(
                        _check(
                            "product",
                            f"{path}[0..{i}]",
                            order,
                            lambda n, a=inf_side, c=combined, k=k, peak=peak: c[n] <= (k + 1) * a[n] * peak,
                            "finite factor",
                        )
                    )
                acc = combined
                acc_size = None if acc_size is None or size is None else acc_size + size
        if finite_size(node) is None:
            f = prof(node)
            checks.append(_check("monotone", path, order - 1, lambda n, f=f: n == 0 or f[n + 1] >= f[n]))
        if isinstance(node, MSetInf) and not contains_seq(node) and order >= 4:
            f = prof(node)
            hi, lo = order, order // 2
            ok = math.log(f[hi]) / hi <= math.log(f[lo]) / lo + 1e-12
            checks.append(BoundCheck("subexponential", path, ok, [] if ok else [hi]))
    return BoundsReport(order, checks)
