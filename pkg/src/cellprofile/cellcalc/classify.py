"""Growth-regime classification of cell trees.

Regimes, by depth of the (seq_dlo-free) tree:

==========  ========================  ===============================================
depth       regime                    profile shape
==========  ========================  ===============================================
0           finite                    eventually 0
1           polynomial                c n^k0
2           stretched_exponential     exp(c n^(1 - 1/k))
d >= 3      log_iterated              exp(c n / (log^r n)^(1/k)),  r = d - 2
any + seq   exponential               base^n
==========  ========================  ===============================================

Parameters come from the structure: a cellular core of polynomial degree
``a`` gives ``k = a + 2`` one stretch up, then ``k = a + 1, r = 1`` the next
stretch up, after which further stretches only increase ``r``. Constants are
fitted from the exact profile only.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

from .. import series as S
from ..errors import InputError
from .profile import Profile, profile
from .tree import CellTree, Leaf, MSetInf, MSetK, SeqDLO, Union, contains_seq, finite_size, walk

FINITE = "finite"
POLYNOMIAL = "polynomial"
STRETCHED = "stretched_exponential"
LOG_ITERATED = "log_iterated"
EXPONENTIAL = "exponential"

MIN_CLASSIFY_ORDER = 256


@dataclass(frozen=True)
class Structural:
    """Regime parameters derived from the tree alone."""

    depth: int
    regime: str
    pole_order: int = 0  # depth <= 1: order of the pole at t = 1
    k: int | None = None
    r: int | None = None
    path: str = "root"

    @property
    def degree(self) -> int | None:
        return self.pole_order - 1 if self.regime == POLYNOMIAL else None

    def rank(self) -> tuple:
        # deeper dominates, then larger k, then larger polynomial degree
        return (self.depth, self.k or 0, self.pole_order)


@dataclass
class RegimeReport:
    regime: str
    depth: int | None
    degree: int | None = None
    k: int | None = None
    r: int | None = None
    base: float | None = None
    fitted_constant: float | None = None
    constant_spread: float | None = None
    dominant_path: str = "root"
    flags: list[str] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "regime": self.regime,
            "depth": self.depth,
            "degree": self.degree,
            "k": self.k,
            "r": self.r,
            "base": self.base,
            "fitted_constant": self.fitted_constant,
            "constant_spread": self.constant_spread,
            "dominant_path": self.dominant_path,
            "flags": list(self.flags),
            "notes": list(self.notes),
        }


def _leaf_poly(tree: CellTree) -> S.Series:
    size = finite_size(tree)
    return profile(tree, max(size, 1)).values


def analyze(tree: CellTree, path: str = "root") -> Structural:
    """Structural regime of a seq_dlo-free tree."""
    if isinstance(tree, Leaf):
        return Structural(0, FINITE, path=path)
    if isinstance(tree, Union):
        parts = [analyze(c, f"{path}/union[{i}]") for i, c in enumerate(tree.children)]
        top = max(parts, key=Structural.rank)
        if top.regime == FINITE:
            return Structural(0, FINITE, path=path)
        if top.regime == POLYNOMIAL:
            # polynomial growth rates multiply: pole orders add
            return Structural(1, POLYNOMIAL, sum(p.pole_order for p in parts), path=path)
        return top
    if isinstance(tree, MSetK):
        inner = analyze(tree.child, f"{path}/mset({tree.k})")
        if inner.regime == FINITE:
            return Structural(0, FINITE, path=path)
        if inner.regime == POLYNOMIAL:
            return Structural(1, POLYNOMIAL, tree.k * inner.pole_order, path=inner.path)
        return inner
    if isinstance(tree, SeqDLO):
        raise InputError("analyze() handles seq_dlo-free trees only")
    inner = analyze(tree.child, f"{path}/mset_inf")
    if inner.regime == FINITE:
        f = _leaf_poly(tree.child)
        return Structural(1, POLYNOMIAL, sum(f.coeffs[1:]), path=path)
    if inner.regime == POLYNOMIAL:
        return Structural(2, STRETCHED, k=inner.degree + 2, path=path)
    if inner.regime == STRETCHED:
        return Structural(inner.depth + 1, LOG_ITERATED, k=inner.k - 1, r=1, path=path)
    return Structural(inner.depth + 1, LOG_ITERATED, k=inner.k, r=inner.r + 1, path=path)


def iterated_log(n: float, r: int) -> float | None:
    x = float(n)
    for _ in range(r):
        if x <= 0:
            return None
        x = math.log(x)
    return x if x > 0 else None


def normalizer(report: RegimeReport) -> Callable[[int, int], float | None]:
    """Function (n, f(n)) -> quantity expected to tend to the regime's constant."""
    regime = report.regime

    def polynomial(n, f):
        return f / n**report.degree if n > 0 else None

    def stretched(n, f):
        return math.log(f) / n ** (1 - 1 / report.k) if n > 0 and f > 0 else None

    def log_iterated(n, f):
        lg = iterated_log(n, report.r)
        if n <= 0 or f <= 0 or lg is None:
            return None
        return math.log(f) * lg ** (1 / report.k) / n

    def exponential(n, f):
        if not report.base or f <= 0:
            return None
        return math.exp(math.log(f) - n * math.log(report.base))

    return {
        POLYNOMIAL: polynomial,
        STRETCHED: stretched,
        LOG_ITERATED: log_iterated,
        EXPONENTIAL: exponential,
    }.get(regime, lambda n, f: None)


def structural_report(tree: CellTree) -> RegimeReport:
    """Regime labels and parameters without any fitting (no profile needed)."""
    if contains_seq(tree):
        seq_path, seq_node = next((p, n) for p, n in walk(tree) if isinstance(n, SeqDLO))
        report = RegimeReport(EXPONENTIAL, None, dominant_path=seq_path)
        if isinstance(tree, SeqDLO) and finite_size(tree.child) is not None:
            rho = S.structural_root(_leaf_poly(tree.child))
            report.base = None if rho is None else 1.0 / rho
        else:
            report.flags.append("beyond_paper_examples")
            report.notes.append("ordered blocks over a non-finite child, or nested ordered blocks: base is empirical only")
        return report
    info = analyze(tree)
    return RegimeReport(
        info.regime,
        info.depth,
        degree=info.degree,
        k=info.k,
        r=info.r,
        dominant_path=info.path,
    )


def _detect_degree(values: S.Series, order: int) -> tuple[int | None, bool]:
    guesses = []
    for m in (order // 8, order // 4, order // 2):
        lo, hi = values[m], values[2 * m]
        if lo <= 0:
            return None, False
        guesses.append(round(math.log2(hi / lo)))
    return guesses[-1], len(set(guesses)) == 1


def classify(tree: CellTree, order: int = 512, prof: Profile | None = None) -> RegimeReport:
    """Structural regime plus fitted constants from the exact profile to ``order``."""
    if order < MIN_CLASSIFY_ORDER:
        raise InputError(f"classify needs order >= {MIN_CLASSIFY_ORDER}, got {order}")
    report = structural_report(tree)
    if report.regime == FINITE:
        return report
    if prof is None or prof.order < order:
        prof = profile(tree, order)
    values = prof.values

    if report.regime == EXPONENTIAL:
        poly = None
        if isinstance(tree, SeqDLO) and finite_size(tree.child) is not None:
            poly = _leaf_poly(tree.child)
        gb = S.growth_base(values.truncate(order), poly)
        if not gb.converged:
            report.flags.append("base_not_converged")
        report.base = gb.structural if gb.structural is not None else gb.estimate
        report.notes.append(f"empirical base {gb.estimate:.12g} (spread {gb.spread:.3g})")
    elif report.regime == POLYNOMIAL:
        detected, stable = _detect_degree(values, order)
        structural = report.degree
        if not stable or detected != structural:
            report.flags.append("degree_uncertain")
            report.notes.append(f"detected degree {detected}, structural degree {structural}")
        if detected is not None and stable:
            report.degree = detected

    norm = normalizer(report)
    samples = [norm(n, values[n]) for n in (order // 4, order // 2, order)]
    samples = [v for v in samples if v is not None]
    if samples:
        if report.regime == POLYNOMIAL:
            # error is O(1/n): extrapolate from n/2 and n
            report.fitted_constant = 2 * samples[-1] - samples[-2]
        else:
            report.fitted_constant = samples[-1]
        report.constant_spread = max(samples) - min(samples)
    return report
