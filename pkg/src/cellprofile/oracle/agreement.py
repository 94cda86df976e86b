"""Three-way comparison: calculus profile vs. Burnside vs. canonical enumeration."""
from __future__ import annotations

from dataclasses import dataclass, field

from ..cellcalc.profile import profile
from ..cellcalc.tree import CellTree, finite_size, to_expr
from ..errors import InputError
from .groups import CANONICAL_BUDGET, orbit_representatives
from .truncation import truncate


@dataclass(frozen=True)
class AgreementRow:
    n: int
    calculus: int
    burnside: int
    canonical: int

    @property
    def agree(self) -> bool:
        return self.calculus == self.burnside == self.canonical

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "calculus": str(self.calculus),
            "burnside": str(self.burnside),
            "canonical": str(self.canonical),
            "agree": self.agree,
        }


@dataclass
class TruncationReport:
    tree: CellTree
    width: int
    rows: list[AgreementRow] = field(default_factory=list)

    @property
    def agree(self) -> bool:
        return all(r.agree for r in self.rows)

    @property
    def failing(self) -> list[int]:
        return [r.n for r in self.rows if not r.agree]

    def to_json(self) -> dict:
        return {
            "expr": to_expr(self.tree),
            "width": self.width,
            "n_max": self.rows[-1].n if self.rows else 0,
            "agree": self.agree,
            "failing": self.failing,
            "rows": [r.to_json() for r in self.rows],
        }


def agreement_check(tree: CellTree, width: int, n_max: int, budget: int = CANONICAL_BUDGET) -> TruncationReport:
    """Compare all three counts for every n <= n_max on the width-``width`` truncation."""
    if n_max < 1:
        raise InputError(f"n_max must be >= 1, got {n_max}")
    # width only matters for infinite trees; finite ones truncate to themselves
    if n_max > width and finite_size(tree) is None:
        raise InputError(f"n_max ({n_max}) must not exceed the truncation width ({width})")
    calc = profile(tree, n_max).values
    group = truncate(tree, width).group
    burnside = group.orbit_counts(n_max)
    canonical = [len(level) for level in orbit_representatives(group, n_max, budget)]
    rows = [AgreementRow(n, calc[n], burnside[n], canonical[n]) for n in range(n_max + 1)]
    return TruncationReport(tree, width, rows)
