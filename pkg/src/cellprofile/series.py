"""Truncated formal power series with exact nonnegative integer coefficients.

Every transform here takes an explicit truncation order ``N`` and returns
coefficients ``0..N``. No floating point is used except in :func:`growth_base`,
which only reads coefficients.
"""
from __future__ import annotations

from dataclasses import dataclass
from operator import mul as _mul
from typing import Iterable, Sequence

from .errors import ConsistencyError, InputError

__all__ = [
    "Series",
    "GrowthBase",
    "mul",
    "euler_transform",
    "mset_k_transform",
    "seq_transform",
    "growth_base",
    "structural_root",
]


@dataclass(frozen=True)
class Series:
    """Coefficients ``a(0..N)`` of a truncated power series."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        if not self.coeffs:
            raise InputError("a series needs at least the constant coefficient")
        for c in self.coeffs:
            if not isinstance(c, int) or isinstance(c, bool) or c < 0:
                raise InputError(f"series coefficients must be nonnegative ints, got {c!r}")

    @classmethod
    def of(cls, values: Iterable[int]) -> "Series":
        return cls(tuple(values))

    @classmethod
    def ones(cls, order: int) -> "Series":
        return cls((1,) * (order + 1))

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i]

    def truncate(self, order: int) -> "Series":
        _require(self, order)
        return Series(self.coeffs[: order + 1])

    def polynomial_degree(self) -> int | None:
        """Index of the last nonzero coefficient (None for the zero series)."""
        for i in range(len(self.coeffs) - 1, -1, -1):
            if self.coeffs[i]:
                return i
        return None


def _coeffs(a: Series | Sequence[int]) -> Sequence[int]:
    return a.coeffs if isinstance(a, Series) else a


def _require(a: Series | Sequence[int], order: int, name: str = "series") -> None:
    if order < 0:
        raise InputError(f"truncation order must be >= 0, got {order}")
    if len(_coeffs(a)) < order + 1:
        raise InputError(
            f"{name} is known to order {len(_coeffs(a)) - 1}, order {order} requested"
        )


def _exact_div(num: int, den: int, where: str) -> int:
    q, r = divmod(num, den)
    if r:
        raise ConsistencyError(f"inexact division {num}/{den} in {where}")
    return q


def mul(a: Series, b: Series, order: int) -> Series:
    """Cauchy product truncated at ``order``."""
    _require(a, order, "left factor")
    _require(b, order, "right factor")
    x, y = _coeffs(a), _coeffs(b)
    return Series(tuple(sum(map(_mul, x[: n + 1], y[n::-1])) for n in range(order + 1)))


def euler_transform(f: Series, order: int) -> Series:
    """Coefficients of prod_{n>=1} (1 - t^n)^(-f(n)); ``f(0)`` is ignored.

    Uses the divisor-sum recurrence ``n g(n) = sum_k c(k) g(n-k)`` with
    ``c(k) = sum_{d | k} d f(d)``.
    """
    _require(f, order)
    fc = _coeffs(f)
    c = [0] * (order + 1)
    for d in range(1, order + 1):
        w = d * fc[d]
        if w:
            for m in range(d, order + 1, d):
                c[m] += w
    g = [1]
    for n in range(1, order + 1):
        s = sum(map(_mul, c[1 : n + 1], g[::-1]))
        g.append(_exact_div(s, n, "euler_transform"))
    return Series(tuple(g))


def mset_k_transform(f: Series, k: int, order: int) -> Series:
    """Multisets of exactly ``k`` types drawn from ``f`` (the weight-0 type included).

    Newton recurrence on complete homogeneous symmetric functions:
    ``k H_k = sum_{j=1..k} F(t^j) H_{k-j}``.
    """
    if not isinstance(k, int) or k < 0:
        raise InputError(f"mset multiplicity must be a nonnegative int, got {k!r}")
    _require(f, order)
    fc = _coeffs(f)
    if fc[0] != 1:
        raise InputError("mset_k_transform needs f(0) = 1 (the empty trace)")
    hs: list[list[int]] = [[1] + [0] * order]
    for m in range(1, k + 1):
        acc = [0] * (order + 1)
        for j in range(1, m + 1):
            h = hs[m - j]
            # F(t^j) is supported on multiples of j
            for i in range(0, order // j + 1):
                fi = fc[i]
                if not fi:
                    continue
                shift = i * j
                for n in range(shift, order + 1):
                    hv = h[n - shift]
                    if hv:
                        acc[n] += fi * hv
        hs.append([_exact_div(v, m, "mset_k_transform") for v in acc])
    return Series(tuple(hs[k]))


def seq_transform(f: Series, order: int) -> Series:
    """Sequences of nonempty blocks: the series 1 / (1 - (F - f(0)))."""
    _require(f, order)
    fc = _coeffs(f)
    g = [1]
    for n in range(1, order + 1):
        g.append(sum(map(_mul, fc[1 : n + 1], g[::-1])))
    return Series(tuple(g))


@dataclass(frozen=True)
class GrowthBase:
    """Estimate of lim g(n)^(1/n)."""

    estimate: float
    spread: float
    converged: bool
    structural: float | None = None


def structural_root(poly: Sequence[int], tol: float = 1e-15) -> float | None:
    """Smallest root in (0, 1] of P(t) = 2 for a nonnegative polynomial with P(0) = 1.

    Returns None when P(1) < 2 (no root; the ordered construction is then finite).
    """
    p = list(_coeffs(poly))
    if not p or p[0] != 1:
        raise InputError("structural_root needs P(0) = 1")

    def h(t: float) -> float:
        acc = 0.0
        for c in reversed(p):
            acc = acc * t + c
        return acc - 2.0

    if h(1.0) < 0:
        return None
    if h(1.0) == 0:
        return 1.0
    lo, hi = 0.0, 1.0
    # h is increasing on [0, 1] since all coefficients are nonnegative
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if mid in (lo, hi):
            break
        if h(mid) < 0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def growth_base(g: Series | Sequence[int], poly: Sequence[int] | None = None) -> GrowthBase:
    """Empirical exponential base of ``g`` plus, optionally, the structural one.

    The empirical value extrapolates the ratios ``r(m) = g(m+1)/g(m)`` at
    ``m = n`` and ``m = n/2`` linearly in ``1/m``; the spread ``|r(n) - r(n/2)|``
    decides convergence (threshold 1e-6).
    """
    gc = list(_coeffs(g))
    if len(gc) < 64:
        raise InputError(f"growth_base needs >= 64 coefficients, got {len(gc)}")
    structural = None
    if poly is not None:
        rho = structural_root(poly)
        structural = None if rho is None else 1.0 / rho
    n = len(gc) - 2
    if gc[-1] == 0:
        return GrowthBase(0.0, 0.0, True, structural)
    half = n // 2
    if gc[half] == 0:
        raise InputError("sequence is not eventually positive on the sampled range")
    r_n = gc[n + 1] / gc[n]
    r_h = gc[half + 1] / gc[half]
    spread = abs(r_n - r_h)
    return GrowthBase(2.0 * r_n - r_h, spread, spread < 1e-6, structural)

