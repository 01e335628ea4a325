"""
Lebesgue, weak Lebesgue, Luxemburg and weak Orlicz norms of grid functions.

All integrals are midpoint sums over grid cells, so indicator functions of
unions of cells are integrated exactly.  The distribution function
``mu_f(t) = |{x : |f(x)| > t}|`` is a right-continuous step function of t;
on each constancy interval the weak-type expressions increase with t, so
their suprema are approached as t rises to one of the sampled levels.
"""

from __future__ import annotations

import math
from dataclasses import asdict, dataclass

import numpy as np

from .errors import DegenerateFunctionError, DivergenceError
from .grid import GridFunction
from .young import YoungFunction

__all__ = [
    "NormResult", "distribution_function", "lp_norm", "weak_lp_norm",
    "luxemburg_norm", "weak_orlicz_norm", "modular",
]

RTOL = 1e-10
MAX_BRACKET_DOUBLINGS = 60
MAX_BISECTIONS = 400


@dataclass(frozen=True)
class NormResult:
    value: float
    modular_at_value: float
    bisection_iters: int
    tolerance: float

    def to_dict(self) -> dict:
        return asdict(self)


def distribution_function(f: GridFunction, t):
    """Measure of ``{|f| > t}`` counted in whole cells."""
    a = np.sort(f.abs().ravel())
    t_arr = np.asarray(t, dtype=float)
    above = a.size - np.searchsorted(a, t_arr, side="right")
    out = above * f.cell_volume
    return float(out) if t_arr.ndim == 0 else out


def _levels(f: GridFunction) -> tuple[np.ndarray, np.ndarray]:
    """Distinct positive |f| levels (descending) and ``|{|f| >= level}|``."""
    a = f.abs().ravel()
    a = a[a > 0]
    levels, counts = np.unique(a, return_counts=True)
    levels, counts = levels[::-1], counts[::-1]
    return levels, np.cumsum(counts) * f.cell_volume


def lp_norm(f: GridFunction, p: float) -> float:
    if not p > 0:
        raise ValueError("p must be positive")
    a = f.abs()
    amax = float(a.max())
    if math.isinf(p) or amax == 0.0:
        return amax
    # scaled by max|f| so that |f|^p neither under- nor overflows
    return amax * float((np.sum((a / amax) ** p) * f.cell_volume) ** (1.0 / p))


def weak_lp_norm(f: GridFunction, p: float) -> float:
    """sup_t t mu_f(t)^{1/p}, evaluated at the sampled levels."""
    if not p > 0:
        raise ValueError("p must be positive")
    levels, mu = _levels(f)
    if levels.size == 0:
        return 0.0
    if math.isinf(p):
        return float(levels[0])
    return float(np.max(levels * mu ** (1.0 / p)))


def _check_phi(phi: YoungFunction) -> None:
    phi.require_finite()
    probe = 1e-3 * (phi.breakpoints[0] if phi.breakpoints else 1.0)
    if not phi.eval(probe) > 0:
        raise DegenerateFunctionError("phi must be non-zero outside the origin")


def _threshold_args(phi: YoungFunction, small_mass: float, big_mass: float):
    """t_small with phi(t_small) * big_mass <= 1 and t_big with
    phi(t_big) * small_mass >= 1."""
    t_small = 1.0
    for _ in range(2000):
        if phi.eval(t_small) * big_mass <= 1.0:
            break
        t_small *= 0.5
    t_big = 1.0
    for _ in range(2000):
        if phi.eval(t_big) * small_mass >= 1.0:
            break
        t_big *= 2.0
    return t_small, t_big


def _bisect(functional, lo: float, hi: float, rtol: float) -> tuple[float, int]:
    """Smallest lambda in [lo, hi] with functional(lambda) <= 1.

    ``functional`` is non-increasing; returns the upper end of the final
    bracket, which always satisfies the constraint.
    """
    for _ in range(MAX_BRACKET_DOUBLINGS):
        if functional(hi) <= 1.0:
            break
        lo, hi = hi, 2.0 * hi
    else:
        raise DivergenceError("modular stays above 1; f is not in L^phi at this resolution")
    for _ in range(MAX_BRACKET_DOUBLINGS):
        if functional(lo) > 1.0:
            break
        hi, lo = lo, 0.5 * lo
    iters = 0
    while hi - lo > rtol * hi and iters < MAX_BISECTIONS:
        mid = math.sqrt(lo * hi) if hi > 4.0 * lo else 0.5 * (lo + hi)
        if functional(mid) <= 1.0:
            hi = mid
        else:
            lo = mid
        iters += 1
    return hi, iters


def modular(f: GridFunction, phi: YoungFunction, lam: float) -> float:
    """sum over cells of phi(|f| / lam) times the cell volume."""
    return float(np.sum(phi.eval(f.abs().ravel() / lam)) * f.cell_volume)


def luxemburg_norm(f: GridFunction, phi: YoungFunction, rtol: float = RTOL) -> NormResult:
    """inf{lam > 0 : int phi(|f|/lam) dx <= 1} by bisection on lam."""
    _check_phi(phi)
    a = f.abs().ravel()
    a = a[a > 0]
    if a.size == 0:
        return NormResult(0.0, 0.0, 0, rtol)
    cv = f.cell_volume
    t_small, t_big = _threshold_args(phi, cv, (2.0 * f.extent) ** f.dim)
    # bisect on f / max|f| (the norm is homogeneous), which keeps lambda
    # away from under- and overflow
    amax = float(a.max())
    a = a / amax

    def m(lam):
        return float(np.sum(phi.eval(a / lam)) * cv)

    lam, iters = _bisect(m, 1.0 / t_big, 1.0 / t_small, rtol)
    return NormResult(lam * amax, m(lam), iters, rtol)


def weak_orlicz_norm(f: GridFunction, phi: YoungFunction, rtol: float = RTOL) -> NormResult:
    """inf{lam > 0 : sup_t phi(t/lam) mu_f(t) <= 1}, sup over sampled levels."""
    _check_phi(phi)
    levels, mu = _levels(f)
    if levels.size == 0:
        return NormResult(0.0, 0.0, 0, rtol)
    t_small, t_big = _threshold_args(phi, f.cell_volume, (2.0 * f.extent) ** f.dim)
    amax = float(levels[0])
    levels = levels / amax

    def w(lam):
        return float(np.max(phi.eval(levels / lam) * mu))

    lam, iters = _bisect(w, 1.0 / t_big, 1.0 / t_small, rtol)
    return NormResult(lam * amax, w(lam), iters, rtol)
