"""
Symbol-class conditions: Mihlin and Hoermander multiplier functionals and
probe-grid seminorms for S^r_{rho,delta} and SG classes.

Probe-grid suprema are lower bounds for the true seminorms.  They are used
to classify a symbol as finite or divergent from the growth of the envelope
over the last decade of probe radii.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np
from scipy.special import roots_legendre

from .symbols import SymbolDescriptor, japanese, multi_indices
from .young import TREND_TOL, GridConfig

__all__ = [
    "MihlinReport", "HormanderReport", "SeminormReport", "annulus_volume",
    "mihlin_functional", "hormander_functional", "hormander_class_seminorm",
    "sg_seminorm", "default_R_set",
]

DEFAULT_PROBE = GridConfig(1e-2, 1e3, 48)


def _key(alpha) -> str:
    return ",".join(str(k) for k in alpha)


def _directions(d: int, n_dir: int) -> np.ndarray:
    if d == 1:
        return np.array([[1.0], [-1.0]])
    th = 2 * np.pi * np.arange(n_dir) / n_dir
    return np.stack([np.cos(th), np.sin(th)], axis=-1)


def _multiplier_order(d: int) -> int:
    return d // 2 + 1


def _check_multiplier(a: SymbolDescriptor, d: int) -> None:
    if a.dim != d:
        raise ValueError(f"symbol dimension {a.dim} differs from d = {d}")
    if d not in (1, 2):
        raise ValueError("condition functionals are implemented for d = 1, 2")


@dataclass(frozen=True)
class MihlinReport:
    table: dict
    value: float

    def to_dict(self) -> dict:
        return {"table": dict(self.table), "value": self.value}


def mihlin_functional(a: SymbolDescriptor, d: int, probe: GridConfig | None = None,
                      n_dir: int = 64) -> MihlinReport:
    """sup_xi |xi|^{|alpha|} |d^alpha a(xi)| for every |alpha| <= [d/2] + 1."""
    _check_multiplier(a, d)
    probe = probe or DEFAULT_PROBE
    r = probe.points()
    xi = (r[:, None, None] * _directions(d, n_dir)[None]).reshape(-1, d)
    x = np.zeros_like(xi)
    rad = np.sqrt(np.sum(xi ** 2, axis=-1))
    table = {}
    for alpha in multi_indices(d, _multiplier_order(d)):
        der = a.derivative(alpha, (0,) * d, x, xi, allow_fd=a.fd_fallback)
        table[_key(alpha)] = float(np.max(rad ** sum(alpha) * np.abs(der)))
    return MihlinReport(table, max(table.values()))


def annulus_volume(d: int) -> float:
    """|{1 < |xi| < 2}|."""
    return 2.0 if d == 1 else 3.0 * math.pi


def default_R_set() -> list[float]:
    return [2.0 ** k for k in range(-10, 11)]


@dataclass(frozen=True)
class HormanderReport:
    """``raw[alpha][i]`` is R^{-d+2|alpha|} int_{R<|xi|<2R} |d^alpha a|^2 at
    ``R_set[i]``; ``value`` is the maximum divided by the volume of the unit
    annulus, so that a = 1 gives 1."""
    R_set: list
    raw: dict
    raw_max: float
    value: float

    def normalized(self, alpha) -> list[float]:
        vol = annulus_volume(len(alpha))
        return [v / vol for v in self.raw[_key(alpha)]]

    def to_dict(self) -> dict:
        return {"R_set": list(self.R_set), "raw": {k: list(v) for k, v in self.raw.items()},
                "raw_max": self.raw_max, "value": self.value}


@lru_cache(maxsize=8)
def _gauss_legendre(n: int):
    t, w = roots_legendre(n)
    t.setflags(write=False)
    w.setflags(write=False)
    return t, w


def _annulus_rule(d: int, R: float, n1: int, n_rad: int, n_ang: int):
    if d == 1:
        t, w = _gauss_legendre(n1)
        pos = R * (1.5 + 0.5 * t)
        pts = np.concatenate([pos, -pos])[:, None]
        return pts, np.concatenate([w, w]) * (R / 2.0)
    t, w = _gauss_legendre(n_rad)
    rr = R * (1.5 + 0.5 * t)
    wr = w * (R / 2.0) * rr
    th = 2 * np.pi * np.arange(n_ang) / n_ang
    pts = (rr[:, None, None] * np.stack([np.cos(th), np.sin(th)], -1)[None]).reshape(-1, 2)
    wts = (wr[:, None] * np.full(n_ang, 2 * np.pi / n_ang)[None]).ravel()
    return pts, wts


def hormander_functional(a: SymbolDescriptor, d: int, R_set=None, nodes_1d: int = 10_000,
                         radial_nodes: int = 256, angular_nodes: int = 256) -> HormanderReport:
    """Annulus L^2 form of the multiplier condition, scaled by R^{-d+2|alpha|}."""
    _check_multiplier(a, d)
    R_set = list(R_set) if R_set is not None else default_R_set()
    if not R_set or min(R_set) <= 0:
        raise ValueError("R_set must contain positive radii")
    raw = {}
    for alpha in multi_indices(d, _multiplier_order(d)):
        vals = []
        for R in R_set:
            pts, wts = _annulus_rule(d, R, nodes_1d, radial_nodes, angular_nodes)
            der = a.derivative(alpha, (0,) * d, np.zeros_like(pts), pts, allow_fd=a.fd_fallback)
            vals.append(float(R ** (-d + 2 * sum(alpha)) * np.sum(wts * np.abs(der) ** 2)))
        raw[_key(alpha)] = vals
    raw_max = max(max(v) for v in raw.values())
    return HormanderReport(R_set, raw, raw_max, raw_max / annulus_volume(d))


# ---------------------------------------------------------------------------
# probe-grid seminorms
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class SeminormReport:
    """Probe-grid seminorm, the sum over (alpha, beta) of the weighted sups.

    ``divergent`` is set when the sup over balls of growing radius rises over
    the last decade of probe radii (log-log slope above the trend tolerance) in xi or x.
    """
    value: float
    divergent: bool
    slope_xi: float
    slope_x: float
    terms: dict = field(default_factory=dict)

    @property
    def finite(self) -> bool:
        return not self.divergent

    def to_dict(self) -> dict:
        return {"value": self.value, "divergent": self.divergent,
                "slope_xi": self.slope_xi, "slope_x": self.slope_x, "terms": dict(self.terms)}


def _top_decade_slope(radii: np.ndarray, env: np.ndarray) -> float:
    """Log-log slope over the last decade of the sup over the ball of each
    radius, so bounded oscillation reads as flat."""
    env = np.maximum.accumulate(env)
    top = radii >= radii[-1] / 10.0
    lr = np.log(radii[top])
    le = np.log(np.maximum(env[top], 1e-300))
    if lr.size < 2 or np.all(env[top] == 0):
        return 0.0
    return float(np.polyfit(lr, le, 1)[0])


def _probe_points(d: int, probe: GridConfig, n_dir: int, with_origin: bool):
    """Radial points, their radius index (-1 for the origin) and radii."""
    r = probe.points()
    dirs = _directions(d, n_dir)
    pts = (r[:, None, None] * dirs[None]).reshape(-1, d)
    idx = np.repeat(np.arange(r.size), dirs.shape[0])
    if with_origin:
        pts = np.vstack([np.zeros((1, d)), pts])
        idx = np.concatenate([[-1], idx])
    return pts, idx, r


def _seminorm(a: SymbolDescriptor, N: int, weight, probe: GridConfig,
              x_probe: GridConfig, n_dir: int, n_dir_x: int) -> SeminormReport:
    d = a.dim
    if N < 0:
        raise ValueError("N must be non-negative")
    xi, xi_idx, xi_r = _probe_points(d, probe, n_dir, True)
    if a.support_cutoff:
        eps = a.support_cutoff
        keep = np.sqrt(np.sum(xi ** 2, -1)) >= eps + 0.05 * max(eps, 1.0)
        xi, xi_idx = xi[keep], xi_idx[keep]
    if a.xi_only:
        x, x_idx, x_r = np.zeros((1, d)), np.array([-1]), np.array([0.0])
    else:
        x, x_idx, x_r = _probe_points(d, x_probe, n_dir_x, True)
    X, XI = x[:, None, :], xi[None, :, :]
    total = np.zeros((x.shape[0], xi.shape[0]))
    terms = {}
    for alpha in multi_indices(d, N):          # xi derivatives
        for beta in multi_indices(d, N):       # x derivatives
            if a.xi_only and sum(beta) > 0:
                continue
            der = a.derivative(alpha, beta, X, XI, allow_fd=a.fd_fallback)
            w = weight(X, XI, sum(alpha), sum(beta))
            val = np.abs(der) * w
            if not np.all(np.isfinite(val)):
                val = np.where(np.isfinite(val), val, np.inf)
            terms[f"{_key(alpha)}|{_key(beta)}"] = float(np.max(val))
            total = np.maximum(total, val)
    value = float(sum(terms.values()))
    env_xi = np.array([total[:, xi_idx == i].max() if np.any(xi_idx == i) else 0.0
                       for i in range(xi_r.size)])
    slope_xi = _top_decade_slope(xi_r, env_xi)
    slope_x = 0.0
    if not a.xi_only:
        env_x = np.array([total[x_idx == i].max() for i in range(x_r.size)])
        slope_x = _top_decade_slope(x_r, env_x)
    divergent = (not math.isfinite(value)) or slope_xi > TREND_TOL or slope_x > TREND_TOL
    return SeminormReport(value, bool(divergent), slope_xi, slope_x, terms)


def hormander_class_seminorm(a: SymbolDescriptor, r: float, rho: float, delta: float, N: int,
                             probe: GridConfig | None = None, x_probe: GridConfig | None = None,
                             n_dir: int = 64) -> SeminormReport:
    """sum_{|alpha|,|beta| <= N} sup <xi>^{-r + rho|alpha| - delta|beta|} |D_xi^alpha D_x^beta a|."""
    if not (0.0 <= delta <= rho <= 1.0 and delta < 1.0):
        raise ValueError("need 0 <= delta <= rho <= 1 and delta < 1")

    def weight(x, xi, na, nb):
        return japanese(xi) ** (-r + rho * na - delta * nb)
    return _seminorm(a, N, weight, probe or DEFAULT_PROBE,
                     x_probe or GridConfig(1e-2, 1e3, 16), n_dir, 8)


def sg_seminorm(a: SymbolDescriptor, m: float, mu: float, N: int,
                probe: GridConfig | None = None, x_probe: GridConfig | None = None,
                n_dir: int = 64) -> SeminormReport:
    """sum_{|alpha|,|beta| <= N} sup <x>^{-m+|beta|} <xi>^{-mu+|alpha|} |D_x^beta D_xi^alpha a|."""
    def weight(x, xi, na, nb):
        return japanese(x) ** (-m + nb) * japanese(xi) ** (-mu + na)
    return _seminorm(a, N, weight, probe or DEFAULT_PROBE,
                     x_probe or GridConfig(1e-2, 1e3, 16), n_dir, 8)
