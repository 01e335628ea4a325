"""
Discrete Fourier multipliers, pseudo-differential and Fourier integral
operators on the periodic grid of a :class:`GridFunction`.

Conventions: ``f^(xi) = int f(x) e^{-i x.xi} dx`` approximated by the
midpoint rule, and inverse transforms carry ``(2 pi)^{-d}``.  The discrete
frequencies are ``xi_k = 2 pi k / (2L)`` in FFT order; with n even the
Nyquist index ``k = -n/2`` is kept as is.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import PreconditionError, ResourceError, SymbolEvaluationError
from .grid import GridFunction
from .symbols import PhaseDescriptor, SymbolDescriptor, japanese
from .young import GridConfig

__all__ = [
    "fourier_transform", "apply_multiplier", "apply_psdo_kn", "apply_psdo_general",
    "SampledSymbol", "transfer_quantization", "PhaseReport", "validate_phase",
    "apply_fio", "MAX_GENERAL_N", "MAX_FIO_N",
]

MAX_GENERAL_N = 512
MAX_FIO_N = 1024
_ROWS = 64


def _as_output(f: GridFunction, values: np.ndarray) -> GridFunction:
    if not np.iscomplexobj(f.values):
        scale = max(float(np.max(np.abs(values))), 1e-300)
        if float(np.max(np.abs(values.imag))) <= 1e-13 * scale:
            values = values.real
    return f.with_values(values)


def fourier_transform(f: GridFunction) -> np.ndarray:
    """Midpoint-rule samples of f^ at ``f.frequencies()``."""
    xi = f.frequencies()
    phase = np.exp(1j * f.extent * np.sum(xi, axis=-1))
    return f.cell_volume * phase * np.fft.fftn(f.values)


def _symbol_on_frequencies(a: SymbolDescriptor, f: GridFunction, info: dict | None):
    xi = f.frequencies()
    x = np.zeros_like(xi)
    with np.errstate(all="ignore"):
        vals = np.array(a(x, xi), dtype=complex)
    origin = (0,) * f.dim
    zero_mode_defined = bool(np.isfinite(vals[origin]))
    if not zero_mode_defined:
        vals[origin] = 0.0
    if not np.all(np.isfinite(vals)):
        raise SymbolEvaluationError(f"symbol {a.name!r} is not finite at a grid frequency")
    if info is not None:
        info["zero_mode_defined"] = zero_mode_defined
        info["zero_mode_value"] = complex(vals[origin])
    return vals


def apply_multiplier(a: SymbolDescriptor, f: GridFunction, info: dict | None = None) -> GridFunction:
    """a(D) f = IDFT( a(xi_k) * DFT(f) ).

    a(0) is replaced by 0 where the symbol is undefined at the origin; pass
    ``info={}`` to get that recorded.
    """
    if a.dim != f.dim:
        raise ValueError("symbol and grid dimensions differ")
    mult = _symbol_on_frequencies(a, f, info)
    return _as_output(f, np.fft.ifftn(mult * np.fft.fftn(f.values)))


def _phase_table(n: int) -> np.ndarray:
    """exp(2 pi i jk / n) / n with exact integer reduction of jk."""
    j = np.arange(n)
    return np.exp(2j * np.pi * (np.outer(j, j) % n) / n) / n


def apply_psdo_kn(a: SymbolDescriptor, f: GridFunction) -> GridFunction:
    """Kohn-Nirenberg quantization a(x, D) by direct summation over frequencies.

    (a(x,D) f)(x) = (2 pi)^{-d} sum_xi a(x, xi) f^(xi) e^{i x.xi} dxi^d
    """
    if f.dim not in (1, 2) or a.dim != f.dim:
        raise ValueError("a(x, D) is implemented for d = 1, 2")
    n, d = f.n, f.dim
    F = np.fft.fftn(f.values)
    W = _phase_table(n)
    xi = f.frequencies()
    x = f.coords()
    if d == 1:
        out = np.empty(n, dtype=complex)
        for s in range(0, n, _ROWS):
            A = np.asarray(a(x[s:s + _ROWS, None, :], xi[None, :, :]), dtype=complex)
            if not np.all(np.isfinite(A)):
                raise SymbolEvaluationError(f"symbol {a.name!r} is not finite on the grid")
            out[s:s + _ROWS] = np.sum(A * F[None, :] * W[s:s + _ROWS], axis=1)
    else:
        out = np.empty((n, n), dtype=complex)
        for j1 in range(n):
            A = np.asarray(a(x[j1][:, None, None, :], xi[None, :, :, :]), dtype=complex)
            if not np.all(np.isfinite(A)):
                raise SymbolEvaluationError(f"symbol {a.name!r} is not finite on the grid")
            M = A * (F * W[j1][:, None])[None, :, :]
            out[j1] = np.einsum("akl,al->a", M, W)
    return _as_output(f, out)


def apply_psdo_general(a: SymbolDescriptor, A, f: GridFunction) -> GridFunction:
    """Op_A(a) f by a double Riemann sum over (y, xi), d = 1.

    (Op_A(a) f)(x) = (2 pi)^{-1} sum_y sum_xi a(x - A(x - y), xi) f(y) e^{i(x-y)xi} h dxi

    ``x - y`` is reduced to [-L, L) (the exponential is 2L-periodic on the
    frequency lattice, and the reduction keeps the symbol argument near x).
    """
    if f.dim != 1:
        raise ValueError("general quantizations are implemented for d = 1")
    if f.n > MAX_GENERAL_N:
        raise ResourceError(f"n = {f.n} exceeds the limit {MAX_GENERAL_N} for the double sum")
    A = float(np.asarray(A, dtype=float).reshape(-1)[0])
    n, h = f.n, f.spacing
    x = f.axis()
    xi = f.frequency_axis()
    kint = np.rint(np.fft.fftfreq(n) * n).astype(np.int64)
    j = np.arange(n)
    fy = np.asarray(f.values, dtype=complex)
    out = np.empty(n, dtype=complex)
    for s in range(0, n, _ROWS):
        jj = j[s:s + _ROWS]
        m = (jj[:, None] - j[None, :] + n // 2) % n - n // 2          # wrapped (x - y)/h
        z = x[jj][:, None] - A * (m * h)                                 # (rows, n_y)
        E = np.exp(2j * np.pi * ((m[:, :, None] * kint[None, None, :]) % n) / n)
        S = np.asarray(a(z[:, :, None, None], xi[None, None, :, None]), dtype=complex)
        if not np.all(np.isfinite(S)):
            raise SymbolEvaluationError(f"symbol {a.name!r} is not finite on the grid")
        out[s:s + _ROWS] = np.einsum("ryk,y->r", S * E, fy) / n
    return _as_output(f, out)


# ---------------------------------------------------------------------------
# quantization transfer on a sampled phase-space lattice
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class SampledSymbol:
    """Symbol samples on the periodic lattice ``x_j = -Lx + j hx``,
    ``xi_k = -K + k hk`` (``values`` has shape ``(nx,)*d + (nk,)*d``)."""
    x_extent: float
    xi_extent: float
    values: np.ndarray
    dim: int = 1
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    @property
    def nx(self) -> int:
        return self.values.shape[0]

    @property
    def nk(self) -> int:
        return self.values.shape[self.dim]

    def x_axis(self) -> np.ndarray:
        return -self.x_extent + (2 * self.x_extent / self.nx) * np.arange(self.nx)

    def xi_axis(self) -> np.ndarray:
        return -self.xi_extent + (2 * self.xi_extent / self.nk) * np.arange(self.nk)

    @classmethod
    def from_symbol(cls, a: SymbolDescriptor, x_extent: float, nx: int,
                    xi_extent: float, nk: int) -> "SampledSymbol":
        d = a.dim
        xa = -x_extent + (2 * x_extent / nx) * np.arange(nx)
        ka = -xi_extent + (2 * xi_extent / nk) * np.arange(nk)
        grids = np.meshgrid(*([xa] * d + [ka] * d), indexing="ij")
        x = np.stack(grids[:d], axis=-1)
        xi = np.stack(grids[d:], axis=-1)
        return cls(float(x_extent), float(xi_extent), np.asarray(a(x, xi), dtype=complex), d)

    @classmethod
    def for_grid(cls, a: SymbolDescriptor, f: GridFunction, x_extent: float,
                 nx: int) -> "SampledSymbol":
        """Lattice whose frequency axis is exactly the DFT lattice of ``f``."""
        hk = math.pi / f.extent
        return cls.from_symbol(a, x_extent, nx, hk * f.n / 2, f.n)

    def _x_coefficients(self) -> np.ndarray:
        if "c" not in self._cache:
            self._cache["c"] = np.fft.fft(self.values, axis=0)
        return self._cache["c"]

    def __call__(self, x, xi) -> np.ndarray:
        """Trigonometric interpolation in x at lattice frequencies (d = 1)."""
        if self.dim != 1:
            raise NotImplementedError("off-lattice evaluation is implemented for d = 1")
        xb, kb = np.broadcast_arrays(np.asarray(x, float)[..., 0], np.asarray(xi, float)[..., 0])
        hk = 2 * self.xi_extent / self.nk
        kidx = np.rint((kb + self.xi_extent) / hk).astype(np.int64)
        if np.any(np.abs(-self.xi_extent + kidx * hk - kb) > 1e-9 * (1.0 + np.abs(kb))):
            raise ValueError("frequencies must lie on the sampled lattice")
        kidx %= self.nk
        ux, inv = np.unique(xb.ravel(), return_inverse=True)
        nx = self.nx
        eta = 2 * np.pi * np.fft.fftfreq(nx, d=2 * self.x_extent / nx)
        arg = eta[None, :] * (ux[:, None] + self.x_extent)
        P = np.exp(1j * arg)
        P[:, nx // 2] = np.cos(arg[:, nx // 2])                       # split Nyquist term
        vals = (P @ self._x_coefficients()) / nx
        return vals[inv.ravel(), kidx.ravel()].reshape(xb.shape)

    def as_symbol(self) -> SymbolDescriptor:
        return SymbolDescriptor(self, self.dim, False, None, 0, name="sampled")


def transfer_quantization(a1: SampledSymbol, A1, A2) -> SampledSymbol:
    """Symbol a2 with Op_{A2}(a2) = Op_{A1}(a1):

        a2 = exp(i <(A1 - A2) D_xi, D_x>) a1,

    realized as a Fourier multiplier on the 2d-dimensional lattice.
    """
    d = a1.dim
    C = np.atleast_2d(np.asarray(A1, dtype=float)) - np.atleast_2d(np.asarray(A2, dtype=float))
    if C.shape != (d, d):
        raise ValueError(f"quantization matrices must be {d}x{d}")
    if not np.all(np.isfinite(C)):
        raise PreconditionError("quantization matrices must be finite")
    if not np.any(C):
        return SampledSymbol(a1.x_extent, a1.xi_extent, a1.values.copy(), d)
    eta = 2 * np.pi * np.fft.fftfreq(a1.nx, d=2 * a1.x_extent / a1.nx)   # dual to x
    y = 2 * np.pi * np.fft.fftfreq(a1.nk, d=2 * a1.xi_extent / a1.nk)    # dual to xi
    axes = np.meshgrid(*([eta] * d + [y] * d), indexing="ij", sparse=True)
    phase = 0.0
    for j in range(d):
        for k in range(d):
            if C[j, k]:
                phase = phase + C[j, k] * axes[d + k] * axes[j]
    spec = np.fft.fftn(a1.values) * np.exp(1j * phase)
    return SampledSymbol(a1.x_extent, a1.xi_extent, np.fft.ifftn(spec), d)


# ---------------------------------------------------------------------------
# Fourier integral operators
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class PhaseReport:
    det_lower_bound: float
    homogeneity_residual: float
    growth_ratios: dict
    derivative_growth: float
    thresholds: dict

    @property
    def valid(self) -> bool:
        t = self.thresholds
        lo, hi = self.growth_ratios["xi_grad"]
        lo2, hi2 = self.growth_ratios["x_grad"]
        return (self.det_lower_bound >= t["det_min"]
                and self.homogeneity_residual <= t["homogeneity_max"]
                and min(lo, lo2) >= 1.0 / t["ratio_max"]
                and max(hi, hi2) <= t["ratio_max"]
                and self.derivative_growth <= t["ratio_max"])

    def to_dict(self) -> dict:
        return {"det_lower_bound": self.det_lower_bound,
                "homogeneity_residual": self.homogeneity_residual,
                "growth_ratios": {k: list(v) for k, v in self.growth_ratios.items()},
                "derivative_growth": self.derivative_growth,
                "valid": self.valid}


_PHASE_THRESHOLDS = {"det_min": 1e-6, "homogeneity_max": 1e-8, "ratio_max": 100.0}


def _radial_probe(d: int, probe: GridConfig, n_dir: int, with_origin: bool) -> np.ndarray:
    r = probe.points()
    if d == 1:
        pts = np.concatenate([r, -r])[:, None]
    else:
        th = 2 * np.pi * np.arange(n_dir) / n_dir
        dirs = np.stack([np.cos(th), np.sin(th)], axis=-1)
        pts = (r[:, None, None] * dirs[None, :, :]).reshape(-1, 2)
    if with_origin:
        pts = np.vstack([np.zeros((1, d)), pts])
    return pts


def validate_phase(phase: PhaseDescriptor, probe: GridConfig | None = None,
                   n_dir: int = 16) -> PhaseReport:
    """Probe the phase-function conditions on a radial (x, xi) grid."""
    probe = probe or GridConfig(1e-2, 1e3, 24)
    d = phase.dim
    xs = _radial_probe(d, probe, n_dir, True)
    ks = _radial_probe(d, probe, n_dir, False)
    x = xs[:, None, :]
    xi = ks[None, :, :]
    H = np.asarray(phase.mixed_hessian(x, xi))
    det = np.abs(np.linalg.det(H)) if d > 1 else np.abs(H[..., 0, 0])
    base = phase(x, xi)
    resid = 0.0
    for tau in (2.0, 0.5):
        diff = np.abs(phase(x, tau * xi) - tau * base)
        scale = np.maximum(np.abs(tau * base), 1.0)
        resid = max(resid, float(np.max(diff / scale)))
    gx = np.asarray(phase.grad_x(x, xi))
    gk = np.asarray(phase.grad_xi(x, xi))
    r_xi = japanese(gk) / japanese(x)
    r_x = japanese(gx) / japanese(xi)
    kn = np.sqrt(np.sum(xi ** 2, axis=-1))
    jx = japanese(x)
    growth = float(np.max(np.abs(base) / (jx * kn)))
    growth = max(growth, float(np.max(np.sqrt(np.sum(gx ** 2, axis=-1)) / kn)))
    Hx = phase.hessian_x(x, xi)
    growth = max(growth, float(np.max(np.max(np.abs(Hx), axis=(-1, -2)) * jx / kn)))
    return PhaseReport(
        det_lower_bound=float(det.min()),
        homogeneity_residual=resid,
        growth_ratios={"xi_grad": (float(r_xi.min()), float(r_xi.max())),
                       "x_grad": (float(r_x.min()), float(r_x.max()))},
        derivative_growth=growth,
        thresholds=dict(_PHASE_THRESHOLDS),
    )


def apply_fio(a: SymbolDescriptor, phase: PhaseDescriptor, f: GridFunction,
              report: PhaseReport | None = None) -> GridFunction:
    """Op_phi(a) f (x) = (2 pi)^{-1} sum_xi e^{i phi(x,xi)} a(x,xi) f^(xi) dxi, d = 1.

    The amplitude must vanish for |xi| < eps (``a.support_cutoff``) and the
    phase must pass :func:`validate_phase`.
    """
    if f.dim != 1 or phase.dim != 1:
        raise ValueError("Fourier integral operators are implemented for d = 1")
    if f.n > MAX_FIO_N:
        raise ResourceError(f"n = {f.n} exceeds the FIO limit {MAX_FIO_N}")
    if not (a.support_cutoff and a.support_cutoff > 0):
        raise PreconditionError("the amplitude needs a support cutoff |xi| >= eps > 0")
    report = report or validate_phase(phase)
    if not report.valid:
        raise PreconditionError(f"phase {phase.name!r} fails validation: {report.to_dict()}")
    x = f.axis()[:, None]
    xi_all = f.frequency_axis()
    keep = np.abs(xi_all) >= a.support_cutoff
    xi = xi_all[keep][None, :]
    fhat = fourier_transform(f)[keep]
    dxi = math.pi / f.extent
    out = np.zeros(f.n, dtype=complex)
    for s in range(0, f.n, 256):
        xs = x[s:s + 256]
        amp = np.asarray(a(xs[..., None], xi[..., None]), dtype=complex)
        ph = phase(xs[..., None], xi[..., None])
        out[s:s + 256] = (np.exp(1j * ph) * amp) @ fhat
    return _as_output(f, out * dxi / (2 * math.pi))
