"""
Symbols a(x, xi), phase functions phi(x, xi) and the named catalog.

Callables receive ``x`` and ``xi`` as arrays with a trailing axis of length
d and broadcast over the leading axes.  Derivative oracles are keyed by the
pair ``(xi_order, x_order)`` of multi-indices; anything not declared falls
back to nested central differences when ``fd_fallback`` is set.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from .errors import CapabilityError

__all__ = [
    "SymbolDescriptor", "PhaseDescriptor", "multi_indices", "japanese",
    "SYMBOL_CATALOG", "PHASE_CATALOG", "catalog_symbol", "catalog_phase",
]

_EPS = np.finfo(float).eps


def japanese(v: np.ndarray) -> np.ndarray:
    """<v> = (1 + |v|^2)^{1/2} over the trailing axis."""
    return np.sqrt(1.0 + np.sum(np.abs(v) ** 2, axis=-1))


def multi_indices(d: int, max_order: int) -> list[tuple[int, ...]]:
    """All multi-indices in N^d with |alpha| <= max_order, by increasing order."""
    out = []
    for k in range(max_order + 1):
        if d == 1:
            out.append((k,))
        else:
            for i in range(k, -1, -1):
                out.append((i, k - i))
    return out


def _fd_step(order: int) -> float:
    # eps^(1/3) for first derivatives, coarser for nested higher orders
    return _EPS ** (1.0 / (order + 2))


def _nested_fd(fn, x, xi, xi_order, x_order, h_scale):
    """Nested central differences of fn(x, xi) of the requested orders."""
    for which, order in (("xi", xi_order), ("x", x_order)):
        for axis, k in enumerate(order):
            if k == 0:
                continue
            lower = list(order)
            lower[axis] -= 1
            lower = tuple(lower)
            var = xi if which == "xi" else x
            h = np.maximum(np.abs(var[..., axis]), 1.0) * h_scale
            shift = np.zeros_like(var)
            shift[..., axis] = h
            if which == "xi":
                fp = _nested_fd(fn, x, xi + shift, lower, x_order, h_scale)
                fm = _nested_fd(fn, x, xi - shift, lower, x_order, h_scale)
            else:
                fp = _nested_fd(fn, x + shift, xi, xi_order, lower, h_scale)
                fm = _nested_fd(fn, x - shift, xi, xi_order, lower, h_scale)
            return (fp - fm) / (2.0 * h)
    return fn(x, xi)


@dataclass(frozen=True, eq=False)
class SymbolDescriptor:
    """A symbol a(x, xi) or a multiplier a(xi).

    Parameters
    ----------
    value : callable (x, xi) -> array
    dim : int
    xi_only : bool
        True for Fourier multipliers; ``x`` is then ignored.
    derivatives : callable (xi_order, x_order, x, xi) -> array or None
        Exact derivative oracle; returning None means "not declared".
    order : int
        Highest total order the oracle covers.
    fd_fallback : bool
    support_cutoff : float or None
        If set, the symbol is zero for ``|xi| < support_cutoff``.
    sg_orders : (m, mu) or None
        Declared SG orders, used by the FIO admissibility gate.
    """
    value: Callable
    dim: int = 1
    xi_only: bool = False
    derivatives: Optional[Callable] = None
    order: int = 0
    fd_fallback: bool = True
    support_cutoff: Optional[float] = None
    name: str = "custom"
    params: dict = field(default_factory=dict)
    sg_orders: Optional[tuple[float, float]] = None

    def _mask(self, xi, out):
        if self.support_cutoff is None:
            return out
        r = np.sqrt(np.sum(xi ** 2, axis=-1))
        return np.where(r < self.support_cutoff, 0.0, out)

    def __call__(self, x, xi):
        x = np.asarray(x, dtype=float)
        xi = np.asarray(xi, dtype=float)
        out = np.asarray(self.value(x, xi))
        out = np.broadcast_to(out, np.broadcast_shapes(x.shape[:-1], xi.shape[:-1]))
        return self._mask(xi, out)

    def with_cutoff(self, eps: float) -> "SymbolDescriptor":
        return SymbolDescriptor(self.value, self.dim, self.xi_only, self.derivatives,
                                self.order, self.fd_fallback, eps, self.name,
                                dict(self.params), self.sg_orders)

    def has_oracle(self, xi_order, x_order) -> bool:
        total = sum(xi_order) + sum(x_order)
        if total == 0:
            return True
        if self.xi_only and sum(x_order) > 0:
            return True
        return self.derivatives is not None and total <= self.order

    def derivative(self, xi_order, x_order, x, xi, allow_fd: bool = True):
        """D_xi^alpha D_x^beta a up to the factor (-i)^{|alpha|+|beta|}.

        Only moduli enter the seminorms, so plain partial derivatives are
        returned.
        """
        xi_order, x_order = tuple(xi_order), tuple(x_order)
        x = np.asarray(x, dtype=float)
        xi = np.asarray(xi, dtype=float)
        total = sum(xi_order) + sum(x_order)
        if total == 0:
            return self(x, xi)
        if self.xi_only and sum(x_order) > 0:
            return np.zeros(np.broadcast_shapes(x.shape[:-1], xi.shape[:-1]))
        if self.derivatives is not None and total <= self.order:
            out = self.derivatives(xi_order, x_order, x, xi)
            if out is not None:
                out = np.broadcast_to(out, np.broadcast_shapes(x.shape[:-1], xi.shape[:-1]))
                return self._mask(xi, out)
        if not (self.fd_fallback and allow_fd):
            raise CapabilityError(
                f"derivative {xi_order}/{x_order} of {self.name!r} is not declared "
                "and finite differences are disabled")
        raw = lambda xx, zz: np.asarray(self.value(xx, zz))
        out = _nested_fd(raw, x, xi, xi_order, x_order, _fd_step(total))
        return self._mask(xi, out)

    def verify_derivatives(self, n_probes: int = 64, seed: int = 0,
                           radius: tuple[float, float] = (0.1, 10.0)) -> float:
        """Largest relative gap between declared derivatives and central
        differences of the value oracle on random probes."""
        if self.derivatives is None or self.order == 0:
            return 0.0
        rng = np.random.default_rng(seed)
        d = self.dim
        xi = rng.normal(size=(n_probes, d))
        xi *= (np.exp(rng.uniform(*np.log(radius), size=n_probes))
               / np.linalg.norm(xi, axis=-1))[:, None]
        x = rng.uniform(-3, 3, size=(n_probes, d))
        worst = 0.0
        for xo in multi_indices(d, 0 if self.xi_only else self.order):
            for ko in multi_indices(d, self.order):
                if sum(xo) + sum(ko) == 0 or sum(xo) + sum(ko) > self.order:
                    continue
                exact = self.derivatives(ko, xo, x, xi)
                if exact is None:
                    continue
                raw = lambda xx, zz: np.asarray(self.value(xx, zz))
                approx = _nested_fd(raw, x, xi, ko, xo, _fd_step(sum(ko) + sum(xo)))
                scale = np.maximum(np.abs(exact), np.abs(approx))
                scale = np.maximum(scale, 1e-8 * max(1.0, float(np.max(scale))))
                worst = max(worst, float(np.max(np.abs(exact - approx) / scale)))
        return worst


@dataclass(frozen=True, eq=False)
class PhaseDescriptor:
    """Real phase phi(x, xi), positively 1-homogeneous in xi."""
    value: Callable
    grad_x: Callable
    grad_xi: Callable
    mixed_hessian: Callable  # returns (..., d, d) with entries d_{x_j} d_{xi_k} phi
    dim: int = 1
    name: str = "custom"
    params: dict = field(default_factory=dict)

    def __call__(self, x, xi):
        return self.value(np.asarray(x, float), np.asarray(xi, float))

    def hessian_x(self, x, xi):
        """d_{x_j} d_{x_k} phi by central differences of ``grad_x``."""
        x = np.asarray(x, float)
        xi = np.asarray(xi, float)
        cols = []
        for k in range(self.dim):
            h = np.maximum(np.abs(x[..., k]), 1.0) * _fd_step(1)
            shift = np.zeros_like(x)
            shift[..., k] = h
            g = (self.grad_x(x + shift, xi) - self.grad_x(x - shift, xi)) / (2.0 * h[..., None])
            cols.append(g)
        return np.stack(cols, axis=-1)


# ---------------------------------------------------------------------------
# catalog
# ---------------------------------------------------------------------------

def _norm(xi):
    return np.sqrt(np.sum(xi ** 2, axis=-1))


def _zero_derivs(xi_order, x_order, x, xi):
    return np.zeros(np.broadcast_shapes(x.shape[:-1], xi.shape[:-1]))


def _identity(dim, **_):
    return SymbolDescriptor(lambda x, xi: np.ones(xi.shape[:-1]), dim, True,
                            _zero_derivs, 8, name="identity")


def _sgn(dim, **_):
    if dim != 1:
        raise ValueError("sgn is a one-dimensional multiplier; use riesz for d = 2")
    return SymbolDescriptor(lambda x, xi: np.sign(xi[..., 0]), 1, True,
                            _zero_derivs, 8, name="sgn")


def _hilbert(dim, **_):
    if dim != 1:
        raise ValueError("hilbert is one-dimensional")
    return SymbolDescriptor(lambda x, xi: -1j * np.sign(xi[..., 0]), 1, True,
                            _zero_derivs, 8, name="hilbert")


def _riesz(dim, j=0, **_):
    j = int(j)

    def value(x, xi):
        r = _norm(xi)
        with np.errstate(invalid="ignore", divide="ignore"):
            return np.where(r > 0, -1j * xi[..., j] / r, 0.0)
    return SymbolDescriptor(value, dim, True, None, 0, name="riesz", params={"j": j})


def _unimodular(dim, gamma=1.0, **_):
    g = float(gamma)

    def value(x, xi):
        r = _norm(xi)
        with np.errstate(divide="ignore", invalid="ignore"):
            return np.where(r > 0, np.exp(1j * g * np.log(r)), 0.0)

    def derivs(xi_order, x_order, x, xi):
        k = sum(xi_order)
        a = value(x, xi)
        r2 = np.sum(xi ** 2, axis=-1)
        with np.errstate(divide="ignore", invalid="ignore"):
            if k == 1:
                j = xi_order.index(1)
                return 1j * g * xi[..., j] / r2 * a
            if k == 2:
                idx = [i for i, n in enumerate(xi_order) for _ in range(n)]
                j, l = idx
                delta = 1.0 if j == l else 0.0
                return 1j * g * a * (delta * r2 + (1j * g - 2.0) * xi[..., j] * xi[..., l]) / r2 ** 2
        return None
    return SymbolDescriptor(value, dim, True, derivs, 2, name="unimodular-power",
                            params={"gamma": g})


def _sg_power(dim, m=0.0, mu=0.0, **_):
    m, mu = float(m), float(mu)

    def value(x, xi):
        return japanese(x) ** m * japanese(xi) ** mu
    return SymbolDescriptor(value, dim, m == 0.0, None, 0, name="sg-power",
                            params={"m": m, "mu": mu}, sg_orders=(m, mu))


def _sin_bessel(dim, **_):
    def value(x, xi):
        return np.sin(x[..., 0]) / japanese(xi)
    return SymbolDescriptor(value, dim, False, None, 0, name="sin-bessel")


def _modulated_riesz(dim, c=0.5, **_):
    c = float(c)

    def value(x, xi):
        return (1.0 + c * np.sin(x[..., 0])) * xi[..., 0] / japanese(xi)

    def derivs(xi_order, x_order, x, xi):
        if dim != 1 or sum(xi_order) + sum(x_order) != 1:
            return None
        jx = japanese(xi)
        if sum(x_order) == 1:
            return c * np.cos(x[..., 0]) * xi[..., 0] / jx
        return (1.0 + c * np.sin(x[..., 0])) / jx ** 3
    return SymbolDescriptor(value, dim, False, derivs, 1, name="modulated-riesz",
                            params={"c": c})


def _windowed_x_xi(dim, w=3.0, **_):
    if dim != 1:
        raise ValueError("windowed-x-xi is one-dimensional")
    w = float(w)

    def value(x, xi):
        return x[..., 0] * xi[..., 0] * np.exp(-(x[..., 0] ** 2 + xi[..., 0] ** 2) / (2 * w * w))
    return SymbolDescriptor(value, 1, False, None, 0, name="windowed-x-xi", params={"w": w})


SYMBOL_CATALOG = {
    "identity": _identity,
    "sgn": _sgn,
    "hilbert": _hilbert,
    "riesz": _riesz,
    "unimodular-power": _unimodular,
    "sg-power": _sg_power,
    "sin-bessel": _sin_bessel,
    "modulated-riesz": _modulated_riesz,
    "windowed-x-xi": _windowed_x_xi,
}


def catalog_symbol(name: str, dim: int = 1, **params) -> SymbolDescriptor:
    try:
        factory = SYMBOL_CATALOG[name]
    except KeyError:
        raise ValueError(f"unknown symbol {name!r}; catalog: {sorted(SYMBOL_CATALOG)}") from None
    return factory(dim, **params)


def _flat(dim, **_):
    eye = np.eye(dim)
    return PhaseDescriptor(
        value=lambda x, xi: np.sum(x * xi, axis=-1),
        grad_x=lambda x, xi: np.broadcast_to(xi, np.broadcast_shapes(x.shape, xi.shape)),
        grad_xi=lambda x, xi: np.broadcast_to(x, np.broadcast_shapes(x.shape, xi.shape)),
        mixed_hessian=lambda x, xi: np.broadcast_to(
            eye, np.broadcast_shapes(x.shape[:-1], xi.shape[:-1]) + (dim, dim)),
        dim=dim, name="flat-phase")


def _translation(dim, c=1.0, **_):
    c = float(c)
    eye = np.eye(dim)

    def grad_xi(x, xi):
        r = _norm(xi)[..., None]
        return x + c * xi / r

    return PhaseDescriptor(
        value=lambda x, xi: np.sum(x * xi, axis=-1) + c * _norm(xi),
        grad_x=lambda x, xi: np.broadcast_to(xi, np.broadcast_shapes(x.shape, xi.shape)),
        grad_xi=grad_xi,
        mixed_hessian=lambda x, xi: np.broadcast_to(
            eye, np.broadcast_shapes(x.shape[:-1], xi.shape[:-1]) + (dim, dim)),
        dim=dim, name="translation-phase", params={"c": c})


def _perturbed(dim, eps=0.1, **_):
    e = float(eps)
    eye = np.eye(dim)

    def grad_x(x, xi):
        return xi + e * (x / japanese(x)[..., None]) * _norm(xi)[..., None]

    def grad_xi(x, xi):
        return x + e * japanese(x)[..., None] * xi / _norm(xi)[..., None]

    def mixed(x, xi):
        u = x / japanese(x)[..., None]
        v = xi / _norm(xi)[..., None]
        return eye + e * u[..., :, None] * v[..., None, :]

    return PhaseDescriptor(
        value=lambda x, xi: np.sum(x * xi, axis=-1) + e * japanese(x) * _norm(xi),
        grad_x=grad_x, grad_xi=grad_xi, mixed_hessian=mixed,
        dim=dim, name="perturbed-phase", params={"eps": e})


PHASE_CATALOG = {
    "flat-phase": _flat,
    "translation-phase": _translation,
    "perturbed-phase": _perturbed,
}


def catalog_phase(name: str, dim: int = 1, **params) -> PhaseDescriptor:
    try:
        factory = PHASE_CATALOG[name]
    except KeyError:
        raise ValueError(f"unknown phase {name!r}; catalog: {sorted(PHASE_CATALOG)}") from None
    return factory(dim, **params)

