"""
Young functions and their Lebesgue exponents.

A Young function is stored as an ordered list of analytic pieces on
``[0, inf)``.  Every built-in piece carries an exact derivative, so the
right and left derivatives at a breakpoint are read from the neighbouring
pieces rather than estimated.  Two integral constructions (a mollified
equivalent and an exponentially smoothed, strictly convex equivalent) are
represented by quadrature-backed pieces.

The upper and lower exponents are

    p_phi = sup_{t>0} t phi'_+(t) / phi(t),
    q_phi = inf_{t>0} t phi'_+(t) / phi(t),

computed on a log grid and completed by the exact limits of the ratio at
``t -> 0+`` and ``t -> inf`` whenever the pieces know them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any, Sequence

import numpy as np
from numpy.polynomial.legendre import leggauss

from .errors import (
    DegenerateFunctionError,
    DomainError,
    FinitenessError,
    PreconditionError,
    SqueezingViolationError,
)

__all__ = [
    "Power", "Affine", "LogForm", "ExpForm", "SumForm",
    "SmoothingForm", "ExpConvolutionForm",
    "YoungFunction", "GridConfig", "ExponentReport",
    "Delta2Result", "LambdaResult", "SqueezingConstants", "EquivalenceResult",
    "BUILTIN_NAMES", "make_builtin", "evaluate", "one_sided_derivative",
    "compute_exponents", "check_delta2", "check_lambda", "check_squeezing",
    "check_equivalence", "smooth_equivalent", "strictly_convex_equivalent",
    "exponential_smoothing", "second_differences", "bump_moment",
]

# Elasticities above this are reported as a divergent upper exponent.
P_DIVERGENCE = 1.0e3
EXPONENT_TOL = 1.0e-3
TREND_TOL = 0.01


# ---------------------------------------------------------------------------
# analytic pieces
# ---------------------------------------------------------------------------

class Form:
    """One analytic expression in t.  Subclasses are immutable."""

    def value(self, t: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def deriv(self, t: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def elasticity(self, t: np.ndarray) -> np.ndarray:
        with np.errstate(divide="ignore", invalid="ignore"):
            return t * self.deriv(t) / self.value(t)

    def tail(self) -> tuple[float | None, float | None]:
        """Limits of ``t f'(t) / f(t)`` as t -> 0+ and t -> inf (None if unknown)."""
        return None, None

    def to_dict(self) -> dict:
        raise NotImplementedError


@dataclass(frozen=True)
class Power(Form):
    """c * t**p"""
    p: float
    c: float = 1.0

    def value(self, t):
        return self.c * np.power(t, self.p)

    def deriv(self, t):
        if self.p == 1.0:
            return np.full_like(t, self.c, dtype=float)
        return self.c * self.p * np.power(t, self.p - 1.0)

    def elasticity(self, t):
        return np.full_like(t, self.p, dtype=float)

    def tail(self):
        return self.p, self.p

    def to_dict(self):
        return {"type": "power", "p": self.p, "c": self.c}


@dataclass(frozen=True)
class Affine(Form):
    """a * t - b"""
    a: float
    b: float = 0.0

    def value(self, t):
        return self.a * t - self.b

    def deriv(self, t):
        return np.full_like(t, self.a, dtype=float)

    def elasticity(self, t):
        with np.errstate(divide="ignore", invalid="ignore"):
            return self.a * t / (self.a * t - self.b)

    def tail(self):
        return (1.0 if self.b == 0.0 else None), (1.0 if self.a > 0 else 0.0)

    def to_dict(self):
        return {"type": "affine", "a": self.a, "b": self.b}


@dataclass(frozen=True)
class LogForm(Form):
    """c * t * ln(1 + t)"""
    c: float = 1.0

    def value(self, t):
        return self.c * t * np.log1p(t)

    def deriv(self, t):
        return self.c * (np.log1p(t) + t / (1.0 + t))

    def elasticity(self, t):
        t = np.asarray(t, dtype=float)
        with np.errstate(divide="ignore", invalid="ignore"):
            e = 1.0 + t / ((1.0 + t) * np.log1p(t))
        return np.where(t == 0.0, 2.0, e)

    def tail(self):
        return 2.0, 1.0

    def to_dict(self):
        return {"type": "log", "c": self.c}


@dataclass(frozen=True)
class ExpForm(Form):
    """c * (exp(t) - 1)"""
    c: float = 1.0

    def value(self, t):
        with np.errstate(over="ignore"):
            return self.c * np.expm1(t)

    def deriv(self, t):
        with np.errstate(over="ignore"):
            return self.c * np.exp(t)

    def elasticity(self, t):
        t = np.asarray(t, dtype=float)
        with np.errstate(divide="ignore", invalid="ignore"):
            e = t / -np.expm1(-t)
        return np.where(t == 0.0, 1.0, e)

    def tail(self):
        return 1.0, math.inf

    def to_dict(self):
        return {"type": "exp", "c": self.c}


@dataclass(frozen=True)
class SumForm(Form):
    terms: tuple[Form, ...]

    def value(self, t):
        return sum(f.value(t) for f in self.terms)

    def deriv(self, t):
        return sum(f.deriv(t) for f in self.terms)

    def tail(self):
        tails = [f.tail() for f in self.terms]
        zero = [a for a, _ in tails]
        inf = [b for _, b in tails]
        # the lowest order dominates near 0, the highest at infinity
        at0 = None if any(a is None for a in zero) else min(zero)
        atinf = None if any(b is None for b in inf) else max(inf)
        return at0, atinf

    def to_dict(self):
        return {"type": "sum", "terms": [f.to_dict() for f in self.terms]}


def _bump(s: np.ndarray) -> np.ndarray:
    u = 2.0 * s - 1.0
    out = np.zeros_like(s)
    inside = np.abs(u) < 1.0
    out[inside] = np.exp(-1.0 / (1.0 - u[inside] ** 2))
    return out


def _mollifier_rule(nodes: int) -> tuple[np.ndarray, np.ndarray]:
    """Gauss-Legendre nodes on [0, 1] with weights folded with the bump.

    The weights are normalized so that the discrete integral of the bump is
    exactly one.
    """
    x, w = leggauss(nodes)
    s = 0.5 * (x + 1.0)
    wt = 0.5 * w * _bump(s)
    return s, wt / wt.sum()


def bump_moment(nodes: int = 64) -> float:
    """Discrete first moment of the normalized bump on [0, 1] (= 1/2)."""
    s, w = _mollifier_rule(nodes)
    return float(np.dot(s, w))


_CHUNK = 16384


@dataclass(frozen=True, eq=False)
class SmoothingForm(Form):
    """psi(t) = int_0^1 phi(t - s t / 2) bump(s) ds, by Gauss-Legendre."""
    base: "YoungFunction"
    nodes: int = 64
    _rule: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "_rule", _mollifier_rule(self.nodes))

    def _integrate(self, t, fn, with_factor):
        s, w = self._rule
        scale = 1.0 - 0.5 * s
        t = np.asarray(t, dtype=float)
        flat = t.ravel()
        out = np.empty_like(flat)
        for i in range(0, flat.size, _CHUNK):
            tt = flat[i:i + _CHUNK, None] * scale[None, :]
            vals = fn(tt)
            if with_factor:
                vals = vals * scale[None, :]
            out[i:i + _CHUNK] = vals @ w
        return out.reshape(t.shape)

    def value(self, t):
        return self._integrate(t, self.base.eval, False)

    def deriv(self, t):
        # differentiate under the integral; phi'_+ is monotone so this is exact
        # up to quadrature
        return self._integrate(t, lambda u: self.base.derivative(u, "right"), True)

    def tail(self):
        return self.base.tail_elasticities()

    def to_dict(self):
        return {"type": "smoothing", "nodes": self.nodes, "base": self.base.to_dict()}


@dataclass(frozen=True, eq=False)
class ExpConvolutionForm(Form):
    """psi(t) = int_0^t phi(t - s) exp(-s) ds.

    The integral is split at the breakpoints of ``phi`` so that every
    Gauss-Legendre panel sees a smooth integrand, and truncated at
    ``s = horizon`` where the exponential weight is below 1e-26.
    """
    base: "YoungFunction"
    nodes: int = 64
    horizon: float = 60.0

    def value(self, t):
        t = np.asarray(t, dtype=float)
        flat = t.ravel()
        x, w = leggauss(self.nodes)
        edges = [0.0, *self.base.breakpoints, math.inf]
        out = np.zeros_like(flat)
        for i in range(0, flat.size, _CHUNK):
            tt = flat[i:i + _CHUNK]
            lo = np.maximum(0.0, tt - self.horizon)
            acc = np.zeros_like(tt)
            for e0, e1 in zip(edges[:-1], edges[1:]):
                a = np.maximum(lo, e0)
                b = np.minimum(tt, e1)
                live = b > a
                if not live.any():
                    continue
                a, b, tl = a[live], b[live], tt[live]
                half = 0.5 * (b - a)
                u = a[:, None] + half[:, None] * (x[None, :] + 1.0)
                integrand = self.base.eval(u) * np.exp(u - tl[:, None])
                acc[live] += half * (integrand @ w)
            out[i:i + _CHUNK] = acc
        return out.reshape(t.shape)

    def deriv(self, t):
        # psi' = phi - psi
        return self.base.eval(t) - self.value(t)

    def tail(self):
        at0, atinf = self.base.tail_elasticities()
        return (None if at0 is None else at0 + 1.0), atinf

    def to_dict(self):
        return {"type": "exp_convolution", "nodes": self.nodes,
                "horizon": self.horizon, "base": self.base.to_dict()}


def _form_from_dict(d: dict) -> Form:
    kind = d["type"]
    if kind == "power":
        return Power(float(d["p"]), float(d.get("c", 1.0)))
    if kind == "affine":
        return Affine(float(d["a"]), float(d.get("b", 0.0)))
    if kind == "log":
        return LogForm(float(d.get("c", 1.0)))
    if kind == "exp":
        return ExpForm(float(d.get("c", 1.0)))
    if kind == "sum":
        return SumForm(tuple(_form_from_dict(x) for x in d["terms"]))
    if kind == "smoothing":
        return SmoothingForm(YoungFunction.from_dict(d["base"]), int(d["nodes"]))
    if kind == "exp_convolution":
        return ExpConvolutionForm(YoungFunction.from_dict(d["base"]), int(d["nodes"]),
                                  float(d.get("horizon", 60.0)))
    raise ValueError(f"unknown form type {kind!r}")


# ---------------------------------------------------------------------------
# Young function
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class YoungFunction:
    """Piecewise analytic convex function on [0, inf).

    Parameters
    ----------
    pieces : sequence of (start, Form)
        Piece ``k`` is active on ``[start_k, start_{k+1})``.  The first start
        must be 0.
    kind, params : descriptor used for serialization.
    finite_until : float
        The function is +inf for ``t > finite_until``.
    """
    pieces: tuple[tuple[float, Form], ...]
    kind: str = "custom"
    params: tuple[float, ...] = ()
    finite_until: float = math.inf
    base: "YoungFunction | None" = None

    def __post_init__(self):
        pieces = tuple((float(s), f) for s, f in self.pieces)
        if not pieces or pieces[0][0] != 0.0:
            raise ValueError("first piece must start at 0")
        starts = [s for s, _ in pieces]
        if any(b <= a for a, b in zip(starts, starts[1:])):
            raise ValueError("piece starts must be strictly increasing")
        object.__setattr__(self, "pieces", pieces)
        object.__setattr__(self, "params", tuple(self.params))
        object.__setattr__(self, "_starts", np.array(starts))

    # -- structure ---------------------------------------------------------
    @property
    def breakpoints(self) -> tuple[float, ...]:
        return tuple(s for s, _ in self.pieces[1:])

    @property
    def is_finite(self) -> bool:
        return math.isinf(self.finite_until)

    def require_finite(self) -> None:
        if not self.is_finite:
            raise FinitenessError(
                f"Young function {self.kind!r} is infinite beyond t={self.finite_until}")

    def tail_elasticities(self) -> tuple[float | None, float | None]:
        at0 = self.pieces[0][1].tail()[0]
        atinf = self.pieces[-1][1].tail()[1] if self.is_finite else None
        return at0, atinf

    # -- evaluation --------------------------------------------------------
    def _index(self, t: np.ndarray, side: str) -> np.ndarray:
        idx = np.searchsorted(self._starts, t, side="right" if side == "right" else "left") - 1
        return np.clip(idx, 0, len(self.pieces) - 1)

    def _apply(self, t, side, method):
        scalar = np.ndim(t) == 0
        t = np.asarray(t, dtype=float)
        if np.any(t < 0) or np.any(np.isnan(t)):
            raise DomainError("Young functions are defined on [0, inf)")
        idx = self._index(t, side)
        out = np.empty(t.shape, dtype=float)
        for k, (_, form) in enumerate(self.pieces):
            m = idx == k
            if m.any():
                out[m] = getattr(form, method)(t[m])
        return out, t, scalar

    def eval(self, t):
        """phi(t); +inf beyond ``finite_until``."""
        out, t, scalar = self._apply(t, "right", "value")
        if not self.is_finite:
            out = np.where(t > self.finite_until, np.inf, out)
        return float(out) if scalar else out

    __call__ = eval

    def derivative(self, t, side: str = "right"):
        """Exact one-sided derivative: at a breakpoint the right side reads the
        next piece and the left side the previous one."""
        if side not in ("left", "right"):
            raise ValueError("side must be 'left' or 'right'")
        if not self.is_finite and np.any(np.asarray(t) > self.finite_until):
            raise DomainError("derivative requested where phi is infinite")
        out, _, scalar = self._apply(t, side, "deriv")
        return float(out) if scalar else out

    def elasticity(self, t):
        """t phi'_+(t) / phi(t)."""
        out, _, scalar = self._apply(t, "right", "elasticity")
        return float(out) if scalar else out

    # -- serialization -----------------------------------------------------
    def to_dict(self) -> dict:
        d: dict[str, Any] = {
            "kind": self.kind,
            "params": list(self.params),
            "pieces": [{"start": s, "form": f.to_dict()} for s, f in self.pieces],
        }
        if not self.is_finite:
            d["finite_until"] = self.finite_until
        if self.base is not None:
            d["base"] = self.base.to_dict()
        return d

    @classmethod
    def from_dict(cls, d: dict) -> "YoungFunction":
        kind = d.get("kind", "custom")
        params = [float(x) for x in d.get("params", [])]
        if kind in BUILTIN_NAMES:
            return make_builtin(kind, params)
        if kind == "smooth_equivalent":
            return smooth_equivalent(cls.from_dict(d["base"]), int(params[0]) if params else 64)
        if kind == "strictly_convex_equivalent":
            return strictly_convex_equivalent(cls.from_dict(d["base"]),
                                              int(params[0]) if params else 64)
        if kind == "exponential_smoothing":
            return exponential_smoothing(cls.from_dict(d["base"]),
                                         int(params[0]) if params else 64)
        pieces = tuple((float(p["start"]), _form_from_dict(p["form"])) for p in d["pieces"])
        return cls(pieces, kind=kind, params=tuple(params),
                   finite_until=float(d.get("finite_until", math.inf)))

    def __repr__(self):
        return f"YoungFunction(kind={self.kind!r}, params={list(self.params)})"


BUILTIN_NAMES = ("power", "entropy", "counterexample", "exp_minus_one", "affine")


def make_builtin(name: str, params: Sequence[float] = ()) -> YoungFunction:
    """Built-in Young functions.

    ``power [p, c=1]``       c t^p, p >= 1
    ``entropy``               t ln(1 + t)
    ``counterexample``        2t^2 on [0,1], 4t-2 on [1,2], t^2+2 on [2,inf)
    ``exp_minus_one [c=1]``   c (e^t - 1)
    ``affine [a, b=0]``       a t  (b must be 0 for a Young function)
    """
    params = [float(x) for x in params]
    if name == "power":
        if not params:
            raise ValueError("power needs an exponent")
        p = params[0]
        c = params[1] if len(params) > 1 else 1.0
        if p < 1.0:
            raise PreconditionError(f"t^{p} is not convex for p < 1")
        if c <= 0:
            raise PreconditionError("power coefficient must be positive")
        return YoungFunction(((0.0, Power(p, c)),), kind="power", params=tuple(params))
    if name == "entropy":
        return YoungFunction(((0.0, LogForm()),), kind="entropy")
    if name == "counterexample":
        pieces = ((0.0, Power(2.0, 2.0)), (1.0, Affine(4.0, 2.0)),
                  (2.0, SumForm((Power(2.0), Affine(0.0, -2.0)))))
        return YoungFunction(pieces, kind="counterexample")
    if name == "exp_minus_one":
        c = params[0] if params else 1.0
        return YoungFunction(((0.0, ExpForm(c)),), kind="exp_minus_one", params=tuple(params))
    if name == "affine":
        a = params[0] if params else 1.0
        b = params[1] if len(params) > 1 else 0.0
        if a <= 0 or b != 0.0:
            raise PreconditionError("affine Young function needs a > 0 and b = 0")
        return YoungFunction(((0.0, Affine(a, b)),), kind="affine", params=tuple(params))
    raise ValueError(f"unknown built-in {name!r}; choose from {BUILTIN_NAMES}")


def evaluate(phi: YoungFunction, t):
    return phi.eval(t)


def one_sided_derivative(phi: YoungFunction, t, side: str = "right"):
    if np.any(np.asarray(t) <= 0):
        raise DomainError("one-sided derivatives are taken at t > 0")
    return phi.derivative(t, side)


# ---------------------------------------------------------------------------
# grids and reports
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class GridConfig:
    t_min: float = 1e-6
    t_max: float = 1e6
    n_points: int = 100_000
    spacing: str = "log"

    def __post_init__(self):
        if not (0 < self.t_min < self.t_max):
            raise ValueError("need 0 < t_min < t_max")
        if self.n_points < 2:
            raise ValueError("need at least two grid points")
        if self.spacing not in ("log", "linear"):
            raise ValueError("spacing is 'log' or 'linear'")

    def points(self) -> np.ndarray:
        if self.spacing == "log":
            return np.geomspace(self.t_min, self.t_max, self.n_points)
        return np.linspace(self.t_min, self.t_max, self.n_points)

    def coarse(self, n: int) -> "GridConfig":
        return GridConfig(self.t_min, self.t_max, min(n, self.n_points), self.spacing)


@dataclass(frozen=True)
class Delta2Result:
    satisfied: bool
    C: float
    top_slope: float


@dataclass(frozen=True)
class LambdaResult:
    satisfied: bool
    worst_ratio: float
    p: float


@dataclass(frozen=True)
class SqueezingConstants:
    c_low_small: float
    c_up_small: float
    c_low_large: float
    c_up_large: float


@dataclass(frozen=True)
class EquivalenceResult:
    equivalent: bool
    C: float
    end_slopes: tuple[float, float]


@dataclass(frozen=True)
class ExponentReport:
    p_phi: float
    q_phi: float
    arg_sup: float
    arg_inf: float
    delta2: Delta2Result
    lam: LambdaResult
    grid_range: tuple[float, float, int]

    @property
    def strict(self) -> bool:
        return self.delta2.satisfied and self.lam.satisfied

    def to_dict(self) -> dict:
        return {
            "p_phi": self.p_phi,
            "q_phi": self.q_phi,
            "arg_sup": self.arg_sup,
            "arg_inf": self.arg_inf,
            "delta2": {"satisfied": self.delta2.satisfied, "C": self.delta2.C},
            "lambda": {"satisfied": self.lam.satisfied, "p": self.lam.p,
                       "worst_ratio": self.lam.worst_ratio},
            "grid_range": list(self.grid_range),
        }


def _scan_points(phi: YoungFunction, cfg: GridConfig) -> np.ndarray:
    t = cfg.points()
    bps = [b for b in phi.breakpoints if cfg.t_min <= b <= cfg.t_max]
    if bps:
        t = np.union1d(t, bps)
    return t


def _slope(t: np.ndarray, y: np.ndarray) -> float:
    """Least-squares slope of log y against log t (nan-free entries only)."""
    ok = np.isfinite(y) & (y > 0)
    if ok.sum() < 2:
        return math.inf
    lt, ly = np.log(t[ok]), np.log(y[ok])
    return float(np.polyfit(lt, ly, 1)[0])


def _top_decade(t: np.ndarray) -> np.ndarray:
    return t >= t[-1] / 10.0


def _bottom_decade(t: np.ndarray) -> np.ndarray:
    return t <= t[0] * 10.0


def _positive_values(phi: YoungFunction, t: np.ndarray) -> np.ndarray:
    v = phi.eval(t)
    if np.any(v <= 0):
        bad = t[v <= 0][0]
        raise DegenerateFunctionError(f"phi vanishes at t={bad:g} > 0")
    return v


# ---------------------------------------------------------------------------
# structural checks
# ---------------------------------------------------------------------------

def check_delta2(phi: YoungFunction, cfg: GridConfig | None = None) -> Delta2Result:
    """Scan phi(2t)/phi(t); satisfied iff bounded with no growth on the top decade."""
    cfg = cfg or GridConfig()
    phi.require_finite()
    t = _scan_points(phi, cfg)
    v = _positive_values(phi, t)
    live = np.isfinite(v)
    t, v = t[live], v[live]
    with np.errstate(over="ignore", invalid="ignore"):
        ratio = phi.eval(2.0 * t) / v
    ratio = np.where(np.isnan(ratio), np.inf, ratio)
    C = float(ratio.max())
    top = _top_decade(t)
    slope = _slope(t[top], ratio[top]) if np.all(np.isfinite(ratio[top])) else math.inf
    return Delta2Result(bool(math.isfinite(C) and slope < TREND_TOL), C, slope)


def check_lambda(phi: YoungFunction, cfg: GridConfig | None = None, p: float = 1.5,
                 n_c: int = 121, max_t: int = 2000, tol: float = 1e-9) -> LambdaResult:
    """Worst ratio phi(ct) / (c^p phi(t)) over a (c, t) grid, c in (0, 1].

    Where the exact tail elasticity of phi is below p the supremum is
    infinite, whatever the finite grid shows.
    """
    if not p > 1.0:
        raise PreconditionError("the Lambda condition needs p > 1")
    cfg = (cfg or GridConfig()).coarse(max_t)
    phi.require_finite()
    t = _scan_points(phi, cfg)
    v = _positive_values(phi, t)
    live = np.isfinite(v)
    t, v = t[live], v[live]
    c = np.geomspace(1e-6, 1.0, n_c)
    num = phi.eval((c[:, None] * t[None, :]).ravel()).reshape(c.size, t.size)
    with np.errstate(over="ignore", invalid="ignore"):
        ratio = num / (c[:, None] ** p * v[None, :])
    worst = float(np.nanmax(ratio))
    at0, atinf = phi.tail_elasticities()
    for e in (at0, atinf):
        if e is not None and e < p - tol:
            worst = math.inf
    return LambdaResult(bool(worst <= 1.0 + tol), worst, float(p))


def compute_exponents(phi: YoungFunction, cfg: GridConfig | None = None) -> ExponentReport:
    """Upper and lower exponents with the Delta_2 and Lambda verdicts."""
    cfg = cfg or GridConfig()
    if cfg.t_min > 1e-6 * (1 + 1e-12) or cfg.t_max < 1e6 * (1 - 1e-12):
        raise PreconditionError("exponent grid must cover at least [1e-6, 1e6]")
    phi.require_finite()
    t = _scan_points(phi, cfg)
    _positive_values(phi, t)
    ratio = phi.elasticity(t)
    ratio = np.where(np.isnan(ratio), np.inf, ratio)
    i_sup, i_inf = int(np.argmax(ratio)), int(np.argmin(ratio))
    p, arg_sup = float(ratio[i_sup]), float(t[i_sup])
    q, arg_inf = float(ratio[i_inf]), float(t[i_inf])
    at0, atinf = phi.tail_elasticities()
    for e, where in ((at0, 0.0), (atinf, math.inf)):
        if e is None:
            continue
        if e > p:
            p, arg_sup = e, where
        if e < q:
            q, arg_inf = e, where
    if p > P_DIVERGENCE:
        p = math.inf
    d2 = check_delta2(phi, cfg)
    d2 = Delta2Result(d2.satisfied and math.isfinite(p), d2.C, d2.top_slope)
    if q > 1.0 + EXPONENT_TOL:
        lam = check_lambda(phi, cfg, q, tol=1e-6)
    else:
        lam = LambdaResult(False, math.inf, q)
    return ExponentReport(p, q, arg_sup, arg_inf, d2, lam,
                          (cfg.t_min, cfg.t_max, cfg.n_points))


def _extreme_with_trend(t, y, mode, outer):
    """min or max of y with a divergence test at the outer end of the range."""
    i = int(np.argmin(y) if mode == "min" else np.argmax(y))
    val = float(y[i])
    if not math.isfinite(val) or val <= 0:
        return val, True
    sel = _bottom_decade(t) if outer == "small" else _top_decade(t)
    at_edge = (i == 0) if outer == "small" else (i == len(t) - 1)
    if at_edge and sel.sum() >= 2:
        s = _slope(t[sel], y[sel])
        # moving outward means decreasing t on the small side
        outward = -s if outer == "small" else s
        if (mode == "max" and outward > TREND_TOL) or (mode == "min" and outward < -TREND_TOL):
            return val, True
    return val, False


def check_squeezing(phi: YoungFunction, report: ExponentReport, r1: float, r2: float,
                    cfg: GridConfig | None = None) -> SqueezingConstants:
    """Best constants in

        c t^p <= phi(t) <= C t^q  on (0, r1],
        c t^q <= phi(t) <= C t^p  on [r2, inf),

    with p, q the exponents of ``report``, restricted to the sample grid.
    """
    p, q = report.p_phi, report.q_phi
    if not (math.isfinite(p) and math.isfinite(q)):
        raise SqueezingViolationError("squeezing needs finite exponents")
    if cfg is None:
        lo, hi, n = report.grid_range
        cfg = GridConfig(lo, hi, int(n))
    t = cfg.points()
    if not (t[0] <= r1 <= t[-1] and t[0] <= r2 <= t[-1]):
        raise PreconditionError("r1 and r2 must lie inside the grid range")
    t = np.union1d(t, [r1, r2])
    small, large = t[t <= r1], t[t >= r2]
    vs, vl = _positive_values(phi, small), _positive_values(phi, large)
    results = [
        _extreme_with_trend(small, vs / small ** p, "min", "small"),
        _extreme_with_trend(small, vs / small ** q, "max", "small"),
        _extreme_with_trend(large, vl / large ** q, "min", "large"),
        _extreme_with_trend(large, vl / large ** p, "max", "large"),
    ]
    if any(bad for _, bad in results):
        raise SqueezingViolationError(
            "squeezing constants are unbounded on the grid; exponents inconsistent with phi")
    return SqueezingConstants(*(v for v, _ in results))


def check_equivalence(phi1: YoungFunction, phi2: YoungFunction,
                      cfg: GridConfig | None = None) -> EquivalenceResult:
    """Smallest C with phi2/C <= phi1 <= C phi2 on the grid, plus an end-trend test."""
    cfg = cfg or GridConfig()
    phi1.require_finite()
    phi2.require_finite()
    t = np.union1d(_scan_points(phi1, cfg), _scan_points(phi2, cfg))
    v1, v2 = _positive_values(phi1, t), _positive_values(phi2, t)
    live = np.isfinite(v1) & np.isfinite(v2)
    t, r = t[live], v1[live] / v2[live]
    C = float(max(r.max(), (1.0 / r).max()))
    lo = _slope(t[_bottom_decade(t)], r[_bottom_decade(t)])
    hi = _slope(t[_top_decade(t)], r[_top_decade(t)])
    ok = math.isfinite(C) and abs(lo) < TREND_TOL and abs(hi) < TREND_TOL
    return EquivalenceResult(bool(ok), C, (lo, hi))


# ---------------------------------------------------------------------------
# constructions
# ---------------------------------------------------------------------------

def smooth_equivalent(phi: YoungFunction, mollifier_nodes: int = 64) -> YoungFunction:
    """Mollified equivalent psi(t) = int_0^1 phi(t(1 - s/2)) bump(s) ds.

    Requires Delta_2.  psi <= phi holds exactly on the discrete rule since the
    weights are positive and sum to one.  Note psi'_+(0) = (1 - m/2) phi'_+(0)
    with m the first bump moment, so the right derivatives at 0 agree only
    when phi'_+(0) = 0.
    """
    phi.require_finite()
    if not check_delta2(phi).satisfied:
        raise PreconditionError("smooth_equivalent needs the Delta_2 condition")
    form = SmoothingForm(phi, int(mollifier_nodes))
    return YoungFunction(((0.0, form),), kind="smooth_equivalent",
                         params=(int(mollifier_nodes),), base=phi)


def exponential_smoothing(phi: YoungFunction, quad_nodes: int = 64) -> YoungFunction:
    """psi(t) = int_0^t phi(t - s) e^{-s} ds as a Young function (no hypotheses)."""
    phi.require_finite()
    form = ExpConvolutionForm(phi, int(quad_nodes))
    return YoungFunction(((0.0, form),), kind="exponential_smoothing",
                         params=(int(quad_nodes),), base=phi)


def strictly_convex_equivalent(phi: YoungFunction, quad_nodes: int = 64) -> YoungFunction:
    """phi + psi with psi the exponential smoothing of phi; needs q_phi > 1."""
    phi.require_finite()
    q = compute_exponents(phi).q_phi
    if q <= 1.0 + EXPONENT_TOL:
        raise PreconditionError(f"strictly_convex_equivalent needs q_phi > 1 (got {q:.6g})")
    psi = ExpConvolutionForm(phi, int(quad_nodes))
    pieces = tuple((s, SumForm((f, psi))) for s, f in phi.pieces)
    return YoungFunction(pieces, kind="strictly_convex_equivalent",
                         params=(int(quad_nodes),), base=phi)


def second_differences(phi: YoungFunction, t_max: float = 10.0, n: int = 10_001) -> np.ndarray:
    """phi(t+h) - 2 phi(t) + phi(t-h) on a uniform grid of [0, t_max]."""
    t = np.linspace(0.0, t_max, n)
    v = phi.eval(t)
    return v[2:] - 2.0 * v[1:-1] + v[:-2]
