"""
Interpolation windows and order thresholds for Orlicz continuity of
Fourier integral operators.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Optional, Union

from .errors import NotStrictError
from .young import EXPONENT_TOL, ExponentReport

__all__ = [
    "ThresholdReport", "interpolation_window", "fio_threshold", "lp_fio_threshold",
    "check_fio_orders", "check_lp_fio_orders", "select_lp_exponents", "threshold_report",
]

DEFAULT_MARGIN = 0.1
ExponentsLike = Union[ExponentReport, tuple]


def _exponents(report: ExponentsLike) -> tuple[float, float]:
    """(p_phi, q_phi) from a report or a plain pair."""
    if isinstance(report, ExponentReport):
        return float(report.p_phi), float(report.q_phi)
    p, q = report
    return float(p), float(q)


def _require_strict(report: ExponentsLike) -> tuple[float, float]:
    p, q = _exponents(report)
    problems = []
    if not math.isfinite(p):
        problems.append(f"p_phi = {p} (no Delta2 condition)")
    if not q > 1.0 + EXPONENT_TOL:
        problems.append(f"q_phi = {q} is not above 1 (no Lambda condition for any p > 1)")
    if isinstance(report, ExponentReport):
        if not report.delta2.satisfied and math.isfinite(p):
            problems.append(f"Delta2 check failed (C = {report.delta2.C})")
        if not report.lam.satisfied and q > 1.0 + EXPONENT_TOL:
            problems.append(f"Lambda check failed at p = {report.lam.p}")
    if problems:
        raise NotStrictError("phi is not a strict Young function: " + "; ".join(problems))
    return p, q


def interpolation_window(report: ExponentsLike, margin: float = DEFAULT_MARGIN) -> tuple[float, float]:
    """Exponents p0 < q_phi <= p_phi < p1 with p0 > 1.

    p0 = max(1 + margin/2, q_phi - margin), moved to the midpoint of
    (1, q_phi) if that lands at or above q_phi; p1 = p_phi + margin.
    """
    if not margin > 0:
        raise ValueError("margin must be positive")
    p, q = _require_strict(report)
    p0 = max(1.0 + margin / 2.0, q - margin)
    if p0 >= q:
        p0 = 0.5 * (1.0 + q)
    return p0, p + margin


def lp_fio_threshold(d: int, p: float) -> float:
    """-(d - 1) |1/p - 1/2|."""
    return -(d - 1) * abs(1.0 / p - 0.5)


def fio_threshold(d: int, report: ExponentsLike) -> float:
    """-(d - 1) max(|1/p_phi - 1/2|, |1/q_phi - 1/2|)."""
    if d < 1:
        raise ValueError("dimension must be positive")
    p, q = _require_strict(report)
    return -(d - 1) * max(abs(1.0 / p - 0.5), abs(1.0 / q - 0.5))


def check_fio_orders(m: float, mu: float, d: int, report: ExponentsLike) -> bool:
    """m < T and mu < T (strict)."""
    t = fio_threshold(d, report)
    return bool(m < t and mu < t)


def check_lp_fio_orders(m: float, mu: float, d: int, p: float) -> bool:
    """m <= -(d-1)|1/p - 1/2| and the same for mu (non-strict)."""
    if not 1.0 < p < math.inf:
        raise ValueError("p must lie in (1, inf)")
    t = lp_fio_threshold(d, p)
    return bool(m <= t and mu <= t)


def select_lp_exponents(m: float, mu: float, d: int, report: ExponentsLike,
                        margin: float = DEFAULT_MARGIN, max_halvings: int = 60
                        ) -> Optional[tuple[float, float]]:
    """Find p0 < q_phi and p1 > p_phi where the L^p order conditions hold.

    Returns None when the Orlicz order condition fails.  Otherwise the gap
    to the exponents is halved until both L^p conditions hold; continuity of
    p -> |1/p - 1/2| guarantees termination.
    """
    if not check_fio_orders(m, mu, d, report):
        return None
    p, q = _require_strict(report)
    gap = margin
    for _ in range(max_halvings):
        p0 = max(q - gap, 0.5 * (1.0 + q))
        p1 = p + gap
        if check_lp_fio_orders(m, mu, d, p0) and check_lp_fio_orders(m, mu, d, p1):
            return p0, p1
        gap *= 0.5
    raise RuntimeError("no admissible exponents found; increase max_halvings")


@dataclass(frozen=True)
class ThresholdReport:
    d: int
    p_phi: float
    q_phi: float
    T_d_phi: Optional[float]
    window: Optional[tuple[float, float]]
    admissible: bool
    reason: str = ""

    def to_dict(self) -> dict:
        return {"d": self.d, "p_phi": self.p_phi, "q_phi": self.q_phi,
                "T_d_phi": self.T_d_phi,
                "window": list(self.window) if self.window else None,
                "admissible": self.admissible, "reason": self.reason}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), allow_nan=True)


def threshold_report(d: int, report: ExponentsLike, margin: float = DEFAULT_MARGIN) -> ThresholdReport:
    """Window and threshold, or an inadmissible report with the reason."""
    p, q = _exponents(report)
    try:
        window = interpolation_window(report, margin)
        t = fio_threshold(d, report)
    except NotStrictError as exc:
        return ThresholdReport(d, p, q, None, None, False, str(exc))
    return ThresholdReport(d, p, q, t, window, True)
