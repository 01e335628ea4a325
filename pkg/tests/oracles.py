"""Independent reference computations used by several test modules."""

import math

import numpy as np
from scipy.integrate import quad


def periodic_gaussian(x, sigma: float, period: float, images: int = 3):
    """Gaussian summed over its nearest periodic images."""
    x = np.asarray(x, dtype=float)
    return sum(np.exp(-(x + k * period) ** 2 / (2 * sigma ** 2)) for k in range(-images, images + 1))


def periodic_hilbert_pv(fn, x: float, extent: float) -> float:
    """Conjugate function on the circle of length 2L:

        (1/2L) p.v. int_{-L}^{L} f(x - s) cot(pi s / 2L) ds
      = (1/2L) int_0^L [f(x - s) - f(x + s)] cot(pi s / 2L) ds,

    the symmetric form having an integrable integrand.
    """
    L = extent

    def integrand(s):
        if s == 0.0:
            return 0.0
        return (fn(x - s) - fn(x + s)) / math.tan(math.pi * s / (2 * L))

    val, _ = quad(integrand, 0.0, L, limit=400, epsabs=1e-14, epsrel=1e-13,
                  points=[abs(x)] if 0 < abs(x) < L else None)
    return val / (2 * L)


def direct_dft(values: np.ndarray, x: np.ndarray, xi: np.ndarray, h: float) -> np.ndarray:
    """f^(xi) = sum_j f(x_j) e^{-i x_j xi} h as an explicit matrix product."""
    return np.exp(-1j * np.outer(xi, x)) @ values * h
