"""Sampled functions on a uniform periodic grid over [-L, L)^d."""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

import numpy as np

__all__ = ["GridFunction", "save_grid_function", "load_grid_function"]


@dataclass(frozen=True, eq=False)
class GridFunction:
    """Samples ``values[j] = f(-L + j h)``, ``h = 2L/n``, along each axis.

    Outside ``[-L, L)^d`` the function is taken to be zero.
    """
    dim: int
    extent: float
    n: int
    values: np.ndarray

    def __post_init__(self):
        if self.dim not in (1, 2):
            raise ValueError("only d = 1 and d = 2 are supported")
        if self.n < 2 or self.n % 2:
            raise ValueError("n must be even and >= 2")
        if not self.extent > 0:
            raise ValueError("extent must be positive")
        v = np.asarray(self.values)
        if v.shape != (self.n,) * self.dim:
            v = v.reshape((self.n,) * self.dim)
        if not np.all(np.isfinite(v)):
            raise ValueError("grid values must be finite")
        v = v.astype(complex) if np.iscomplexobj(v) else v.astype(float)
        v.setflags(write=False)
        object.__setattr__(self, "values", v)

    @property
    def spacing(self) -> float:
        return 2.0 * self.extent / self.n

    @property
    def cell_volume(self) -> float:
        return self.spacing ** self.dim

    def axis(self) -> np.ndarray:
        return -self.extent + self.spacing * np.arange(self.n)

    def coords(self) -> np.ndarray:
        """Array of shape ``(n,)*d + (d,)`` with the sample points."""
        ax = self.axis()
        mesh = np.meshgrid(*([ax] * self.dim), indexing="ij")
        return np.stack(mesh, axis=-1)

    def frequency_axis(self) -> np.ndarray:
        """Discrete frequencies 2 pi k / (2L) in FFT order."""
        return 2.0 * np.pi * np.fft.fftfreq(self.n, d=self.spacing)

    def frequencies(self) -> np.ndarray:
        ax = self.frequency_axis()
        mesh = np.meshgrid(*([ax] * self.dim), indexing="ij")
        return np.stack(mesh, axis=-1)

    def abs(self) -> np.ndarray:
        return np.abs(self.values)

    def with_values(self, values) -> "GridFunction":
        return GridFunction(self.dim, self.extent, self.n, values)

    @classmethod
    def sample(cls, fn, dim: int, extent: float, n: int) -> "GridFunction":
        """Sample ``fn(x)`` where ``x`` has trailing axis of length d."""
        proto = cls(dim, extent, n, np.zeros((n,) * dim))
        return cls(dim, extent, n, fn(proto.coords()))

    def __add__(self, other):
        return self.with_values(self.values + other.values)

    def __sub__(self, other):
        return self.with_values(self.values - other.values)

    def __mul__(self, c):
        return self.with_values(self.values * c)

    __rmul__ = __mul__


# File layout: one line of JSON header terminated by '\n', then the samples
# as little-endian float64 (re, im) pairs in row-major order.

def save_grid_function(f: GridFunction, path) -> None:
    header = json.dumps({"dim": f.dim, "extent": f.extent, "n": f.n}).encode()
    data = np.empty(f.values.size * 2, dtype="<f8")
    flat = np.asarray(f.values, dtype=complex).ravel(order="C")
    data[0::2], data[1::2] = flat.real, flat.imag
    with open(path, "wb") as fh:
        fh.write(header + b"\n")
        fh.write(data.tobytes())


def load_grid_function(path) -> GridFunction:
    raw = Path(path).read_bytes()
    cut = raw.index(b"\n")
    header = json.loads(raw[:cut])
    data = np.frombuffer(raw[cut + 1:], dtype="<f8")
    dim, n = int(header["dim"]), int(header["n"])
    if data.size != 2 * n ** dim:
        raise ValueError(f"payload has {data.size} floats, expected {2 * n ** dim}")
    values = (data[0::2] + 1j * data[1::2]).reshape((n,) * dim)
    if not np.any(values.imag):
        values = values.real.copy()
    return GridFunction(dim, float(header["extent"]), n, values)

