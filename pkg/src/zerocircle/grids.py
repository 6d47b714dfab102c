"""Sample grids on discs, used for empirical sup-norm estimates."""
from __future__ import annotations

import numpy as np

__all__ = ["polar_grid", "square_grid", "sup_error"]


def polar_grid(radius: float, n_radii: int = 32, n_angles: int = 32, center: complex = 0.0) -> np.ndarray:
    """Points ``center + radius*(k/n_radii)*exp(2 pi i l/n_angles)``, ``k = 1..n_radii``, plus the center."""
    rho = radius * np.arange(1, n_radii + 1) / n_radii
    theta = 2 * np.pi * np.arange(n_angles) / n_angles
    pts = (rho[:, None] * np.exp(1j * theta)[None, :]).ravel()
    return center + np.concatenate([[0.0], pts])


def square_grid(radius: float, n: int = 41, center: complex = 0.0) -> np.ndarray:
    """The ``n x n`` Cartesian grid on the bounding square, restricted to the closed disc."""
    x = np.linspace(-radius, radius, n)
    z = (x[None, :] + 1j * x[:, None]).ravel()
    z = z[np.abs(z) <= radius * (1 + 1e-12)]
    return center + z


def sup_error(f, g, points) -> float:
    """``max |f - g|`` over ``points``; ``f`` and ``g`` are vectorised callables."""
    return float(np.max(np.abs(np.asarray(f(points)) - np.asarray(g(points)))))
