"""Dimension-vector calculus for the n-arrow two-vertex quiver.

Vertex 1 is the source, vertex 2 the sink, so a dimension vector is the
row (d1, d2) and the indecomposable projectives sit at (0, 1) and (1, n),
the indecomposable injectives at (1, 0) and (n, 1).

The Cartan matrix, the Coxeter transformation Phi = -C^{-T} C, and the
Euler form

    <x, y> = x1 y1 + x2 y2 - n x1 y2

act on row vectors by right multiplication.  The translate shifts
dimension vectors by Phi, its inverse by Phi^{-1}.
"""

from __future__ import annotations

import numpy as np

from .errors import PreconditionError


def cartan(n: int) -> np.ndarray:
    return np.array([[1, 0], [n, 1]], dtype=np.int64)


def coxeter(n: int) -> np.ndarray:
    return np.array([[n * n - 1, n], [-n, -1]], dtype=np.int64)


def coxeter_inv(n: int) -> np.ndarray:
    return np.array([[-1, -n], [n, n * n - 1]], dtype=np.int64)


def euler_form(x, y, n: int) -> int:
    x1, x2 = int(x[0]), int(x[1])
    y1, y2 = int(y[0]), int(y[1])
    return x1 * y1 + x2 * y2 - n * x1 * y2


def tau_dim(x, n: int) -> tuple[int, int]:
    v = np.asarray(x, dtype=np.int64) @ coxeter(n)
    return int(v[0]), int(v[1])


def tau_inv_dim(x, n: int) -> tuple[int, int]:
    v = np.asarray(x, dtype=np.int64) @ coxeter_inv(n)
    return int(v[0]), int(v[1])


def preprojective_dims(n: int, count: int) -> list[tuple[int, int]]:
    """Dimension vectors of the first `count` preprojective modules.

    Starts (0, 1), (1, n) and then satisfies the two-step recurrence
    a_{r+2} = n a_{r+1} - a_r, equivalently one inverse-translate step
    from two positions back.
    """
    if count < 0:
        raise ValueError("count must be nonnegative")
    dims: list[tuple[int, int]] = []
    a, b = (0, 1), (1, n)
    for r in range(count):
        dims.append(a)
        a, b = b, (n * b[0] - a[0], n * b[1] - a[1])
    return dims


def preinjective_dims(n: int, count: int) -> list[tuple[int, int]]:
    """Dimension vectors of the first `count` preinjective modules.

    Starts (1, 0), (n, 1) with the same recurrence; one translate step
    from two positions back.
    """
    if count < 0:
        raise ValueError("count must be nonnegative")
    dims: list[tuple[int, int]] = []
    a, b = (1, 0), (n, 1)
    for r in range(count):
        dims.append(a)
        a, b = b, (n * b[0] - a[0], n * b[1] - a[1])
    return dims


def classify_position(x, n: int) -> str:
    """Classify a positive dimension vector of an indecomposable module.

    Repeated translate steps send a preprojective vector out of the
    positive cone, repeated inverse steps do the same to a preinjective
    vector, and everything else is regular.  The step budget x1 + x2 + 2
    is enough: on the pre-families each double step strictly drops the
    total dimension until leaving the cone.
    """
    x1, x2 = int(x[0]), int(x[1])
    if x1 < 0 or x2 < 0 or (x1 == 0 and x2 == 0):
        raise PreconditionError(f"dimension vector must be nonzero nonnegative, got {(x1, x2)}")
    budget = x1 + x2 + 2

    v = (x1, x2)
    for _ in range(budget):
        v = tau_dim(v, n)
        if v[0] <= 0 or v[1] <= 0:
            return "preprojective"
    v = (x1, x2)
    for _ in range(budget):
        v = tau_inv_dim(v, n)
        if v[0] <= 0 or v[1] <= 0:
            return "preinjective"
    return "regular"
