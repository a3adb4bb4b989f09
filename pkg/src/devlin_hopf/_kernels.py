"""Floating-point RK4 kernel for the Abel equation, with and without numba.

Set ``DEVLIN_HOPF_DISABLE_JIT=1`` to force the pure-numpy path.  The numba
path is used only when numba imports cleanly.
"""

from __future__ import annotations

import os

import numpy as np

STATUS_OK = 0
STATUS_BLOWUP = 1


def _build(decorate):
    @decorate
    def poly_at(coeffs, t):
        # Horner; coeffs[k] multiplies t**k
        acc = 0.0
        for k in range(coeffs.shape[0] - 1, -1, -1):
            acc = acc * t + coeffs[k]
        return acc

    @decorate
    def rhs(alpha, beta, t, z):
        return poly_at(alpha, t) * z * z * z + poly_at(beta, t) * z * z

    @decorate
    def rk4(alpha, beta, z0, t_end, step, bound):
        n_full = int(np.floor(t_end / step))
        z = z0
        for k in range(n_full + 1):
            h = step if k < n_full else t_end - n_full * step
            if h <= 0.0:
                break
            t = k * step
            k1 = rhs(alpha, beta, t, z)
            k2 = rhs(alpha, beta, t + 0.5 * h, z + 0.5 * h * k1)
            k3 = rhs(alpha, beta, t + 0.5 * h, z + 0.5 * h * k2)
            k4 = rhs(alpha, beta, t + h, z + h * k3)
            z = z + h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
            if not np.isfinite(z) or abs(z) > bound:
                return z, t + h, STATUS_BLOWUP
        return z, t_end, STATUS_OK

    return rk4


def jit_disabled() -> bool:
    return os.environ.get("DEVLIN_HOPF_DISABLE_JIT", "").strip().lower() in {"1", "true", "yes", "on"}


rk4_abel_py = _build(lambda f: f)

try:
    from numba import njit

    rk4_abel_jit = _build(njit)
    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is optional
    rk4_abel_jit = None
    HAVE_NUMBA = False


def rk4_abel(alpha, beta, z0: float, t_end: float, step: float, bound: float, use_jit: bool | None = None):
    """Integrate dz/dt = alpha(t) z^3 + beta(t) z^2; returns (z, t_reached, status)."""
    if use_jit is None:
        use_jit = HAVE_NUMBA and not jit_disabled()
    if use_jit and not HAVE_NUMBA:
        raise RuntimeError("numba is not available")
    alpha = np.ascontiguousarray(alpha, dtype=np.float64)
    beta = np.ascontiguousarray(beta, dtype=np.float64)
    fn = rk4_abel_jit if use_jit else rk4_abel_py
    z, t, status = fn(alpha, beta, float(z0), float(t_end), float(step), float(bound))
    return float(z), float(t), int(status)
