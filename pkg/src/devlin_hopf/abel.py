"""Iterated integrals, truncated Fliess operators and the Abel equation.

Inputs are polynomials in t with rational coefficients, so every iterated
integral is again an exact polynomial.  :func:`abel_numeric` is the floating
point counterpart used to check the series against the ODE
dz/dt = alpha(t) z^3 + beta(t) z^2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from ._kernels import STATUS_BLOWUP, rk4_abel
from .devlin import devlin_recursive
from .series import Series, _frac, format_rational
from .words import Word, degree

DEFAULT_BLOWUP_BOUND = 1e6


class BlowUpError(ArithmeticError):
    """The numerical solution escaped the configured bound (finite-time blow-up)."""

    def __init__(self, t: float, z: float, bound: float):
        super().__init__(f"|z| exceeded {bound:g} at t={t:.17g} (z={z:.17g})")
        self.t = t
        self.z = z
        self.bound = bound


@dataclass(frozen=True)
class PolyFunction:
    """c_0 + c_1 t + c_2 t^2 + ... with exact rational coefficients."""

    coefficients: tuple[Fraction, ...] = ()

    def __post_init__(self):
        cs = [_frac(c) for c in self.coefficients]
        while cs and cs[-1] == 0:
            cs.pop()
        object.__setattr__(self, "coefficients", tuple(cs))

    @classmethod
    def constant(cls, c) -> "PolyFunction":
        return cls((c,))

    @property
    def degree(self) -> int:
        # the zero polynomial gets degree -1
        return len(self.coefficients) - 1

    def __call__(self, t):
        acc = Fraction(0) if isinstance(t, (int, Fraction)) else 0.0
        for c in reversed(self.coefficients):
            acc = acc * t + (c if isinstance(acc, Fraction) else float(c))
        return acc

    def __add__(self, other: "PolyFunction") -> "PolyFunction":
        a, b = self.coefficients, other.coefficients
        n = max(len(a), len(b))
        return PolyFunction(tuple((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)))

    def __mul__(self, other) -> "PolyFunction":
        if not isinstance(other, PolyFunction):
            k = _frac(other)
            return PolyFunction(tuple(k * c for c in self.coefficients))
        a, b = self.coefficients, other.coefficients
        if not a or not b:
            return PolyFunction()
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return PolyFunction(tuple(out))

    __rmul__ = __mul__

    def integral(self) -> "PolyFunction":
        """Antiderivative vanishing at t = 0."""
        return PolyFunction((Fraction(0),) + tuple(c / (k + 1) for k, c in enumerate(self.coefficients)))

    def as_floats(self) -> list[float]:
        return [float(c) for c in self.coefficients] or [0.0]

    def __str__(self) -> str:
        if not self.coefficients:
            return "0"
        parts = []
        for k, c in enumerate(self.coefficients):
            if not c:
                continue
            mag = abs(c)
            if k == 0:
                body = format_rational(mag)
            else:
                mono = "t" if k == 1 else f"t^{k}"
                body = mono if mag == 1 else f"{format_rational(mag)}*{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign if c < 0 else "") + body if not parts else f"{sign} {body}")
        return " ".join(parts)


@dataclass(frozen=True)
class InputPair:
    """u0 = alpha drives the letter x0, u1 = beta drives x1."""

    u0: PolyFunction
    u1: PolyFunction

    def channel(self, i: int) -> PolyFunction:
        return self.u0 if i == 0 else self.u1


ONE = PolyFunction((1,))


def iterated_integral(eta: Word, u: InputPair, _cache: dict | None = None) -> PolyFunction:
    """E_e = 1 and E_{x_i w}(t) = int_0^t u_i(s) E_w(s) ds."""
    eta = tuple(eta)
    if _cache is not None and eta in _cache:
        return _cache[eta]
    if not eta:
        out = ONE
    else:
        out = (u.channel(eta[0]) * iterated_integral(eta[1:], u, _cache)).integral()
    if _cache is not None:
        _cache[eta] = out
    return out


def fliess_polynomial(c: Series, u: InputPair, n: int, _cache: dict | None = None) -> PolyFunction:
    """sum over words of degree <= n of <c, w> E_w[u], as a polynomial in t."""
    if c.truncation is not None and c.truncation < n:
        raise ValueError(f"series is only known to degree {c.truncation}, asked for {n}")
    cache: dict = {} if _cache is None else _cache
    acc = PolyFunction()
    for w, k in c.items():
        if degree(w) <= n:
            acc = acc + iterated_integral(w, u, cache) * k
    return acc


def fliess_eval(c: Series, u: InputPair, t, n: int) -> Fraction:
    return fliess_polynomial(c, u, n)(_frac(t))


def abel_numeric(
    u: InputPair,
    z0: float,
    t_end: float,
    step: float,
    bound: float = DEFAULT_BLOWUP_BOUND,
    use_jit: bool | None = None,
) -> float:
    """Classical RK4 for dz/dt = alpha(t) z^3 + beta(t) z^2, z(0) = z0; returns z(t_end)."""
    if not step > 0:
        raise ValueError("step must be positive")
    if not t_end >= 0:
        raise ValueError("t_end must be nonnegative")
    z, t, status = rk4_abel(u.u0.as_floats(), u.u1.as_floats(), z0, t_end, step, bound, use_jit=use_jit)
    if status == STATUS_BLOWUP:
        raise BlowUpError(t, z, bound)
    return z


def return_map_coeffs(u: InputPair, omega, n: int) -> list[Fraction]:
    """[a_1(omega), ..., a_n(omega)] where a_k(t) = F_{a_k}[u](t)."""
    if n < 1:
        raise ValueError("need n >= 1")
    omega = _frac(omega)
    return [p(omega) for p in devlin_components(u, n)]


def devlin_components(u: InputPair, n: int) -> list[PolyFunction]:
    """[a_1(t), ..., a_n(t)] as exact polynomials, sharing iterated integrals across grades."""
    cache: dict = {}
    return [fliess_polynomial(devlin_recursive(k).poly, u, k, cache) for k in range(1, n + 1)]

