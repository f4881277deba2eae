"""One-sided alpha-stable subordinator density and its integral identities.

The density f(t, alpha; s) is pinned down by the Laplace identity

    integral_0^inf f(t, alpha; s) exp(-s*lam) ds = exp(-t * lam**alpha),

which is the correctness contract for everything here.  Evaluation uses the
Zolotarev integral representation

    f(1, alpha; x) = alpha / (pi (1-alpha)) * x**(-1/(1-alpha))
                     * integral_0^pi A(phi) exp(-x**(-alpha/(1-alpha)) A(phi)) dphi

whose integrand is nonnegative, so small values come out without
cancellation (the oscillatory inverse-Laplace integrand loses all digits for
alpha > 1/2 at small s).  Scaling in t is exact:
f(t, alpha; s) = t**(-1/alpha) f(1, alpha; s * t**(-1/alpha)).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.special import gammaln

from .errors import AccuracyError, DomainError

__all__ = [
    "StableDensityParams",
    "stable_density",
    "stable_density_array",
    "stable_density_half",
    "laplace_check",
    "moment",
    "pollard_density",
]

# Switch to the convergent large-argument series beyond this point; the
# Zolotarev quadrature window is tuned for x below it.
_SERIES_CUTOFF = 1.0e9


@dataclass(frozen=True)
class StableDensityParams:
    """Parameters of f(t, alpha; .) plus quadrature settings."""

    alpha: float
    t: float = 1.0
    nodes: int = 1600
    cutoff: float = 40.0  # half-width of the logistic quadrature window

    def __post_init__(self):
        if not 0.0 < self.alpha < 1.0:
            raise DomainError(f"alpha must lie in (0, 1), got {self.alpha}")
        if self.t <= 0.0:
            raise DomainError(f"t must be positive, got {self.t}")
        if self.nodes < 64:
            raise DomainError("need at least 64 quadrature nodes")


def _zolotarev_A(alpha: float, phi: np.ndarray) -> np.ndarray:
    q = alpha / (1.0 - alpha)
    return (
        np.sin(alpha * phi) ** q
        * np.sin((1.0 - alpha) * phi)
        * np.sin(phi) ** (-(1.0 + q))
    )


def _density_unit(params: StableDensityParams, x: np.ndarray) -> np.ndarray:
    """f(1, alpha; x) for an array of arguments; zero for x <= 0."""
    alpha = params.alpha
    x = np.asarray(x, dtype=float)
    out = np.zeros(x.shape)
    pos = x > 0.0

    main = pos & (x <= _SERIES_CUTOFF)
    if np.any(main):
        xm = x[main]
        # logistic map phi = pi / (1 + exp(-v)) resolves both endpoints
        v = np.linspace(-params.cutoff, params.cutoff, params.nodes)
        sig = 1.0 / (1.0 + np.exp(-v))
        phi = np.pi * sig
        dphi = np.pi * sig * (1.0 - sig) * (v[1] - v[0])
        A = _zolotarev_A(alpha, phi)
        z = xm ** (-alpha / (1.0 - alpha))
        a0 = alpha ** (alpha / (1.0 - alpha)) * (1.0 - alpha)
        small = z * a0 > 700.0  # genuinely below double-precision range
        expo = -z[:, None] * A[None, :]
        np.clip(expo, -745.0, 0.0, out=expo)
        integral = np.exp(expo) @ (A * dphi)
        pref = alpha / (np.pi * (1.0 - alpha)) * xm ** (-1.0 / (1.0 - alpha))
        vals = np.where(small, 0.0, pref * integral)
        out[main] = vals

    tail = pos & (x > _SERIES_CUTOFF)
    if np.any(tail):
        out[tail] = _series_tail_density(alpha, x[tail])
    return out


def _series_tail_density(alpha: float, x: np.ndarray, terms: int = 12) -> np.ndarray:
    """Convergent series sum_k (-1)^(k+1) Gamma(k a + 1) sin(pi k a) x^(-k a - 1) / (pi k!)."""
    acc = np.zeros(x.shape)
    for k in range(1, terms + 1):
        c = math.sin(math.pi * k * alpha) / math.pi
        logmag = gammaln(k * alpha + 1.0) - gammaln(k + 1.0)
        term = ((-1.0) ** (k + 1)) * c * np.exp(logmag - (k * alpha + 1.0) * np.log(x))
        acc += term
    return acc


def stable_density_array(params: StableDensityParams, s) -> np.ndarray:
    """Vectorized f(t, alpha; s); nonpositive arguments evaluate to 0."""
    s = np.asarray(s, dtype=float)
    scale = params.t ** (-1.0 / params.alpha)
    return scale * _density_unit(params, s * scale)


def stable_density(params: StableDensityParams, s: float) -> float:
    """f(t, alpha; s) for a single s > 0."""
    if s <= 0.0:
        raise DomainError(f"s must be positive, got {s}")
    if abs(params.alpha - 0.5) < 1e-14:
        return stable_density_half(params.t, s)
    return float(stable_density_array(params, np.array([s]))[0])


def stable_density_half(t: float, s) -> np.ndarray | float:
    """Closed form at alpha = 1/2: t / (2 sqrt(pi)) * s^(-3/2) exp(-t^2/(4s))."""
    s = np.asarray(s, dtype=float)
    out = np.zeros(s.shape)
    pos = s > 0.0
    sp = s[pos]
    out[pos] = t / (2.0 * math.sqrt(math.pi)) * sp**-1.5 * np.exp(-(t * t) / (4.0 * sp))
    if out.ndim == 0:
        return float(out)
    return out


def _log_grid(lo: float, hi: float, per_decade: int) -> np.ndarray:
    decades = math.log10(hi / lo)
    n = max(int(decades * per_decade), 64)
    return np.geomspace(lo, hi, n)


def laplace_check(params: StableDensityParams, lam: float) -> float:
    """Quadrature value of integral f(t, alpha; s) e^(-s lam) ds.

    The exact value is exp(-t * lam**alpha); callers compare against it.
    """
    if lam <= 0.0:
        raise DomainError(f"lambda must be positive, got {lam}")
    # scale out t: integral equals integral f(1,alpha;u) exp(-lam t^(1/alpha) u) du
    lam_eff = lam * params.t ** (1.0 / params.alpha)
    hi = max(60.0 / lam_eff, 100.0)
    u = _log_grid(1e-9, hi, per_decade=160)
    f = _density_unit(params, u)
    integrand = f * np.exp(-lam_eff * u) * u  # extra u from d(log u)
    val = float(np.trapezoid(integrand, np.log(u)))
    if not np.isfinite(val):
        raise AccuracyError("laplace quadrature did not converge", residual=val)
    return val


def moment(params: StableDensityParams, delta: float) -> float:
    """integral f(t, alpha; s) s^delta ds.

    Equals Gamma(1 - delta/alpha) / Gamma(1 - delta) * t^(delta/alpha) for
    delta < alpha and diverges otherwise (returned as +inf).
    """
    alpha = params.alpha
    if delta >= alpha:
        return math.inf
    hi = 1e6
    u = _log_grid(1e-9, hi, per_decade=160)
    f = _density_unit(params, u)
    body = float(np.trapezoid(f * u**delta * u, np.log(u)))
    # analytic tail from the convergent series, term by term
    tail = 0.0
    for k in range(1, 40):
        c = math.sin(math.pi * k * alpha) / math.pi
        logmag = gammaln(k * alpha + 1.0) - gammaln(k + 1.0)
        expo = delta - k * alpha
        tail += ((-1.0) ** (k + 1)) * c * math.exp(logmag + expo * math.log(hi)) / (-expo)
    return (body + tail) * params.t ** (delta / alpha)


def pollard_density(alpha: float, x: float, nodes: int = 8000) -> float:
    """Inverse-Laplace real integral (oscillatory form), as a cross-check.

    (1/pi) * integral_0^inf exp(-x r - r^alpha cos(pi alpha))
                            * sin(r^alpha sin(pi alpha)) dr

    Only numerically trustworthy where the integrand does not grow before
    decaying, i.e. alpha <= 1/2 or moderate x.
    """
    if x <= 0.0:
        return 0.0
    hi = max(400.0, 80.0 / x)
    c = math.cos(math.pi * alpha)
    if c > 0.0:
        hi = max(hi, (80.0 / c) ** (1.0 / alpha))
    w = np.linspace(-16.0, math.log(hi), nodes)
    r = np.exp(w)
    expo = -x * r - np.cos(np.pi * alpha) * r**alpha
    if np.max(expo) > 80.0:
        raise AccuracyError(
            "oscillatory inversion loses all precision here", residual=float(np.max(expo))
        )
    integrand = np.exp(expo) * np.sin(np.sin(np.pi * alpha) * r**alpha) * r
    return float(np.trapezoid(integrand, w) / np.pi)
