"""Increment laws: validation, exponential moments and exact sampling.

Every family exposes the same small surface used by the rest of the
package:

* ``mean``, ``variance``, ``ess_inf``, ``ess_sup``
* ``neg_exp_moment(t)``  -- E[exp(-t X)]
* ``cond_upper_exp_moment(alpha, x)`` -- E[exp(-alpha (X - x)) | X >= x]
* ``cond_lower_exp_moment(alpha, x)`` -- E[exp(alpha (x - X)) | X < x]
* ``sample(rng, size)``

Build instances through :func:`validate` (or :func:`load_spec` for JSON).
"""

from __future__ import annotations

import enum
import json
import math
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from typing import Any, ClassVar

import numpy as np
from scipy import integrate, special

from .errors import (
    EmptyConditioningSet,
    InvalidParameter,
    MomentDiverges,
    NoNegativeMass,
    NonPositiveMean,
)

QUAD_RTOL = 1e-10
PROB_SUM_TOL = 1e-12


class Family(str, enum.Enum):
    GAUSSIAN = "gaussian"
    DOUBLE_EXPONENTIAL = "double_exponential"
    SHIFTED_EXPONENTIAL = "shifted_exponential"
    TWO_POINT = "two_point"
    FINITE_SUPPORT = "finite_support"
    LOMAX_MIX = "lomax_mix"


PARAM_NAMES: dict[Family, tuple[str, ...]] = {
    Family.GAUSSIAN: ("mu", "sigma"),
    Family.DOUBLE_EXPONENTIAL: ("p", "theta", "mu"),
    Family.SHIFTED_EXPONENTIAL: ("theta", "delta"),
    Family.TWO_POINT: ("x_minus", "x_plus", "p_plus"),
    Family.FINITE_SUPPORT: ("atoms",),
    Family.LOMAX_MIX: ("weight", "left_rate", "scale", "gamma"),
}


@dataclass(frozen=True)
class DistributionSpec:
    """Serializable description of an increment law."""

    family: Family
    params: dict[str, Any] = field(default_factory=dict)

    @classmethod
    def from_dict(cls, obj: dict) -> "DistributionSpec":
        if not isinstance(obj, dict):
            raise InvalidParameter("distribution spec must be a JSON object")
        extra = set(obj) - {"family", "params"}
        if extra:
            raise InvalidParameter(f"unknown spec fields: {sorted(extra)}")
        if "family" not in obj or "params" not in obj:
            raise InvalidParameter("spec needs both 'family' and 'params'")
        try:
            family = Family(obj["family"])
        except ValueError:
            raise InvalidParameter(f"unknown family {obj['family']!r}") from None
        params = obj["params"]
        if not isinstance(params, dict):
            raise InvalidParameter("'params' must be an object")
        expected = set(PARAM_NAMES[family])
        if set(params) != expected:
            missing = sorted(expected - set(params))
            unknown = sorted(set(params) - expected)
            raise InvalidParameter(
                f"{family.value}: missing {missing}, unknown {unknown}"
            )
        return cls(family, dict(params))

    def to_dict(self) -> dict:
        return {"family": self.family.value, "params": dict(self.params)}


def _num(params: dict, name: str) -> float:
    value = params[name]
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise InvalidParameter(f"parameter {name!r} must be a number")
    value = float(value)
    if not math.isfinite(value):
        raise InvalidParameter(f"parameter {name!r} must be finite")
    return value


class Distribution(ABC):
    """Validated increment law with cached moments."""

    family: ClassVar[Family]
    # IFR laws attain the excess suprema at x -> 0
    is_ifr: ClassVar[bool] = False

    @property
    @abstractmethod
    def mean(self) -> float: ...

    @property
    @abstractmethod
    def variance(self) -> float: ...

    @property
    @abstractmethod
    def ess_inf(self) -> float: ...

    @property
    @abstractmethod
    def ess_sup(self) -> float: ...

    @property
    def divergence_rate(self) -> float:
        """Supremum of t for which E[exp(-tX)] is finite."""
        return math.inf

    @property
    def std(self) -> float:
        return math.sqrt(self.variance)

    @abstractmethod
    def spec(self) -> DistributionSpec: ...

    def _check_t(self, t: float) -> None:
        if t < 0 or math.isnan(t):
            raise InvalidParameter(f"t must be >= 0, got {t}")
        if t >= self.divergence_rate:
            raise MomentDiverges(
                f"E[exp(-tX)] diverges for t={t} >= {self.divergence_rate}"
            )

    def neg_exp_moment(self, t: float) -> float:
        """E[exp(-tX)]; saturates to +inf when the value exceeds float range."""
        self._check_t(t)
        if t == 0:
            return 1.0
        try:
            return self._neg_exp_moment(t)
        except OverflowError:
            return math.inf

    def neg_exp_moment_deriv(self, t: float) -> float:
        """d/dt E[exp(-tX)] = -E[X exp(-tX)]."""
        self._check_t(t)
        return self._neg_exp_moment_deriv(t)

    @abstractmethod
    def _neg_exp_moment(self, t: float) -> float: ...

    @abstractmethod
    def _neg_exp_moment_deriv(self, t: float) -> float: ...

    @abstractmethod
    def cond_upper_exp_moment(self, alpha: float, x: float) -> float: ...

    @abstractmethod
    def cond_lower_exp_moment(self, alpha: float, x: float) -> float: ...

    @abstractmethod
    def sample(self, rng: np.random.Generator, size=None): ...

    def __repr__(self) -> str:
        args = ", ".join(f"{k}={v!r}" for k, v in self.spec().params.items())
        return f"{type(self).__name__}({args})"


def _require_alpha(alpha: float) -> None:
    if not alpha > 0:
        raise InvalidParameter(f"alpha must be positive, got {alpha}")


# ----------------------------------------------------------------------------
# Gaussian


@dataclass(frozen=True, repr=False)
class Gaussian(Distribution):
    mu: float
    sigma: float

    family: ClassVar[Family] = Family.GAUSSIAN
    is_ifr: ClassVar[bool] = True

    mean = property(lambda self: self.mu)
    variance = property(lambda self: self.sigma**2)
    ess_inf = property(lambda self: -math.inf)
    ess_sup = property(lambda self: math.inf)

    def spec(self):
        return DistributionSpec(self.family, {"mu": self.mu, "sigma": self.sigma})

    def pdf(self, x):
        z = (np.asarray(x) - self.mu) / self.sigma
        return np.exp(-0.5 * z * z) / (self.sigma * math.sqrt(2 * math.pi))

    def _log_mgf(self, t: float) -> float:
        return -t * self.mu + 0.5 * (t * self.sigma) ** 2

    def _neg_exp_moment(self, t):
        return math.exp(self._log_mgf(t))

    def _neg_exp_moment_deriv(self, t):
        return (t * self.sigma**2 - self.mu) * math.exp(self._log_mgf(t))

    # E[e^{-aX}; X >= x] = e^{-a mu + a^2 s^2 / 2} (1 - Phi((x - mu + a s^2) / s))
    def cond_upper_exp_moment(self, alpha, x):
        _require_alpha(alpha)
        s = self.sigma
        log_num = special.log_ndtr(-(x - self.mu + alpha * s * s) / s)
        log_den = special.log_ndtr(-(x - self.mu) / s)
        if log_den == -math.inf:
            raise EmptyConditioningSet(f"P(X >= {x}) underflows")
        return math.exp(alpha * x + self._log_mgf(alpha) + log_num - log_den)

    def cond_lower_exp_moment(self, alpha, x):
        _require_alpha(alpha)
        s = self.sigma
        log_num = special.log_ndtr((x - self.mu + alpha * s * s) / s)
        log_den = special.log_ndtr((x - self.mu) / s)
        if log_den == -math.inf:
            raise EmptyConditioningSet(f"P(X < {x}) underflows")
        return math.exp(alpha * x + self._log_mgf(alpha) + log_num - log_den)

    def sample(self, rng, size=None):
        return rng.normal(self.mu, self.sigma, size)


# ----------------------------------------------------------------------------
# Double exponential: p*theta*e^{-theta x} on x>0, (1-p)*mu*e^{mu x} on x<0


@dataclass(frozen=True, repr=False)
class DoubleExponential(Distribution):
    p: float
    theta: float
    mu: float

    family: ClassVar[Family] = Family.DOUBLE_EXPONENTIAL
    is_ifr: ClassVar[bool] = True

    def spec(self):
        return DistributionSpec(
            self.family, {"p": self.p, "theta": self.theta, "mu": self.mu}
        )

    @property
    def mean(self):
        return self.p / self.theta - (1 - self.p) / self.mu

    @property
    def variance(self):
        second = 2 * self.p / self.theta**2 + 2 * (1 - self.p) / self.mu**2
        return second - self.mean**2

    ess_inf = property(lambda self: -math.inf)
    ess_sup = property(lambda self: math.inf)

    @property
    def divergence_rate(self):
        return self.mu

    def pdf(self, x):
        x = np.asarray(x, dtype=float)
        pos = self.p * self.theta * np.exp(-self.theta * np.abs(x))
        neg = (1 - self.p) * self.mu * np.exp(-self.mu * np.abs(x))
        return np.where(x > 0, pos, neg)

    def _neg_exp_moment(self, t):
        p, th, mu = self.p, self.theta, self.mu
        return p * th / (th + t) + (1 - p) * mu / (mu - t)

    def _neg_exp_moment_deriv(self, t):
        p, th, mu = self.p, self.theta, self.mu
        return -p * th / (th + t) ** 2 + (1 - p) * mu / (mu - t) ** 2

    def cond_upper_exp_moment(self, alpha, x):
        _require_alpha(alpha)
        p, th, mu = self.p, self.theta, self.mu
        if x >= 0:
            return th / (th + alpha)
        if alpha >= mu:
            raise MomentDiverges("alpha must be below the left rate")
        # part of the negative branch in [x, 0)
        neg = (1 - p) * mu * -math.expm1((mu - alpha) * x) / (mu - alpha)
        num = math.exp(alpha * x) * (neg + p * th / (th + alpha))
        den = p + (1 - p) * -math.expm1(mu * x)
        return num / den

    def cond_lower_exp_moment(self, alpha, x):
        _require_alpha(alpha)
        p, th, mu = self.p, self.theta, self.mu
        if alpha >= mu:
            raise MomentDiverges("alpha must be below the left rate")
        if x <= 0:
            return mu / (mu - alpha)
        pos = p * th * -math.expm1(-(th + alpha) * x) / (th + alpha)
        num = math.exp(alpha * x) * ((1 - p) * mu / (mu - alpha) + pos)
        den = (1 - p) + p * -math.expm1(-th * x)
        return num / den

    def sample(self, rng, size=None):
        u = rng.random(size)
        e = rng.standard_exponential(size)
        return np.where(u < self.p, e / self.theta, -e / self.mu)


# ----------------------------------------------------------------------------
# Shifted exponential: X = E - delta, E ~ Exp(theta)


@dataclass(frozen=True, repr=False)
class ShiftedExponential(Distribution):
    theta: float
    delta: float

    family: ClassVar[Family] = Family.SHIFTED_EXPONENTIAL
    is_ifr: ClassVar[bool] = True

    def spec(self):
        return DistributionSpec(
            self.family, {"theta": self.theta, "delta": self.delta}
        )

    mean = property(lambda self: 1 / self.theta - self.delta)
    variance = property(lambda self: 1 / self.theta**2)
    ess_inf = property(lambda self: -self.delta)
    ess_sup = property(lambda self: math.inf)

    def pdf(self, x):
        u = np.asarray(x, dtype=float) + self.delta
        return np.where(u >= 0, self.theta * np.exp(-self.theta * np.abs(u)), 0.0)

    def _neg_exp_moment(self, t):
        return math.exp(t * self.delta) * self.theta / (self.theta + t)

    def _neg_exp_moment_deriv(self, t):
        th = self.theta
        return self._neg_exp_moment(t) * (self.delta - 1 / (th + t))

    def cond_upper_exp_moment(self, alpha, x):
        _require_alpha(alpha)
        if x >= -self.delta:
            return self.theta / (self.theta + alpha)
        return math.exp(alpha * x) * self._neg_exp_moment(alpha)

    def cond_lower_exp_moment(self, alpha, x):
        _require_alpha(alpha)
        u = x + self.delta
        if u <= 0:
            raise EmptyConditioningSet(f"P(X < {x}) = 0")
        th = self.theta
        ratio = math.expm1(-(th + alpha) * u) / math.expm1(-th * u)
        return th / (th + alpha) * math.exp(alpha * u) * ratio

    def sample(self, rng, size=None):
        return rng.standard_exponential(size) / self.theta - self.delta


# ----------------------------------------------------------------------------
# Finite support


@dataclass(frozen=True, repr=False)
class FiniteSupport(Distribution):
    """Law with finitely many atoms, stored sorted by location."""

    xs: tuple[float, ...]
    ps: tuple[float, ...]

    family: ClassVar[Family] = Family.FINITE_SUPPORT

    def spec(self):
        return DistributionSpec(
            self.family, {"atoms": [[x, p] for x, p in zip(self.xs, self.ps)]}
        )

    @property
    def atoms(self) -> list[tuple[float, float]]:
        return list(zip(self.xs, self.ps))

    @cached_property
    def mean(self):
        return math.fsum(x * p for x, p in zip(self.xs, self.ps))

    @cached_property
    def variance(self):
        m = self.mean
        return math.fsum(p * (x - m) ** 2 for x, p in zip(self.xs, self.ps))

    ess_inf = property(lambda self: self.xs[0])
    ess_sup = property(lambda self: self.xs[-1])

    @cached_property
    def _cdf(self) -> np.ndarray:
        cdf = np.cumsum(self.ps)
        cdf[-1] = 1.0
        return cdf

    def _neg_exp_moment(self, t):
        return math.fsum(p * math.exp(-t * x) for x, p in zip(self.xs, self.ps))

    def _neg_exp_moment_deriv(self, t):
        return -math.fsum(
            p * x * math.exp(-t * x) for x, p in zip(self.xs, self.ps)
        )

    def cond_upper_exp_moment(self, alpha, x):
        _require_alpha(alpha)
        sel = [(xi, p) for xi, p in zip(self.xs, self.ps) if xi >= x]
        if not sel:
            raise EmptyConditioningSet(f"P(X >= {x}) = 0")
        num = math.fsum(p * math.exp(-alpha * (xi - x)) for xi, p in sel)
        return num / math.fsum(p for _, p in sel)

    def cond_lower_exp_moment(self, alpha, x):
        _require_alpha(alpha)
        sel = [(xi, p) for xi, p in zip(self.xs, self.ps) if xi < x]
        if not sel:
            raise EmptyConditioningSet(f"P(X < {x}) = 0")
        num = math.fsum(p * math.exp(alpha * (x - xi)) for xi, p in sel)
        return num / math.fsum(p for _, p in sel)

    def sample(self, rng, size=None):
        u = rng.random(size)
        idx = np.searchsorted(self._cdf, u, side="right")
        return np.asarray(self.xs)[idx] if size is not None else self.xs[int(idx)]


@dataclass(frozen=True, repr=False)
class TwoPoint(FiniteSupport):
    family: ClassVar[Family] = Family.TWO_POINT

    def spec(self):
        return DistributionSpec(
            self.family,
            {"x_minus": self.xs[0], "x_plus": self.xs[1], "p_plus": self.ps[1]},
        )

    x_minus = property(lambda self: self.xs[0])
    x_plus = property(lambda self: self.xs[1])
    p_plus = property(lambda self: self.ps[1])


# ----------------------------------------------------------------------------
# Exponential left tail mixed with a Lomax (Pareto II) right tail


def lomax_laplace(a: float, gamma: float) -> float:
    """gamma * int_0^inf e^{-a u} (1 + u)^{-gamma-1} du.

    This is E[exp(-a Y / s)] for Y Lomax with scale s and shape gamma, and
    also E[exp(-alpha (Y - x)) | Y >= x] with a = alpha (s + x).
    """
    if a < 0:
        raise InvalidParameter("Laplace argument must be nonnegative")
    if a == 0:
        return 1.0
    if a >= 1:
        val, _ = integrate.quad(
            lambda v: math.exp(-v) * (1 + v / a) ** (-gamma - 1),
            0, math.inf, epsabs=0, epsrel=QUAD_RTOL, limit=200,
        )
        return gamma * val / a
    val, _ = integrate.quad(
        lambda u: math.exp(-a * u) * (1 + u) ** (-gamma - 1),
        0, math.inf, epsabs=0, epsrel=QUAD_RTOL, limit=200,
    )
    return gamma * val


def _lomax_laplace_da(a: float, gamma: float) -> float:
    val, _ = integrate.quad(
        lambda u: u * math.exp(-a * u) * (1 + u) ** (-gamma - 1),
        0, math.inf, epsabs=0, epsrel=QUAD_RTOL, limit=200,
    )
    return -gamma * val


@dataclass(frozen=True, repr=False)
class LomaxMix(Distribution):
    """Density (1-w) lam e^{lam x} on x<0 and w (g/s)(1+x/s)^{-(g+1)} on x>=0."""

    weight: float
    left_rate: float
    scale: float
    gamma: float

    family: ClassVar[Family] = Family.LOMAX_MIX

    def spec(self):
        return DistributionSpec(
            self.family,
            {
                "weight": self.weight,
                "left_rate": self.left_rate,
                "scale": self.scale,
                "gamma": self.gamma,
            },
        )

    @property
    def mean(self):
        w, lam, s, g = self.weight, self.left_rate, self.scale, self.gamma
        return -(1 - w) / lam + w * s / (g - 1)

    @property
    def variance(self):
        w, lam, s, g = self.weight, self.left_rate, self.scale, self.gamma
        if g <= 2:
            return math.inf
        second = 2 * (1 - w) / lam**2 + w * 2 * s * s / ((g - 1) * (g - 2))
        return second - self.mean**2

    ess_inf = property(lambda self: -math.inf)
    ess_sup = property(lambda self: math.inf)

    @property
    def divergence_rate(self):
        return self.left_rate

    def pdf(self, x):
        x = np.asarray(x, dtype=float)
        w, lam, s, g = self.weight, self.left_rate, self.scale, self.gamma
        left = (1 - w) * lam * np.exp(-lam * np.abs(x))
        right = w * (g / s) * (1 + np.abs(x) / s) ** (-(g + 1))
        return np.where(x >= 0, right, left)

    def _right_survival(self, x: float) -> float:
        return (1 + x / self.scale) ** (-self.gamma)

    def _neg_exp_moment(self, t):
        w, lam = self.weight, self.left_rate
        return (1 - w) * lam / (lam - t) + w * lomax_laplace(t * self.scale, self.gamma)

    def _neg_exp_moment_deriv(self, t):
        w, lam, s = self.weight, self.left_rate, self.scale
        return (1 - w) * lam / (lam - t) ** 2 + w * s * _lomax_laplace_da(
            t * s, self.gamma
        )

    def cond_upper_exp_moment(self, alpha, x):
        _require_alpha(alpha)
        w, lam, s, g = self.weight, self.left_rate, self.scale, self.gamma
        if x >= 0:
            return lomax_laplace(alpha * (s + x), g)
        if alpha >= lam:
            raise MomentDiverges("alpha must be below the left rate")
        neg = (1 - w) * lam * -math.expm1((lam - alpha) * x) / (lam - alpha)
        num = math.exp(alpha * x) * (neg + w * lomax_laplace(alpha * s, g))
        den = w + (1 - w) * -math.expm1(lam * x)
        return num / den

    def cond_lower_exp_moment(self, alpha, x):
        _require_alpha(alpha)
        w, lam, s, g = self.weight, self.left_rate, self.scale, self.gamma
        if alpha >= lam:
            raise MomentDiverges("alpha must be below the left rate")
        if x <= 0:
            return lam / (lam - alpha)
        # E[e^{-aY}; Y < x] = L(a s) - P(Y >= x) e^{-a x} L(a (s + x))
        below = lomax_laplace(alpha * s, g) - self._right_survival(x) * math.exp(
            -alpha * x
        ) * lomax_laplace(alpha * (s + x), g)
        num = math.exp(alpha * x) * ((1 - w) * lam / (lam - alpha) + w * below)
        den = (1 - w) + w * (1 - self._right_survival(x))
        return num / den

    def sample(self, rng, size=None):
        w, lam, s, g = self.weight, self.left_rate, self.scale, self.gamma
        u = rng.random(size)
        v = rng.random(size)
        right = s * np.expm1(-np.log1p(-v) / g)
        left = np.log1p(-v) / lam
        return np.where(u < w, right, left)


# ----------------------------------------------------------------------------
# Validation


def _check_positive(name: str, value: float) -> None:
    if not value > 0:
        raise InvalidParameter(f"{name} must be positive, got {value}")


def _finite_from_atoms(atoms, cls=FiniteSupport) -> FiniteSupport:
    if not isinstance(atoms, (list, tuple)) or not atoms:
        raise InvalidParameter("atoms must be a non-empty list of [x, p] pairs")
    pairs = []
    for a in atoms:
        if not isinstance(a, (list, tuple)) or len(a) != 2:
            raise InvalidParameter(f"bad atom {a!r}; expected [x, p]")
        x, p = _num({"x": a[0]}, "x"), _num({"p": a[1]}, "p")
        if not 0 < p <= 1:
            raise InvalidParameter(f"atom probability must lie in (0, 1], got {p}")
        pairs.append((x, p))
    pairs.sort()
    xs = tuple(x for x, _ in pairs)
    ps = tuple(p for _, p in pairs)
    if len(set(xs)) != len(xs):
        raise InvalidParameter("atom locations must be distinct")
    total = math.fsum(ps)
    if abs(total - 1) > PROB_SUM_TOL:
        raise InvalidParameter(f"atom probabilities sum to {total!r}, not 1")
    return cls(xs, ps)


def _build(spec: DistributionSpec) -> Distribution:
    fam, prm = spec.family, spec.params
    if fam is Family.GAUSSIAN:
        mu, sigma = _num(prm, "mu"), _num(prm, "sigma")
        _check_positive("sigma", sigma)
        return Gaussian(mu, sigma)
    if fam is Family.DOUBLE_EXPONENTIAL:
        p, theta, mu = _num(prm, "p"), _num(prm, "theta"), _num(prm, "mu")
        _check_positive("theta", theta)
        _check_positive("mu", mu)
        if not theta / (mu + theta) < p < 1:
            raise InvalidParameter(
                f"need theta/(mu+theta) < p < 1, got p={p}, bound {theta / (mu + theta)}"
            )
        return DoubleExponential(p, theta, mu)
    if fam is Family.SHIFTED_EXPONENTIAL:
        theta, delta = _num(prm, "theta"), _num(prm, "delta")
        _check_positive("theta", theta)
        _check_positive("delta", delta)
        if not delta < 1 / theta:
            raise InvalidParameter(f"need delta < 1/theta, got delta={delta}")
        return ShiftedExponential(theta, delta)
    if fam is Family.TWO_POINT:
        xm, xp, pp = _num(prm, "x_minus"), _num(prm, "x_plus"), _num(prm, "p_plus")
        if not xm < 0 < xp:
            raise InvalidParameter("two_point needs x_minus < 0 < x_plus")
        if not 0 < pp < 1:
            raise InvalidParameter(f"p_plus must lie in (0, 1), got {pp}")
        return _finite_from_atoms([[xm, 1 - pp], [xp, pp]], TwoPoint)
    if fam is Family.FINITE_SUPPORT:
        return _finite_from_atoms(prm["atoms"])
    if fam is Family.LOMAX_MIX:
        w, lam = _num(prm, "weight"), _num(prm, "left_rate")
        s, g = _num(prm, "scale"), _num(prm, "gamma")
        if not 0 < w < 1:
            raise InvalidParameter(f"weight must lie in (0, 1), got {w}")
        _check_positive("left_rate", lam)
        _check_positive("scale", s)
        if not g > 1:
            raise InvalidParameter(f"gamma must exceed 1, got {g}")
        return LomaxMix(w, lam, s, g)
    raise InvalidParameter(f"unsupported family {fam!r}")  # pragma: no cover


def validate(spec: DistributionSpec | dict) -> Distribution:
    """Check a spec against the family constraints and build the law.

    Raises InvalidParameter, NonPositiveMean or NoNegativeMass.
    """
    if isinstance(spec, dict):
        spec = DistributionSpec.from_dict(spec)
    dist = _build(spec)
    if not dist.mean > 0:
        raise NonPositiveMean(f"E[X] = {dist.mean!r} must be positive")
    if not dist.ess_inf < 0:
        raise NoNegativeMass("P(X < 0) must be positive")
    return dist


def load_spec(path: str | Path) -> Distribution:
    with open(path) as fh:
        try:
            obj = json.load(fh)
        except json.JSONDecodeError as exc:
            raise InvalidParameter(f"{path}: invalid JSON ({exc.msg})") from None
    return validate(DistributionSpec.from_dict(obj))


def neg_exp_moment(dist: Distribution, t: float) -> float:
    return dist.neg_exp_moment(t)


def cond_upper_exp_moment(dist: Distribution, alpha: float, x: float) -> float:
    return dist.cond_upper_exp_moment(alpha, x)


def cond_lower_exp_moment(dist: Distribution, alpha: float, x: float) -> float:
    return dist.cond_lower_exp_moment(alpha, x)


def sample(dist: Distribution, rng: np.random.Generator, size=None):
    return dist.sample(rng, size)
