"""Parameter catalogs, the population state, and model validation.

Every field and function in the catalog evaluates to 0 for arguments <= 0;
this single convention truncates all the convolution integrals downstream.
"""

from __future__ import annotations

import bisect
import math
from dataclasses import dataclass, field

import numpy as np
from scipy import special

from .errors import EmptyOrZeroMass, InvalidSpec

__all__ = [
    "ScalarField",
    "OffspringLaw",
    "LifespanLaw",
    "ImmigrationLaw",
    "TestFunction",
    "Population",
    "ModelSpec",
    "validate_model",
    "weighted_select",
]


# ---------------------------------------------------------------------------
# scalar fields on (0, inf)


@dataclass(frozen=True)
class ScalarField:
    """Nonnegative scalar function of the remaining lifetime.

    Variants: constant, or piecewise linear through (x, value) knots with
    the first segment extended linearly toward 0 (clamped at 0) and flat
    extrapolation right of the last knot.
    """

    kind: str                      # "constant" | "piecewise_linear"
    value: float = 0.0
    xs: np.ndarray = field(default_factory=lambda: np.empty(0))
    vs: np.ndarray = field(default_factory=lambda: np.empty(0))

    @classmethod
    def constant(cls, c: float) -> "ScalarField":
        return cls(kind="constant", value=float(c))

    @classmethod
    def piecewise_linear(cls, knots) -> "ScalarField":
        pts = sorted((float(x), float(v)) for x, v in knots)
        if not pts:
            raise ValueError("piecewise linear field needs at least one knot")
        xs = np.array([p[0] for p in pts])
        vs = np.array([p[1] for p in pts])
        if xs[0] <= 0.0:
            raise ValueError("knot abscissae must be > 0")
        if len(xs) > 1 and np.any(np.diff(xs) <= 0.0):
            raise ValueError("knot abscissae must be strictly increasing")
        return cls(kind="piecewise_linear", xs=xs, vs=vs)

    @property
    def is_constant(self) -> bool:
        return self.kind == "constant"

    def _left_slope(self) -> float:
        if len(self.xs) < 2:
            return 0.0
        return (self.vs[1] - self.vs[0]) / (self.xs[1] - self.xs[0])

    def eval(self, x) -> np.ndarray:
        """Vectorized evaluation; 0 for x <= 0."""
        x = np.asarray(x, dtype=float)
        scalar = x.ndim == 0
        x = np.atleast_1d(x)
        out = np.zeros_like(x)
        pos = x > 0.0
        if self.kind == "constant":
            out[pos] = self.value
        else:
            v = np.interp(x, self.xs, self.vs)
            left = x < self.xs[0]
            if np.any(left):
                ext = self.vs[0] + self._left_slope() * (x - self.xs[0])
                v = np.where(left, np.maximum(ext, 0.0), v)
            out[pos] = v[pos]
        return out[0] if scalar else out

    def eval_scalar(self, x: float) -> float:
        """Scalar fast path used in the event loop."""
        if x <= 0.0:
            return 0.0
        if self.kind == "constant":
            return self.value
        xs, vs = self.xs, self.vs
        if x <= xs[0]:
            ext = vs[0] + self._left_slope() * (x - xs[0])
            return ext if ext > 0.0 else 0.0
        if x >= xs[-1]:
            return float(vs[-1])
        i = bisect.bisect_left(xs, x)
        x0, x1 = xs[i - 1], xs[i]
        return float(vs[i - 1] + (vs[i] - vs[i - 1]) * (x - x0) / (x1 - x0))

    def limit_at_zero(self) -> float:
        """Right limit at 0+, used for one-sided quadrature endpoints."""
        if self.kind == "constant":
            return self.value
        ext = self.vs[0] - self._left_slope() * self.xs[0]
        return max(float(ext), 0.0)

    def breakpoints(self) -> list[float]:
        """Abscissae where the field is not smooth, clamp crossing included."""
        if self.kind == "constant":
            return []
        pts = [float(x) for x in self.xs]
        s = self._left_slope()
        if s > 0.0 and self.vs[0] - s * self.xs[0] < 0.0:
            pts.append(float(self.xs[0] - self.vs[0] / s))
        return sorted(pts)

    def value_range(self) -> tuple[float, float]:
        """(min, max) of the field over (0, inf)."""
        if self.kind == "constant":
            return (self.value, self.value)
        cand = list(self.vs) + [self.limit_at_zero()]
        return (float(min(cand)), float(max(cand)))

    def sup_norm(self) -> float:
        return self.value_range()[1]

    def scaled(self, k: float) -> "ScalarField":
        if self.kind == "constant":
            return ScalarField.constant(self.value * k)
        return ScalarField(kind="piecewise_linear", xs=self.xs, vs=self.vs * k)


def _sup_product(f: ScalarField, g: ScalarField) -> float:
    """Exact supremum of f*g over (0, inf) for catalog fields.

    Within each segment of the joint breakpoint partition both factors are
    linear, so the product is a quadratic maximized at an endpoint or vertex.
    """
    pts = sorted(set(f.breakpoints()) | set(g.breakpoints()))
    if not pts:
        return f.value * g.value
    edges = [0.0] + pts + [pts[-1] + 1.0]
    best = 0.0
    for lo, hi in zip(edges[:-1], edges[1:]):
        x1 = lo + (hi - lo) / 3.0
        x2 = lo + 2.0 * (hi - lo) / 3.0
        f1, f2 = float(f.eval(x1)), float(f.eval(x2))
        g1, g2 = float(g.eval(x1)), float(g.eval(x2))
        bf = (f2 - f1) / (x2 - x1)
        bg = (g2 - g1) / (x2 - x1)
        af = f1 - bf * x1
        ag = g1 - bg * x1
        cand = [(af + bf * lo) * (ag + bg * lo), (af + bf * hi) * (ag + bg * hi)]
        if bf * bg != 0.0:
            xv = -(af * bg + ag * bf) / (2.0 * bf * bg)
            if lo < xv < hi:
                cand.append((af + bf * xv) * (ag + bg * xv))
        best = max(best, max(cand))
    return best


# ---------------------------------------------------------------------------
# offspring law


@dataclass(frozen=True)
class OffspringLaw:
    """Offspring-count distribution, possibly depending on the parent's
    remaining lifetime at the birth instant."""

    kind: str                              # "zero_two" | "poisson" | "table"
    p2: ScalarField | None = None          # zero_two: probability of 2 children
    mean_field: ScalarField | None = None  # poisson: mean count
    probs: np.ndarray | None = None        # table: P(count = k), k = 0..K

    @classmethod
    def zero_two(cls, p2: ScalarField) -> "OffspringLaw":
        return cls(kind="zero_two", p2=p2)

    @classmethod
    def poisson(cls, mean: ScalarField) -> "OffspringLaw":
        return cls(kind="poisson", mean_field=mean)

    @classmethod
    def table(cls, probs) -> "OffspringLaw":
        return cls(kind="table", probs=np.asarray(probs, dtype=float))

    @property
    def x_independent(self) -> bool:
        if self.kind == "zero_two":
            return self.p2.is_constant
        if self.kind == "poisson":
            return self.mean_field.is_constant
        return True

    def pgf(self, x, z):
        """Generating function sum_k P(count=k | x) z^k; 0 for x <= 0 convention
        does not apply here (the law is conditioned on a live parent)."""
        z = np.asarray(z, dtype=float)
        if self.kind == "zero_two":
            p = self.p2.eval(x)
            return 1.0 - p + p * z * z
        if self.kind == "poisson":
            m = self.mean_field.eval(x)
            return np.exp(m * (z - 1.0))
        out = np.zeros_like(z)
        for k in range(len(self.probs) - 1, -1, -1):
            out = out * z + self.probs[k]
        return out

    def mean(self, x):
        if self.kind == "zero_two":
            return 2.0 * self.p2.eval(x)
        if self.kind == "poisson":
            return self.mean_field.eval(x)
        m = float(np.dot(np.arange(len(self.probs)), self.probs))
        return np.full_like(np.asarray(x, dtype=float), m) if np.ndim(x) else m

    def second_factorial(self, x):
        if self.kind == "zero_two":
            return 2.0 * self.p2.eval(x)
        if self.kind == "poisson":
            m = self.mean_field.eval(x)
            return m * m
        k = np.arange(len(self.probs))
        v = float(np.dot(k * (k - 1), self.probs))
        return np.full_like(np.asarray(x, dtype=float), v) if np.ndim(x) else v

    def mean_repr(self) -> ScalarField:
        """The mean count as a catalog field (for bound computations)."""
        if self.kind == "zero_two":
            return self.p2.scaled(2.0)
        if self.kind == "poisson":
            return self.mean_field
        return ScalarField.constant(float(self.mean(1.0)))

    def second_factorial_sup(self) -> float:
        if self.kind == "zero_two":
            return 2.0 * self.p2.sup_norm()
        if self.kind == "poisson":
            return self.mean_field.sup_norm() ** 2
        k = np.arange(len(self.probs))
        return float(np.dot(k * (k - 1), self.probs))

    def sample_count(self, x: float, rng) -> int:
        """Draw a count for a parent at remaining lifetime x; one uniform for
        the two-point and table variants, a multiplicative loop for Poisson."""
        if self.kind == "zero_two":
            return 2 if rng.random() < self.p2.eval_scalar(x) else 0
        if self.kind == "poisson":
            m = self.mean_field.eval_scalar(x)
            if m <= 0.0:
                return 0
            limit = math.exp(-m)
            k = 0
            p = rng.random()
            while p > limit:
                p *= rng.random()
                k += 1
            return k
        u = rng.random()
        acc = 0.0
        for k, q in enumerate(self.probs):
            acc += q
            if u < acc:
                return k
        return len(self.probs) - 1


# ---------------------------------------------------------------------------
# lifespan law


@dataclass(frozen=True)
class LifespanLaw:
    """Continuous life-length distribution on (0, inf)."""

    kind: str        # "exponential" | "gamma" | "uniform"
    a: float = 0.0   # rate | shape | lower bound
    b: float = 0.0   # unused | scale | upper bound

    @classmethod
    def exponential(cls, rate: float) -> "LifespanLaw":
        return cls(kind="exponential", a=float(rate))

    @classmethod
    def gamma(cls, shape: float, scale: float) -> "LifespanLaw":
        return cls(kind="gamma", a=float(shape), b=float(scale))

    @classmethod
    def uniform(cls, lo: float, hi: float) -> "LifespanLaw":
        return cls(kind="uniform", a=float(lo), b=float(hi))

    def cdf(self, x):
        x = np.asarray(x, dtype=float)
        xp = np.maximum(x, 0.0)
        if self.kind == "exponential":
            return -np.expm1(-self.a * xp)
        if self.kind == "gamma":
            return special.gammainc(self.a, xp / self.b)
        return np.clip((xp - self.a) / (self.b - self.a), 0.0, 1.0)

    def density(self, x):
        x = np.asarray(x, dtype=float)
        out = np.zeros_like(x)
        pos = x > 0.0
        if self.kind == "exponential":
            out[pos] = self.a * np.exp(-self.a * x[pos])
        elif self.kind == "gamma":
            k, th = self.a, self.b
            out[pos] = np.exp(
                (k - 1.0) * np.log(x[pos]) - x[pos] / th - special.gammaln(k)
            ) / th**k
        else:
            out[(x > self.a) & (x < self.b)] = 1.0 / (self.b - self.a)
        return out

    def integrated_cdf(self, x):
        """Integral of the cdf from 0 to x, in closed form per variant."""
        x = np.asarray(x, dtype=float)
        xp = np.maximum(x, 0.0)
        if self.kind == "exponential":
            lam = self.a
            return xp + np.expm1(-lam * xp) / lam
        if self.kind == "gamma":
            k, th = self.a, self.b
            return xp * special.gammainc(k, xp / th) - k * th * special.gammainc(
                k + 1.0, xp / th
            )
        lo, hi = self.a, self.b
        mid = np.clip(xp, lo, hi)
        return (mid - lo) ** 2 / (2.0 * (hi - lo)) + np.maximum(xp - hi, 0.0)

    def sample(self, rng) -> float:
        if self.kind == "exponential":
            return rng.expovariate(self.a)
        if self.kind == "gamma":
            return rng.gammavariate(self.a, self.b)
        return rng.uniform(self.a, self.b)

    def mean(self) -> float:
        if self.kind == "exponential":
            return 1.0 / self.a
        if self.kind == "gamma":
            return self.a * self.b
        return 0.5 * (self.a + self.b)

    def second_moment(self) -> float:
        if self.kind == "exponential":
            return 2.0 / self.a**2
        if self.kind == "gamma":
            return self.a * (self.a + 1.0) * self.b**2
        return (self.a**2 + self.a * self.b + self.b**2) / 3.0

    def abscissa(self) -> float:
        """Supremum of tilts with a finite exponential moment."""
        if self.kind == "exponential":
            return self.a
        if self.kind == "gamma":
            return 1.0 / self.b
        return math.inf

    def exp_moment(self, theta: float) -> float:
        """E[exp(theta X)]; +inf beyond the abscissa."""
        if theta == 0.0:
            return 1.0
        if self.kind == "exponential":
            return self.a / (self.a - theta) if theta < self.a else math.inf
        if self.kind == "gamma":
            if theta >= 1.0 / self.b:
                return math.inf
            return (1.0 - theta * self.b) ** (-self.a)
        return (math.exp(theta * self.b) - math.exp(theta * self.a)) / (
            theta * (self.b - self.a)
        )

    def exp_x_moment(self, theta: float) -> float:
        """E[X exp(theta X)]; +inf beyond the abscissa."""
        if self.kind == "exponential":
            return self.a / (self.a - theta) ** 2 if theta < self.a else math.inf
        if self.kind == "gamma":
            if theta >= 1.0 / self.b:
                return math.inf
            return self.a * self.b * (1.0 - theta * self.b) ** (-self.a - 1.0)
        if theta == 0.0:
            return self.mean()
        lo, hi = self.a, self.b
        num = (theta * hi - 1.0) * math.exp(theta * hi) - (theta * lo - 1.0) * math.exp(
            theta * lo
        )
        return num / (theta**2 * (hi - lo))

    def upper(self, eps: float = 1e-14) -> float:
        """Quantile 1 - eps; bounds quadrature and grid tails."""
        if self.kind == "exponential":
            return -math.log(eps) / self.a
        if self.kind == "gamma":
            from scipy import stats

            return float(stats.gamma.ppf(1.0 - eps, self.a, scale=self.b))
        return self.b

    def expect(self, phi, points=(), tol: float = 1e-10) -> float:
        """Quadrature of phi against the law, to relative tolerance tol."""
        from scipy.integrate import quad

        hi = self.upper(1e-16)
        lo = 0.0 if self.kind != "uniform" else self.a
        if self.kind == "uniform":
            hi = self.b
        pts = sorted(p for p in points if lo < p < hi)
        val, _ = quad(
            lambda x: phi(x) * float(self.density(np.asarray(x))),
            lo,
            hi,
            points=pts or None,
            limit=200,
            epsabs=1e-13,
            epsrel=tol,
        )
        return val


# ---------------------------------------------------------------------------
# immigration law


@dataclass(frozen=True)
class ImmigrationLaw:
    """Poisson stream of immigrant clusters.

    rate is the arrival intensity; each arrival contributes either a single
    individual or an iid bunch whose size follows count_probs (indexed from
    size 1, so clusters are never empty).
    """

    rate: float
    lifespan: LifespanLaw
    count_probs: tuple | None = None

    @property
    def kind(self) -> str:
        return "singleton" if self.count_probs is None else "iid"

    def mean_count(self) -> float:
        if self.count_probs is None:
            return 1.0
        return float(sum((k + 1) * p for k, p in enumerate(self.count_probs)))

    def second_factorial_count(self) -> float:
        if self.count_probs is None:
            return 0.0
        return float(sum((k + 1) * k * p for k, p in enumerate(self.count_probs)))

    def count_pgf(self, z: float) -> float:
        if self.count_probs is None:
            return z
        return float(sum(p * z ** (k + 1) for k, p in enumerate(self.count_probs)))

    def sample_cluster(self, rng) -> list:
        """Cluster lifespans; the size draw (if any) precedes the lifespans."""
        if self.count_probs is None:
            n = 1
        else:
            u = rng.random()
            acc = 0.0
            n = len(self.count_probs)
            for k, q in enumerate(self.count_probs):
                acc += q
                if u < acc:
                    n = k + 1
                    break
        return [self.lifespan.sample(rng) for _ in range(n)]

    def mean_integral(self, phi, points=()) -> float:
        """Integral of <cluster, phi> over the arrival intensity."""
        return self.rate * self.mean_count() * self.lifespan.expect(phi, points)

    def square_integral(self, phi, points=()) -> float:
        """Integral of <cluster, phi>^2 over the arrival intensity."""
        m1 = self.lifespan.expect(phi, points)
        m2 = self.lifespan.expect(lambda x: phi(x) ** 2, points)
        return self.rate * (
            self.mean_count() * m2 + self.second_factorial_count() * m1**2
        )

    def exp_integral(self, theta: float) -> float:
        m = self.lifespan.exp_moment(theta)
        return math.inf if math.isinf(m) else self.rate * self.mean_count() * m

    def exp_square_integral(self, theta: float) -> float:
        m1 = self.lifespan.exp_moment(theta)
        m2 = self.lifespan.exp_moment(2.0 * theta)
        if math.isinf(m1) or math.isinf(m2):
            return math.inf
        return self.rate * (
            self.mean_count() * m2 + self.second_factorial_count() * m1**2
        )


# ---------------------------------------------------------------------------
# test functions


@dataclass(frozen=True)
class TestFunction:
    """Step function on (0, inf): value values[j] on (thresholds[j-1],
    thresholds[j]], and values[-1] beyond the last threshold."""

    thresholds: np.ndarray
    values: np.ndarray

    def __post_init__(self):
        thr = np.asarray(self.thresholds, dtype=float)
        val = np.asarray(self.values, dtype=float)
        if len(val) != len(thr) + 1:
            raise ValueError("need len(values) == len(thresholds) + 1")
        if len(thr) and (thr[0] <= 0.0 or np.any(np.diff(thr) <= 0.0)):
            raise ValueError("thresholds must be strictly increasing and > 0")
        object.__setattr__(self, "thresholds", thr)
        object.__setattr__(self, "values", val)
        cum = np.zeros(len(thr) + 1)
        if len(thr):
            widths = np.diff(np.concatenate(([0.0], thr)))
            cum[1:] = np.cumsum(val[:-1] * widths)
        object.__setattr__(self, "_cum", cum)

    @classmethod
    def constant(cls, c: float) -> "TestFunction":
        return cls(thresholds=np.empty(0), values=np.array([float(c)]))

    def eval(self, x):
        x = np.asarray(x, dtype=float)
        scalar = x.ndim == 0
        x = np.atleast_1d(x)
        idx = np.searchsorted(self.thresholds, x, side="left")
        out = np.where(x > 0.0, self.values[idx], 0.0)
        return out[0] if scalar else out

    def value_right(self, x):
        """Value on the open interval just right of x (x >= 0)."""
        x = np.asarray(x, dtype=float)
        idx = np.searchsorted(self.thresholds, x, side="right")
        return self.values[idx]

    def value_left(self, x):
        """Value on the open interval just left of x; 0 at or below 0."""
        x = np.asarray(x, dtype=float)
        idx = np.searchsorted(self.thresholds, x, side="left")
        vals = self.values[idx]
        return np.where(x > 0.0, vals, 0.0)

    def cumulative(self, x):
        """Integral of the function from 0 to x; 0 for x <= 0."""
        x = np.asarray(x, dtype=float)
        scalar = x.ndim == 0
        x = np.atleast_1d(x)
        xp = np.maximum(x, 0.0)
        idx = np.searchsorted(self.thresholds, xp, side="left")
        lower = np.concatenate(([0.0], self.thresholds))[idx]
        out = self._cum[idx] + self.values[idx] * (xp - lower)
        return out[0] if scalar else out

    def sup_norm(self) -> float:
        return float(np.max(np.abs(self.values)))

    def is_nonnegative(self) -> bool:
        return bool(np.all(self.values >= 0.0))

    def jump_points(self) -> np.ndarray:
        return self.thresholds


# ---------------------------------------------------------------------------
# population state and model spec


@dataclass
class Population:
    """Snapshot of the particle system: remaining lifetimes at a reference
    time. Mutable, confined to one worker at a time."""

    reference_time: float
    lifetimes: list
    alpha: ScalarField | None = None
    _mass: float | None = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        self.lifetimes = [float(x) for x in self.lifetimes]
        if any(x <= 0.0 for x in self.lifetimes):
            raise ValueError("remaining lifetimes must be strictly positive")

    def size(self) -> int:
        return len(self.lifetimes)

    def alpha_mass(self, recompute: bool = False) -> float:
        """Total birth intensity at the reference time (cached)."""
        if self.alpha is None:
            raise ValueError("population has no rate field attached")
        if self._mass is None or recompute:
            mass = sum(self.alpha.eval_scalar(x) for x in self.lifetimes)
            if not recompute:
                self._mass = mass
            return mass
        return self._mass


@dataclass(frozen=True)
class ModelSpec:
    """The model tuple: birth rate field, offspring law, lifespan law, and
    optional immigration."""

    alpha: ScalarField
    offspring: OffspringLaw
    lifespan: LifespanLaw
    immigration: ImmigrationLaw | None = None

    def beta(self) -> float:
        """Supremum of rate x mean offspring count, the growth bound."""
        return _sup_product(self.alpha, self.offspring.mean_repr())

    def validate(self) -> None:
        problems = validate_model(self)
        if problems:
            raise InvalidSpec("; ".join(problems))


def validate_model(spec: ModelSpec) -> list:
    """Collect violated model assumptions; an empty list means valid."""
    out = []
    lo, hi = spec.alpha.value_range()
    if lo < 0.0:
        out.append("rate field negative")
    off = spec.offspring
    if off.kind == "zero_two":
        plo, phi = off.p2.value_range()
        if plo < 0.0 or phi > 1.0:
            out.append("offspring probability out of [0,1]")
    elif off.kind == "poisson":
        mlo, _ = off.mean_field.value_range()
        if mlo < 0.0:
            out.append("offspring mean negative")
    else:
        if np.any(off.probs < 0.0):
            out.append("offspring probabilities negative")
        if abs(float(np.sum(off.probs)) - 1.0) > 1e-12:
            out.append("offspring probabilities must sum to 1")
    sup_mean = off.mean_repr().sup_norm()
    if not math.isfinite(sup_mean):
        out.append("offspring mean unbounded")
    if not math.isfinite(_sup_product(spec.alpha, off.mean_repr())):
        out.append("birth intensity bound is not finite")
    ls = spec.lifespan
    if ls.kind == "exponential" and ls.a <= 0.0:
        out.append("lifespan rate must be positive")
    elif ls.kind == "gamma" and (ls.a <= 0.0 or ls.b <= 0.0):
        out.append("lifespan shape and scale must be positive")
    elif ls.kind == "uniform" and not (0.0 < ls.a < ls.b):
        out.append("lifespan bounds must satisfy 0 < a < b")
    imm = spec.immigration
    if imm is not None:
        if imm.rate <= 0.0:
            out.append("immigration rate must be positive")
        if imm.count_probs is not None:
            probs = np.asarray(imm.count_probs, dtype=float)
            if np.any(probs < 0.0):
                out.append("immigration cluster probabilities negative")
            if abs(float(np.sum(probs)) - 1.0) > 1e-12:
                out.append("immigration cluster probabilities must sum to 1")
        ils = imm.lifespan
        if ils.kind == "exponential" and ils.a <= 0.0:
            out.append("immigrant lifespan rate must be positive")
        elif ils.kind == "gamma" and (ils.a <= 0.0 or ils.b <= 0.0):
            out.append("immigrant lifespan shape and scale must be positive")
        elif ils.kind == "uniform" and not (0.0 < ils.a < ils.b):
            out.append("immigrant lifespan bounds must satisfy 0 < a < b")
    return out


def select_index(cum_weights, total: float, y: float) -> int:
    """Smallest index whose cumulative weight strictly exceeds total*y.

    This is the infimum rule for inverting the weighted cumulative; a draw
    landing exactly on a boundary selects the first index past it, and y = 1
    clamps to the final index.
    """
    target = total * y
    idx = int(np.searchsorted(cum_weights, target, side="right"))
    return min(idx, len(cum_weights) - 1)


def weighted_select(pop: Population, y: float) -> int:
    """Pick a parent index with probability proportional to its birth rate.

    Lifetimes are ranked ascending (insertion order breaks ties) and the
    uniform draw y in (0,1] is inverted through the cumulative rate.
    Returns an index into pop.lifetimes.
    """
    if pop.alpha is None:
        raise ValueError("population has no rate field attached")
    order = sorted(range(len(pop.lifetimes)), key=lambda i: (pop.lifetimes[i], i))
    weights = np.array([pop.alpha.eval_scalar(pop.lifetimes[i]) for i in order])
    total = float(weights.sum())
    if total <= 0.0 or not pop.lifetimes:
        raise EmptyOrZeroMass("population carries no birth intensity")
    cum = np.cumsum(weights)
    return order[select_index(cum, total, y)]
