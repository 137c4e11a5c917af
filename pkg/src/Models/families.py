"""
Function classes on the unit disc: their extremal members, seeded random members and a
numerical membership check.

Each class is described by a ClassSpec. Closed-form members are AnalyticFn objects that
return f, f' and f'' at a point; random members are PowerSeries built from a Schur
function omega through the subordination p = P(omega).
"""
import logging
import numbers

import numpy as np

from dataclasses import dataclass
from enum import Enum
from scipy.integrate import trapezoid
from Models.errors import (InvalidParams, ConstantTermNotOne, UnsupportedSpec,
                           MembershipCheckFailed, PoleAtEvaluationPoint, RadiusTooLarge)
from Models.grid import GridSpec
from Models.series import (PowerSeries, EvalResult, DEFAULT_ORDER, R_MAX, TAIL_TOL,
                           NORMALIZED_TOL, circle_angles, log_derivative_functionals)

logger = logging.getLogger(__name__)

MEMBERSHIP_TOL = 1e-6
SAMPLED_R_CAP = 0.9
POLE_TOL = 1e-12
SCHUR_RADIUS = 0.8
CLOSED_FORM_RADIUS = 0.999


def to_complex(value, name="value"):
    if value is None:
        return None
    if isinstance(value, (list, tuple)) and len(value) != 2:
        raise InvalidParams(f"Complex parameters are [re, im] pairs, got {name}={value}")
    try:
        if isinstance(value, (list, tuple)):
            return complex(float(value[0]), float(value[1]))
        return complex(value)
    except (TypeError, ValueError):
        raise InvalidParams(f"{name} must be a number or an [re, im] pair, got {value!r}")


def check_real(name, value):
    if value is not None and not isinstance(value, numbers.Real):
        raise InvalidParams(f"{name} must be a real number, got {value!r}")


class ClassTag(Enum):
    StarlikeOrder = "StarlikeOrder"
    ConvexOrder = "ConvexOrder"
    JanowskiStarlike = "JanowskiStarlike"
    JanowskiConvex = "JanowskiConvex"
    GBeta = "GBeta"
    BoundaryRotation = "BoundaryRotation"
    UniversalLIF = "UniversalLIF"
    LIFOrder = "LIFOrder"
    Univalent = "Univalent"


SAMPLED_TAGS = (ClassTag.StarlikeOrder, ClassTag.ConvexOrder, ClassTag.JanowskiStarlike,
                ClassTag.JanowskiConvex, ClassTag.GBeta)


@dataclass(frozen=True)
class ClassSpec:
    tag: ClassTag
    alpha: float = 0.0
    A: complex = None
    B: complex = None
    beta: float = None
    k: float = None
    gamma: float = None
    delta: float = None
    classical_range: bool = False

    @staticmethod
    def from_dict(spec_dict):
        if 'tag' not in spec_dict:
            raise InvalidParams("Invalid dictionary format for constructing a ClassSpec.")
        try:
            tag = ClassTag(spec_dict['tag'])
        except ValueError:
            raise UnsupportedSpec(f"Unknown class tag: {spec_dict['tag']}")
        return ClassSpec(tag,
                         alpha=spec_dict.get('alpha', 0.0),
                         A=spec_dict.get('A'), B=spec_dict.get('B'),
                         beta=spec_dict.get('beta'), k=spec_dict.get('k'),
                         gamma=spec_dict.get('gamma'), delta=spec_dict.get('delta'),
                         classical_range=bool(spec_dict.get('classical_range', False)))

    @staticmethod
    def starlike(alpha=0.0):
        return ClassSpec(ClassTag.StarlikeOrder, alpha=alpha)

    @staticmethod
    def convex(alpha=0.0):
        return ClassSpec(ClassTag.ConvexOrder, alpha=alpha)

    @staticmethod
    def janowski_starlike(A, B, classical_range=False):
        return ClassSpec(ClassTag.JanowskiStarlike, A=A, B=B, classical_range=classical_range)

    @staticmethod
    def janowski_convex(A, B, classical_range=False):
        return ClassSpec(ClassTag.JanowskiConvex, A=A, B=B, classical_range=classical_range)

    @staticmethod
    def g_beta(beta):
        return ClassSpec(ClassTag.GBeta, beta=beta)

    @staticmethod
    def boundary_rotation(k):
        return ClassSpec(ClassTag.BoundaryRotation, k=k)

    @staticmethod
    def universal_lif(gamma):
        return ClassSpec(ClassTag.UniversalLIF, gamma=gamma)

    @staticmethod
    def lif_order(delta):
        return ClassSpec(ClassTag.LIFOrder, delta=delta)

    @staticmethod
    def univalent():
        return ClassSpec(ClassTag.Univalent)

    def __post_init__(self):
        if isinstance(self.tag, str):
            try:
                object.__setattr__(self, 'tag', ClassTag(self.tag))
            except ValueError:
                raise UnsupportedSpec(f"Unknown class tag: {self.tag}")
        object.__setattr__(self, 'A', to_complex(self.A, 'A'))
        object.__setattr__(self, 'B', to_complex(self.B, 'B'))
        for name in ('alpha', 'beta', 'k', 'gamma', 'delta'):
            check_real(name, getattr(self, name))
        tag = self.tag

        if tag in (ClassTag.StarlikeOrder, ClassTag.ConvexOrder):
            if not 0 <= self.alpha < 1:
                raise InvalidParams(f"{tag.value}: alpha must lie in [0, 1), got {self.alpha}")
        elif tag in (ClassTag.JanowskiStarlike, ClassTag.JanowskiConvex):
            self._validate_janowski()
        elif tag == ClassTag.GBeta:
            if self.beta is None or not 0 < self.beta <= 1:
                raise InvalidParams(f"GBeta: beta must lie in (0, 1], got {self.beta}")
        elif tag == ClassTag.BoundaryRotation:
            if self.k is None or not self.k >= 2:
                raise InvalidParams(f"BoundaryRotation: k must be >= 2, got {self.k}")
        elif tag == ClassTag.UniversalLIF:
            if self.gamma is None or not self.gamma >= 1:
                raise InvalidParams(f"UniversalLIF: gamma must be >= 1, got {self.gamma}")
        elif tag == ClassTag.LIFOrder:
            if self.delta is None or not self.delta >= 1:
                raise InvalidParams(f"LIFOrder: delta must be >= 1, got {self.delta}")

    def _validate_janowski(self):
        A, B = self.A, self.B
        if A is None or B is None:
            raise InvalidParams(f"{self.tag.value} needs both A and B")
        if A == B:
            raise InvalidParams(f"{self.tag.value}: A and B must differ, got A = B = {A}")
        if self.classical_range:
            if A.imag != 0 or B.imag != 0 or not -1 <= B.real < A.real <= 1:
                raise InvalidParams(f"{self.tag.value}: classical range needs real -1 <= B < A <= 1, "
                                    f"got A={A}, B={B}")
            logger.warning("%s(A=%s, B=%s) uses the classical range -1 <= B < A <= 1, outside the "
                           "|A| > 1 hypothesis of the Janowski radius", self.tag.value, A, B)
            return
        if abs(B) > 1:
            raise InvalidParams(f"{self.tag.value}: |B| must be <= 1, got |B| = {abs(B):.6g}")
        if abs(A) <= 1:
            raise InvalidParams(f"{self.tag.value}: |A| must be > 1, got |A| = {abs(A):.6g}")

    @property
    def supports_sampling(self):
        return self.tag in SAMPLED_TAGS

    def to_dict(self):
        spec_dict = {"tag": self.tag.value}
        if self.tag in (ClassTag.StarlikeOrder, ClassTag.ConvexOrder):
            spec_dict["alpha"] = self.alpha
        for name in ("A", "B"):
            value = getattr(self, name)
            if value is not None:
                spec_dict[name] = [value.real, value.imag]
        for name in ("beta", "k", "gamma", "delta"):
            value = getattr(self, name)
            if value is not None:
                spec_dict[name] = value
        if self.classical_range:
            spec_dict["classical_range"] = True
        return spec_dict

    def __str__(self):
        params = {key: value for key, value in self.to_dict().items() if key != "tag"}
        inner = ", ".join(f"{key}={value}" for key, value in params.items())
        return f"{self.tag.value}({inner})"


@dataclass(frozen=True)
class MoebiusParams:
    """Disc automorphism phi(z) = exp(i*theta) (z + a) / (1 + conj(a) z)."""
    a: complex = 0j
    theta: float = 0.0

    @staticmethod
    def from_dict(moebius_dict):
        theta = moebius_dict.get('theta', 0.0)
        check_real('theta', theta)
        return MoebiusParams(to_complex(moebius_dict.get('a', 0), 'a'), float(theta))

    @staticmethod
    def identity():
        return MoebiusParams()

    @staticmethod
    def random(rng, max_modulus=SCHUR_RADIUS):
        modulus = max_modulus * rng.uniform()
        return MoebiusParams(modulus * np.exp(2j * np.pi * rng.uniform()), 2 * np.pi * rng.uniform())

    def __post_init__(self):
        object.__setattr__(self, 'a', to_complex(self.a))
        if not abs(self.a) < 1:
            raise InvalidParams(f"Moebius parameter needs |a| < 1, got |a| = {abs(self.a):.6g}")

    def __call__(self, z):
        return np.exp(1j * self.theta) * (z + self.a) / (1 + np.conj(self.a) * z)

    def derivative(self, z):
        return np.exp(1j * self.theta) * (1 - abs(self.a) ** 2) / (1 + np.conj(self.a) * z) ** 2

    def second_derivative(self, z):
        a_bar = np.conj(self.a)
        return -2 * a_bar * np.exp(1j * self.theta) * (1 - abs(self.a) ** 2) / (1 + a_bar * z) ** 3

    def inverse(self, w):
        u = np.exp(-1j * self.theta) * w
        return (u - self.a) / (1 - np.conj(self.a) * u)

    def compose(self, inner):
        """self o inner, written again as exp(i*theta) (z + a) / (1 + conj(a) z)."""
        a = -inner.inverse(-self.a)
        theta = float(np.angle(self.derivative(inner(0)) * inner.derivative(0)))
        return MoebiusParams(complex(a), theta)

    def to_dict(self):
        return {"a": [self.a.real, self.a.imag], "theta": self.theta}


class AnalyticFn:
    """
    A normalized analytic function given by a vectorized evaluator z -> EvalResult(f, f', f'').

    starlike/convexity may supply z f'/f and 1 + z f''/f' directly; otherwise they are
    formed from the evaluator. series_factory(order) gives the Taylor series when known.
    """

    def __init__(self, evaluator, label, series_factory=None, max_radius=CLOSED_FORM_RADIUS,
                 starlike=None, convexity=None):
        self._evaluator = evaluator
        self.label = label
        self._series_factory = series_factory
        self.max_radius = max_radius
        self._starlike = starlike
        self._convexity = convexity

    def _check_radius(self, z_arr):
        radius = float(np.max(np.abs(z_arr))) if z_arr.size else 0.0
        if radius > self.max_radius + 1e-12:
            raise RadiusTooLarge(f"{self.label}: evaluation needs |z| <= {self.max_radius}, got {radius:.6g}")

    def evaluate(self, z):
        z_arr = np.asarray(z, dtype=complex)
        self._check_radius(z_arr)
        result = self._evaluator(z_arr)
        if np.ndim(z) == 0:
            return EvalResult(complex(result.value), complex(result.d1), complex(result.d2), result.tail)
        return result

    def on_circle(self, r, n_theta):
        return self.evaluate(r * np.exp(1j * circle_angles(n_theta)))

    def starlike_functional(self, z):
        """z f'(z) / f(z), equal to 1 at the origin."""
        z_arr = np.asarray(z, dtype=complex)
        if self._starlike is not None:
            self._check_radius(z_arr)
            return self._scalar(self._starlike(z_arr), z)
        result = self.evaluate(z_arr)
        at_origin = z_arr == 0
        value = np.where(at_origin, 1.0, result.value)
        if np.any(np.abs(value) < POLE_TOL):
            raise PoleAtEvaluationPoint(f"{self.label} vanishes at an evaluation point")
        return self._scalar(np.where(at_origin, 1.0, z_arr * result.d1 / value), z)

    def convexity_functional(self, z):
        """1 + z f''(z) / f'(z)."""
        z_arr = np.asarray(z, dtype=complex)
        if self._convexity is not None:
            self._check_radius(z_arr)
            return self._scalar(self._convexity(z_arr), z)
        result = self.evaluate(z_arr)
        d1 = np.asarray(result.d1)
        if np.any(np.abs(d1) < POLE_TOL):
            raise PoleAtEvaluationPoint(f"derivative of {self.label} vanishes at an evaluation point")
        return self._scalar(1 + z_arr * result.d2 / d1, z)

    def starlike_on_circle(self, r, n_theta):
        return self.starlike_functional(r * np.exp(1j * circle_angles(n_theta)))

    def convexity_on_circle(self, r, n_theta):
        return self.convexity_functional(r * np.exp(1j * circle_angles(n_theta)))

    @staticmethod
    def _scalar(values, like):
        if np.ndim(like) == 0:
            return complex(values)
        return values

    def to_series(self, order=DEFAULT_ORDER):
        if self._series_factory is None:
            raise UnsupportedSpec(f"{self.label} has no Taylor series attached")
        return self._series_factory(order)

    def __str__(self):
        return self.label

    __repr__ = __str__


class SeriesFn(AnalyticFn):
    """
    AnalyticFn backed by a normalized PowerSeries.

    The two functionals come from the series of log_derivative_functionals, whose
    coefficients stay bounded for the classes handled here, so they remain accurate
    up to R_MAX even when the coefficients of f itself grow.
    """

    def __init__(self, series, label=None, tol=TAIL_TOL):
        if not series.is_normalized(tol=1e-9):
            raise ConstantTermNotOne(f"SeriesFn needs a normalized series, got a_0={series[0]}, a_1={series[1]}")
        self.series = series
        self.tol = tol
        self.p, self.q = log_derivative_functionals(series)
        super().__init__(lambda z: series.evaluate(z, tol=tol), label or f"series(order={series.order})",
                         series_factory=series.padded, max_radius=R_MAX,
                         starlike=lambda z: self._checked(self.p.evaluate(z, tol=tol).value),
                         convexity=lambda z: self._checked(self.q.evaluate(z, tol=tol).value))

    def _checked(self, values):
        if not np.all(np.isfinite(values)):
            raise PoleAtEvaluationPoint(f"{self.label}: functional is not finite at an evaluation point")
        return values

    def on_circle(self, r, n_theta):
        return self.series.on_circle(r, n_theta, tol=self.tol)

    def starlike_on_circle(self, r, n_theta):
        return self._checked(self.p.on_circle(r, n_theta, tol=self.tol).value)

    def convexity_on_circle(self, r, n_theta):
        return self._checked(self.q.on_circle(r, n_theta, tol=self.tol).value)


def as_analytic(f, label=None):
    if isinstance(f, AnalyticFn):
        return f
    if isinstance(f, PowerSeries):
        if f.is_normalized(tol=1e-9):
            return SeriesFn(f, label=label)
        # operator inputs need not be normalized; only the plain evaluator is available then
        return AnalyticFn(lambda z: f.evaluate(z), label or f"series(order={f.order})",
                          series_factory=f.padded, max_radius=R_MAX)
    raise UnsupportedSpec(f"Cannot treat {type(f).__name__} as an analytic function")


@dataclass(frozen=True)
class _Factor:
    """h(z) = exp(rate * z) * prod (1 + b z)^e over powers = ((b, e), ...)."""
    powers: tuple = ()
    rate: complex = 0j

    def value(self, z):
        out = np.exp(self.rate * z)
        for b, e in self.powers:
            out = out * (1 + b * z) ** e
        return out

    def log_derivative(self, z):
        out = self.rate + 0 * z
        for b, e in self.powers:
            out = out + e * b / (1 + b * z)
        return out

    def log_derivative_prime(self, z):
        out = 0 * z
        for b, e in self.powers:
            out = out - e * b * b / (1 + b * z) ** 2
        return out

    def derivatives(self, z):
        h = self.value(z)
        log_d = self.log_derivative(z)
        return h, h * log_d, h * (self.log_derivative_prime(z) + log_d * log_d)

    def series(self, order):
        out = PowerSeries([0, self.rate], order=order).exp()
        for b, e in self.powers:
            out = out * PowerSeries([1, b], order=order).pow(e)
        return out


def _z_times(factor, label):
    # f = z h: z f'/f = 1 + z h'/h
    def evaluator(z):
        h, h1, h2 = factor.derivatives(z)
        return EvalResult(z * h, h + z * h1, 2 * h1 + z * h2)

    return AnalyticFn(evaluator, label,
                      series_factory=lambda order: factor.series(order).shift_up(),
                      starlike=lambda z: 1 + z * factor.log_derivative(z))


def _primitive(factor, antiderivative, label):
    # f' = h: 1 + z f''/f' = 1 + z h'/h
    def evaluator(z):
        h, h1, _ = factor.derivatives(z)
        return EvalResult(antiderivative(z), h, h1)

    return AnalyticFn(evaluator, label,
                      series_factory=lambda order: factor.series(order).integrate(),
                      convexity=lambda z: 1 + z * factor.log_derivative(z))


def _power_primitive(b, e):
    """Primitive of (1 + b z)^e vanishing at 0."""
    if e == -1:
        return lambda z: np.log1p(b * z) / b
    return lambda z: np.expm1((e + 1) * np.log1p(b * z)) / (b * (e + 1))


def _cayley_power_primitive(gamma):
    """(1/(2 gamma)) [((1+z)/(1-z))^gamma - 1], the primitive of (1+z)^(gamma-1) (1-z)^(-gamma-1)."""
    return lambda z: np.expm1(gamma * (np.log1p(z) - np.log1p(-z))) / (2 * gamma)


def _cayley_power(gamma, label):
    factor = _Factor(powers=((1.0, gamma - 1), (-1.0, -gamma - 1)))
    return _primitive(factor, _cayley_power_primitive(gamma), label)


def extremal(spec):
    """Closed-form extremal member of the class described by spec."""
    tag = spec.tag
    if tag in (ClassTag.StarlikeOrder, ClassTag.Univalent):
        c = 2 * (1 - spec.alpha) if tag == ClassTag.StarlikeOrder else 2.0
        return _z_times(_Factor(powers=((-1.0, -c),)), f"z/(1-z)^{c:g}")
    if tag == ClassTag.ConvexOrder:
        c = 2 * (1 - spec.alpha)
        return _primitive(_Factor(powers=((-1.0, -c),)), _power_primitive(-1.0, -c),
                          f"primitive of (1-z)^-{c:g}")
    if tag == ClassTag.JanowskiStarlike:
        A, B = spec.A, spec.B
        if B == 0:
            return _z_times(_Factor(rate=A), f"z exp({A:g} z)")
        return _z_times(_Factor(powers=((B, (A - B) / B),)), f"z (1+{B:g} z)^(({A:g}-{B:g})/{B:g})")
    if tag == ClassTag.JanowskiConvex:
        A, B = spec.A, spec.B
        if B == 0:
            return _primitive(_Factor(rate=A), lambda z: np.expm1(A * z) / A, f"primitive of exp({A:g} z)")
        e = (A - B) / B
        return _primitive(_Factor(powers=((B, e),)), _power_primitive(B, e),
                          f"primitive of (1+{B:g} z)^(({A:g}-{B:g})/{B:g})")
    if tag == ClassTag.GBeta:
        return _primitive(_Factor(powers=((-1.0, spec.beta),)), _power_primitive(-1.0, spec.beta),
                          f"primitive of (1-z)^{spec.beta:g}")
    if tag == ClassTag.BoundaryRotation:
        return _cayley_power(spec.k / 2, f"V_{spec.k:g} extremal")
    if tag == ClassTag.UniversalLIF:
        return _cayley_power(spec.gamma, f"UL_{spec.gamma:g} extremal")
    if tag == ClassTag.LIFOrder:
        return _cayley_power(spec.delta, f"LIF order {spec.delta:g} extremal")
    raise UnsupportedSpec(f"No extremal for {spec}")


def identity_fn():
    def evaluator(z):
        return EvalResult(z, np.ones_like(z), np.zeros_like(z))

    return AnalyticFn(evaluator, "z", series_factory=PowerSeries.identity,
                      starlike=lambda z: np.ones_like(z), convexity=lambda z: np.ones_like(z))


def koebe():
    return extremal(ClassSpec.univalent())


def _require_unit_constant(series, name):
    if abs(series[0] - 1) > NORMALIZED_TOL:
        raise ConstantTermNotOne(f"{name} needs constant term 1, got {series[0]}")


def _exp_integral(series):
    # exp(int_0^z (s(t) - 1)/t dt), exact through the order of series
    shifted = PowerSeries(series.coeffs[1:], order=series.order)
    return shifted.integrate().exp()


def from_log_derivative(p):
    """Normalized f with z f'/f = p: f = z exp(int_0^z (p(s) - 1)/s ds). One order above p."""
    _require_unit_constant(p, "from_log_derivative")
    return _exp_integral(p).padded(p.order + 1).shift_up()


def from_convexity_profile(q):
    """Normalized g with 1 + z g''/g' = q: g' = exp(int_0^z (q(s) - 1)/s ds). One order above q."""
    _require_unit_constant(q, "from_convexity_profile")
    return _exp_integral(q).padded(q.order + 1).integrate()


def schur_sample(seed, m, order=DEFAULT_ORDER):
    """omega(z) = z * prod_j exp(i theta_j) (z + a_j)/(1 + conj(a_j) z), |a_j| <= 0.8."""
    if m < 0:
        raise InvalidParams(f"schur_sample needs m >= 0, got {m}")
    rng = np.random.default_rng(seed)
    omega = PowerSeries.identity(order)
    for _ in range(m):
        phi = MoebiusParams.random(rng)
        numerator = PowerSeries([phi.a, 1], order=order) * np.exp(1j * phi.theta)
        omega = omega * numerator * PowerSeries.geometric(order, ratio=-np.conj(phi.a))
    return omega


def _half_plane(omega, alpha):
    # (1 + (1 - 2 alpha) omega) / (1 - omega)
    return (1 + (1 - 2 * alpha) * omega) * (1 - omega).reciprocal()


def _janowski(omega, A, B):
    return (1 + A * omega) * (1 + B * omega).reciprocal()


def sample_member(spec, seed, m=None, order=DEFAULT_ORDER, grid=None):
    """Seeded random member of a samplable class, re-verified with check_membership at r = 0.9."""
    if not spec.supports_sampling:
        raise UnsupportedSpec(f"Random sampling is not available for {spec.tag.value}")
    if m is None:
        m = int(np.random.default_rng([seed, 1]).integers(0, 4))
    omega = schur_sample(seed, m, order)

    tag = spec.tag
    if tag == ClassTag.StarlikeOrder:
        member = from_log_derivative(_half_plane(omega, spec.alpha))
    elif tag == ClassTag.JanowskiStarlike:
        member = from_log_derivative(_janowski(omega, spec.A, spec.B))
    elif tag == ClassTag.ConvexOrder:
        member = from_convexity_profile(_half_plane(omega, spec.alpha))
    elif tag == ClassTag.JanowskiConvex:
        member = from_convexity_profile(_janowski(omega, spec.A, spec.B))
    else:
        member = from_convexity_profile(1 - spec.beta * omega * (1 - omega).reciprocal())

    margin = check_membership(member, spec, SAMPLED_R_CAP, grid or GridSpec())
    logger.debug("sampled %s seed=%s m=%d margin=%.3g", spec, seed, m, margin)
    if margin < -MEMBERSHIP_TOL:
        raise MembershipCheckFailed(f"sample of {spec} (seed {seed}, m {m}) fails its membership "
                                    f"check with margin {margin:.3g}")
    return member


def lif_functional(fn, z):
    """|-conj(z) + (1 - |z|^2) f''/(2 f')| for z != 0."""
    ratio = (fn.convexity_functional(z) - 1) / z
    return np.abs(-np.conj(z) + 0.5 * (1 - np.abs(z) ** 2) * ratio)


def check_membership(f, spec, r, grid=None):
    """Worst slack of the class inequality over the shells of grid inside |z| <= r; >= 0 means satisfied."""
    grid = grid or GridSpec()
    fn = as_analytic(f)
    if r > fn.max_radius + 1e-12:
        raise RadiusTooLarge(f"membership check of {fn.label} needs r <= {fn.max_radius}, got {r}")
    angles = grid.angles()
    tag = spec.tag

    if tag == ClassTag.BoundaryRotation:
        q = fn.convexity_functional(r * np.exp(1j * angles))
        integrand = np.abs(np.append(q.real, q.real[0]))
        rotation = trapezoid(integrand, np.append(angles, 2 * np.pi))
        return float(spec.k * np.pi - rotation)

    z = grid.shell_radii(r)[:, None] * np.exp(1j * angles)[None, :]
    if tag == ClassTag.StarlikeOrder:
        return float(np.min(fn.starlike_functional(z).real) - spec.alpha)
    if tag == ClassTag.ConvexOrder:
        return float(np.min(fn.convexity_functional(z).real) - spec.alpha)
    if tag in (ClassTag.JanowskiStarlike, ClassTag.JanowskiConvex):
        p = fn.starlike_functional(z) if tag == ClassTag.JanowskiStarlike else fn.convexity_functional(z)
        w = (p - 1) / (spec.A - spec.B * p)
        return float(np.min(np.abs(z) - np.abs(w)))
    if tag == ClassTag.GBeta:
        return float(np.min(1 + spec.beta / 2 - fn.convexity_functional(z).real))
    bound = {ClassTag.UniversalLIF: spec.gamma, ClassTag.LIFOrder: spec.delta, ClassTag.Univalent: 2.0}[tag]
    return float(bound - np.max(lif_functional(fn, z)))


def lif_transform(f, phi):
    """Koebe transform (f(phi(z)) - f(phi(0))) / (f'(phi(0)) phi'(0)), normalized again."""
    fn = as_analytic(f)
    base = fn.evaluate(phi(0j))
    scale = base.d1 * phi.derivative(0j)

    def evaluator(z):
        w = phi(z)
        w1 = phi.derivative(z)
        inner = fn.evaluate(w)
        return EvalResult((inner.value - base.value) / scale,
                          inner.d1 * w1 / scale,
                          (inner.d2 * w1 ** 2 + inner.d1 * phi.second_derivative(z)) / scale)

    return AnalyticFn(evaluator, f"F[{fn.label}; a={phi.a:.3g}, theta={phi.theta:.3g}]")


def random_normalized(seed, order=128):
    """Seeded normalized series with |a_n| <= 1/n."""
    rng = np.random.default_rng(seed)
    n = np.arange(2, order + 1)
    coeffs = rng.uniform(size=n.size) * np.exp(2j * np.pi * rng.uniform(size=n.size)) / n
    return PowerSeries(np.concatenate([[0, 1], coeffs]), order=order)


if __name__ == "__main__":
    for spec in (ClassSpec.starlike(0), ClassSpec.janowski_starlike(2, -1), ClassSpec.boundary_rotation(4)):
        fn = extremal(spec)
        print(spec, fn, check_membership(fn, spec, 0.95))
