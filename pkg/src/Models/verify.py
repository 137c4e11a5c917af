"""
Numerical certification of the convexity radii.

estimate_radius scans outward from the origin for the first circle on which
min Re q_T drops to the threshold and bisects the bracket; verify_theorem runs it on the
pairs each theorem is about and reports the margin against the closed form.
"""
import logging

import numpy as np

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional
from scipy.optimize import bisect, minimize_scalar
from Models.errors import VolterraError, HypothesisViolatedAtOrigin, UnsupportedSpec, InvalidParams
from Models.families import (ClassSpec, MoebiusParams, SAMPLED_R_CAP, as_analytic, extremal, identity_fn,
                             koebe, lif_transform, sample_member)
from Models.grid import GridSpec
from Models.radius import RadiusQuery, Theorem, radius_formula
from Models.series import DEFAULT_ORDER, R_MAX
from Models.volterra import convexity_functional_T, convexity_functional_T_on_circle

logger = logging.getLogger(__name__)

TOL_ACCEPT = 1e-3
LEMMA_RADIUS = R_MAX
PROOF_CHAIN_TOL = 1e-9

CSV_COLUMNS = ["theorem", "alpha", "A_re", "A_im", "B_re", "B_im", "gamma", "beta", "k",
               "r_formula", "r_estimate", "margin", "worst_angle", "n_theta", "order_N", "seed"]


@dataclass(frozen=True)
class RadiusEstimate:
    r: float
    worst_angle: float
    failed_at: Optional[float] = None
    capped: bool = False


@dataclass(frozen=True)
class RadiusReport:
    query: RadiusQuery
    r_formula: float
    r_estimate: float
    margin: float
    worst_angle: float
    pair_label: str
    grid: GridSpec
    failed_at: Optional[float] = None
    seed: Optional[int] = None
    order_N: int = DEFAULT_ORDER

    @staticmethod
    def from_dict(report_dict):
        try:
            return RadiusReport(RadiusQuery.from_dict(report_dict['query']), report_dict['r_formula'],
                                report_dict['r_estimate'], report_dict['margin'], report_dict['worst_angle'],
                                report_dict['pair_label'], GridSpec.from_dict(report_dict['grid']),
                                report_dict.get('failed_at'), report_dict.get('seed'),
                                report_dict.get('order_N', DEFAULT_ORDER))
        except KeyError as e:
            raise InvalidParams(f"Invalid dictionary format for constructing a RadiusReport: missing {e}")
        except TypeError as e:
            raise InvalidParams(f"Invalid dictionary format for constructing a RadiusReport: {e}")

    @property
    def passed(self):
        return self.margin >= -TOL_ACCEPT

    def to_dict(self):
        return {"query": self.query.to_dict(), "r_formula": self.r_formula, "r_estimate": self.r_estimate,
                "margin": self.margin, "worst_angle": self.worst_angle, "pair_label": self.pair_label,
                "grid": self.grid.to_dict(), "failed_at": self.failed_at, "seed": self.seed,
                "order_N": self.order_N}

    def to_row(self):
        q = self.query
        return {"theorem": q.theorem.value, "alpha": q.alpha,
                "A_re": q.A.real if q.A is not None else None, "A_im": q.A.imag if q.A is not None else None,
                "B_re": q.B.real if q.B is not None else None, "B_im": q.B.imag if q.B is not None else None,
                "gamma": q.gamma, "beta": q.beta, "k": q.k,
                "r_formula": self.r_formula, "r_estimate": self.r_estimate, "margin": self.margin,
                "worst_angle": self.worst_angle, "n_theta": self.grid.n_theta, "order_N": self.order_N,
                "seed": self.seed}


def _min_on_circle(on_circle, at_point, r, grid, refine):
    angles = grid.angles()
    values = np.real(on_circle(r, grid.n_theta))
    if not np.all(np.isfinite(values)):
        raise VolterraError(f"functional is not finite on |z| = {r:.6g}")
    j = int(np.argmin(values))
    best, best_angle = float(values[j]), float(angles[j])
    if not refine or r == 0:
        return best, best_angle

    step = 2 * np.pi / grid.n_theta
    result = minimize_scalar(lambda t: float(np.real(at_point(r * np.exp(1j * t)))),
                             bounds=(best_angle - step, best_angle + step), method="bounded",
                             options={"xatol": 1e-10})
    if result.success and result.fun < best:
        best, best_angle = float(result.fun), float(result.x % (2 * np.pi))
    return best, best_angle


def min_real_convexity(pair, r, grid, refine=True):
    """(min Re q_T, argmin angle) over |z| = r; the threshold is subtracted by the caller."""
    f, g = as_analytic(pair[0]), as_analytic(pair[1])
    return _min_on_circle(lambda rr, n: convexity_functional_T_on_circle(f, g, rr, n),
                          lambda z: convexity_functional_T(f, g, z), r, grid, refine)


def _estimate(on_circle, at_point, at_origin, threshold, grid, label):
    if not at_origin > threshold:
        raise HypothesisViolatedAtOrigin(f"{label}: functional at 0 is {at_origin:.6g}, "
                                         f"not above the threshold {threshold:.6g}")

    def slack(r, refine):
        value, angle = _min_on_circle(on_circle, at_point, r, grid, refine)
        return value - threshold, angle

    radii = np.arange(1, grid.n_radial + 1) / grid.n_radial
    radii = np.append(radii[radii < grid.r_cap], grid.r_cap)
    lo, worst = 0.0, 0.0
    hi = None
    for r in radii:
        try:
            value, angle = slack(r, refine=False)
        except VolterraError as e:
            logger.warning("%s: evaluation failed at r=%.6g (%s); keeping r=%.6g", label, r, e, lo)
            return RadiusEstimate(float(lo), worst, failed_at=float(r))
        if value <= 0:
            hi = r
            break
        lo, worst = r, angle
    if hi is None:
        logger.debug("%s: no sign change up to r_cap=%g", label, grid.r_cap)
        return RadiusEstimate(float(grid.r_cap), worst, capped=True)

    try:
        step = 1 / grid.n_radial
        while lo > 0 and slack(lo, refine=True)[0] <= 0:
            hi, lo = lo, max(lo - step, 0.0)
        logger.debug("%s: bracket [%.6g, %.6g]", label, lo, hi)
        if lo == 0:
            return RadiusEstimate(0.0, worst)
        root = bisect(lambda r: slack(r, refine=True)[0], lo, hi, xtol=grid.tol)
        r = max(lo, root - grid.tol)
        return RadiusEstimate(float(r), slack(r, refine=True)[1])
    except VolterraError as e:
        logger.warning("%s: evaluation failed during bisection (%s); keeping r=%.6g", label, e, lo)
        return RadiusEstimate(float(lo), worst, failed_at=float(hi))


def estimate_radius_details(pair, alpha, grid):
    f, g = as_analytic(pair[0]), as_analytic(pair[1])
    return _estimate(lambda r, n: convexity_functional_T_on_circle(f, g, r, n),
                     lambda z: convexity_functional_T(f, g, z),
                     convexity_functional_T(f, g, 0j).real, alpha, grid, f"T[{f.label}, {g.label}]")


def estimate_radius(pair, alpha, grid):
    """Largest r <= grid.r_cap with min Re q_T > alpha on every circle inside it."""
    return estimate_radius_details(pair, alpha, grid).r


def estimate_convexity_radius(f, alpha=0.0, grid=None):
    """Radius of convexity of order alpha of a single function."""
    grid = grid or GridSpec()
    fn = as_analytic(f)
    return _estimate(fn.convexity_on_circle, fn.convexity_functional, fn.convexity_functional(0j).real,
                     alpha, grid, fn.label).r


class LemmaKind(Enum):
    L31 = "L31"
    L32 = "L32"
    L33 = "L33"
    L34 = "L34"
    RobertsonVk = "RobertsonVk"


@dataclass(frozen=True)
class Lemma:
    kind: LemmaKind
    param: Optional[float] = None

    def __post_init__(self):
        if not isinstance(self.kind, LemmaKind):
            object.__setattr__(self, 'kind', LemmaKind(self.kind))
        if self.kind != LemmaKind.L33 and self.param is None:
            raise InvalidParams(f"{self.kind.value} needs a parameter")

    def __str__(self):
        return self.kind.value if self.param is None else f"{self.kind.value}({self.param:g})"


@dataclass(frozen=True)
class LemmaAudit:
    lemma: Lemma
    label: str
    max_violation: float
    worst_point: complex = field(default=0j)


def lemma_sides(f, lemma, z):
    """(LHS, RHS) of the lemma's inequality at z != 0."""
    fn = as_analytic(f)
    z = np.asarray(z, dtype=complex)
    modulus = np.abs(z)
    ratio = (fn.convexity_functional(z) - 1) / z
    kind = lemma.kind
    if kind in (LemmaKind.L31, LemmaKind.L33, LemmaKind.RobertsonVk):
        width = {LemmaKind.L31: lambda: 2 * lemma.param, LemmaKind.L33: lambda: 4.0,
                 LemmaKind.RobertsonVk: lambda: lemma.param}[kind]()
        lhs = np.abs(z * ratio - 2 * modulus ** 2 / (1 - modulus ** 2))
        rhs = width * modulus / (1 - modulus ** 2)
    elif kind == LemmaKind.L32:
        lhs = np.abs(-np.conj(z) + 0.5 * (1 - modulus ** 2) * ratio)
        rhs = lemma.param * np.ones_like(modulus)
    else:
        lhs = np.abs(ratio)
        rhs = lemma.param / (1 - modulus)
    return lhs, rhs


def lemma_audit(f, lemma, grid=None, r=LEMMA_RADIUS):
    """Largest LHS - RHS of the lemma over the shells of grid inside |z| <= r."""
    grid = grid or GridSpec()
    fn = as_analytic(f)
    z = (grid.shell_radii(r)[:, None] * np.exp(1j * grid.angles())[None, :]).ravel()
    lhs, rhs = lemma_sides(fn, lemma, z)
    violation = lhs - rhs
    j = int(np.argmax(violation))
    audit = LemmaAudit(lemma, fn.label, float(violation[j]), complex(z[j]))
    logger.debug("%s on %s: max violation %.3g at %s", lemma, fn.label, audit.max_violation, audit.worst_point)
    return audit


def default_lemma_audits(grid=None):
    """The designated member of each lemma: UL_2, convex, Koebe, G(1) and V_4 extremals."""
    cases = [(Lemma(LemmaKind.L31, 2.0), extremal(ClassSpec.universal_lif(2.0))),
             (Lemma(LemmaKind.L32, 1.0), extremal(ClassSpec.convex(0.0))),
             (Lemma(LemmaKind.L33), koebe()),
             (Lemma(LemmaKind.L34, 1.0), extremal(ClassSpec.g_beta(1.0))),
             (Lemma(LemmaKind.RobertsonVk, 4.0), extremal(ClassSpec.boundary_rotation(4.0)))]
    return [lemma_audit(fn, lemma, grid) for lemma, fn in cases]


def convexity_threshold(query):
    """T41 asks for convexity of order alpha; elsewhere alpha is the order of f and T_g is convex of order 0."""
    return query.alpha if query.theorem == Theorem.T41 else 0.0


def extremal_pair(query):
    theorem, alpha = query.theorem, query.alpha
    if theorem == Theorem.T41:
        return (extremal(ClassSpec.janowski_starlike(query.A, query.B)),
                extremal(ClassSpec.janowski_convex(query.A, query.B)))
    f = extremal(ClassSpec.starlike(alpha))
    if theorem == Theorem.T42:
        return f, extremal(ClassSpec.universal_lif(query.gamma))
    if theorem == Theorem.T43:
        return f, extremal(ClassSpec.convex(0.0))
    if theorem == Theorem.T44:
        return f, koebe()
    if theorem == Theorem.T45:
        return f, extremal(ClassSpec.g_beta(query.beta))
    return f, extremal(ClassSpec.boundary_rotation(query.k))


def sampled_pair(query, f_seed, g_seed, order=DEFAULT_ORDER, grid=None):
    theorem, alpha = query.theorem, query.alpha
    if theorem == Theorem.T41:
        return (sample_member(ClassSpec.janowski_starlike(query.A, query.B), f_seed, order=order, grid=grid),
                sample_member(ClassSpec.janowski_convex(query.A, query.B), g_seed, order=order, grid=grid))
    f = sample_member(ClassSpec.starlike(alpha), f_seed, order=order, grid=grid)
    if theorem in (Theorem.T42, Theorem.T43):
        # K(0) is contained in UL_1, hence in every UL_gamma
        return f, sample_member(ClassSpec.convex(0.0), g_seed, order=order, grid=grid)
    if theorem == Theorem.T45:
        return f, sample_member(ClassSpec.g_beta(query.beta), g_seed, order=order, grid=grid)
    phi = MoebiusParams.random(np.random.default_rng(g_seed))
    if theorem == Theorem.T44:
        return f, lif_transform(koebe(), phi)
    return f, lif_transform(extremal(ClassSpec.boundary_rotation(query.k)), phi)


def verify_theorem(query, mode="extremal", n=20, seed=42, grid=None, order=DEFAULT_ORDER):
    """One RadiusReport per pair; a pair is sound when its margin is >= -TOL_ACCEPT."""
    grid = grid or GridSpec()
    if mode not in ("extremal", "sampled"):
        raise UnsupportedSpec(f"Unknown verification mode: {mode}")
    r_formula = radius_formula(query).r
    threshold = convexity_threshold(query)

    if mode == "extremal":
        jobs = [(seed, lambda: extremal_pair(query))]
        run_grid = grid
    else:
        run_grid = grid.with_cap(min(grid.r_cap, SAMPLED_R_CAP))
        jobs = [(seed + 2 * i, lambda i=i: sampled_pair(query, seed + 2 * i, seed + 2 * i + 1, order, grid))
                for i in range(n)]

    reports = []
    for pair_seed, build in jobs:
        f, g = build()
        f, g = as_analytic(f), as_analytic(g)
        estimate = estimate_radius_details((f, g), threshold, run_grid)
        margin = estimate.r - min(r_formula, run_grid.r_cap)
        report = RadiusReport(query, r_formula, estimate.r, margin, estimate.worst_angle,
                              f"{f.label} | {g.label}", run_grid, estimate.failed_at, pair_seed, order)
        if not report.passed:
            logger.warning("%s: margin %.3g below -%g for %s", query, margin, TOL_ACCEPT, report.pair_label)
        reports.append(report)
    return reports


@dataclass(frozen=True)
class ProofChainAudit:
    f_slack: float
    g_slack: float
    points: int

    @property
    def passed(self):
        return self.f_slack >= -PROOF_CHAIN_TOL and self.g_slack >= -PROOF_CHAIN_TOL


def _f_side_bound(query, r):
    """Lower bound for Re(z f'/f) - alpha on |z| = r."""
    if query.theorem != Theorem.T41:
        return np.zeros_like(r)
    A, B, alpha = query.A, query.B, query.alpha
    numerator = 1 - alpha - abs(B - A) * r - ((A * np.conj(B)).real - alpha * abs(B) ** 2) * r ** 2
    return numerator / (1 - abs(B) ** 2 * r ** 2)


def _g_side_bound(query, r):
    """Lower bound for Re(1 + z g''/g') on |z| = r."""
    theorem = query.theorem
    if theorem == Theorem.T41:
        A, B = query.A, query.B
        return (1 - abs(B - A) * r - (A * np.conj(B)).real * r ** 2) / (1 - abs(B) ** 2 * r ** 2)
    if theorem == Theorem.T45:
        return 1 - query.beta * r / (1 - r)
    width = {Theorem.T42: lambda: 2 * query.gamma, Theorem.T43: lambda: 2.0, Theorem.T44: lambda: 4.0,
             Theorem.T46: lambda: query.k}[theorem]()
    return (1 - width * r + r ** 2) / (1 - r ** 2)


def proof_chain_audit(query, pair=None, n_points=50, seed=0, r_cap=None):
    """Smallest slack of the f-side and g-side lower bounds at random points inside the formula radius."""
    f, g = pair if pair is not None else extremal_pair(query)
    f, g = as_analytic(f), as_analytic(g)
    limit = min(radius_formula(query).r, r_cap or GridSpec().r_cap, f.max_radius, g.max_radius)
    rng = np.random.default_rng(seed)
    r = limit * rng.uniform(0.01, 1.0, size=n_points)
    z = r * np.exp(2j * np.pi * rng.uniform(size=n_points))
    f_slack = f.starlike_functional(z).real - query.alpha - _f_side_bound(query, r)
    g_slack = g.convexity_functional(z).real - _g_side_bound(query, r)
    return ProofChainAudit(float(np.min(f_slack)), float(np.min(g_slack)), n_points)


if __name__ == "__main__":
    grid = GridSpec()
    print(estimate_convexity_radius(koebe(), 0.0, grid))
    for report in verify_theorem(RadiusQuery(Theorem.T41, 0.0, A=2, B=-1), grid=grid):
        print(report.margin, report.to_row())
    print(estimate_radius((identity_fn(), identity_fn()), 0.0, grid))
