"""
Volterra-type operators on analytic functions of the disc.

    T_g f(z) = int_0^z f(s) g'(s) ds,   J_g f(z) = int_0^z f'(s) g(s) ds,   M_g f = f g

For series inputs the operators act coefficientwise; for closed-form inputs the result
carries an evaluator that returns the operator value and its first two derivatives.
"""
import logging

import numpy as np

from dataclasses import dataclass
from typing import Callable, Optional
from Models.families import as_analytic
from Models.series import PowerSeries, EvalResult

logger = logging.getLogger(__name__)

QUADRATURE_NODES = 32
_nodes, _weights = np.polynomial.legendre.leggauss(QUADRATURE_NODES)
# nodes and weights moved from [-1, 1] to [0, 1]
_t = (_nodes + 1) / 2
_w = _weights / 2


@dataclass(frozen=True)
class OperatorResult:
    series: Optional[PowerSeries] = None
    evaluator: Optional[Callable] = None

    def evaluate(self, z):
        if self.evaluator is not None:
            return self.evaluator(z)
        return self.series.evaluate(z)


def _segment_integral(integrand, z):
    """int_0^z integrand(s) ds along the straight segment, Gauss-Legendre."""
    z_arr = np.asarray(z, dtype=complex)
    s = z_arr[..., None] * _t
    values = z_arr * np.sum(_w * integrand(s), axis=-1)
    if np.ndim(z) == 0:
        return complex(values)
    return values


def _series_pair(f, g):
    return isinstance(f, PowerSeries) and isinstance(g, PowerSeries)


def t_g(f, g):
    """T_g f with T' = f g' and T'' = f' g' + f g''."""
    series = (f * g.differentiate()).integrate() if _series_pair(f, g) else None
    f_fn, g_fn = as_analytic(f), as_analytic(g)

    def evaluator(z):
        fv, gv = f_fn.evaluate(z), g_fn.evaluate(z)
        value = _segment_integral(lambda s: f_fn.evaluate(s).value * g_fn.evaluate(s).d1, z)
        return EvalResult(value, fv.value * gv.d1, fv.d1 * gv.d1 + fv.value * gv.d2)

    return OperatorResult(series, evaluator)


def j_g(f, g):
    """J_g f with J' = f' g and J'' = f'' g + f' g'."""
    series = (f.differentiate() * g).integrate() if _series_pair(f, g) else None
    f_fn, g_fn = as_analytic(f), as_analytic(g)

    def evaluator(z):
        fv, gv = f_fn.evaluate(z), g_fn.evaluate(z)
        value = _segment_integral(lambda s: f_fn.evaluate(s).d1 * g_fn.evaluate(s).value, z)
        return EvalResult(value, fv.d1 * gv.value, fv.d2 * gv.value + fv.d1 * gv.d1)

    return OperatorResult(series, evaluator)


def m_g(f, g):
    series = f * g if _series_pair(f, g) else None
    f_fn, g_fn = as_analytic(f), as_analytic(g)

    def evaluator(z):
        fv, gv = f_fn.evaluate(z), g_fn.evaluate(z)
        return EvalResult(fv.value * gv.value, fv.d1 * gv.value + fv.value * gv.d1,
                          fv.d2 * gv.value + 2 * fv.d1 * gv.d1 + fv.value * gv.d2)

    return OperatorResult(series, evaluator)


def identity_residual(f, g):
    """Largest coefficient of J_g f + T_g f - (M_g f - f(0) g(0)); zero up to rounding."""
    lhs = j_g(f, g).series + t_g(f, g).series
    rhs = m_g(f, g).series - f[0] * g[0]
    residual = float(np.max(np.abs((lhs - rhs).coeffs)))
    logger.debug("identity residual %.3g at order %d", residual, lhs.order)
    return residual


def convexity_functional_T(f, g, z):
    """q_T(z) = z f'/f + z g''/g' + 1, the value of 1 + z T''/T' for T = T_g f; 2 at the origin."""
    return as_analytic(f).starlike_functional(z) + as_analytic(g).convexity_functional(z)


def convexity_functional_T_on_circle(f, g, r, n_theta):
    """q_T at r exp(2 pi i j / n_theta), j = 0..n_theta-1."""
    f_fn, g_fn = as_analytic(f), as_analytic(g)
    return f_fn.starlike_on_circle(r, n_theta) + g_fn.convexity_on_circle(r, n_theta)


if __name__ == "__main__":
    z = PowerSeries.identity(16)
    print(t_g(z, z).series)
    print(identity_residual(z * PowerSeries.geometric(16), z * PowerSeries.geometric(16)))
