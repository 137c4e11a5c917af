"""
Truncated complex power series about 0.

A PowerSeries holds the Taylor coefficients a_0..a_N of an analytic function on the
unit disc. All arithmetic truncates at degree N, so a series behaves like the exact
polynomial of degree N it stores; nothing beyond a_N is ever guessed.

    >>> f = PowerSeries.identity(16) * PowerSeries.geometric(16)   # z/(1-z)
    >>> p, q = log_derivative_functionals(f)                       # zf'/f, 1+zf''/f'

Evaluation is only trusted inside |z| <= R_MAX; past that the closed-form
evaluators in Models.families take over.
"""
import logging

import numpy as np

from dataclasses import dataclass
from Models.errors import (InvalidSeries, ZeroConstantTerm, NonzeroConstantTerm,
                           RadiusTooLarge, TruncationUnreliable)

logger = logging.getLogger(__name__)

DEFAULT_ORDER = 256
MIN_ORDER = 8
R_MAX = 0.95
TAIL_TOL = 1e-6
NORMALIZED_TOL = 1e-12


def circle_angles(n_theta):
    """Equispaced angles 2*pi*j/n_theta, j = 0..n_theta-1."""
    return 2.0 * np.pi * np.arange(n_theta) / n_theta


def _circle_sum(weights, n_theta):
    # sum_n w_n exp(i n theta_j) on the equispaced circle, folding n mod n_theta
    blocks = -(-len(weights) // n_theta)
    padded = np.zeros(blocks * n_theta, dtype=complex)
    padded[:len(weights)] = weights
    folded = padded.reshape(blocks, n_theta).sum(axis=0)
    return n_theta * np.fft.ifft(folded)


def _squeeze(values, like):
    if np.ndim(like) == 0:
        return complex(values)
    return values


@dataclass(frozen=True)
class EvalResult:
    """Function value and first two derivatives at one point (or an array of points)."""
    value: object
    d1: object
    d2: object
    tail: float = 0.0

    def is_finite(self):
        return bool(np.all(np.isfinite(self.value)) and np.all(np.isfinite(self.d1))
                    and np.all(np.isfinite(self.d2)))


class PowerSeries:

    @staticmethod
    def from_dict(series_dict):
        if 'coeffs' not in series_dict:
            raise InvalidSeries("Invalid dictionary format for constructing a PowerSeries.")
        try:
            coeffs = [complex(re, im) for re, im in series_dict['coeffs']]
            order = series_dict.get('order')
            order = None if order is None else int(order)
        except (TypeError, ValueError) as e:
            raise InvalidSeries(f"coeffs must be a list of [re, im] pairs and order an integer: {e}")
        return PowerSeries(coeffs, order=order)

    @staticmethod
    def is_valid_series(coeffs):
        coeffs = np.asarray(coeffs, dtype=complex)
        return coeffs.ndim == 1 and len(coeffs) > MIN_ORDER and bool(np.all(np.isfinite(coeffs)))

    @staticmethod
    def constant(value, order=DEFAULT_ORDER):
        return PowerSeries([value], order=order)

    @staticmethod
    def identity(order=DEFAULT_ORDER):
        return PowerSeries([0, 1], order=order)

    @staticmethod
    def geometric(order=DEFAULT_ORDER, ratio=1.0):
        """1/(1 - ratio*z)."""
        return PowerSeries(np.asarray(ratio, dtype=complex) ** np.arange(order + 1), order=order)

    def __init__(self, coeffs, order=None):
        coeffs = np.array(coeffs, dtype=complex).ravel()
        if order is not None:
            order = int(order)
            if len(coeffs) < order + 1:
                coeffs = np.concatenate([coeffs, np.zeros(order + 1 - len(coeffs), dtype=complex)])
            coeffs = coeffs[:order + 1]
        if not PowerSeries.is_valid_series(coeffs):
            raise InvalidSeries(f"A series needs finite coefficients and order >= {MIN_ORDER}, "
                                f"got {len(coeffs) - 1} coefficients past a_0")
        coeffs.flags.writeable = False
        self._coeffs = coeffs

    @property
    def coeffs(self):
        return self._coeffs

    @property
    def order(self):
        return len(self._coeffs) - 1

    def __getitem__(self, n):
        return self._coeffs[n]

    def __len__(self):
        return len(self._coeffs)

    def __iter__(self):
        return iter(self._coeffs)

    def is_normalized(self, tol=NORMALIZED_TOL):
        return abs(self._coeffs[0]) <= tol and abs(self._coeffs[1] - 1) <= tol

    def padded(self, order):
        if order == self.order:
            return self
        return PowerSeries(self._coeffs, order=order)

    def _aligned(self, other):
        order = max(self.order, other.order)
        return self.padded(order).coeffs, other.padded(order).coeffs, order

    # arithmetic

    def add(self, other):
        if not isinstance(other, PowerSeries):
            coeffs = self._coeffs.copy()
            coeffs[0] += other
            return PowerSeries(coeffs)
        a, b, order = self._aligned(other)
        return PowerSeries(a + b)

    def sub(self, other):
        return self.add(-other)

    def mul(self, other):
        if not isinstance(other, PowerSeries):
            return PowerSeries(complex(other) * self._coeffs)
        a, b, order = self._aligned(other)
        return PowerSeries(np.convolve(a, b)[:order + 1])

    def __add__(self, other):
        return self.add(other)

    def __radd__(self, other):
        return self.add(other)

    def __sub__(self, other):
        return self.sub(other)

    def __rsub__(self, other):
        return (-self).add(other)

    def __neg__(self):
        return PowerSeries(-self._coeffs)

    def __mul__(self, other):
        return self.mul(other)

    def __rmul__(self, other):
        return self.mul(other)

    # calculus

    def differentiate(self):
        """b_n = (n+1) a_{n+1}; the top coefficient is 0 since the stored polynomial has degree N."""
        coeffs = np.zeros_like(self._coeffs)
        coeffs[:-1] = self._coeffs[1:] * np.arange(1, self.order + 1)
        return PowerSeries(coeffs)

    def integrate(self):
        """Primitive with constant 0: b_0 = 0, b_n = a_{n-1}/n."""
        coeffs = np.zeros_like(self._coeffs)
        coeffs[1:] = self._coeffs[:-1] / np.arange(1, self.order + 1)
        return PowerSeries(coeffs)

    def shift_up(self):
        """z * a, truncated."""
        coeffs = np.zeros_like(self._coeffs)
        coeffs[1:] = self._coeffs[:-1]
        return PowerSeries(coeffs)

    def shift_down(self):
        """a / z; needs a_0 = 0."""
        if abs(self._coeffs[0]) > NORMALIZED_TOL:
            raise NonzeroConstantTerm(f"a/z needs a_0 = 0, got a_0 = {self._coeffs[0]}")
        coeffs = np.zeros_like(self._coeffs)
        coeffs[:-1] = self._coeffs[1:]
        return PowerSeries(coeffs)

    # transcendental

    def reciprocal(self):
        a = self._coeffs
        if a[0] == 0:
            raise ZeroConstantTerm("reciprocal needs a nonzero constant term")
        b = np.zeros_like(a)
        b[0] = 1.0 / a[0]
        for n in range(1, self.order + 1):
            b[n] = -np.dot(a[1:n + 1], b[n - 1::-1]) / a[0]
        return PowerSeries(b)

    def log(self):
        """Principal branch at a_0: log a = Log(a_0) + integral of a'/a."""
        a0 = self._coeffs[0]
        if a0 == 0:
            raise ZeroConstantTerm("log needs a nonzero constant term")
        coeffs = (self.differentiate() * self.reciprocal()).integrate().coeffs.copy()
        coeffs[0] = np.log(a0)
        return PowerSeries(coeffs)

    def exp(self):
        a = self._coeffs
        if a[0] != 0:
            raise NonzeroConstantTerm(f"exp needs a_0 = 0, got a_0 = {a[0]}")
        weighted = a * np.arange(self.order + 1)
        b = np.zeros_like(a)
        b[0] = 1.0
        for n in range(1, self.order + 1):
            b[n] = np.dot(weighted[1:n + 1], b[n - 1::-1]) / n
        return PowerSeries(b)

    def pow(self, exponent):
        """Principal branch: a^c = a_0^c * exp(c * log(a / a_0))."""
        a0 = self._coeffs[0]
        if a0 == 0:
            raise ZeroConstantTerm("pow needs a nonzero constant term")
        exponent = complex(exponent)
        logs = (self * (1.0 / a0)).log().coeffs.copy()
        logs[0] = 0.0
        return PowerSeries(exponent * logs).exp() * np.exp(exponent * np.log(a0))

    # evaluation

    def tail_estimate(self, radius):
        return float(abs(self._coeffs[-1]) * radius ** self.order * self.order ** 2)

    def _check_radius(self, radius, r_max, tol):
        if radius > r_max + 1e-12:
            raise RadiusTooLarge(f"series evaluation needs |z| <= {r_max}, got {radius:.6g}")
        tail = self.tail_estimate(radius)
        if tol is not None and tail > tol:
            raise TruncationUnreliable(f"truncation tail {tail:.3g} at |z| = {radius:.6g} "
                                       f"exceeds {tol:.3g} (order {self.order})")
        return tail

    def evaluate(self, z, tol=TAIL_TOL, r_max=R_MAX):
        z_arr = np.asarray(z, dtype=complex)
        radius = float(np.max(np.abs(z_arr))) if z_arr.size else 0.0
        tail = self._check_radius(radius, r_max, tol)

        value = np.zeros_like(z_arr)
        d1 = np.zeros_like(z_arr)
        d2 = np.zeros_like(z_arr)
        for c in self._coeffs[::-1]:
            d2 = d2 * z_arr + 2.0 * d1
            d1 = d1 * z_arr + value
            value = value * z_arr + c
        return EvalResult(_squeeze(value, z), _squeeze(d1, z), _squeeze(d2, z), tail)

    def on_circle(self, r, n_theta, tol=TAIL_TOL, r_max=R_MAX):
        """Value, f' and f'' at r*exp(i*theta_j) for the angles of circle_angles(n_theta)."""
        tail = self._check_radius(r, r_max, tol)
        if r == 0:
            ones = np.ones(n_theta, dtype=complex)
            return EvalResult(self._coeffs[0] * ones, self._coeffs[1] * ones,
                              2.0 * self._coeffs[2] * ones, tail)
        n = np.arange(self.order + 1)
        scaled = self._coeffs * r ** n
        z = r * np.exp(1j * circle_angles(n_theta))
        value = _circle_sum(scaled, n_theta)
        d1 = _circle_sum(n * scaled, n_theta) / z
        d2 = _circle_sum(n * (n - 1) * scaled, n_theta) / z ** 2
        return EvalResult(value, d1, d2, tail)

    def to_dict(self):
        return {"order": self.order,
                "coeffs": [[float(c.real), float(c.imag)] for c in self._coeffs]}

    def __str__(self):
        head = ', '.join(f"{c:.6g}" for c in self._coeffs[:4])
        return f"PowerSeries(order={self.order}, coeffs=[{head}, ...])"

    __repr__ = __str__


def ps_arith(a, b, op):
    if op == 'add':
        return a.add(b)
    elif op == 'sub':
        return a.sub(b)
    elif op == 'mul':
        return a.mul(b)
    raise ValueError(f"Unknown arithmetic op: {op}")


def ps_calculus(a, op):
    if op == 'differentiate':
        return a.differentiate()
    elif op == 'integrate':
        return a.integrate()
    raise ValueError(f"Unknown calculus op: {op}")


def ps_transcendental(a, op, c=None):
    if op == 'reciprocal':
        return a.reciprocal()
    elif op == 'log':
        return a.log()
    elif op == 'exp':
        return a.exp()
    elif op == 'pow':
        if c is None:
            raise ValueError("pow needs an exponent")
        return a.pow(c)
    raise ValueError(f"Unknown transcendental op: {op}")


def log_derivative_functionals(f):
    """
    Starlikeness and convexity functionals of a normalized series as series.

    Returns (p, q) with p = z f'/f and q = 1 + z f''/f'; both have constant term exactly 1.
    Coefficient N of either depends on a_{N+1}, which a series of order N does not carry,
    so both come back at order N - 1.
    """
    coeffs = f.coeffs
    if abs(coeffs[0]) > NORMALIZED_TOL:
        raise InvalidSeries(f"log_derivative_functionals needs f(0) = 0, got {coeffs[0]}")
    if coeffs[1] == 0:
        raise ZeroConstantTerm("f/z has a vanishing constant term")

    derivative = f.differentiate()
    p = (derivative * f.shift_down().reciprocal()).coeffs.copy()
    weighted = PowerSeries(derivative.coeffs * np.arange(1, f.order + 2))
    q = (weighted * derivative.reciprocal()).coeffs.copy()
    p[0] = 1.0
    q[0] = 1.0
    return PowerSeries(p[:-1]), PowerSeries(q[:-1])


def ps_eval(a, z, tol=TAIL_TOL):
    return a.evaluate(z, tol=tol)


if __name__ == "__main__":
    koebe = PowerSeries.identity(64) * PowerSeries.geometric(64) * PowerSeries.geometric(64)
    p, q = log_derivative_functionals(koebe)
    print(koebe)
    print(q.evaluate(0.5).value)  # 13/3
