"""
Closed-form radii of convexity for the Volterra operator T_g and a bisection oracle.

Each theorem reduces to the positivity of a quadratic c0 + c1 r + c2 r^2 on [0, r); the
formulas below return its smallest positive root in rationalised form, and
quad_root_oracle recovers the same root from the coefficients alone.
"""
import logging
import math

import numpy as np

from dataclasses import dataclass
from enum import Enum
from scipy.optimize import bisect
from Models.errors import InvalidParams, NoPositiveStart
from Models.families import check_real, to_complex

logger = logging.getLogger(__name__)

ORACLE_TOL = 1e-12
ORACLE_SAMPLES = 1025
DEGENERATE_TOL = 1e-14


class Theorem(Enum):
    T41 = "t41"
    T42 = "t42"
    T43 = "t43"
    T44 = "t44"
    T45 = "t45"
    T46 = "t46"


class Branch(Enum):
    quadratic = "quadratic"
    linear = "linear"
    whole_disc = "whole-disc"


@dataclass(frozen=True)
class RadiusValue:
    r: float
    branch: Branch

    def __post_init__(self):
        if not 0 < self.r <= 1:
            raise InvalidParams(f"radius must lie in (0, 1], got {self.r}")

    def to_dict(self):
        return {"r": self.r, "branch": self.branch.value}

    def __str__(self):
        return f"r={self.r:.10g} branch={self.branch.value}"


@dataclass(frozen=True)
class RadiusQuery:
    theorem: Theorem
    alpha: float = 0.0
    A: complex = None
    B: complex = None
    gamma: float = None
    beta: float = None
    k: float = None

    @staticmethod
    def from_dict(query_dict):
        if 'theorem' not in query_dict:
            raise InvalidParams("Invalid dictionary format for constructing a RadiusQuery.")
        return RadiusQuery(query_dict['theorem'], query_dict.get('alpha', 0.0),
                           A=query_dict.get('A'), B=query_dict.get('B'), gamma=query_dict.get('gamma'),
                           beta=query_dict.get('beta'), k=query_dict.get('k'))

    def __post_init__(self):
        if not isinstance(self.theorem, Theorem):
            try:
                object.__setattr__(self, 'theorem', Theorem(str(self.theorem).lower()))
            except ValueError:
                raise InvalidParams(f"Unknown theorem: {self.theorem}")
        object.__setattr__(self, 'A', to_complex(self.A, 'A'))
        object.__setattr__(self, 'B', to_complex(self.B, 'B'))
        for name in ('alpha', 'gamma', 'beta', 'k'):
            check_real(name, getattr(self, name))
        if not 0 <= self.alpha < 1:
            raise InvalidParams(f"alpha must lie in [0, 1), got {self.alpha}")

        theorem = self.theorem
        if theorem == Theorem.T41:
            if self.A is None or self.B is None:
                raise InvalidParams("t41 needs both A and B")
            if not abs(self.A) > 1:
                raise InvalidParams(f"t41 needs |A| > 1, got |A| = {abs(self.A):.6g}")
            if not abs(self.B) <= 1:
                raise InvalidParams(f"t41 needs |B| <= 1, got |B| = {abs(self.B):.6g}")
        elif theorem == Theorem.T42:
            if self.gamma is None or not self.gamma >= 1:
                raise InvalidParams(f"t42 needs gamma >= 1, got {self.gamma}")
        elif theorem == Theorem.T45:
            if self.beta is None or not 0 < self.beta <= 1:
                raise InvalidParams(f"t45 needs beta in (0, 1], got {self.beta}")
        elif theorem == Theorem.T46:
            if self.k is None or not self.k >= 2:
                raise InvalidParams(f"t46 needs k >= 2, got {self.k}")

    def to_dict(self):
        query_dict = {"theorem": self.theorem.value, "alpha": self.alpha}
        for name in ("A", "B"):
            value = getattr(self, name)
            if value is not None:
                query_dict[name] = [value.real, value.imag]
        for name in ("gamma", "beta", "k"):
            value = getattr(self, name)
            if value is not None:
                query_dict[name] = value
        return query_dict

    def __str__(self):
        params = ", ".join(f"{key}={value}" for key, value in self.to_dict().items() if key != "theorem")
        return f"{self.theorem.value}({params})"


def _capped(r, branch):
    if r >= 1:
        return RadiusValue(1.0, Branch.whole_disc)
    return RadiusValue(float(r), branch)


def radius_janowski(A, B, alpha):
    """Largest r with 2 - alpha - 2|B - A| r - (2 Re(A conj B) - alpha |B|^2) r^2 > 0 on [0, r)."""
    query = RadiusQuery(Theorem.T41, alpha, A=A, B=B)
    A, B = query.A, query.B
    if B == 0:
        return _capped((2 - alpha) / (2 * abs(A)), Branch.linear)
    c2 = alpha * abs(B) ** 2 - 2 * (A * np.conj(B)).real
    branch = Branch.linear if abs(c2) <= DEGENERATE_TOL else Branch.quadratic
    # rationalised smaller root; reduces to (2 - alpha) / (2 |B - A|) when c2 = 0
    r = (2 - alpha) / (abs(B - A) + abs((alpha - 1) * B - A))
    return _capped(r, branch)


def _radius_from_gamma(alpha, gamma):
    # smaller root of 1 + alpha - 2 gamma r + (1 - alpha) r^2
    return (1 + alpha) / (gamma + math.sqrt(alpha ** 2 + gamma ** 2 - 1))


def radius_formula(query):
    theorem, alpha = query.theorem, query.alpha
    if theorem == Theorem.T41:
        return radius_janowski(query.A, query.B, alpha)
    if theorem == Theorem.T42:
        return _capped(_radius_from_gamma(alpha, query.gamma), Branch.quadratic)
    if theorem == Theorem.T43:
        return RadiusValue(1.0, Branch.whole_disc)
    if theorem == Theorem.T44:
        return _capped(_radius_from_gamma(alpha, 2.0), Branch.quadratic)
    if theorem == Theorem.T45:
        return _capped((1 + alpha) / (1 + alpha + query.beta), Branch.linear)
    k = query.k
    # smaller root of (1 - alpha) r^2 - k r + 1 + alpha
    return _capped(2 * (1 + alpha) / (k + math.sqrt(k ** 2 - 4 * (1 - alpha ** 2))), Branch.quadratic)


def proof_polynomial(query):
    """(c2, c1, c0) of the quadratic whose positivity on [0, r) gives the theorem's radius."""
    theorem, alpha = query.theorem, query.alpha
    if theorem == Theorem.T41:
        A, B = query.A, query.B
        return (alpha * abs(B) ** 2 - 2 * (A * np.conj(B)).real, -2 * abs(B - A), 2 - alpha)
    if theorem in (Theorem.T42, Theorem.T44):
        gamma = query.gamma if theorem == Theorem.T42 else 2.0
        return (1 - alpha, -2 * gamma, 1 + alpha)
    if theorem == Theorem.T43:
        # the gamma = 1 quadratic, (1 - r)^2 for alpha = 0
        return (1 - alpha, -2.0, 1 + alpha)
    if theorem == Theorem.T45:
        return (0.0, -(1 + alpha + query.beta), 1 + alpha)
    return (1 - alpha, -query.k, 1 + alpha)


def quad_root_oracle(c2, c1, c0):
    """Smallest positive root of c0 + c1 r + c2 r^2 in (0, 1], located by sampling and bisection."""
    def poly(r):
        return c0 + c1 * r + c2 * r * r

    if poly(0.0) <= 0:
        raise NoPositiveStart(f"polynomial {c0} + {c1} r + {c2} r^2 is not positive at r = 0")

    top = 1 - ORACLE_TOL
    samples = np.linspace(0.0, 1.0, ORACLE_SAMPLES)
    samples[-1] = top
    if c2 != 0:
        vertex = -c1 / (2 * c2)
        if 0 < vertex < top:
            samples = np.sort(np.append(samples, vertex))
    values = poly(samples)
    nonpositive = np.nonzero(values <= 0)[0]
    if nonpositive.size == 0:
        return RadiusValue(1.0, Branch.whole_disc)

    first = nonpositive[0]
    lo, hi = samples[first - 1], samples[first]
    if values[first] == 0:
        root = hi
    else:
        root = bisect(poly, lo, hi, xtol=ORACLE_TOL)
    logger.debug("oracle root %.15g in [%.6g, %.6g]", root, lo, hi)
    branch = Branch.linear if c2 == 0 else Branch.quadratic
    return RadiusValue(float(root), branch)


if __name__ == "__main__":
    print(radius_janowski(2, 1, 0), radius_janowski(2, -1, 0))
    print(radius_formula(RadiusQuery(Theorem.T44)))
    print(quad_root_oracle(1, -4, 1))
