import numbers

import numpy as np

from dataclasses import dataclass, asdict
from Models.errors import InvalidParams
from Models.series import circle_angles


@dataclass(frozen=True)
class GridSpec:
    """Sampling plan shared by every numeric check: angles, radial scan steps, cap, tolerance, shells."""
    n_theta: int = 720
    n_radial: int = 512
    r_cap: float = 0.99
    tol: float = 1e-6
    n_shells: int = 32

    @staticmethod
    def from_dict(grid_dict):
        try:
            return GridSpec(**{key: grid_dict[key] for key in grid_dict
                               if key in GridSpec.__dataclass_fields__})
        except TypeError as e:
            raise InvalidParams(f"Invalid dictionary format for constructing a GridSpec: {e}")

    def __post_init__(self):
        for name in ("n_theta", "n_radial", "n_shells"):
            if not isinstance(getattr(self, name), numbers.Integral):
                raise InvalidParams(f"{name} must be an integer, got {getattr(self, name)!r}")
        for name in ("r_cap", "tol"):
            if not isinstance(getattr(self, name), numbers.Real):
                raise InvalidParams(f"{name} must be a real number, got {getattr(self, name)!r}")
        if int(self.n_theta) < 64:
            raise InvalidParams(f"n_theta must be >= 64, got {self.n_theta}")
        if int(self.n_radial) < 1:
            raise InvalidParams(f"n_radial must be >= 1, got {self.n_radial}")
        if not 0 < self.r_cap <= 0.999:
            raise InvalidParams(f"r_cap must lie in (0, 0.999], got {self.r_cap}")
        if not self.tol >= 1e-8:
            raise InvalidParams(f"tol must be >= 1e-8, got {self.tol}")
        if int(self.n_shells) < 1:
            raise InvalidParams(f"n_shells must be >= 1, got {self.n_shells}")

    def angles(self):
        return circle_angles(self.n_theta)

    def shell_radii(self, r):
        """n_shells concentric radii r/n_shells, ..., r (the origin is left out)."""
        return np.linspace(r / self.n_shells, r, self.n_shells)

    def with_cap(self, r_cap):
        return GridSpec(self.n_theta, self.n_radial, r_cap, self.tol, self.n_shells)

    def to_dict(self):
        return asdict(self)

    def __str__(self):
        return f"GridSpec({self.n_theta}x{self.n_shells}, n_radial={self.n_radial}, r_cap={self.r_cap}, tol={self.tol:g})"
