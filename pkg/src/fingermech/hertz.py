"""Hertzian sphere-on-surface contact of the pulp against a rigid environment.

Frictionless, non-adhesive, quasistatic; the environment is rigid, so only the
pulp enters the effective modulus.  Flat surfaces are a distinct variant
rather than an infinite radius to keep the arithmetic finite.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass, replace

from .errors import CurvatureMismatch


class EnvKind(enum.Enum):
    FLAT = "flat"
    CONVEX = "convex"
    CONCAVE = "concave"


@dataclass(frozen=True)
class Environment:
    """Contacted surface: flat, or a sphere of radius ``radius`` (convex bump
    or concave socket)."""

    kind: EnvKind
    radius: float | None = None

    def __post_init__(self):
        if self.kind is EnvKind.FLAT:
            if self.radius is not None:
                raise ValueError("flat environment takes no radius")
        else:
            if self.radius is None or self.radius <= 0:
                raise ValueError(f"{self.kind.value} environment needs a positive radius")

    @classmethod
    def flat(cls) -> "Environment":
        return cls(EnvKind.FLAT)

    @classmethod
    def convex(cls, radius: float) -> "Environment":
        return cls(EnvKind.CONVEX, radius)

    @classmethod
    def concave(cls, radius: float) -> "Environment":
        return cls(EnvKind.CONCAVE, radius)


@dataclass(frozen=True)
class ContactScenario:
    """Pulp sphere against an environment, with pulp elastic constants."""

    R_pulp: float
    env: Environment
    E_p: float
    nu_p: float

    def __post_init__(self):
        if self.R_pulp <= 0:
            raise ValueError("pulp radius must be positive")
        if self.E_p <= 0:
            raise ValueError("pulp modulus must be positive")
        if not 0.0 <= self.nu_p < 0.5:
            raise ValueError("Poisson ratio must lie in [0, 0.5)")

    def with_pulp_modulus(self, E_p: float) -> "ContactScenario":
        return replace(self, E_p=E_p)

    def with_env(self, env: Environment) -> "ContactScenario":
        return replace(self, env=env)


def effective_modulus(scenario: ContactScenario) -> float:
    """Plane-strain pulp modulus E* = E_p / (1 - nu_p^2)."""
    return scenario.E_p / (1.0 - scenario.nu_p**2)


def effective_radius(scenario: ContactScenario) -> float:
    """Combined-curvature radius: equals R_pulp on a flat surface; curvatures
    add against a convex body and subtract inside a concave socket."""
    R = scenario.R_pulp
    env = scenario.env
    if env.kind is EnvKind.FLAT:
        return R
    if env.kind is EnvKind.CONVEX:
        return 1.0 / (1.0 / R + 1.0 / env.radius)
    # concave: the pulp must fit inside the socket
    if env.radius <= R:
        raise CurvatureMismatch(
            f"concave radius {env.radius} must exceed pulp radius {R}"
        )
    return 1.0 / (1.0 / R - 1.0 / env.radius)


def contact_force(scenario: ContactScenario, delta_c: float) -> float:
    """Normal force at indentation delta_c: (4/3) E* sqrt(R_eff) delta_c^(3/2)."""
    if delta_c < 0:
        raise ValueError("delta_c must be non-negative")
    return (4.0 / 3.0) * effective_modulus(scenario) * math.sqrt(effective_radius(scenario)) * delta_c**1.5


def contact_radius(scenario: ContactScenario, delta_c: float) -> float:
    """Contact patch radius a = sqrt(R_eff * delta_c)."""
    if delta_c < 0:
        raise ValueError("delta_c must be non-negative")
    return math.sqrt(effective_radius(scenario) * delta_c)


def contact_energy(scenario: ContactScenario, delta_c: float) -> float:
    """Indentation strain energy (8/15) E* sqrt(R_eff) delta_c^(5/2)."""
    if delta_c < 0:
        raise ValueError("delta_c must be non-negative")
    return (8.0 / 15.0) * effective_modulus(scenario) * math.sqrt(effective_radius(scenario)) * delta_c**2.5
