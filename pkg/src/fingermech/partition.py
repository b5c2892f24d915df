"""Deformation partitioning between beam bending and contact indentation.

A prescribed fingertip approach delta_total splits into bending delta_b and
indentation delta_c so that total strain energy is minimal.  Eliminating the
Lagrange multiplier of the constrained minimum leaves a single scalar root
problem

    delta_c + beta * delta_c^(3/2) = delta_total,
    beta = 4 E* sqrt(R_eff) L^3 / (9 (EI)_eff),

whose residual is monotone in delta_c.  Small beta (stiff beam, e.g. a rigid
nail) pushes the deformation into local indentation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import beam as _beam
from . import hertz as _hertz
from .beam import FingertipSection, bending_energy, section_effective_rigidity
from .errors import ModelInconsistency, NonConvergence
from .hertz import ContactScenario, EnvKind, contact_energy, contact_radius, effective_modulus, effective_radius

#: residual tolerance of the partition root, relative to max(1, delta_total)
RESIDUAL_RTOL = 1e-12

#: iteration budget of the safeguarded Newton solver
MAX_ITERATIONS = 200


@dataclass(frozen=True)
class PartitionResult:
    """Energy-minimizing deformation split and associated energies."""

    delta_total: float
    delta_b: float
    delta_c: float
    U_b: float
    U_c: float
    U_total: float
    eta_contact: float
    beta: float
    contact_radius_a: float


def beta(section: FingertipSection, scenario: ContactScenario) -> float:
    """Partition parameter 4 E* sqrt(R_eff) L^3 / (9 (EI)_eff)."""
    EI_eff = section_effective_rigidity(section)
    E_star = effective_modulus(scenario)
    R_eff = effective_radius(scenario)
    L = section.length
    return 4.0 * E_star * math.sqrt(R_eff) * L**3 / (9.0 * EI_eff)


def solve_partition(
    beta_value: float, delta_total: float, max_iter: int = MAX_ITERATIONS
) -> tuple[float, float]:
    """Solve delta_c + beta * delta_c^(3/2) = delta_total for delta_c.

    Returns ``(delta_c, delta_b)``.  Safeguarded Newton on [0, delta_total]
    with bisection fallback; the residual is smooth, increasing and convex, so
    the iteration is polished to machine precision (well inside the contract
    of 1e-12 * max(1, delta_total)).
    """
    if beta_value < 0:
        raise ValueError("beta must be non-negative")
    if delta_total < 0:
        raise ValueError("delta_total must be non-negative")
    if delta_total == 0.0:
        return 0.0, 0.0
    if beta_value == 0.0:
        return delta_total, 0.0

    def g(x: float) -> float:
        return x + beta_value * x**1.5 - delta_total

    lo, hi = 0.0, delta_total  # g(lo) = -delta_total < 0 <= g(hi)
    x = delta_total / (1.0 + beta_value * math.sqrt(delta_total))
    for _ in range(max_iter):
        gx = g(x)
        if gx == 0.0:
            break
        if gx < 0.0:
            lo = x
        else:
            hi = x
        dg = 1.0 + 1.5 * beta_value * math.sqrt(x)
        x_new = x - gx / dg
        if not (lo < x_new < hi):
            x_new = 0.5 * (lo + hi)
        if x_new == x:
            break
        x = x_new
    tol = RESIDUAL_RTOL * max(1.0, delta_total)
    if abs(g(x)) > tol:
        raise NonConvergence(
            f"partition root residual {g(x):.3e} above tolerance {tol:.3e} "
            f"after {max_iter} iterations"
        )
    return x, delta_total - x


def partition(
    section: FingertipSection, scenario: ContactScenario, delta_total: float
) -> PartitionResult:
    """Full energy-minimizing partition of a prescribed fingertip approach.

    At delta_total = 0 every energy vanishes and eta_contact is defined as 1,
    its limit for any fixed beta as the approach goes to zero.
    """
    b = beta(section, scenario)
    delta_c, delta_b = solve_partition(b, delta_total)
    EI_eff = section_effective_rigidity(section)
    U_b = bending_energy(EI_eff, section.length, delta_b)
    U_c = contact_energy(scenario, delta_c)
    U_total = U_b + U_c
    eta = U_c / U_total if U_total > 0.0 else 1.0
    return PartitionResult(
        delta_total=delta_total,
        delta_b=delta_b,
        delta_c=delta_c,
        U_b=U_b,
        U_c=U_c,
        U_total=U_total,
        eta_contact=eta,
        beta=b,
        contact_radius_a=contact_radius(scenario, delta_c),
    )


@dataclass(frozen=True)
class HeatmapGrid:
    """Rectangular grid of contact-energy fractions over two modulus axes.

    ``values[i, j]`` belongs to ``axis1[i]`` (nail modulus) and ``axis2[j]``
    (pulp modulus); rows are emitted in row-major order.
    """

    axis1_name: str
    axis1: np.ndarray
    axis2_name: str
    axis2: np.ndarray
    values: np.ndarray
    delta_total: float

    def rows(self):
        for i, a1 in enumerate(self.axis1):
            for j, a2 in enumerate(self.axis2):
                yield float(a1), float(a2), float(self.values[i, j])

    def write_csv(self, stream) -> None:
        stream.write(
            f"# axis1={self.axis1_name} axis2={self.axis2_name} "
            f"delta_total={self.delta_total!r}\n"
        )
        for a1, a2, eta in self.rows():
            stream.write(f"{a1!r},{a2!r},{eta!r}\n")


# slack for the structural monotonicity self-check; generously above roundoff,
# far below any real violation
_MONOTONE_SLACK = 1e-9


def sweep_eta(
    nail_moduli: Sequence[float],
    pulp_moduli: Sequence[float],
    section: FingertipSection,
    scenario: ContactScenario,
    delta_total: float,
) -> HeatmapGrid:
    """eta_contact over a (nail modulus) x (pulp modulus) grid.

    The pulp axis replaces the modulus in both the beam section and the
    contact scenario; they describe the same material.  The grid is checked
    against the model's monotonicity guarantees (stiffer nail never lowers
    eta, stiffer pulp never raises it); a violation indicates a numerical
    defect, not bad input.
    """
    axis1 = np.asarray(nail_moduli, dtype=float)
    axis2 = np.asarray(pulp_moduli, dtype=float)
    for name, axis in (("nail", axis1), ("pulp", axis2)):
        if axis.ndim != 1 or axis.size < 2:
            raise ValueError(f"{name} axis needs at least 2 points")
        if not np.all(np.diff(axis) > 0):
            raise ValueError(f"{name} axis must be strictly increasing")
        if not np.all(axis > 0):
            raise ValueError(f"{name} axis moduli must be positive")

    values = np.empty((axis1.size, axis2.size))
    for i, e_n in enumerate(axis1):
        for j, e_p in enumerate(axis2):
            sec = section.with_moduli(E_p=float(e_p), E_n=float(e_n))
            scen = scenario.with_pulp_modulus(float(e_p))
            values[i, j] = partition(sec, scen, delta_total).eta_contact

    slack = _MONOTONE_SLACK
    if np.any(np.diff(values, axis=0) < -slack):
        raise ModelInconsistency("eta decreased along the nail-stiffness axis")
    if np.any(np.diff(values, axis=1) > slack):
        raise ModelInconsistency("eta increased along the pulp-stiffness axis")

    return HeatmapGrid(
        axis1_name="E_n",
        axis1=axis1,
        axis2_name="E_p",
        axis2=axis2,
        values=values,
        delta_total=delta_total,
    )


@dataclass(frozen=True)
class TrendEntry:
    """Partition outcome for one (section, environment) pairing."""

    section_label: str
    env_kind: str
    env_radius: float | None
    beta: float
    delta_c: float
    contact_radius_a: float


@dataclass(frozen=True)
class TrendReport:
    """Curvature sensitivity of the indentation depth, with and without nail.

    ``rel_shift_*`` is (delta_c_flat - delta_c_convex) / delta_c_flat; the
    nail is judged stabilizing when it shifts delta_c less in magnitude going
    from flat to convex contact.  Shift fields are None when the scenario list
    lacks a flat or convex entry.
    """

    entries: tuple[TrendEntry, ...]
    delta_total: float
    beta_flat_with_nail: float | None
    beta_flat_without_nail: float | None
    rel_shift_with_nail: float | None
    rel_shift_without_nail: float | None
    nail_stabilizes: bool | None

    def write_csv(self, stream) -> None:
        stream.write("section,env,R_env,beta,delta_c,contact_radius_a\n")
        for e in self.entries:
            radius = "" if e.env_radius is None else repr(e.env_radius)
            stream.write(
                f"{e.section_label},{e.env_kind},{radius},{e.beta!r},"
                f"{e.delta_c!r},{e.contact_radius_a!r}\n"
            )


def curvature_trend(
    section_with_nail: FingertipSection,
    section_without_nail: FingertipSection,
    scenarios: Sequence[ContactScenario],
    delta_total: float,
) -> TrendReport:
    """Compare indentation across environments for nailed/nail-less sections."""
    entries = []
    results: dict[tuple[str, EnvKind], PartitionResult] = {}
    for label, sec in (("with_nail", section_with_nail), ("without_nail", section_without_nail)):
        for scen in scenarios:
            res = partition(sec, scen, delta_total)
            results[(label, scen.env.kind)] = res
            entries.append(
                TrendEntry(
                    section_label=label,
                    env_kind=scen.env.kind.value,
                    env_radius=scen.env.radius,
                    beta=res.beta,
                    delta_c=res.delta_c,
                    contact_radius_a=res.contact_radius_a,
                )
            )

    def rel_shift(label: str) -> float | None:
        flat = results.get((label, EnvKind.FLAT))
        convex = results.get((label, EnvKind.CONVEX))
        if flat is None or convex is None or flat.delta_c == 0.0:
            return None
        return (flat.delta_c - convex.delta_c) / flat.delta_c

    shift_with = rel_shift("with_nail")
    shift_without = rel_shift("without_nail")
    stabilizes = None
    if shift_with is not None and shift_without is not None:
        stabilizes = abs(shift_with) < abs(shift_without)

    flat_with = results.get(("with_nail", EnvKind.FLAT))
    flat_without = results.get(("without_nail", EnvKind.FLAT))
    return TrendReport(
        entries=tuple(entries),
        delta_total=delta_total,
        beta_flat_with_nail=None if flat_with is None else flat_with.beta,
        beta_flat_without_nail=None if flat_without is None else flat_without.beta,
        rel_shift_with_nail=shift_with,
        rel_shift_without_nail=shift_without,
        nail_stabilizes=stabilizes,
    )
