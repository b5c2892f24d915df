"""Planar five-bar linkage: loop closure, mechanical advantage, workspace maps.

All joint angles are absolute angles in the ground frame and the link vectors
chain tip-to-tail in index order, so a closed configuration satisfies

    sum_i L_i * (cos phi_i, sin phi_i) = 0.

Inputs are (phi1, phi2); phi5 is the fixed ground angle; (phi3, phi4) follow
from closure as a two-circle intersection with an explicit elbow branch.

The mechanical advantage N = d(phi2)/d(phi4) is the closure-constrained
Jacobian ratio between actuator and output joint, holding phi1 and phi5
fixed.  Under the tip-to-tail convention above it evaluates to

    N = -L4 sin(phi4 - phi3) / (L2 sin(phi2 - phi3)),

whose denominator vanishes at transmission singularities.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from .errors import DegenerateClosure, EmptyWorkspace, NoClosure, Singularity

#: absolute margin (m) separating a usable closure from a tangent-circle one
DEGENERACY_MARGIN = 1e-12

#: singularity threshold on |sin(phi2 - phi3)|
SINGULARITY_TOL = 1e-9

#: closure residual bound, relative to the total link length
CLOSURE_RTOL = 1e-10


class Branch(enum.Enum):
    ELBOW_UP = "elbow_up"
    ELBOW_DOWN = "elbow_down"


@dataclass(frozen=True)
class LinkageGeometry:
    """Five link lengths L1..L5 (m) and the fixed ground-link angle phi5."""

    L: tuple[float, float, float, float, float]
    phi5: float = math.pi

    def __post_init__(self):
        if len(self.L) != 5:
            raise ValueError("exactly five link lengths required")
        if any(li <= 0 for li in self.L):
            raise ValueError("link lengths must be positive")
        object.__setattr__(self, "L", tuple(float(li) for li in self.L))

    @property
    def total_length(self) -> float:
        return sum(self.L)


@dataclass(frozen=True)
class LinkageState:
    """A joint-angle configuration satisfying loop closure."""

    phi: tuple[float, float, float, float, float]
    branch: Branch

    def closure_residual(self, geom: LinkageGeometry) -> float:
        rx = sum(li * math.cos(p) for li, p in zip(geom.L, self.phi))
        ry = sum(li * math.sin(p) for li, p in zip(geom.L, self.phi))
        return math.hypot(rx, ry)


def _closure_arrays(geom: LinkageGeometry, phi1, phi2, branch: Branch):
    """Vectorized closure core.

    Returns (phi3, phi4, feasible, q) where infeasible entries (including
    tangent-circle degeneracies) hold NaN angles.
    """
    L1, L2, L3, L4, L5 = geom.L
    phi1 = np.asarray(phi1, dtype=float)
    phi2 = np.asarray(phi2, dtype=float)
    px = L1 * np.cos(phi1) + L2 * np.cos(phi2) + L5 * math.cos(geom.phi5)
    py = L1 * np.sin(phi1) + L2 * np.sin(phi2) + L5 * math.sin(geom.phi5)
    q = np.hypot(px, py)

    hi = L3 + L4
    lo = abs(L3 - L4)
    feasible = (q < hi - DEGENERACY_MARGIN) & (q > lo + DEGENERACY_MARGIN)

    with np.errstate(invalid="ignore", divide="ignore"):
        psi = np.arctan2(-py, -px)
        cos_alpha = np.clip((q * q + L3 * L3 - L4 * L4) / (2.0 * q * L3), -1.0, 1.0)
        alpha = np.arccos(cos_alpha)
        sign = 1.0 if branch is Branch.ELBOW_UP else -1.0
        phi3 = psi + sign * alpha
        phi3 = np.where(phi3 > math.pi, phi3 - 2.0 * math.pi, phi3)
        phi3 = np.where(phi3 <= -math.pi, phi3 + 2.0 * math.pi, phi3)
        rx = -px - L3 * np.cos(phi3)
        ry = -py - L3 * np.sin(phi3)
        phi4 = np.arctan2(ry, rx)

    phi3 = np.where(feasible, phi3, np.nan)
    phi4 = np.where(feasible, phi4, np.nan)
    return phi3, phi4, feasible, q


def solve_closure(
    geom: LinkageGeometry, phi1: float, phi2: float, branch: Branch = Branch.ELBOW_UP
) -> LinkageState:
    """Close the loop for given input angles; the branch picks one of the two
    circle-intersection solutions (mirror images across the floating chord)."""
    L3, L4 = geom.L[2], geom.L[3]
    phi3, phi4, feasible, q = _closure_arrays(geom, phi1, phi2, branch)
    q = float(q)
    hi, lo = L3 + L4, abs(L3 - L4)
    if not bool(feasible):
        if q > hi or q < lo:
            raise NoClosure(
                f"partial-sum length {q:.6g} outside closable range [{lo:.6g}, {hi:.6g}]"
            )
        raise DegenerateClosure(
            f"partial-sum length {q:.6g} within {DEGENERACY_MARGIN} of a closure boundary"
        )
    return LinkageState(
        phi=(float(phi1), float(phi2), float(phi3), float(phi4), geom.phi5),
        branch=branch,
    )


def mechanical_advantage(state: LinkageState, geom: LinkageGeometry) -> float:
    """Configuration-dependent ratio N = d(phi2)/d(phi4) at fixed phi1, phi5."""
    _, L2, _, L4, _ = geom.L
    phi2, phi3, phi4 = state.phi[1], state.phi[2], state.phi[3]
    den = math.sin(phi2 - phi3)
    if abs(den) < SINGULARITY_TOL:
        raise Singularity(f"|sin(phi2 - phi3)| = {abs(den):.3e} below {SINGULARITY_TOL}")
    return -L4 * math.sin(phi4 - phi3) / (L2 * den)


@dataclass(frozen=True)
class FingerChain:
    """Fingertip attachment: proximal segment along phi1, distal along phi4."""

    l_prox: float
    l_dist: float
    base: tuple[float, float] = (0.0, 0.0)

    def __post_init__(self):
        if self.l_prox < 0 or self.l_dist < 0:
            raise ValueError("finger segment lengths must be non-negative")


def default_finger(geom: LinkageGeometry) -> FingerChain:
    """Default chain: proximal segment of length L4, 40 mm distal segment."""
    return FingerChain(l_prox=geom.L[3], l_dist=0.040)


def fingertip_fk(state: LinkageState, geom: LinkageGeometry, finger: FingerChain | None = None) -> tuple[float, float]:
    """Cartesian fingertip position for a closed configuration."""
    if finger is None:
        finger = default_finger(geom)
    phi1, phi4 = state.phi[0], state.phi[3]
    x = finger.base[0] + finger.l_prox * math.cos(phi1) + finger.l_dist * math.cos(phi4)
    y = finger.base[1] + finger.l_prox * math.sin(phi1) + finger.l_dist * math.sin(phi4)
    return x, y


@dataclass(frozen=True)
class WorkspaceMap:
    """Grid-sampled closure, fingertip position and mechanical advantage.

    2-D arrays are indexed [i, j] for (phi1[i], phi2[j]).  Infeasible cells
    hold NaN angles/positions; ``ma`` additionally holds NaN at transmission
    singularities of otherwise feasible cells.
    """

    phi1: np.ndarray
    phi2: np.ndarray
    feasible: np.ndarray
    phi3: np.ndarray
    phi4: np.ndarray
    x: np.ndarray
    y: np.ndarray
    ma: np.ndarray
    branch: Branch
    phi5: float

    @property
    def feasible_count(self) -> int:
        return int(np.count_nonzero(self.feasible))

    def state_at(self, i: int, j: int) -> LinkageState:
        if not self.feasible[i, j]:
            raise NoClosure(f"grid cell ({i}, {j}) is infeasible")
        return LinkageState(
            phi=(float(self.phi1[i]), float(self.phi2[j]), float(self.phi3[i, j]),
                 float(self.phi4[i, j]), self.phi5),
            branch=self.branch,
        )

    def iter_cells(self) -> Iterator[tuple[int, int]]:
        for i in range(self.phi1.size):
            for j in range(self.phi2.size):
                yield i, j

    def write_csv(self, stream) -> None:
        stream.write("phi1,phi2,feasible,phi3,phi4,x,y,ma\n")
        for i, j in self.iter_cells():
            if self.feasible[i, j]:
                ma = self.ma[i, j]
                ma_field = repr(float(ma)) if math.isfinite(ma) else ""
                stream.write(
                    f"{float(self.phi1[i])!r},{float(self.phi2[j])!r},1,"
                    f"{float(self.phi3[i, j])!r},{float(self.phi4[i, j])!r},"
                    f"{float(self.x[i, j])!r},{float(self.y[i, j])!r},{ma_field}\n"
                )
            else:
                stream.write(f"{float(self.phi1[i])!r},{float(self.phi2[j])!r},0,,,,,\n")


def workspace_map(
    geom: LinkageGeometry,
    phi1_range: tuple[float, float],
    phi2_range: tuple[float, float],
    resolution: int | tuple[int, int],
    branch: Branch = Branch.ELBOW_UP,
    finger: FingerChain | None = None,
) -> WorkspaceMap:
    """Sample closure over an input grid; deterministic, index-ordered."""
    if isinstance(resolution, int):
        n1 = n2 = resolution
    else:
        n1, n2 = resolution
    if n1 < 2 or n2 < 2:
        raise ValueError("resolution must be at least 2 per axis")
    if not (phi1_range[1] > phi1_range[0]) or not (phi2_range[1] > phi2_range[0]):
        raise ValueError("input ranges must be non-empty")
    if finger is None:
        finger = default_finger(geom)

    phi1 = np.linspace(phi1_range[0], phi1_range[1], n1)
    phi2 = np.linspace(phi2_range[0], phi2_range[1], n2)
    P1 = phi1[:, None]
    P2 = phi2[None, :]
    phi3, phi4, feasible, _ = _closure_arrays(geom, P1, P2, branch)
    if not feasible.any():
        raise EmptyWorkspace("no grid point admits loop closure")

    _, L2, _, L4, _ = geom.L
    with np.errstate(invalid="ignore", divide="ignore"):
        x = finger.base[0] + finger.l_prox * np.cos(P1) + finger.l_dist * np.cos(phi4)
        y = finger.base[1] + finger.l_prox * np.sin(P1) + finger.l_dist * np.sin(phi4)
        den = L2 * np.sin(P2 - phi3)
        num = -L4 * np.sin(phi4 - phi3)
        ma = np.where(np.abs(np.sin(P2 - phi3)) < SINGULARITY_TOL, np.nan, num / den)

    return WorkspaceMap(
        phi1=phi1, phi2=phi2, feasible=feasible,
        phi3=phi3, phi4=phi4, x=x, y=y, ma=ma,
        branch=branch, phi5=geom.phi5,
    )
