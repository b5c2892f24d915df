"""Layered nail/pulp/phalanx cantilever: section rigidity and bending energy.

The fingertip is a two-segment cantilever of total length L = L1 + L2_seg.
The proximal segment carries the embedded distal phalanx; the distal segment
is pulp and nail only (the phalanx void remains, with zero modulus).  Bending
is Euler-Bernoulli throughout; no shear deformation.

Cross-section stacking, measured from the pulp underside (y = 0):
pulp occupies [0, h_p] full width b_p, the phalanx fills a b_d x h_d pocket at
the top of the pulp ([h_p - h_d, h_p]), and the nail is a full-width strip on
top ([h_p, h_p + h_n]).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, replace

from .errors import DegenerateSection


class Segment(enum.Enum):
    PROXIMAL = "proximal"  # phalanx + pulp + nail
    DISTAL = "distal"      # pulp + nail, phalanx void retained


@dataclass(frozen=True)
class FingertipSection:
    """Cross-section geometry and moduli of the layered fingertip beam.

    Lengths in m, moduli in Pa.  ``h_n = 0`` encodes "no fingernail" and
    ``b_d * h_d = 0`` encodes "no phalanx".
    """

    b_p: float
    h_p: float
    b_d: float
    h_d: float
    h_n: float
    E_p: float
    E_d: float
    E_n: float
    L1: float
    L2_seg: float

    def __post_init__(self):
        if not (self.b_p > 0 and self.h_p > 0):
            raise ValueError("pulp width and height must be positive")
        if self.b_d < 0 or self.h_d < 0 or self.h_n < 0:
            raise ValueError("phalanx dimensions and nail thickness must be non-negative")
        if self.h_d >= self.h_p:
            raise ValueError("phalanx height must be smaller than pulp height")
        if self.b_d > self.b_p:
            raise ValueError("phalanx width cannot exceed pulp width")
        if self.E_p <= 0 or self.E_d < 0 or self.E_n < 0:
            raise ValueError("moduli must be non-negative with E_p > 0")
        if self.L1 < 0 or self.L2_seg < 0 or self.L1 + self.L2_seg <= 0:
            raise ValueError("segment lengths must be non-negative with positive total")

    @property
    def length(self) -> float:
        return self.L1 + self.L2_seg

    def with_moduli(self, E_p: float | None = None, E_n: float | None = None) -> "FingertipSection":
        """Copy with replaced pulp and/or nail modulus (used by sweeps)."""
        kwargs = {}
        if E_p is not None:
            kwargs["E_p"] = E_p
        if E_n is not None:
            kwargs["E_n"] = E_n
        return replace(self, **kwargs)

    def without_nail(self) -> "FingertipSection":
        return replace(self, h_n=0.0)


@dataclass(frozen=True)
class SectionProperties:
    """Areas, centroids, modulus-weighted neutral axis and flexural rigidity."""

    A_p: float
    A_d: float
    A_n: float
    y_gross: float
    y_void: float
    y_n: float
    y_pulp: float
    y_bar: float
    EI: float


def section_properties(section: FingertipSection, segment: Segment) -> SectionProperties:
    """Composite flexural rigidity of one beam segment.

    The net pulp is the gross rectangle minus the eccentric phalanx pocket
    (parallel-axis subtraction); each constituent then contributes
    E_k * [I_k + A_k (y_k - y_bar)^2] about the modulus-weighted neutral axis.
    For the distal segment the phalanx modulus is zeroed but its void stays.
    """
    b_p, h_p, b_d, h_d, h_n = section.b_p, section.h_p, section.b_d, section.h_d, section.h_n
    E_d = section.E_d if segment is Segment.PROXIMAL else 0.0
    E_p, E_n = section.E_p, section.E_n

    A_gross = b_p * h_p
    A_d = b_d * h_d
    A_p = A_gross - A_d
    A_n = b_p * h_n
    y_gross = h_p / 2.0
    y_void = h_p - h_d / 2.0
    y_n = h_p + h_n / 2.0
    # net pulp centroid (gross minus pocket); A_p > 0 is guaranteed by h_d < h_p
    y_pulp = (A_gross * y_gross - A_d * y_void) / A_p

    weighted_area = E_p * A_p + E_d * A_d + E_n * A_n
    if weighted_area <= 0.0:
        raise DegenerateSection("modulus-weighted area is zero; neutral axis undefined")
    y_bar = (E_p * A_p * y_pulp + E_d * A_d * y_void + E_n * A_n * y_n) / weighted_area

    I_d = b_d * h_d**3 / 12.0
    I_n = b_p * h_n**3 / 12.0
    I_p = (b_p * h_p**3 / 12.0 + A_gross * (y_gross - y_pulp) ** 2) - (
        b_d * h_d**3 / 12.0 + A_d * (y_void - y_pulp) ** 2
    )

    EI = (
        E_p * (I_p + A_p * (y_pulp - y_bar) ** 2)
        + E_d * (I_d + A_d * (y_void - y_bar) ** 2)
        + E_n * (I_n + A_n * (y_n - y_bar) ** 2)
    )
    return SectionProperties(
        A_p=A_p, A_d=A_d, A_n=A_n,
        y_gross=y_gross, y_void=y_void, y_n=y_n, y_pulp=y_pulp,
        y_bar=y_bar, EI=EI,
    )


def effective_rigidity(EI_1: float, EI_2: float, L1: float, L2_seg: float) -> float:
    """Single equivalent rigidity of the two-segment cantilever.

    Obtained by equating tip-load strain energy of the piecewise beam with a
    uniform beam of the same length:
    (EI)_eff = L^3 / [(L^3 - L2^3)/EI_1 + L2^3/EI_2].
    """
    if EI_1 <= 0 or EI_2 <= 0:
        raise ValueError("segment rigidities must be positive")
    if L1 < 0 or L2_seg < 0 or L1 + L2_seg <= 0:
        raise ValueError("segment lengths must be non-negative with positive total")
    L = L1 + L2_seg
    L3 = L**3
    L2c = L2_seg**3
    return L3 / ((L3 - L2c) / EI_1 + L2c / EI_2)


def section_effective_rigidity(section: FingertipSection) -> float:
    """(EI)_eff of a fingertip section, composing both segment rigidities."""
    EI_1 = section_properties(section, Segment.PROXIMAL).EI
    EI_2 = section_properties(section, Segment.DISTAL).EI
    return effective_rigidity(EI_1, EI_2, section.L1, section.L2_seg)


def tip_stiffness(EI_eff: float, L: float) -> float:
    """Cantilever tip stiffness 3 EI / L^3 under a transverse tip load."""
    if EI_eff <= 0 or L <= 0:
        raise ValueError("EI_eff and L must be positive")
    return 3.0 * EI_eff / L**3


def bending_energy(EI_eff: float, L: float, delta_b: float) -> float:
    """Strain energy stored in bending for tip deflection delta_b."""
    if delta_b < 0:
        raise ValueError("delta_b must be non-negative")
    return 0.5 * tip_stiffness(EI_eff, L) * delta_b**2
