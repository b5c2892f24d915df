"""Documented default parameter block.

Every default lives here and nowhere else; call sites never hard-code
physical values.  The fingertip cross-section numbers are anthropomorphic
stand-ins chosen at desk scale (the real hardware dimensions are not
published): a 14 x 10 mm pulp around an 8 x 6 mm skeletal core, a 1 mm nail,
and a 4 mm unsupported distal overhang on a 20 mm fingertip beam.  Material
defaults pair a Shore 10A silicone pulp (Gent conversion, about 0.41 MPa)
with 2 GPa nail/phalanx plastic.

The reference linkage dimensions (L1..L5 = 30.0, 100.25, 20.5, 60.0,
40.4 mm) are the optimized production values; they serve as the default
geometry and as kinematic test fixtures.
"""

from __future__ import annotations

import math

import numpy as np

from .beam import FingertipSection
from .cmaes import CmaEsConfig
from .design import ObjectiveConfig, SamplingSpec
from .fivebar import Branch, FingerChain, LinkageGeometry
from .hertz import ContactScenario, Environment
from .units import shore_a_to_modulus

# -- fingertip ---------------------------------------------------------------

DEFAULT_PULP_SHORE_A = 10.0

DEFAULT_SECTION_MM = dict(
    b_p=14.0, h_p=10.0, b_d=8.0, h_d=6.0, h_n=1.0, L1=16.0, L2_seg=4.0
)

DEFAULT_NAIL_MODULUS = 2e9
DEFAULT_PHALANX_MODULUS = 2e9

DEFAULT_PULP_RADIUS = 9e-3
DEFAULT_POISSON = 0.49

DEFAULT_DELTA_TOTAL = 2e-3


def default_pulp_modulus() -> float:
    return shore_a_to_modulus(DEFAULT_PULP_SHORE_A)


def default_section() -> FingertipSection:
    mm = 1e-3
    g = DEFAULT_SECTION_MM
    return FingertipSection(
        b_p=g["b_p"] * mm, h_p=g["h_p"] * mm,
        b_d=g["b_d"] * mm, h_d=g["h_d"] * mm,
        h_n=g["h_n"] * mm,
        E_p=default_pulp_modulus(),
        E_d=DEFAULT_PHALANX_MODULUS,
        E_n=DEFAULT_NAIL_MODULUS,
        L1=g["L1"] * mm, L2_seg=g["L2_seg"] * mm,
    )


def default_scenario(env: Environment | None = None) -> ContactScenario:
    return ContactScenario(
        R_pulp=DEFAULT_PULP_RADIUS,
        env=env if env is not None else Environment.flat(),
        E_p=default_pulp_modulus(),
        nu_p=DEFAULT_POISSON,
    )


# -- eta sweep (nail modulus x pulp modulus, log-spaced) ----------------------

DEFAULT_SWEEP_NAIL_RANGE = (1e6, 1e10)   # Pa, elastomer to stiff plastic
DEFAULT_SWEEP_PULP_RANGE = (5e4, 5e6)    # Pa, very soft gel to firm rubber
DEFAULT_SWEEP_POINTS = 25


def default_sweep_axes() -> tuple[np.ndarray, np.ndarray]:
    nail = np.logspace(
        math.log10(DEFAULT_SWEEP_NAIL_RANGE[0]),
        math.log10(DEFAULT_SWEEP_NAIL_RANGE[1]),
        DEFAULT_SWEEP_POINTS,
    )
    pulp = np.logspace(
        math.log10(DEFAULT_SWEEP_PULP_RANGE[0]),
        math.log10(DEFAULT_SWEEP_PULP_RANGE[1]),
        DEFAULT_SWEEP_POINTS,
    )
    return nail, pulp


# -- curvature trend ----------------------------------------------------------

DEFAULT_TREND_CONVEX_RADIUS = 25e-3
DEFAULT_TREND_CONCAVE_RADIUS = 25e-3


# -- linkage ------------------------------------------------------------------

REFERENCE_LINKAGE_MM = (30.0, 100.25, 20.5, 60.0, 40.4)

DEFAULT_GROUND_ANGLE = math.pi
DEFAULT_BRANCH = Branch.ELBOW_UP

DEFAULT_WORKSPACE_PHI1 = (0.0, math.pi / 2.0)
DEFAULT_WORKSPACE_PHI2 = (math.pi / 2.0, 3.0 * math.pi / 2.0)
DEFAULT_WORKSPACE_RESOLUTION = 100

DEFAULT_FINGER_DISTAL = 0.040


def default_linkage() -> LinkageGeometry:
    return LinkageGeometry(
        tuple(v * 1e-3 for v in REFERENCE_LINKAGE_MM), phi5=DEFAULT_GROUND_ANGLE
    )


def default_finger_chain(geom: LinkageGeometry | None = None) -> FingerChain:
    if geom is None:
        geom = default_linkage()
    return FingerChain(l_prox=geom.L[3], l_dist=DEFAULT_FINGER_DISTAL)


# -- design optimization -------------------------------------------------------

DEFAULT_WEIGHTS = (1.0, 1.0, 1.0, 1e-3)
DEFAULT_DESIGN_BOUNDS_MM = ((10.0, 10.0), (60.0, 60.0))  # (lower, upper) for (L1, L3)
DEFAULT_THETA_TARGET = math.pi / 2.0
DEFAULT_OBJECTIVE_RESOLUTION = 25
DEFAULT_CMA_MAX_EVALS = 3000
DEFAULT_CMA_POPULATION = 6
DEFAULT_CMA_PARENTS = 3


def default_objective_config() -> ObjectiveConfig:
    linkage = default_linkage()
    lower, upper = DEFAULT_DESIGN_BOUNDS_MM
    return ObjectiveConfig(
        weights=DEFAULT_WEIGHTS,
        L2=linkage.L[1], L4=linkage.L[3], L5=linkage.L[4],
        bounds_lower=tuple(v * 1e-3 for v in lower),
        bounds_upper=tuple(v * 1e-3 for v in upper),
        sampling=SamplingSpec(
            phi1_range=DEFAULT_WORKSPACE_PHI1,
            phi2_range=DEFAULT_WORKSPACE_PHI2,
            resolution=DEFAULT_OBJECTIVE_RESOLUTION,
            branch=DEFAULT_BRANCH,
        ),
        theta_target=DEFAULT_THETA_TARGET,
        phi5=DEFAULT_GROUND_ANGLE,
    )


def default_cma_es_config(cfg: ObjectiveConfig, seed: int = 0) -> CmaEsConfig:
    lower = np.asarray(cfg.bounds_lower)
    upper = np.asarray(cfg.bounds_upper)
    width = float(np.mean(upper - lower))
    return CmaEsConfig(
        initial_mean=tuple((lower + upper) / 2.0),
        sigma0=max(0.2 * width, 1e-9),
        population=DEFAULT_CMA_POPULATION,
        parents=DEFAULT_CMA_PARENTS,
        max_evals=DEFAULT_CMA_MAX_EVALS,
        seed=seed,
    )
