"""Four-term linkage design objective and its CMA-ES minimization over (L1, L3).

The scalarized objective

    J = w1 * coverage_shortfall + w2 * sigma_N + w3 * ti_term + w4 * length_reg

mixes heterogeneous quantities; the weights absorb the units.  Interpretation
choices (documented, config-overridable):

* coverage_shortfall = max(0, theta_target - achieved phi4 range) in rad, so
  minimizing J never rewards shrinking the workspace;
* sigma_N = population standard deviation of the finite mechanical-advantage
  samples over the feasible sampled workspace;
* ti_term = 1 - min |sin(phi2 - phi3)| over feasible samples, i.e. minimizing
  J maximizes the worst-case transmission quality (transmission-angle
  criterion);
* length_reg = L1^2 + L3^2 of the free links only, normalized to mm^2 so the
  default weight 1e-3 is meaningful at desk scale.

Designs with an empty sampled workspace receive a large finite penalty value
instead of an error so the optimizer can move through them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .cmaes import CmaEsConfig, OptimizationResult, cma_es_minimize
from .errors import EmptyWorkspace
from .fivebar import Branch, LinkageGeometry, workspace_map

#: finite objective value assigned to designs with no usable workspace
J_PENALTY = 1e6

#: length_reg is expressed per this reference length squared (1 mm^2)
LENGTH_REG_REF = 1e-3


@dataclass(frozen=True)
class SamplingSpec:
    """Input-grid specification shared by all evaluations of one study."""

    phi1_range: tuple[float, float]
    phi2_range: tuple[float, float]
    resolution: int
    branch: Branch = Branch.ELBOW_UP

    def __post_init__(self):
        if self.resolution < 2:
            raise ValueError("sampling resolution must be at least 2")


@dataclass(frozen=True)
class ObjectiveConfig:
    """Weights, fixed links, free-link bounds and sampling of the design study."""

    weights: tuple[float, float, float, float]
    L2: float
    L4: float
    L5: float
    bounds_lower: tuple[float, float]
    bounds_upper: tuple[float, float]
    sampling: SamplingSpec
    theta_target: float
    phi5: float = math.pi

    def __post_init__(self):
        if any(w < 0 for w in self.weights):
            raise ValueError("weights must be non-negative")
        if any(lo <= 0 for lo in self.bounds_lower):
            raise ValueError("lower bounds must be positive")
        if any(lo > hi for lo, hi in zip(self.bounds_lower, self.bounds_upper)):
            raise ValueError("bounds must satisfy lower <= upper")
        if self.L2 <= 0 or self.L4 <= 0 or self.L5 <= 0:
            raise ValueError("fixed link lengths must be positive")
        if self.theta_target < 0:
            raise ValueError("theta_target must be non-negative")


@dataclass(frozen=True)
class DesignEvaluation:
    """Objective value with its term breakdown for one (L1, L3) candidate.

    For penalized (workspace-less) designs the terms are zeroed, J holds the
    penalty value and ``penalized`` is set; otherwise J is exactly the
    weighted sum of the four terms.
    """

    design: tuple[float, float]
    J: float
    coverage_term: float
    sigma_N: float
    ti_term: float
    length_reg: float
    feasible_samples: int
    penalized: bool = False


def geometry_for_design(design: tuple[float, float], cfg: ObjectiveConfig) -> LinkageGeometry:
    L1, L3 = design
    return LinkageGeometry((L1, cfg.L2, L3, cfg.L4, cfg.L5), phi5=cfg.phi5)


def evaluate_objective(design: tuple[float, float], cfg: ObjectiveConfig) -> DesignEvaluation:
    """Evaluate the four-term objective for one candidate design."""
    L1, L3 = float(design[0]), float(design[1])
    w1, w2, w3, w4 = cfg.weights
    geom = geometry_for_design((L1, L3), cfg)
    try:
        wm = workspace_map(
            geom,
            cfg.sampling.phi1_range,
            cfg.sampling.phi2_range,
            cfg.sampling.resolution,
            branch=cfg.sampling.branch,
        )
    except EmptyWorkspace:
        return DesignEvaluation(
            design=(L1, L3), J=J_PENALTY,
            coverage_term=0.0, sigma_N=0.0, ti_term=0.0, length_reg=0.0,
            feasible_samples=0, penalized=True,
        )

    ma = wm.ma[wm.feasible]
    ma = ma[np.isfinite(ma)]
    if ma.size == 0:
        # every feasible cell is singular; no usable transmission data
        return DesignEvaluation(
            design=(L1, L3), J=J_PENALTY,
            coverage_term=0.0, sigma_N=0.0, ti_term=0.0, length_reg=0.0,
            feasible_samples=0, penalized=True,
        )

    phi4 = wm.phi4[wm.feasible]
    coverage = max(0.0, cfg.theta_target - float(phi4.max() - phi4.min()))
    sigma_n = float(np.std(ma))
    sin23 = np.abs(np.sin(wm.phi2[None, :] - wm.phi3))[wm.feasible]
    ti = 1.0 - float(sin23.min())
    reg = (L1 / LENGTH_REG_REF) ** 2 + (L3 / LENGTH_REG_REF) ** 2
    J = w1 * coverage + w2 * sigma_n + w3 * ti + w4 * reg
    return DesignEvaluation(
        design=(L1, L3), J=J,
        coverage_term=coverage, sigma_N=sigma_n, ti_term=ti, length_reg=reg,
        feasible_samples=int(wm.feasible_count),
    )


@dataclass(frozen=True)
class LinkageOptimizationResult:
    """CMA-ES outcome plus the full evaluation of the winning design."""

    best_evaluation: DesignEvaluation
    cma: OptimizationResult


def default_cma_config(cfg: ObjectiveConfig, seed: int = 0, max_evals: int = 3000) -> CmaEsConfig:
    """Center start, step size at 20% of the box width."""
    lower = np.asarray(cfg.bounds_lower)
    upper = np.asarray(cfg.bounds_upper)
    width = float(np.mean(upper - lower))
    return CmaEsConfig(
        initial_mean=tuple((lower + upper) / 2.0),
        sigma0=max(0.2 * width, 1e-9),
        population=6,
        parents=3,
        max_evals=max_evals,
        seed=seed,
    )


def optimize_linkage(cfg: ObjectiveConfig, cma_cfg: CmaEsConfig | None = None) -> LinkageOptimizationResult:
    """Minimize J over the (L1, L3) box."""
    if cfg.bounds_lower == cfg.bounds_upper:
        # zero-volume search space: the only admissible design is the corner
        evaluation = evaluate_objective(cfg.bounds_lower, cfg)
        trivial = OptimizationResult(
            best_x=cfg.bounds_lower,
            best_f=evaluation.J,
            evals=1,
            termination="degenerate_bounds",
            trace=(),
        )
        return LinkageOptimizationResult(best_evaluation=evaluation, cma=trivial)

    if cma_cfg is None:
        cma_cfg = default_cma_config(cfg)

    def objective(x: np.ndarray) -> float:
        return evaluate_objective((float(x[0]), float(x[1])), cfg).J

    result = cma_es_minimize(objective, cma_cfg, bounds=(cfg.bounds_lower, cfg.bounds_upper))
    best_eval = evaluate_objective(result.best_x, cfg)
    return LinkageOptimizationResult(best_evaluation=best_eval, cma=result)


def write_trace_csv(result: OptimizationResult, stream) -> None:
    stream.write("generation,evals,best_J,mean_J,sigma,L1,L3\n")
    for rec in result.trace:
        stream.write(
            f"{rec.generation},{rec.evals},{rec.best_f!r},{rec.mean_f!r},"
            f"{rec.sigma!r},{rec.best_x[0]!r},{rec.best_x[1]!r}\n"
        )
