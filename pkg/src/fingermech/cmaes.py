"""Covariance Matrix Adaptation Evolution Strategy, (mu/mu_w, lambda) flavor.

Weighted recombination of the mu best samples, cumulative step-size
adaptation, and rank-one plus rank-mu covariance updates.  Self-contained and
fully deterministic for a fixed seed: the RNG stream is consumed strictly in
candidate-index order.

Box constraints are handled by resampling a candidate up to a fixed cap; a
candidate still out of bounds is evaluated at its clamped position with a
quadratic out-of-bounds penalty added to its fitness, so the objective itself
is never called outside the box.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Sequence

import numpy as np

from .errors import InvalidConfig

#: step-size collapse threshold (termination, not an error)
SIGMA_COLLAPSE = 1e-14

#: resampling attempts per candidate before clamp-and-penalize
RESAMPLE_CAP = 100

#: scale of the quadratic out-of-bounds penalty (per box-width-normalized excess)
PENALTY_SCALE = 1e6


@dataclass(frozen=True)
class CmaEsConfig:
    """Strategy parameters; everything else is derived from the dimension."""

    initial_mean: tuple[float, ...]
    sigma0: float
    population: int = 6
    parents: int = 3
    max_evals: int = 10_000
    target_f: float | None = None
    seed: int = 0

    def __post_init__(self):
        if len(self.initial_mean) < 1:
            raise InvalidConfig("initial mean must have at least one component")
        if self.population < 4:
            raise InvalidConfig("population must be at least 4")
        if not 1 <= self.parents <= self.population // 2:
            raise InvalidConfig("parent count must satisfy 1 <= mu <= lambda/2")
        if not self.sigma0 > 0:
            raise InvalidConfig("sigma0 must be positive")
        if self.max_evals < self.population:
            raise InvalidConfig("evaluation budget below one generation")


@dataclass(frozen=True)
class TraceRecord:
    generation: int
    evals: int
    best_f: float
    mean_f: float
    sigma: float
    best_x: tuple[float, ...]


@dataclass(frozen=True)
class OptimizationResult:
    best_x: tuple[float, ...]
    best_f: float
    evals: int
    termination: str
    trace: tuple[TraceRecord, ...] = field(repr=False)


def _strategy_constants(n: int, lam: int, mu: int):
    raw = np.log(mu + 0.5) - np.log(np.arange(1, mu + 1))
    weights = raw / raw.sum()
    mueff = 1.0 / np.sum(weights**2)
    cc = (4.0 + mueff / n) / (n + 4.0 + 2.0 * mueff / n)
    cs = (mueff + 2.0) / (n + mueff + 5.0)
    c1 = 2.0 / ((n + 1.3) ** 2 + mueff)
    cmu = min(1.0 - c1, 2.0 * (mueff - 2.0 + 1.0 / mueff) / ((n + 2.0) ** 2 + mueff))
    damps = 1.0 + 2.0 * max(0.0, math.sqrt((mueff - 1.0) / (n + 1.0)) - 1.0) + cs
    chi_n = math.sqrt(n) * (1.0 - 1.0 / (4.0 * n) + 1.0 / (21.0 * n**2))
    return weights, mueff, cc, cs, c1, cmu, damps, chi_n


def cma_es_minimize(
    objective: Callable[[np.ndarray], float],
    cfg: CmaEsConfig,
    bounds: tuple[Sequence[float], Sequence[float]] | None = None,
) -> OptimizationResult:
    """Minimize a scalar objective; returns the best evaluated point.

    ``bounds`` is an optional (lower, upper) pair of per-component limits;
    the objective is only ever evaluated inside them.
    """
    n = len(cfg.initial_mean)
    lam, mu = cfg.population, cfg.parents
    weights, mueff, cc, cs, c1, cmu, damps, chi_n = _strategy_constants(n, lam, mu)

    lower = upper = width = None
    if bounds is not None:
        lower = np.asarray(bounds[0], dtype=float)
        upper = np.asarray(bounds[1], dtype=float)
        if lower.shape != (n,) or upper.shape != (n,):
            raise InvalidConfig("bounds must match the search dimension")
        if np.any(lower > upper):
            raise InvalidConfig("lower bounds exceed upper bounds")
        if np.any((np.asarray(cfg.initial_mean) < lower) | (np.asarray(cfg.initial_mean) > upper)):
            raise InvalidConfig("initial mean lies outside the bounds")
        width = np.where(upper > lower, upper - lower, 1.0)

    rng = np.random.default_rng(cfg.seed)
    mean = np.array(cfg.initial_mean, dtype=float)
    sigma = float(cfg.sigma0)
    ps = np.zeros(n)
    pc = np.zeros(n)
    C = np.eye(n)

    best_x = mean.copy()
    best_f = math.inf
    evals = 0
    generation = 0
    trace: list[TraceRecord] = []
    termination = "max_evals"

    while evals + lam <= cfg.max_evals:
        generation += 1
        eigvals, B = np.linalg.eigh((C + C.T) / 2.0)
        D = np.sqrt(np.maximum(eigvals, 1e-300))
        inv_sqrt_c = (B / D) @ B.T

        xs = np.empty((lam, n))
        fs = np.empty(lam)
        for k in range(lam):
            x = mean + sigma * (B @ (D * rng.standard_normal(n)))
            if bounds is not None:
                for _ in range(RESAMPLE_CAP):
                    if np.all(x >= lower) and np.all(x <= upper):
                        break
                    x = mean + sigma * (B @ (D * rng.standard_normal(n)))
            penalty = 0.0
            x_eval = x
            if bounds is not None:
                clamped = np.clip(x, lower, upper)
                if not np.array_equal(clamped, x):
                    penalty = PENALTY_SCALE * float(np.sum(((x - clamped) / width) ** 2))
                    x_eval = clamped
            f = float(objective(x_eval.copy())) + penalty
            xs[k] = x
            fs[k] = f
            evals += 1
            if f < best_f:
                best_f = f
                best_x = x_eval.copy()

        order = np.argsort(fs, kind="stable")
        xs_sorted = xs[order[:mu]]
        mean_old = mean
        mean = weights @ xs_sorted

        y = (mean - mean_old) / sigma
        ps = (1.0 - cs) * ps + math.sqrt(cs * (2.0 - cs) * mueff) * (inv_sqrt_c @ y)
        ps_norm = float(np.linalg.norm(ps))
        hsig = ps_norm / math.sqrt(1.0 - (1.0 - cs) ** (2.0 * generation)) < (1.4 + 2.0 / (n + 1.0)) * chi_n
        pc = (1.0 - cc) * pc + (math.sqrt(cc * (2.0 - cc) * mueff) * y if hsig else 0.0)

        artmp = (xs_sorted - mean_old) / sigma
        rank_mu = artmp.T @ (weights[:, None] * artmp)
        C = (
            (1.0 - c1 - cmu) * C
            + c1 * (np.outer(pc, pc) + (0.0 if hsig else cc * (2.0 - cc)) * C)
            + cmu * rank_mu
        )
        sigma *= math.exp((cs / damps) * (ps_norm / chi_n - 1.0))

        trace.append(
            TraceRecord(
                generation=generation,
                evals=evals,
                best_f=best_f,
                mean_f=float(np.mean(fs)),
                sigma=sigma,
                best_x=tuple(float(v) for v in best_x),
            )
        )

        if cfg.target_f is not None and best_f <= cfg.target_f:
            termination = "target"
            break
        if sigma < SIGMA_COLLAPSE:
            termination = "sigma_collapse"
            break

    return OptimizationResult(
        best_x=tuple(float(v) for v in best_x),
        best_f=best_f,
        evals=evals,
        termination=termination,
        trace=tuple(trace),
    )
