"""Fingertip deformation partitioning and five-bar finger linkage design.

Library surface:

* :mod:`fingermech.beam` -- layered-section flexural rigidity and bending energy
* :mod:`fingermech.hertz` -- sphere-on-surface contact force/energy
* :mod:`fingermech.partition` -- energy-minimizing deformation split, sweeps
* :mod:`fingermech.fivebar` -- loop closure, mechanical advantage, workspace maps
* :mod:`fingermech.cmaes` -- self-contained CMA-ES minimizer
* :mod:`fingermech.design` -- four-term linkage objective and its optimization
* :mod:`fingermech.defaults` -- the single documented default parameter block
* :mod:`fingermech.cli` -- ``fingermech`` command-line tool
"""

from .beam import (
    FingertipSection,
    SectionProperties,
    Segment,
    bending_energy,
    effective_rigidity,
    section_effective_rigidity,
    section_properties,
    tip_stiffness,
)
from .cmaes import CmaEsConfig, OptimizationResult, TraceRecord, cma_es_minimize
from .design import (
    DesignEvaluation,
    LinkageOptimizationResult,
    ObjectiveConfig,
    SamplingSpec,
    evaluate_objective,
    optimize_linkage,
)
from .errors import (
    ConfigError,
    CurvatureMismatch,
    DegenerateClosure,
    DegenerateSection,
    EmptyWorkspace,
    FingermechError,
    InternalInconsistency,
    InvalidConfig,
    ModelInconsistency,
    ModelInputError,
    NoClosure,
    NonConvergence,
    Singularity,
)
from .fivebar import (
    Branch,
    FingerChain,
    LinkageGeometry,
    LinkageState,
    WorkspaceMap,
    fingertip_fk,
    mechanical_advantage,
    solve_closure,
    workspace_map,
)
from .hertz import (
    ContactScenario,
    EnvKind,
    Environment,
    contact_energy,
    contact_force,
    contact_radius,
    effective_modulus,
    effective_radius,
)
from .partition import (
    HeatmapGrid,
    PartitionResult,
    TrendEntry,
    TrendReport,
    beta,
    curvature_trend,
    partition,
    solve_partition,
    sweep_eta,
)
from .units import parse_quantity, shore_a_to_modulus

__version__ = "0.1.0"
