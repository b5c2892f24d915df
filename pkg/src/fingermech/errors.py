"""Exception taxonomy.

Three families map onto the CLI exit codes: configuration problems (exit 2),
model-input problems (exit 3), and internal inconsistencies that indicate a
numerical defect rather than bad input (exit 4).
"""


class FingermechError(Exception):
    """Base class for all package-specific errors."""


class ConfigError(FingermechError):
    """Malformed or inconsistent run configuration (CLI exit 2)."""


class InvalidConfig(ConfigError):
    """Optimizer configuration violates its invariants."""


class ModelInputError(FingermechError):
    """Valid config but physically/geometrically inadmissible model input (CLI exit 3)."""


class DegenerateSection(ModelInputError):
    """Cross-section has zero modulus-weighted area; neutral axis undefined."""


class CurvatureMismatch(ModelInputError):
    """Concave environment radius does not exceed the pulp radius."""


class NoClosure(ModelInputError):
    """Five-bar loop cannot be closed for the given inputs (circles disjoint or nested)."""


class DegenerateClosure(ModelInputError):
    """Closure circles are tangent; the two solution branches coincide."""


class Singularity(ModelInputError):
    """Mechanical-advantage denominator vanishes at this configuration."""


class EmptyWorkspace(ModelInputError):
    """No grid point in the requested input range admits loop closure."""


class InternalInconsistency(FingermechError):
    """A model self-check failed; signals a numerical defect (CLI exit 4)."""


class NonConvergence(InternalInconsistency):
    """Iteration budget exhausted on a problem that should always converge."""


class ModelInconsistency(InternalInconsistency):
    """A structural property the model guarantees was violated at runtime."""
