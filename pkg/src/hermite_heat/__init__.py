"""Septic Hermite collocation solver for the 1D heat conduction equation.

The spatial discretization collocates degree-7 piecewise Hermite elements
at six shifted Legendre or Chebyshev roots per element; time integration is
Crank-Nicolson.  See README.md for a tour and demos/ for worked examples.
"""

from .basis import (
    BasisTable,
    CollocationRule,
    build_basis_table,
    chebyshev_rule,
    hermite_first_derivs,
    hermite_second_derivs,
    hermite_values,
    legendre_rule,
)
from .problem import (
    Mesh,
    ProblemSpec,
    build_mesh,
    collocation_abscissa,
    control_problem,
)
from .linalg import (
    BandedMatrix,
    LUFactors,
    SingularMatrix,
    band_lu_factor,
    band_lu_solve,
    band_matvec,
)
from .assembly import (
    ElementBlocks,
    GlobalSystem,
    InitialSystem,
    assemble_crank_nicolson,
    assemble_initial_system,
    element_blocks,
    index_maps,
)
from .solver import (
    CoefficientVector,
    NonIntegralStepCount,
    RunConfig,
    evaluate,
    evaluate_derivatives,
    initial_coefficients,
    run,
    step,
)
from .experiments import (
    TABLE_IDS,
    ErrorReport,
    MissingExactSolution,
    TableResult,
    TableSpec,
    convergence_order,
    error_norms,
    measure,
    run_table,
    table_spec,
)

__version__ = "0.1.0"

__all__ = [
    "BasisTable",
    "CollocationRule",
    "build_basis_table",
    "chebyshev_rule",
    "hermite_first_derivs",
    "hermite_second_derivs",
    "hermite_values",
    "legendre_rule",
    "Mesh",
    "ProblemSpec",
    "build_mesh",
    "collocation_abscissa",
    "control_problem",
    "BandedMatrix",
    "LUFactors",
    "SingularMatrix",
    "band_lu_factor",
    "band_lu_solve",
    "band_matvec",
    "ElementBlocks",
    "GlobalSystem",
    "InitialSystem",
    "assemble_crank_nicolson",
    "assemble_initial_system",
    "element_blocks",
    "index_maps",
    "CoefficientVector",
    "NonIntegralStepCount",
    "RunConfig",
    "evaluate",
    "evaluate_derivatives",
    "initial_coefficients",
    "run",
    "step",
    "TABLE_IDS",
    "ErrorReport",
    "MissingExactSolution",
    "TableResult",
    "TableSpec",
    "convergence_order",
    "error_norms",
    "measure",
    "run_table",
    "table_spec",
    "__version__",
]
