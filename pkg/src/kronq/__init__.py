"""Exact Gabriel-Roiter measure computations for n-arrow Kronecker quivers.

The package works entirely over small prime fields with integer numpy
matrices: construct modules, compute hom and ext spaces, translate with
the reflection functors, enumerate submodule lattices, compute measures
with an independently checkable oracle, and scan whole dimension vectors
for realized measures.
"""

from .config import Caps, DEFAULT_CAPS
from .errors import CapExceeded, PreconditionError, Undecided
from .measure import (
    EMPTY,
    GRMeasure,
    find_between,
    format_measure,
    mu_regular,
    mu_uniserial,
    mu_upper,
    parse_measure,
)
from .linalg import Subspace, gaussian_binomial, galois_number
from .dimvec import (
    cartan,
    classify_position,
    coxeter,
    coxeter_inv,
    euler_form,
    preinjective_dims,
    preprojective_dims,
    tau_dim,
    tau_inv_dim,
)
from .modules import (
    KroneckerModule,
    decompose,
    direct_sum,
    embed2k,
    enumerate_submodules,
    ext_dim,
    has_11_submodule,
    hom_basis,
    hom_dim,
    is_indecomposable,
    is_isomorphic,
    p_module,
    preinj2k,
    preproj2k,
    q_module,
    quotient_module,
    random_module,
    regular2k,
    regular2k_inf,
    restrict_module,
    simple_module,
    tau_inverse_module,
    tau_module,
)
from .engine import MeasureStore, gr_measure, gr_measure_oracle
from .scan import (
    CatalogBuilder,
    CatalogResult,
    ScanRecord,
    catalog_to_csv,
    gap_scan,
    parse_catalog_csv,
    takeoff_sequence,
)
from .verify import SUITES, VerifySuiteResult, get_builder, run_all, run_suite

__version__ = "0.1.0"

__all__ = [
    "Caps",
    "DEFAULT_CAPS",
    "CapExceeded",
    "PreconditionError",
    "Undecided",
    "EMPTY",
    "GRMeasure",
    "find_between",
    "format_measure",
    "mu_regular",
    "mu_uniserial",
    "mu_upper",
    "parse_measure",
    "Subspace",
    "gaussian_binomial",
    "galois_number",
    "cartan",
    "classify_position",
    "coxeter",
    "coxeter_inv",
    "euler_form",
    "preinjective_dims",
    "preprojective_dims",
    "tau_dim",
    "tau_inv_dim",
    "KroneckerModule",
    "decompose",
    "direct_sum",
    "embed2k",
    "enumerate_submodules",
    "ext_dim",
    "has_11_submodule",
    "hom_basis",
    "hom_dim",
    "is_indecomposable",
    "is_isomorphic",
    "p_module",
    "preinj2k",
    "preproj2k",
    "q_module",
    "quotient_module",
    "random_module",
    "regular2k",
    "regular2k_inf",
    "restrict_module",
    "simple_module",
    "tau_inverse_module",
    "tau_module",
    "MeasureStore",
    "gr_measure",
    "gr_measure_oracle",
    "CatalogBuilder",
    "CatalogResult",
    "ScanRecord",
    "catalog_to_csv",
    "gap_scan",
    "parse_catalog_csv",
    "takeoff_sequence",
    "SUITES",
    "VerifySuiteResult",
    "get_builder",
    "run_all",
    "run_suite",
    "__version__",
]
