"""Complete enumeration of maximal biclusters in dense numeric matrices.

Supported homogeneity types: constant ones on binary data (``ctv-binary``),
constant columns/rows with residue epsilon (``cvc``/``cvr``, perfect variants
``cvc-p``/``cvr-p``), and additive or multiplicative coherence
(``chv``/``chv-p`` with ``model="shift"``/``"scale"``).  Every enumerator
returns the exact set of maximal biclusters meeting the size filters, each
one exactly once.
"""

from .chv import (
    AugmentedMatrix,
    build_augmented,
    enumerate_chv,
    enumerate_chv_perfect,
)
from .core import (
    Bicluster,
    BiclusterSolution,
    EnumParams,
    NumericMatrix,
    SolutionStats,
    as_matrix,
    is_maximal,
    is_valid,
    sort_biclusters,
    transform_for_model,
    transpose,
)
from .cvc import ExtentRegistry, enumerate_cvc, enumerate_cvr
from .datagen import GenConfig, generate
from .inclose2 import BinaryContext, enumerate_ctv_binary
from .io import load_matrix, load_solution, save_matrix, save_solution
from .metrics import SolutionReport, overlap, precision_recall, solution_report
from .oracle import oracle_enumerate

__version__ = "0.1.0"


def enumerate_biclusters(matrix, params: EnumParams) -> BiclusterSolution:
    """Dispatch to the enumerator for ``params.bic_type``."""
    t = params.bic_type
    if t == "ctv-binary":
        return enumerate_ctv_binary(BinaryContext(matrix), params.min_row, params.min_col)
    if t in ("cvc", "cvc-p"):
        return enumerate_cvc(matrix, params)
    if t in ("cvr", "cvr-p"):
        return enumerate_cvr(matrix, params)
    if t == "chv":
        return enumerate_chv(matrix, params)
    return enumerate_chv_perfect(matrix, params.min_row, params.min_col, params.model)


__all__ = [
    "AugmentedMatrix",
    "Bicluster",
    "BiclusterSolution",
    "BinaryContext",
    "EnumParams",
    "ExtentRegistry",
    "GenConfig",
    "NumericMatrix",
    "SolutionReport",
    "SolutionStats",
    "as_matrix",
    "build_augmented",
    "enumerate_biclusters",
    "enumerate_chv",
    "enumerate_chv_perfect",
    "enumerate_ctv_binary",
    "enumerate_cvc",
    "enumerate_cvr",
    "generate",
    "is_maximal",
    "is_valid",
    "load_matrix",
    "load_solution",
    "oracle_enumerate",
    "overlap",
    "precision_recall",
    "save_matrix",
    "save_solution",
    "solution_report",
    "sort_biclusters",
    "transform_for_model",
    "transpose",
    "__version__",
]
