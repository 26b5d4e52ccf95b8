"""Shared domain types and validity/maximality predicates.

A data matrix is a dense n x m grid of finite reals.  A bicluster is a pair
(rows, cols) of strictly increasing index tuples selecting a submatrix.  The
predicates here define what it means for that submatrix to be homogeneous
under each supported bicluster type:

``ctv-binary``
    every selected cell equals 1 (a formal concept of ones),
``cvc-p`` / ``cvc``
    each selected column has value range <= epsilon over the selected rows
    (epsilon = 0 for the perfect variant),
``cvr-p`` / ``cvr``
    the same, with rows and columns swapped,
``chv-p`` / ``chv``
    for every pair of selected columns (j, l), the per-row differences
    a_ij - a_il have range <= epsilon over the selected rows (additive
    coherence; multiplicative coherence is served by mining the elementwise
    log under ``model="scale"``).

Indices are 0-based everywhere, including file formats.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any, Iterable, Sequence

import numpy as np

PERFECT_TYPES = frozenset({"ctv-binary", "cvc-p", "cvr-p", "chv-p"})
PERTURBED_TYPES = frozenset({"cvc", "cvr", "chv"})
BIC_TYPES = PERFECT_TYPES | PERTURBED_TYPES
MODELS = ("shift", "scale")


class NumericMatrix:
    """Dense n x m matrix of finite 64-bit floats, immutable after construction.

    Parameters
    ----------
    values : array-like
        Two-dimensional numeric data; every element must be finite.
    """

    __slots__ = ("values",)

    def __init__(self, values) -> None:
        arr = np.array(values, dtype=np.float64, copy=True)
        if arr.ndim != 2:
            raise ValueError(f"matrix must be 2-dimensional, got shape {arr.shape}")
        if arr.shape[0] < 1 or arr.shape[1] < 1:
            raise ValueError(f"matrix must be at least 1x1, got shape {arr.shape}")
        if not np.isfinite(arr).all():
            raise ValueError("matrix contains non-finite entries (NaN or Inf)")
        arr.setflags(write=False)
        object.__setattr__(self, "values", arr)

    def __setattr__(self, name, value):
        raise AttributeError("NumericMatrix is immutable")

    @property
    def n_rows(self) -> int:
        return self.values.shape[0]

    @property
    def n_cols(self) -> int:
        return self.values.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self.values.shape

    def __eq__(self, other) -> bool:
        if not isinstance(other, NumericMatrix):
            return NotImplemented
        return self.shape == other.shape and bool(np.array_equal(self.values, other.values))

    def __hash__(self):
        return hash((self.shape, self.values.tobytes()))

    def __repr__(self) -> str:
        return f"NumericMatrix({self.n_rows}x{self.n_cols})"


def as_matrix(obj) -> NumericMatrix:
    """Coerce an array-like or NumericMatrix into a NumericMatrix."""
    if isinstance(obj, NumericMatrix):
        return obj
    return NumericMatrix(obj)


@dataclass(frozen=True, order=True)
class Bicluster:
    """A submatrix selection: sorted row ids and sorted column ids.

    Both index tuples are normalized to strictly increasing order; empty
    selections are rejected.
    """

    rows: tuple[int, ...]
    cols: tuple[int, ...]

    def __init__(self, rows: Iterable[int], cols: Iterable[int]) -> None:
        r = tuple(sorted(set(int(i) for i in rows)))
        c = tuple(sorted(set(int(j) for j in cols)))
        if not r or not c:
            raise ValueError("bicluster rows and cols must be nonempty")
        object.__setattr__(self, "rows", r)
        object.__setattr__(self, "cols", c)

    @property
    def volume(self) -> int:
        return len(self.rows) * len(self.cols)

    def swapped(self) -> "Bicluster":
        """Rows-for-columns swap (used when mining a transposed matrix)."""
        return Bicluster(self.cols, self.rows)

    def to_dict(self) -> dict[str, list[int]]:
        return {"rows": list(self.rows), "cols": list(self.cols)}


@dataclass(frozen=True)
class EnumParams:
    """Enumeration parameters: residue bound, size filters, type and model."""

    epsilon: float = 0.0
    min_row: int = 1
    min_col: int = 1
    bic_type: str = "cvc-p"
    model: str = "shift"

    def __post_init__(self) -> None:
        if self.bic_type not in BIC_TYPES:
            raise ValueError(
                f"unknown bic_type {self.bic_type!r}; expected one of {sorted(BIC_TYPES)}"
            )
        if self.model not in MODELS:
            raise ValueError(f"unknown model {self.model!r}; expected one of {MODELS}")
        if not (self.epsilon >= 0.0) or not math.isfinite(self.epsilon):
            raise ValueError(f"epsilon must be a finite nonnegative real, got {self.epsilon}")
        if self.min_row < 1 or self.min_col < 1:
            raise ValueError("min_row and min_col must be >= 1")
        if self.bic_type in PERFECT_TYPES and self.epsilon != 0.0:
            raise ValueError(
                f"bic_type {self.bic_type!r} is a perfect type and requires epsilon = 0; "
                f"use {self.bic_type.removesuffix('-p')!r} for epsilon > 0"
            )
        if self.bic_type in PERTURBED_TYPES and self.epsilon == 0.0:
            raise ValueError(
                f"bic_type {self.bic_type!r} requires epsilon > 0; "
                f"use {self.bic_type + '-p'!r} for epsilon = 0"
            )
        if self.bic_type in ("chv", "chv-p") and self.min_col < 2:
            raise ValueError(
                "chv mining requires min_col >= 2 (coherence is vacuous on one column)"
            )


@dataclass(frozen=True)
class SolutionStats:
    """Counters attached to a solution: size, work done, wall time."""

    num_biclusters: int
    nodes_expanded: int = 0
    elapsed_s: float = 0.0
    extras: dict[str, Any] = field(default_factory=dict, compare=False)


@dataclass(frozen=True)
class BiclusterSolution:
    """An enumeration result: the biclusters found plus run statistics."""

    biclusters: tuple[Bicluster, ...]
    params: EnumParams | None = None
    stats: SolutionStats | None = None

    def __post_init__(self) -> None:
        bics = tuple(self.biclusters)
        object.__setattr__(self, "biclusters", bics)
        if self.stats is None:
            object.__setattr__(self, "stats", SolutionStats(num_biclusters=len(bics)))

    def __len__(self) -> int:
        return len(self.biclusters)

    def __iter__(self):
        return iter(self.biclusters)

    def as_set(self) -> frozenset[tuple[tuple[int, ...], tuple[int, ...]]]:
        return frozenset((b.rows, b.cols) for b in self.biclusters)


def sort_biclusters(bics: Iterable[Bicluster]) -> tuple[Bicluster, ...]:
    """Canonical solution order: lexicographic by (rows, cols)."""
    return tuple(sorted(bics, key=lambda b: (b.rows, b.cols)))


def transform_for_model(matrix, model: str) -> NumericMatrix:
    """Map the matrix into the space where additive coherence is mined.

    ``shift`` returns the matrix unchanged; ``scale`` returns the elementwise
    natural log, so multiplicative patterns become additive ones.  Under
    ``scale`` every entry must be strictly positive.
    """
    mat = as_matrix(matrix)
    if model == "shift":
        return mat
    if model == "scale":
        bad = np.argwhere(mat.values <= 0.0)
        if len(bad):
            i, j = (int(x) for x in bad[0])
            raise ValueError(
                f"scale model requires strictly positive entries; "
                f"cell ({i},{j}) = {mat.values[i, j]}"
            )
        return NumericMatrix(np.log(mat.values))
    raise ValueError(f"unknown model {model!r}; expected one of {MODELS}")


def transpose(matrix) -> NumericMatrix:
    """The transposed matrix; (i, j) maps to (j, i)."""
    return NumericMatrix(as_matrix(matrix).values.T)


def _check_indices(mat: NumericMatrix, bic: Bicluster) -> None:
    if bic.rows[-1] >= mat.n_rows or bic.rows[0] < 0:
        raise IndexError(f"row index out of range for {mat.n_rows}x{mat.n_cols} matrix")
    if bic.cols[-1] >= mat.n_cols or bic.cols[0] < 0:
        raise IndexError(f"column index out of range for {mat.n_rows}x{mat.n_cols} matrix")


def _sub(mat: NumericMatrix, bic: Bicluster) -> np.ndarray:
    return mat.values[np.ix_(bic.rows, bic.cols)]


def is_valid(matrix, bic: Bicluster, params: EnumParams) -> bool:
    """Does the selected submatrix satisfy the residue bound of params.bic_type?

    The check runs in the model space (``scale`` takes logs first).  ``cvr``
    variants evaluate the column-constancy predicate on the transpose.
    """
    mat = transform_for_model(matrix, params.model)
    _check_indices(mat, bic)
    t = params.bic_type
    if t in ("cvr", "cvr-p"):
        return is_valid(
            transpose(mat),
            bic.swapped(),
            EnumParams(params.epsilon, params.min_col, params.min_row,
                       "cvc" if t == "cvr" else "cvc-p"),
        )
    sub = _sub(mat, bic)
    if t == "ctv-binary":
        return bool((sub == 1.0).all())
    if t in ("cvc", "cvc-p"):
        rng = sub.max(axis=0) - sub.min(axis=0)
        return bool((rng <= params.epsilon).all())
    # chv / chv-p: range of a_ij - a_il over the rows, for every column pair
    diffs = sub[:, :, None] - sub[:, None, :]
    rng = diffs.max(axis=0) - diffs.min(axis=0)
    return bool((rng <= params.epsilon).all())


def is_maximal(matrix, bic: Bicluster, params: EnumParams) -> bool:
    """Can no single row and no single column be added while staying valid?

    Precondition: ``bic`` itself must be valid.
    """
    mat = as_matrix(matrix)
    if not is_valid(mat, bic, params):
        raise ValueError("is_maximal requires a valid bicluster")
    row_set, col_set = set(bic.rows), set(bic.cols)
    for x in range(mat.n_rows):
        if x not in row_set:
            if is_valid(mat, Bicluster(bic.rows + (x,), bic.cols), params):
                return False
    for y in range(mat.n_cols):
        if y not in col_set:
            if is_valid(mat, Bicluster(bic.rows, bic.cols + (y,)), params):
                return False
    return True
