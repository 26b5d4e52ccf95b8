"""Reading and writing matrices (CSV/TSV) and bicluster solutions (JSON).

The JSON schema for a solution is a plain array of objects
``{"rows": [...], "cols": [...]}`` with 0-based, ascending indices — the
same schema for mined output, ground truth and evaluation input.
"""

from __future__ import annotations

import json
from typing import Iterable

import numpy as np

from .core import Bicluster, BiclusterSolution, NumericMatrix, as_matrix, sort_biclusters


def _sniff_delimiter(sample: str) -> str | None:
    """Pick the most plausible cell separator; None means any whitespace."""
    first = sample.splitlines()[0] if sample.splitlines() else ""
    for cand in (",", "\t", ";"):
        if cand in first:
            return cand
    return None


def load_matrix(path, *, delimiter: str | None = None, header: bool = False) -> NumericMatrix:
    """Load a dense numeric matrix from a CSV/TSV/whitespace text file.

    Parameters
    ----------
    path : path-like
    delimiter : str, optional
        Cell separator; sniffed from the first line when omitted.
    header : bool
        Skip the first line if True.
    """
    with open(path, "r", encoding="utf-8") as fh:
        sample = fh.read(4096)
    if delimiter is None:
        delimiter = _sniff_delimiter(sample)
    try:
        arr = np.loadtxt(path, delimiter=delimiter, skiprows=1 if header else 0, ndmin=2)
    except ValueError as exc:
        raise ValueError(f"could not parse numeric matrix from {path}: {exc}") from None
    return NumericMatrix(arr)


def save_matrix(matrix, path, *, delimiter: str = ",") -> None:
    """Write a matrix as delimited text with full float round-trip precision."""
    mat = as_matrix(matrix)
    np.savetxt(path, mat.values, delimiter=delimiter, fmt="%.17g")


def biclusters_to_obj(bics: Iterable[Bicluster]) -> list[dict]:
    return [b.to_dict() for b in bics]


def solution_to_json(solution) -> str:
    """Serialize a solution (or plain list of biclusters) deterministically."""
    bics = solution.biclusters if isinstance(solution, BiclusterSolution) else tuple(solution)
    return json.dumps(biclusters_to_obj(bics), separators=(",", ":")) + "\n"


def save_solution(solution, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(solution_to_json(solution))


def load_solution(path) -> BiclusterSolution:
    """Read a JSON bicluster array back into a BiclusterSolution."""
    with open(path, "r", encoding="utf-8") as fh:
        obj = json.load(fh)
    if not isinstance(obj, list):
        raise ValueError(f"{path}: expected a JSON array of biclusters")
    bics = []
    for k, entry in enumerate(obj):
        try:
            bics.append(Bicluster(entry["rows"], entry["cols"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise ValueError(f"{path}: bad bicluster at index {k}: {exc}") from None
    return BiclusterSolution(biclusters=sort_biclusters(bics))
