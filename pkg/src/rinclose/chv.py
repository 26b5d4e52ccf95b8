"""Enumeration of all maximal additive-coherent (shifting) biclusters.

A submatrix is additively coherent when, for every pair of its columns, the
per-row column difference is (within epsilon) the same in every selected
row.  Multiplicative coherence reduces to this by mining the elementwise log
(``model="scale"``).

Perfect case (epsilon = 0): coherence with a single pivot column transfers
exactly to all column pairs, so the search runs one restricted closure walk
per pivot column, branching on equal-difference row groups and testing
canonicity against all earlier columns.

Perturbed case (epsilon > 0): a pivot column is not enough (pairwise error
could reach 2*epsilon), so the problem is lifted to the augmented matrix
holding every pairwise column difference.  There a coherent column set shows
up as constant-column structure; the pipeline is

1. build the augmented matrix,
2. mine it for maximal constant-column biclusters with the same epsilon
   (min_col mapped to the pair count c*(c-1)/2, a sound prune), and
3. for each of those, map its intent back to original columns, connect the
   pairs it certifies into a graph, and read candidate intents off the
   maximal cliques; a candidate survives if it uses the whole vertex set or
   no further row fits its extent, and a registry drops repeats arising from
   different step-2 biclusters.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

import numpy as np

from .cliques import UndirectedGraph, maximal_cliques
from .core import (
    Bicluster,
    BiclusterSolution,
    EnumParams,
    NumericMatrix,
    SolutionStats,
    as_matrix,
    sort_biclusters,
    transform_for_model,
)
from .cvc import _canonical_fast, _mine_cvc, _window_ends, _window_starts


@dataclass(frozen=True)
class AugmentedMatrix:
    """All pairwise column differences of a matrix, one column per ordered pair.

    Column k holds d_ij - d_il for the k-th pair (j, l), j < l, pairs in
    lexicographic order (0,1), (0,2), ..., (0,m-1), (1,2), ...
    """

    matrix: NumericMatrix
    pairs: tuple[tuple[int, int], ...]

    @property
    def values(self) -> np.ndarray:
        return self.matrix.values

    @property
    def n_pairs(self) -> int:
        return len(self.pairs)

    def pair_of(self, k: int) -> tuple[int, int]:
        """The ordered pair (j, l) of original columns behind column k."""
        return self.pairs[k]

    def col_of(self, j: int, l: int) -> int:
        """Index of the column holding the (j, l) difference, j < l."""
        m = self._n_source_cols
        if not 0 <= j < l < m:
            raise ValueError(f"need 0 <= j < l < {m}, got ({j}, {l})")
        return j * (2 * m - j - 1) // 2 + (l - j - 1)

    @property
    def _n_source_cols(self) -> int:
        return self.pairs[-1][1] + 1


def build_augmented(matrix) -> AugmentedMatrix:
    """The n x m(m-1)/2 matrix of all pairwise column differences."""
    mat = as_matrix(matrix)
    m = mat.n_cols
    if m < 2:
        raise ValueError("augmented matrix requires at least 2 columns")
    pairs = tuple((j, l) for j in range(m) for l in range(j + 1, m))
    cols = [mat.values[:, j] - mat.values[:, l] for j, l in pairs]
    return AugmentedMatrix(matrix=NumericMatrix(np.column_stack(cols)), pairs=pairs)


def enumerate_chv_perfect(
    matrix, min_row: int = 1, min_col: int = 2, model: str = "shift"
) -> BiclusterSolution:
    """All maximal perfect shifting biclusters, each exactly once.

    One restricted walk per pivot column: the pivot is the smallest column of
    every intent found under it, and only later columns are scanned.  A pivot
    whose difference with some earlier column is constant over all rows is
    skipped outright — every bicluster under it would repeat an earlier
    pivot's subtree.
    """
    if min_col < 2:
        raise ValueError("chv mining requires min_col >= 2")
    if min_row < 1:
        raise ValueError("min_row must be >= 1")
    t0 = time.perf_counter()
    values = transform_for_model(matrix, model).values
    n, m = values.shape
    out: list[tuple[tuple[int, ...], tuple[int, ...]]] = []
    nodes = 0
    all_rows = np.arange(n, dtype=np.intp)
    for atr in range(m - 1):
        piv_all = values[:, atr]
        if any(
            (d := piv_all - values[:, k]).max() - d.min() == 0.0 for k in range(atr)
        ):
            continue
        # stack entries: (extent ids sorted, intent, start attr)
        stack: list[tuple[np.ndarray, tuple[int, ...], int]] = [(all_rows, (atr,), atr + 1)]
        while stack:
            a, b_in, y = stack.pop()
            nodes += 1
            va = values[a]
            z = va[:, [atr]] - va  # (|a|, m) differences vs the pivot column
            rng_all = z.max(axis=0) - z.min(axis=0)
            intent = list(b_in)
            bset = set(b_in)
            children: list[tuple[np.ndarray, int]] = []
            pruned = False
            for j in range(y, m):
                if j in bset:
                    continue
                if len(intent) + (m - j) < min_col:
                    pruned = True
                    break
                if rng_all[j] == 0.0:
                    intent.append(j)
                    bset.add(j)
                    continue
                zj = z[:, j]
                order = np.lexsort((a, zj))
                sv = zj[order]
                sids = a[order]
                ends = _window_ends(sv, 0.0)
                for p in _window_starts(ends):
                    e = int(ends[p])
                    if e - p < min_row:
                        continue
                    rw = np.sort(sids[p:e])
                    vc = values[rw]
                    zc = vc[:, [atr]] - vc
                    if not _canonical_fast(zc, np.arange(len(rw), dtype=np.intp), bset, j, 0.0):
                        continue
                    children.append((rw, j))
            if not pruned and len(a) >= min_row and len(intent) >= min_col:
                out.append((tuple(int(r) for r in a), tuple(sorted(intent))))
            for rw, j in reversed(children):
                stack.append((rw, tuple(sorted(intent + [j])), j + 1))

    params = EnumParams(0.0, min_row, min_col, "chv-p", model)
    return BiclusterSolution(
        biclusters=sort_biclusters(Bicluster(r, c) for r, c in out),
        params=params,
        stats=SolutionStats(len(out), nodes, time.perf_counter() - t0),
    )


def clique_candidates(
    cvc_bic: Bicluster, aug: AugmentedMatrix, min_col: int
) -> list[tuple[tuple[int, ...], tuple[int, ...]]]:
    """Candidate (extent, intent) pairs read off one augmented-matrix bicluster.

    The bicluster's intent names pairs of original columns whose difference
    is near-constant over its extent; the maximal cliques of the graph on
    those pairs are exactly the maximal mutually-coherent column sets.
    Returns (C, D) for every maximal clique D with |D| >= min_col, before any
    row-maximality filtering.
    """
    pair_set = [aug.pair_of(k) for k in cvc_bic.cols]
    b2 = sorted({c for pr in pair_set for c in pr})
    index = {c: i for i, c in enumerate(b2)}
    graph = UndirectedGraph(len(b2), [(index[j], index[l]) for j, l in pair_set])
    cands = []
    for clique in maximal_cliques(graph):
        d = tuple(b2[v] for v in clique)
        if len(d) >= min_col:
            cands.append((cvc_bic.rows, d))
    return cands


def _row_maximal_full(
    values: np.ndarray, extent: tuple[int, ...], d: tuple[int, ...], eps: float
) -> bool:
    """No row outside the extent keeps every pairwise difference of d within eps."""
    n = values.shape[0]
    rows = np.asarray(extent, dtype=np.intp)
    others = np.setdiff1d(np.arange(n, dtype=np.intp), rows)
    if not len(others):
        return True
    cols = np.asarray(d, dtype=np.intp)
    sub = values[np.ix_(rows, cols)]
    pair = sub[:, :, None] - sub[:, None, :]  # (|extent|, c, c)
    pmin = pair.min(axis=0)
    pmax = pair.max(axis=0)
    ov = values[np.ix_(others, cols)]
    q = ov[:, :, None] - ov[:, None, :]  # (|others|, c, c)
    joinable = ((q - pmin) <= eps).all(axis=(1, 2)) & ((pmax - q) <= eps).all(axis=(1, 2))
    return not joinable.any()


def extract_chv_from_cvc(
    cvc_bic: Bicluster,
    aug: AugmentedMatrix,
    matrix,
    epsilon: float,
    min_col: int,
    emitted: set[tuple[tuple[int, ...], tuple[int, ...]]],
) -> list[Bicluster]:
    """Shifting biclusters contributed by one augmented-matrix bicluster.

    Each clique candidate (C, D) is kept iff D covers the whole vertex set B2
    or no row outside C fits every column pair of D; ``emitted`` deduplicates
    identical results arising from different source biclusters.
    """
    values = as_matrix(matrix).values
    b2 = tuple(sorted({c for k in cvc_bic.cols for c in aug.pair_of(k)}))
    kept = []
    for c_rows, d in clique_candidates(cvc_bic, aug, min_col):
        if d != b2 and not _row_maximal_full(values, c_rows, d, epsilon):
            continue
        key = (c_rows, d)
        if key in emitted:
            continue
        emitted.add(key)
        kept.append(Bicluster(c_rows, d))
    return kept


def enumerate_chv(matrix, params: EnumParams) -> BiclusterSolution:
    """All maximal perturbed shifting biclusters, each exactly once."""
    if params.bic_type != "chv":
        raise ValueError(f"enumerate_chv expects bic_type chv, got {params.bic_type!r}")
    t0 = time.perf_counter()
    mat = transform_for_model(matrix, params.model)
    if mat.n_cols < 2:
        return BiclusterSolution(
            biclusters=(), params=params, stats=SolutionStats(0, 0, time.perf_counter() - t0)
        )
    aug = build_augmented(mat)
    min_pairs = params.min_col * (params.min_col - 1) // 2
    pairs, nodes = _mine_cvc(
        aug.values,
        params.epsilon,
        params.min_row,
        min_pairs,
        perfect=False,
    )
    emitted: set[tuple[tuple[int, ...], tuple[int, ...]]] = set()
    out: list[Bicluster] = []
    for rows, cols in pairs:
        out.extend(
            extract_chv_from_cvc(
                Bicluster(rows, cols), aug, mat, params.epsilon, params.min_col, emitted
            )
        )
    return BiclusterSolution(
        biclusters=sort_biclusters(out),
        params=params,
        stats=SolutionStats(len(out), nodes, time.perf_counter() - t0),
    )
