"""Synthetic matrices with planted biclusters and known ground truth.

Blocks are laid out along the diagonal before shuffling; consecutive blocks
share ``floor(overlap * size)`` rows and columns.  A shift-pattern block is
``shift[row] + base[col]``; on shared rows and columns the later block reuses
the earlier block's shifts and bases, so the overwritten corner is
bit-identical and both blocks stay perfect.  Constant-column blocks likewise
copy the earlier block's column constants on shared columns.  Gaussian noise
is then added to the whole matrix and a seeded row and column shuffle hides
the block structure; the returned ground truth is expressed in the shuffled
coordinates.

Value conventions of this generator: background cells are uniform over
[0, 100]; block shifts, bases and constants are drawn from the dyadic grid
{k/1024 : 0 <= k <= 10240} ~ uniform over [0, 10].  The grid keeps every
``shift + base`` sum exact in 64-bit floats, so a noise-free planted block
has a residue of exactly zero; the wide background against sigma << 1 makes
spurious block extensions negligible.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

import numpy as np

from .core import (
    Bicluster,
    BiclusterSolution,
    EnumParams,
    NumericMatrix,
    SolutionStats,
    sort_biclusters,
)

PATTERNS = ("cvc", "chv-shift")

_GRID = 1024  # dyadic denominator for block values: sums stay exact


@dataclass(frozen=True)
class GenConfig:
    """Shape, planted-block geometry, noise level and seed for one matrix."""

    n: int = 500
    m: int = 30
    num_bics: int = 5
    bic_rows: int = 50
    bic_cols: int = 6
    overlap: float = 0.2
    noise_sigma: float = 0.01
    seed: int = 0
    pattern: str = "chv-shift"

    def __post_init__(self):
        if self.pattern not in PATTERNS:
            raise ValueError(f"unknown pattern {self.pattern!r}; expected one of {PATTERNS}")
        if self.n < 1 or self.m < 1:
            raise ValueError("matrix shape must be positive")
        if self.num_bics < 0:
            raise ValueError("num_bics must be >= 0")
        if self.num_bics and not (1 <= self.bic_rows <= self.n and 1 <= self.bic_cols <= self.m):
            raise ValueError("planted biclusters must fit the matrix")
        if not 0.0 <= self.overlap < 1.0:
            raise ValueError("overlap must lie in [0, 1)")
        if self.noise_sigma < 0:
            raise ValueError("noise_sigma must be >= 0")
        if self.pattern == "chv-shift" and self.num_bics and self.bic_cols < 2:
            raise ValueError("chv-shift blocks need at least 2 columns")
        if self.num_bics:
            r0, c0 = self._positions()[-1]
            if r0 + self.bic_rows > self.n or c0 + self.bic_cols > self.m:
                raise ValueError(
                    f"cannot pack {self.num_bics} blocks of {self.bic_rows}x{self.bic_cols} "
                    f"with overlap {self.overlap} into a {self.n}x{self.m} matrix"
                )
        # value construction only reconciles consecutive blocks, so any block
        # pair further apart must be cell-disjoint
        if self.num_bics > 2 and 2 * self.shared_rows > self.bic_rows and 2 * self.shared_cols > self.bic_cols:
            raise ValueError("overlap too large: non-consecutive blocks would collide")

    @property
    def shared_rows(self) -> int:
        return int(self.overlap * self.bic_rows)

    @property
    def shared_cols(self) -> int:
        return int(self.overlap * self.bic_cols)

    def _positions(self) -> list[tuple[int, int]]:
        dr = self.bic_rows - self.shared_rows
        dc = self.bic_cols - self.shared_cols
        return [(t * dr, t * dc) for t in range(self.num_bics)]


def _grid_draw(rng, size: int) -> np.ndarray:
    return rng.integers(0, 10 * _GRID + 1, size=size) / _GRID


def generate(config: GenConfig) -> tuple[NumericMatrix, BiclusterSolution]:
    """Matrix plus ground truth; deterministic for a fixed config.

    With noise_sigma = 0 every ground-truth bicluster is a perfect bicluster
    of the configured pattern.  Solution stats record, per planted block, the
    largest column range (pattern cvc) or pairwise-difference range (pattern
    chv-shift) after noise, plus the largest absolute noise value inside any
    block, so callers can pick a sound epsilon.
    """
    t0 = time.perf_counter()
    rng = np.random.default_rng(config.seed)
    n, m = config.n, config.m
    mat = rng.uniform(0, 100, size=(n, m))
    br, bc = config.bic_rows, config.bic_cols
    sr, sc = config.shared_rows, config.shared_cols
    positions = config._positions()
    prev_shift_tail = prev_base_tail = None
    for r0, c0 in positions:
        if config.pattern == "cvc":
            col_const = _grid_draw(rng, bc)
            if prev_base_tail is not None and sc:
                col_const[:sc] = prev_base_tail
            mat[r0 : r0 + br, c0 : c0 + bc] = col_const
            prev_base_tail = col_const[bc - sc :] if sc else None
        else:
            shift = _grid_draw(rng, br)
            base = _grid_draw(rng, bc)
            if prev_shift_tail is not None and sr:
                shift[:sr] = prev_shift_tail
            if prev_base_tail is not None and sc:
                base[:sc] = prev_base_tail
            mat[r0 : r0 + br, c0 : c0 + bc] = shift[:, None] + base[None, :]
            prev_shift_tail = shift[br - sr :] if sr else None
            prev_base_tail = base[bc - sc :] if sc else None
    noise = rng.normal(0.0, config.noise_sigma, size=(n, m)) if config.noise_sigma else np.zeros((n, m))
    mat = mat + noise

    row_perm = rng.permutation(n)
    col_perm = rng.permutation(m)
    shuffled = mat[np.ix_(row_perm, col_perm)]
    new_row = np.argsort(row_perm)  # old index -> shuffled index
    new_col = np.argsort(col_perm)

    residues = []
    max_noise = 0.0
    truth = []
    for r0, c0 in positions:
        truth.append(Bicluster(new_row[np.arange(r0, r0 + br)], new_col[np.arange(c0, c0 + bc)]))
        sub = mat[r0 : r0 + br, c0 : c0 + bc]
        if config.pattern == "cvc":
            residues.append(float((sub.max(axis=0) - sub.min(axis=0)).max()))
        else:
            pair = sub[:, :, None] - sub[:, None, :]
            residues.append(float((pair.max(axis=0) - pair.min(axis=0)).max()))
        max_noise = max(max_noise, float(np.abs(noise[r0 : r0 + br, c0 : c0 + bc]).max()))

    if config.pattern == "cvc":
        params = EnumParams(0.0, 1, 1, "cvc-p")
    else:
        params = EnumParams(0.0, 1, 2, "chv-p")
    stats = SolutionStats(
        len(truth),
        0,
        time.perf_counter() - t0,
        extras={"planted_residues": residues, "max_abs_noise_in_blocks": max_noise},
    )
    return NumericMatrix(shuffled), BiclusterSolution(
        biclusters=sort_biclusters(truth), params=params, stats=stats
    )
