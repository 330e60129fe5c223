"""The two-step lowering algorithm between frequency-vector levels:
block-decomposed non-negative Diophantine solving, then connectivity
filtering. The wavelet basis lives here as a numeric verification layer."""

from __future__ import annotations

from itertools import product
from typing import Sequence

import numpy as np

from .debruijn import enumerate_sequences_with_frequency, subgraph_from_frequency
from .errors import DomainError
from .freqspace import FrequencyVector


def _nonneg_matrices(row_sums: Sequence[int], col_sums: Sequence[int]):
    """All non-negative integer matrices with the given margins."""
    if sum(row_sums) != sum(col_sums):
        return
    l = len(row_sums)

    def fill(rows_done: list[list[int]], cols_left: list[int]):
        r = len(rows_done)
        if r == l - 1:
            last = cols_left
            if all(c >= 0 for c in last) and sum(last) == row_sums[r]:
                yield rows_done + [list(last)]
            return

        def row_options(remaining: int, j: int, prefix: list[int]):
            if j == l - 1:
                if 0 <= remaining <= cols_left[j]:
                    yield prefix + [remaining]
                return
            for v in range(min(remaining, cols_left[j]) + 1):
                yield from row_options(remaining - v, j + 1, prefix + [v])

        for row in row_options(row_sums[r], 0, []):
            yield from fill(
                rows_done + [row], [c - v for c, v in zip(cols_left, row)]
            )

    yield from fill([], list(col_sums))


def solve_step1(y: FrequencyVector) -> list[FrequencyVector]:
    """All non-negative integer level-(p+1) vectors Z with L Z = R Z = Y.

    The system splits into independent blocks, one per length-(p-1) middle
    word: within a block the unknowns Z[b, mid, a] form an l x l matrix whose
    row sums are Y[b . mid] (outgoing flow) and column sums Y[mid . a]
    (incoming flow). Candidates are the Cartesian product of the per-block
    solutions, in lexicographic order of Z.
    """
    p, n, l = y.p, y.n, y.l
    if p == 0:
        # Level 0 -> 1: any composition of n into l parts.
        out = []
        for comp in _compositions(n, l):
            out.append(FrequencyVector.from_dense(1, n, l, comp))
        return sorted(out, key=lambda z: z.sort_key())

    mid_size = l ** (p - 1)
    # Only blocks touched by nonzero Y entries can carry nonzero Z.
    mids = set()
    for w, _ in y.items():
        mids.add(w % mid_size)  # w = b . mid
        mids.add(w // l)  # w = mid . a
    block_solutions: list[tuple[int, list]] = []
    for mid in sorted(mids):
        rows = [y.entry(b * mid_size + mid) for b in range(l)]
        cols = [y.entry(mid * l + a) for a in range(l)]
        sols = list(_nonneg_matrices(rows, cols))
        if not sols:
            return []
        block_solutions.append((mid, sols))

    out = []
    for choice in product(*(sols for _, sols in block_solutions)):
        counts: dict[int, int] = {}
        for (mid, _), mat in zip(block_solutions, choice):
            for b in range(l):
                for a in range(l):
                    v = mat[b][a]
                    if v:
                        counts[b * l**p + mid * l + a] = v
        out.append(FrequencyVector(p + 1, n, l, counts))
    return sorted(out, key=lambda z: z.sort_key())


def _compositions(n: int, parts: int):
    if parts == 1:
        yield (n,)
        return
    for first in range(n + 1):
        for rest in _compositions(n - first, parts - 1):
            yield (first,) + rest


def lower(y: FrequencyVector) -> list[FrequencyVector]:
    """Step I candidates filtered by subgraph connectivity; equals the exact
    preimage set {project(s, p+1) : project(s, p) = Y}."""
    if y.p == 0:
        # Level-1 subgraphs are self-loops on one vertex: always connected.
        return solve_step1(y)
    return [
        z
        for z in solve_step1(y)
        if subgraph_from_frequency(z).is_connected()
    ]


def count_members(z: FrequencyVector, cap_n: int = 20) -> int:
    """Number of distinct cyclic sequences realizing z; 0 iff disconnected."""
    return len(enumerate_sequences_with_frequency(z, cap_n=cap_n))


class WaveletBasis:
    """Orthonormal wavelet basis of the l^p-dimensional frequency space.

    The zero family pairs each Fourier vector chi_j with constant tails;
    the (gamma, j, alphas) family localizes chi_j behind a fixed prefix of
    elementary vectors. Used only to verify the block decomposition the
    integer solver relies on; production counting never touches floats.
    """

    def __init__(self, l: int, p: int):
        if l < 2 or p < 1:
            raise DomainError("need l >= 2 and p >= 1")
        self.l = l
        self.p = p
        chi = np.array(
            [
                [np.exp(2j * np.pi * i * j / l) for i in range(l)]
                for j in range(l)
            ]
        ).T  # chi[:, j]
        q = np.ones(l)
        e = np.eye(l)
        labels: list[tuple] = []
        vecs: list[np.ndarray] = []
        for j in range(l):
            v = chi[:, j]
            for _ in range(p - 1):
                v = np.kron(v, q)
            labels.append((0, j, ()))
            vecs.append(v * l ** (-p / 2))
        for gamma in range(1, p):
            for alphas in product(range(l), repeat=gamma):
                for j in range(1, l):
                    v = np.ones(1)
                    for a in alphas:
                        v = np.kron(v, e[a])
                    v = np.kron(v, chi[:, j])
                    for _ in range(p - gamma - 1):
                        v = np.kron(v, q)
                    labels.append((gamma, j, alphas))
                    vecs.append(v * l ** (-(p - gamma) / 2))
        self.labels = labels
        self.matrix = np.column_stack(vecs)

    def vector(self, label: tuple) -> np.ndarray:
        return self.matrix[:, self.labels.index(label)]


def wavelet_basis(l: int, p: int) -> WaveletBasis:
    return WaveletBasis(l, p)


def raising_matrix_action(vec: np.ndarray, l: int) -> np.ndarray:
    """Dense action of the raising map R_p: sums of l consecutive entries."""
    return vec.reshape(-1, l).sum(axis=1)


def lowering_incidence_action(vec: np.ndarray, l: int) -> np.ndarray:
    """Dense action of the incidence map L_p: sums over the leading letter."""
    return vec.reshape(l, -1).sum(axis=0)
