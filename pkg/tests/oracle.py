"""Brute-force GF(2) linear-algebra oracles for the test suite.

Codeword sets are built by folding the span of generator rows (bitmask
ints), duals by nullspace computation on those rows: everything here is
independent of the defining-set calculus under test.
"""

from __future__ import annotations

from typing import Sequence


def span(rows: Sequence[int]) -> frozenset[int]:
    """All XOR combinations of the given rows (2^rank words)."""
    words = {0}
    for row in rows:
        words |= {w ^ row for w in words}
    return frozenset(words)


def rref(rows: Sequence[int], ncols: int) -> tuple[list[int], list[int]]:
    """Reduced row echelon form over GF(2); returns (nonzero rows, pivot columns)."""
    mat = [int(r) for r in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r >= len(mat):
            break
        bit = 1 << c
        pivot = next((i for i in range(r, len(mat)) if mat[i] & bit), None)
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        pivots.append(c)
        for i in range(len(mat)):
            if i != r and mat[i] & bit:
                mat[i] ^= mat[r]
        r += 1
    return [m for m in mat[:r] if m], pivots


def rank(rows: Sequence[int], ncols: int) -> int:
    return len(rref(rows, ncols)[1])


def nullspace(rows: Sequence[int], ncols: int) -> list[int]:
    """Basis of the right kernel of the matrix given by bitmask rows."""
    rref_rows, pivots = rref(rows, ncols)
    pivot_set = set(pivots)
    basis = []
    for free in range(ncols):
        if free in pivot_set:
            continue
        v = 1 << free
        for row, pcol in zip(rref_rows, pivots):
            if row & (1 << free):
                v |= 1 << pcol
        basis.append(v)
    return basis


def weights_of(words: frozenset[int]) -> dict[int, int]:
    counts: dict[int, int] = {}
    for w in words:
        counts[w.bit_count()] = counts.get(w.bit_count(), 0) + 1
    return counts
