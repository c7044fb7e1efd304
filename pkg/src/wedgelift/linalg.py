"""Exact linear algebra: GF(2) on int-bitset rows, and dense elimination over GF(2^ell).

A row bitset encodes a 0/1 vector with column j at bit j. For 0/1 matrices the
rank over any GF(2^ell) equals the GF(2) rank (row operations on unit pivots
stay in the subfield), which is why the bitset path serves both codes; the
dense eliminator exists to compute and cross-check ranks over the big field
without that argument.
"""

from __future__ import annotations

from collections.abc import Iterable

import numpy as np

from .field import FieldSpec


def gf2_rank(rows: Iterable[int]) -> int:
    """Rank of the 0/1 matrix whose rows are bitsets."""
    pivots: dict[int, int] = {}
    for row in rows:
        row = _reduce(row, pivots)
        if row:
            pivots[_low_bit(row)] = row
    return len(pivots)


def gf2_rref(rows: Iterable[int]) -> dict[int, int]:
    """Fully reduced row-echelon form: {pivot column: row bitset}.

    Each pivot column appears in exactly one row.
    """
    pivots: dict[int, int] = {}
    for row in rows:
        row = _reduce(row, pivots)
        if row:
            pivots[_low_bit(row)] = row
    for col in sorted(pivots, reverse=True):
        row = pivots[col]
        rest = row & ~(1 << col)
        while rest:
            c = _low_bit(rest)
            if c in pivots:
                row ^= pivots[c]
                rest = row & ~(1 << col)
            else:
                rest &= rest - 1
        pivots[col] = row
    return pivots


def gf2_nullspace(rows: Iterable[int], ncols: int) -> list[int]:
    """Basis bitsets of {v : every row r has parity(v & r) = 0}.

    One basis vector per free column, in increasing free-column order; basis
    vector for free column f has bit f set (unit-pivot form).
    """
    pivots = gf2_rref(rows)
    basis = []
    for f in range(ncols):
        if f in pivots:
            continue
        v = 1 << f
        for col, row in pivots.items():
            if row >> f & 1:
                v |= 1 << col
        basis.append(v)
    return basis


def bitset_to_array(bits: int, ncols: int) -> np.ndarray:
    """Unpack a row bitset to a length-ncols uint8 0/1 vector."""
    nbytes = (ncols + 7) // 8
    raw = np.frombuffer(bits.to_bytes(nbytes, "little"), dtype=np.uint8)
    return np.unpackbits(raw, bitorder="little")[:ncols]


def array_to_bitset(vec: np.ndarray) -> int:
    """Pack a 0/1 vector into a row bitset (column j -> bit j)."""
    packed = np.packbits(vec.astype(np.uint8), bitorder="little")
    return int.from_bytes(packed.tobytes(), "little")


def gfq_rank(matrix: np.ndarray, spec: FieldSpec) -> int:
    """Rank over GF(2^ell) by dense Gaussian elimination.

    Pivot = first nonzero entry in column order; exact arithmetic, so no
    tolerance parameters exist.
    """
    m = np.array(matrix, dtype=np.uint16, copy=True)
    if m.ndim != 2:
        raise ValueError("matrix must be two-dimensional")
    mul = spec.mul_table()
    nrows, ncols = m.shape
    rank = 0
    for col in range(ncols):
        pivot = None
        for r in range(rank, nrows):
            if m[r, col]:
                pivot = r
                break
        if pivot is None:
            continue
        if pivot != rank:
            m[[rank, pivot]] = m[[pivot, rank]]
        inv_p = spec.inv(int(m[rank, col]))
        m[rank] = mul[inv_p, m[rank]]
        for r in range(nrows):
            if r != rank and m[r, col]:
                m[r] ^= mul[int(m[r, col]), m[rank]]
        rank += 1
        if rank == nrows:
            break
    return rank


def _reduce(row: int, pivots: dict[int, int]) -> int:
    while row:
        col = _low_bit(row)
        if col not in pivots:
            return row
        row ^= pivots[col]
    return 0


def _low_bit(x: int) -> int:
    return (x & -x).bit_length() - 1
