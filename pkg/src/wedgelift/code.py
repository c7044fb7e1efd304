"""The wedge-lifted code as a concrete linear code, and its binary trace code.

Codewords live in F_q^(q^2) with coordinate order row-major in the point
(x, y): index = x*q + y under the field's integer encoding. The code is the
kernel of the wedge parity checks; each check is the 0/1 indicator of a wedge
point set (odd coset size collapses the line multiset to an indicator, which
is what lets one representation serve both the F_q code and the binary code).
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from ._io import atomic_write_text
from .classify import Monomial, is_bad_coset_criterion, restriction_grid
from .errors import InvariantError, MemoryGuardError, UsageError
from .field import CosetFamily, FieldSpec
from .linalg import (
    array_to_bitset,
    bitset_to_array,
    gf2_nullspace,
    gf2_rank,
    gf2_rref,
)

DEFAULT_MEMORY_GUARD_BYTES = 1 << 31


def eval_monomial(spec: FieldSpec, m: Monomial) -> np.ndarray:
    """Evaluation vector of X^a Y^b over F_q^2: entry[x*q + y] = x^a * y^b."""
    a, b = m
    grid = spec.mul_table()[
        spec.pow_vector(a)[:, None], spec.pow_vector(b)[None, :]
    ]
    return grid.reshape(-1)


def good_monomials(family: CosetFamily) -> tuple[Monomial, ...]:
    """All good monomials by the coset criterion, in lexicographic order."""
    q, h, ell = family.q, family.subgroup_order, family.field.ell
    return tuple(
        Monomial(a, b)
        for a in range(q)
        for b in range(q)
        if not is_bad_coset_criterion(Monomial(a, b), h, ell)
    )


def iter_parity_rows(family: CosetFamily) -> Iterator[int]:
    """Bitset indicator rows of every wedge point set, ordered (coset, x, y)."""
    spec = family.field
    q = spec.q
    mul = spec.mul_table()
    yy = np.arange(q, dtype=np.intp)
    base = np.arange(q, dtype=np.intp) * q
    for coset in family.cosets:
        for x in range(q):
            tx = np.arange(q, dtype=np.intp) ^ x
            bits = np.zeros((q, q * q), dtype=np.uint8)
            for alpha in coset:
                v = mul[alpha, tx].astype(np.intp)
                cols = base[:, None] + (v[:, None] ^ yy[None, :])
                bits[yy[None, :], cols] = 1
            packed = np.packbits(bits, axis=1, bitorder="little")
            for y in range(q):
                yield int.from_bytes(packed[y].tobytes(), "little")


@dataclass(frozen=True, eq=False)
class WedgeLiftedCode:
    """Length-q^2 code over F_q cut out by all wedge parity checks.

    exact_dimension is q^2 minus the parity rank — measured, not inferred from
    the good-monomial count, which is only a lower bound on the dimension.
    In dimension-only mode parity_rows and kernel_basis are None.
    """

    field: FieldSpec
    family: CosetFamily
    good_monomials: tuple[Monomial, ...]
    exact_dimension: int
    parity_rows: tuple[int, ...] | None
    kernel_basis: tuple[int, ...] | None

    @property
    def length(self) -> int:
        return self.field.q ** 2

    @property
    def redundancy(self) -> int:
        return self.length - self.exact_dimension

    @property
    def dimension_slack(self) -> int:
        """Observed excess of the true dimension over the good-monomial count."""
        return self.exact_dimension - len(self.good_monomials)

    def generator_matrix(self) -> np.ndarray:
        """Good-monomial evaluation vectors as rows (a spanning subset, not
        necessarily a basis: dimension_slack rows may be missing)."""
        return np.stack([eval_monomial(self.field, m) for m in self.good_monomials])

    def parity_check_matrix(self) -> np.ndarray:
        if self.parity_rows is None:
            raise UsageError("code was built in dimension-only mode")
        n = self.length
        return np.stack([bitset_to_array(r, n) for r in self.parity_rows])


def _guard_full_build(family: CosetFamily, memory_guard_bytes: int) -> None:
    q = family.q
    estimated = family.t * q * q * q * q  # uint8 parity matrix bytes
    if q > 256 or estimated > memory_guard_bytes:
        raise MemoryGuardError(
            f"full parity matrix for q={q}, t={family.t} needs ~{estimated} bytes "
            f"(guard {memory_guard_bytes}); build with dimension_only=True"
        )


def build_code(
    family: CosetFamily,
    *,
    dimension_only: bool = False,
    memory_guard_bytes: int = DEFAULT_MEMORY_GUARD_BYTES,
) -> WedgeLiftedCode:
    """Assemble parity checks, measure the exact dimension by rank, and (in
    full mode) keep the rows, extract a kernel basis, and assert that every
    good-monomial evaluation is annihilated by every wedge.

    The parity rows are 0/1, so elimination over F_q never leaves {0, 1} and
    the F_q rank equals the GF(2) bitset rank.
    """
    spec = family.field
    q = spec.q
    if not dimension_only:
        _guard_full_build(family, memory_guard_bytes)
    good = good_monomials(family)

    if dimension_only:
        rank = gf2_rank(iter_parity_rows(family))
        rows: tuple[int, ...] | None = None
        kernel: tuple[int, ...] | None = None
    else:
        rows = tuple(iter_parity_rows(family))
        rank = gf2_rank(rows)
        kernel = tuple(gf2_nullspace(rows, q * q))
        for m in good:
            for coset in family.cosets:
                if restriction_grid(spec, coset, m).any():
                    raise InvariantError(
                        f"good monomial {tuple(m)} violates a wedge parity check"
                    )

    dimension = q * q - rank
    if dimension < len(good):
        raise InvariantError(
            f"dimension {dimension} below good-monomial count {len(good)}"
        )
    return WedgeLiftedCode(
        field=spec,
        family=family,
        good_monomials=good,
        exact_dimension=dimension,
        parity_rows=rows,
        kernel_basis=kernel,
    )


def encode(code: WedgeLiftedCode, message) -> np.ndarray:
    """Linear combination of good-monomial generators with message coefficients."""
    msg = np.asarray(message, dtype=np.int64)
    if msg.shape != (len(code.good_monomials),):
        raise UsageError(
            f"message length {msg.size} != {len(code.good_monomials)} generators"
        )
    q = code.field.q
    if msg.size and (msg.min() < 0 or msg.max() >= q):
        raise UsageError(f"message symbols must lie in [0, {q})")
    mul = code.field.mul_table()
    scaled = mul[msg[:, None], code.generator_matrix()]
    return np.bitwise_xor.reduce(scaled, axis=0)


@dataclass(frozen=True, eq=False)
class BinaryTraceCode:
    """tr(C): the parent code mapped coordinate-wise through the trace to GF(2)."""

    parent: WedgeLiftedCode
    binary_generators: tuple[int, ...]
    binary_dimension: int

    def generator_matrix(self) -> np.ndarray:
        n = self.parent.length
        return np.stack([bitset_to_array(r, n) for r in self.binary_generators])


def trace_code(code: WedgeLiftedCode) -> BinaryTraceCode:
    """Span of { trace(beta * g) : g in the kernel basis, beta in the
    polynomial basis of F_q }, row-reduced over GF(2).

    The sandwich dim C <= dim tr(C) <= ell * dim C is asserted.
    """
    if code.kernel_basis is None:
        raise UsageError("trace code needs a full build (kernel basis missing)")
    spec = code.field
    n = code.length
    mul = spec.mul_table()
    tr = spec.trace_table()
    raw: list[int] = []
    for g_bits in code.kernel_basis:
        g = bitset_to_array(g_bits, n)
        for j in range(spec.ell):
            raw.append(array_to_bitset(tr[mul[1 << j, g]]))
    reduced = gf2_rref(raw)
    generators = tuple(reduced[col] for col in sorted(reduced))
    dim = len(generators)
    if not code.exact_dimension <= dim <= spec.ell * code.exact_dimension:
        raise InvariantError(
            f"trace dimension {dim} outside [{code.exact_dimension}, "
            f"{spec.ell * code.exact_dimension}]"
        )
    if n - dim > code.redundancy:
        raise InvariantError("binary redundancy exceeds the parent redundancy")
    return BinaryTraceCode(parent=code, binary_generators=generators, binary_dimension=dim)


def redundancy_exponent(d: int) -> float:
    """log_N(redundancy) of the construction family: 1/2 + log2(2 - 2^-d)/(2d)."""
    if d < 1:
        raise UsageError(f"d must be a positive integer, got {d}")
    return 0.5 + math.log2(2.0 - 2.0 ** (-d)) / (2.0 * d)


def export_matrix(path, matrix: np.ndarray, q: int) -> None:
    """Plain-text matrix: header '# q=<q> rows=<r> cols=<c>', then one row per
    line, entries as lowercase hex integers separated by spaces."""
    matrix = np.asarray(matrix)
    if matrix.ndim != 2:
        raise UsageError("matrix must be two-dimensional")
    lines = [f"# q={q} rows={matrix.shape[0]} cols={matrix.shape[1]}"]
    for row in matrix:
        lines.append(" ".join(format(int(v), "x") for v in row))
    atomic_write_text(path, "\n".join(lines) + "\n")


def write_descriptor(path, code: WedgeLiftedCode) -> None:
    """JSON descriptor pinning everything needed to rebuild coordinates."""
    payload = {
        "ell": code.field.ell,
        "modulus": code.field.modulus,
        "subgroup_order": code.family.subgroup_order,
        "coordinate_order": "row-major-poly-basis",
    }
    atomic_write_text(path, json.dumps(payload, indent=2) + "\n")
