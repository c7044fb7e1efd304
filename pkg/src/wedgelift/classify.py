"""Good/bad classification of monomials X^a Y^b by three independent routes.

A wedge at point p = (x, y) with slope set C (a coset of a subgroup of F_q^x)
is the union of the lines L_alpha(T) = (T, alpha*(T - x) + y), alpha in C. The
restriction of a polynomial to the wedge is the field sum of its values along
every line; because |C| is odd and the characteristic is 2, this equals the sum
over the wedge's point set. A monomial is good for a coset family when every
restriction, over all cosets and all q^2 points, vanishes.

The brute-force oracle evaluates that definition directly (vectorized with
index tables derived from the distributive law only). The coset criterion and
the block criterion decide badness arithmetically from the exponent bits; they
are validated against the oracle, never the other way around.
"""

from __future__ import annotations

import csv
import io
from typing import NamedTuple

import numpy as np

from .bitlattice import enumerate_2_shadow
from .errors import OracleBudgetError, UsageError
from .field import CosetFamily, FieldSpec
from ._io import atomic_write_text

DEFAULT_ORACLE_BUDGET = 10**9


class Monomial(NamedTuple):
    a: int
    b: int


class Wedge(NamedTuple):
    coset: tuple[int, ...]
    point: tuple[int, int]


def _check_monomial(m: Monomial, q: int) -> Monomial:
    a, b = m
    if not (0 <= a <= q - 1 and 0 <= b <= q - 1):
        raise UsageError(f"exponents must lie in [0, {q - 1}], got ({a}, {b})")
    return Monomial(a, b)


def wedge_point_set(spec: FieldSpec, wedge: Wedge) -> frozenset[tuple[int, int]]:
    """Union of the wedge's lines: |coset|*(q-1) + 1 points containing wedge.point."""
    x, y = wedge.point
    points = set()
    for alpha in wedge.coset:
        for t in range(spec.q):
            points.add((t, spec.mul(alpha, t ^ x) ^ y))
    return frozenset(points)


def wedge_restriction(
    spec: FieldSpec,
    poly: list[tuple[tuple[int, int], int]],
    wedge: Wedge,
) -> int:
    """Field sum of the polynomial over every line of the wedge.

    poly is a list of ((a, b), coefficient) pairs with exponents <= q-1.
    In debug builds the point-set form is computed too and must agree (it does
    only because the coset size is odd and the characteristic is 2).
    """
    for (a, b), _ in poly:
        _check_monomial(Monomial(a, b), spec.q)

    def value(u: int, v: int) -> int:
        acc = 0
        for (a, b), coeff in poly:
            acc ^= spec.mul(coeff, spec.mul(spec.pow(u, a), spec.pow(v, b)))
        return acc

    x, y = wedge.point
    total = 0
    for alpha in wedge.coset:
        for t in range(spec.q):
            total ^= value(t, spec.mul(alpha, t ^ x) ^ y)
    if __debug__:
        point_sum = 0
        for (u, v) in wedge_point_set(spec, wedge):
            point_sum ^= value(u, v)
        assert point_sum == total, "line-sum and point-set forms disagree"
    return total


def restriction_grid(
    spec: FieldSpec, coset: tuple[int, ...], m: Monomial
) -> np.ndarray:
    """All q^2 wedge restrictions of X^a Y^b for one coset, indexed [x, y].

    Uses only distributivity: with G_alpha[s] = sum_T T^a (alpha*T + s)^b,
    the restriction at (x, y) is sum_alpha G_alpha[alpha*x + y].
    """
    a, b = _check_monomial(m, spec.q)
    q = spec.q
    mul = spec.mul_table()
    xa = spec.pow_vector(a)
    yb = spec.pow_vector(b)
    s = np.arange(q, dtype=np.uint16)
    grid = np.zeros((q, q), dtype=np.uint16)
    for alpha in coset:
        shifted = mul[alpha][:, None] ^ s[None, :]
        g_alpha = np.bitwise_xor.reduce(mul[xa[:, None], yb[shifted]], axis=0)
        grid ^= g_alpha[shifted]
    return grid


def oracle_cost(family: CosetFamily) -> int:
    """Evaluations one exhaustive oracle call performs: q^2 wedges per coset
    times the wedge size, summed over cosets."""
    q, h = family.q, family.subgroup_order
    return q * q * family.t * (h * (q - 1) + 1)


def is_good_oracle(
    family: CosetFamily, m: Monomial, budget: int = DEFAULT_ORACLE_BUDGET
) -> bool:
    """Brute force: true iff every wedge restriction of X^a Y^b vanishes."""
    cost = oracle_cost(family)
    if cost > budget:
        raise OracleBudgetError(
            f"oracle infeasible: {cost} evaluations exceed budget {budget}; "
            f"sample wedges instead"
        )
    m = _check_monomial(m, family.q)
    for coset in family.cosets:
        if restriction_grid(family.field, coset, m).any():
            return False
    return True


def is_good_oracle_sampled(
    family: CosetFamily,
    m: Monomial,
    wedges: int,
    rng: np.random.Generator,
) -> bool:
    """Oracle on `wedges` random wedges; False is definitive, True is only
    'no witness found'."""
    spec = family.field
    m = _check_monomial(m, spec.q)
    poly = [((m.a, m.b), 1)]
    q = spec.q
    for _ in range(wedges):
        coset = family.cosets[int(rng.integers(family.t))]
        point = (int(rng.integers(q)), int(rng.integers(q)))
        if wedge_restriction(spec, poly, Wedge(coset, point)) != 0:
            return False
    return True


def is_bad_coset_criterion(m: Monomial, h: int, ell: int) -> bool:
    """Bad iff a|b = q-1 and some i <= a&b bitwise has i = b (mod h)."""
    q = 1 << ell
    if (q - 1) % h != 0:
        raise UsageError(f"subgroup order {h} does not divide q-1 = {q - 1}")
    a, b = _check_monomial(m, q)
    if a | b != q - 1:
        return False
    target = b % h
    return any(i % h == target for i in enumerate_2_shadow(a & b))


def is_bad_block_criterion(m: Monomial, ell_prime: int, d: int) -> bool:
    """Block form of the criterion for h = (q-1)/(q^(1/d)-1), q = 2^(ell'*d).

    Splitting exponent bits into d blocks of width ell', X^a Y^b is bad iff
    a|b = q-1 and no position j has blocks r, s with b_{r,j} = a_{s,j} = 1 and
    a_{r,j} = b_{s,j} = 0.
    """
    if ell_prime < 1 or d < 1:
        raise UsageError("block parameters must be positive")
    ell = ell_prime * d
    q = 1 << ell
    a, b = _check_monomial(m, q)
    if a | b != q - 1:
        return False
    for j in range(ell_prime):
        ones_b = [(a >> (r * ell_prime + j)) & 1 == 0 for r in range(d)
                  if (b >> (r * ell_prime + j)) & 1]
        ones_a = [(b >> (s * ell_prime + j)) & 1 == 0 for s in range(d)
                  if (a >> (s * ell_prime + j)) & 1]
        # a violating (r, s) pair exists iff some block has (a,b) bits (0,1)
        # and another has (1,0) at the same position j
        if any(ones_b) and any(ones_a):
            return False
    return True


def count_bad(family: CosetFamily) -> int:
    """Exhaustive count of bad monomials by the coset criterion."""
    q, h, ell = family.q, family.subgroup_order, family.field.ell
    return sum(
        is_bad_coset_criterion(Monomial(a, b), h, ell)
        for a in range(q)
        for b in range(q)
    )


def count_bad_closed_form(ell_prime: int, d: int) -> int:
    """(2^(d+1) - 1)^ell' — exact bad count for the block instantiation."""
    if ell_prime < 1 or d < 1:
        raise UsageError("block parameters must be positive")
    return ((1 << (d + 1)) - 1) ** ell_prime


def count_bad_naive_bound(family: CosetFamily) -> int:
    """The coarse bound t*q on the bad count.

    Reported, never asserted: the exact count can exceed it (49 > 48 at q=16,
    h=5) because [0, q-1] contains t+1 multiples of h, not t.
    """
    return family.t * family.q


def classification_rows(
    family: CosetFamily,
    ell_prime: int | None = None,
    d: int | None = None,
) -> list[tuple[int, int, int, str]]:
    """(a, b, bad, criterion_used) for all q^2 monomials in lexicographic order.

    With ell_prime and d the block criterion is used (and its parameters must
    match the family); otherwise the coset criterion.
    """
    q, h, ell = family.q, family.subgroup_order, family.field.ell
    if (ell_prime is None) != (d is None):
        raise UsageError("ell_prime and d must be given together")
    if ell_prime is not None:
        if ell_prime * d != ell or h != (q - 1) // ((1 << ell_prime) - 1):
            raise UsageError(
                f"block parameters ({ell_prime}, {d}) do not match q={q}, h={h}"
            )
        return [
            (a, b, int(is_bad_block_criterion(Monomial(a, b), ell_prime, d)), "block")
            for a in range(q)
            for b in range(q)
        ]
    return [
        (a, b, int(is_bad_coset_criterion(Monomial(a, b), h, ell)), "coset")
        for a in range(q)
        for b in range(q)
    ]


def write_classification_csv(path, rows) -> None:
    """CSV report with columns a, b, bad, criterion_used (atomic write)."""
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["a", "b", "bad", "criterion_used"])
    writer.writerows(rows)
    atomic_write_text(path, buf.getvalue())
