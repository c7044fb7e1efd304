"""GF(2^ell) arithmetic, the trace map to GF(2), and multiplicative coset machinery.

Field elements are plain ints: the little-endian coefficient bits of a polynomial
over GF(2) in the polynomial basis (constant term = bit 0). That integer encoding
is also the fixed element order used everywhere an order on F_q is needed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dataclass_field
from functools import lru_cache

import numpy as np

from .errors import InvariantError, UsageError

# Published moduli (ell: polynomial bits). Entries for other widths fall back to
# the smallest irreducible polynomial under integer encoding; these seven are
# fixed verbatim so serialized artifacts stay bit-for-bit reproducible.
MODULUS_TABLE = {
    2: 0b111,
    3: 0b1011,
    4: 0b10011,
    6: 0b1000011,
    8: 0b100011011,
    10: 0b10000001001,
    12: 0b1000001010011,
}

MAX_ELL = 24  # log/antilog tables bound the desk scale


def _poly_rem(a: int, b: int) -> int:
    """Remainder of a mod b as GF(2)[x] polynomials in bit encoding."""
    db = b.bit_length()
    while a.bit_length() >= db:
        a ^= b << (a.bit_length() - db)
    return a


def is_irreducible(f: int, degree: int) -> bool:
    """Trial division by every polynomial of degree 1..degree//2."""
    if f.bit_length() != degree + 1:
        return False
    for d in range(1, degree // 2 + 1):
        for g in range(1 << d, 1 << (d + 1)):
            if _poly_rem(f, g) == 0:
                return False
    return True


def smallest_irreducible(degree: int) -> int:
    for f in range(1 << degree, 1 << (degree + 1)):
        if is_irreducible(f, degree):
            return f
    raise InvariantError(f"no irreducible polynomial of degree {degree} found")


def _poly_mulmod(a: int, b: int, modulus: int, ell: int) -> int:
    r = 0
    while b:
        if b & 1:
            r ^= a
        b >>= 1
        a <<= 1
        if a >> ell & 1:
            a ^= modulus
    return r


# eq=False: the numpy tables are unhashable and make_field caches one instance
# per ell, so identity comparison is the right semantics.
@dataclass(frozen=True, eq=False)
class FieldSpec:
    """A concrete GF(2^ell) with log/antilog tables for fast mul/inv/pow.

    antilog[i] = generator^i for 0 <= i < q-1; log[antilog[i]] = i.
    """

    ell: int
    modulus: int
    generator: int
    antilog: np.ndarray = dataclass_field(repr=False)
    log: np.ndarray = dataclass_field(repr=False)

    @property
    def q(self) -> int:
        return 1 << self.ell

    def _check(self, *elements: int) -> None:
        for a in elements:
            if not 0 <= a < self.q:
                raise UsageError(f"{a} is not an element of GF(2^{self.ell})")

    def add(self, a: int, b: int) -> int:
        self._check(a, b)
        return a ^ b

    def mul(self, a: int, b: int) -> int:
        self._check(a, b)
        if a == 0 or b == 0:
            return 0
        return int(self.antilog[(int(self.log[a]) + int(self.log[b])) % (self.q - 1)])

    def inv(self, a: int) -> int:
        self._check(a)
        if a == 0:
            raise ZeroDivisionError("0 has no multiplicative inverse")
        return int(self.antilog[(self.q - 1 - int(self.log[a])) % (self.q - 1)])

    def pow(self, a: int, n: int) -> int:
        """a^n for n >= 0, with 0^0 = 1 so that X^0 evaluates to 1 on the axis."""
        self._check(a)
        if n < 0:
            raise UsageError("exponent must be nonnegative")
        if n == 0:
            return 1
        if a == 0:
            return 0
        return int(self.antilog[(int(self.log[a]) * n) % (self.q - 1)])

    def trace2(self, a: int) -> int:
        """tr(a) = sum of a^(2^i) for 0 <= i < ell; always lands in {0, 1}."""
        self._check(a)
        total, p = 0, a
        for _ in range(self.ell):
            total ^= p
            p = self.mul(p, p)
        if total not in (0, 1):
            raise InvariantError(f"trace of {a} left GF(2): {total}")
        return total

    def pow_vector(self, n: int) -> np.ndarray:
        """Vector of t^n over all t in F_q, indexed by t (0^0 = 1)."""
        if n < 0:
            raise UsageError("exponent must be nonnegative")
        q = self.q
        out = np.empty(q, dtype=np.uint16)
        if n == 0:
            out[:] = 1
            return out
        out[0] = 0
        out[1:] = self.antilog[(self.log[1:] * n) % (q - 1)]
        return out

    def mul_table(self) -> np.ndarray:
        """Full q x q multiplication table (lazily built and cached)."""
        return _mul_table_cached(self)

    def trace_table(self) -> np.ndarray:
        """Vector of trace2(t) over all t, indexed by t."""
        return _trace_table_cached(self)


@lru_cache(maxsize=None)
def _mul_table_cached(spec: FieldSpec) -> np.ndarray:
    q = spec.q
    if q > 4096:
        raise UsageError(f"multiplication table for q={q} exceeds the desk-scale guard")
    table = np.zeros((q, q), dtype=np.uint16)
    exp = (spec.log[1:, None] + spec.log[None, 1:]) % (q - 1)
    table[1:, 1:] = spec.antilog[exp]
    table.setflags(write=False)
    return table


@lru_cache(maxsize=None)
def _trace_table_cached(spec: FieldSpec) -> np.ndarray:
    table = np.array([spec.trace2(t) for t in range(spec.q)], dtype=np.uint8)
    table.setflags(write=False)
    return table


def _smallest_generator(ell: int, modulus: int) -> int:
    """Smallest integer-encoded element of multiplicative order exactly q-1."""
    q = 1 << ell
    if q == 2:
        return 1
    n = q - 1
    factors = []
    m, p = n, 2
    while p * p <= m:
        if m % p == 0:
            factors.append(p)
            while m % p == 0:
                m //= p
        p += 1
    if m > 1:
        factors.append(m)

    def pow_mod(base: int, e: int) -> int:
        result, acc = 1, base
        while e:
            if e & 1:
                result = _poly_mulmod(result, acc, modulus, ell)
            acc = _poly_mulmod(acc, acc, modulus, ell)
            e >>= 1
        return result

    for c in range(2, q):
        if all(pow_mod(c, n // p) != 1 for p in factors):
            return c
    raise InvariantError(f"no generator found for ell={ell}")


@lru_cache(maxsize=None)
def make_field(ell: int) -> FieldSpec:
    """Build GF(2^ell) with the table modulus (or smallest irreducible) and
    the smallest generator under integer encoding."""
    if not 1 <= ell <= MAX_ELL:
        raise UsageError(f"ell must be in [1, {MAX_ELL}], got {ell}")
    modulus = MODULUS_TABLE.get(ell, None)
    if modulus is None:
        modulus = smallest_irreducible(ell)
    if not is_irreducible(modulus, ell):
        raise InvariantError(f"modulus {modulus:#b} for ell={ell} is not irreducible")
    g = _smallest_generator(ell, modulus)
    q = 1 << ell
    antilog = np.zeros(q - 1, dtype=np.int64)
    log = np.zeros(q, dtype=np.int64)
    x = 1
    for i in range(q - 1):
        antilog[i] = x
        log[x] = i
        x = _poly_mulmod(x, g, modulus, ell)
    if x != 1:
        raise InvariantError(f"generator {g} does not have order {q - 1}")
    antilog.setflags(write=False)
    log.setflags(write=False)
    return FieldSpec(ell=ell, modulus=modulus, generator=g, antilog=antilog, log=log)


@dataclass(frozen=True)
class CosetFamily:
    """The unique subgroup H of F_q^x of a given odd order plus all its cosets.

    Cosets are canonical: each sorted ascending (representative = minimum), the
    list sorted by representative. They partition F_q^x, so 0 never appears.
    """

    field: FieldSpec
    subgroup_order: int
    subgroup: tuple[int, ...]
    cosets: tuple[tuple[int, ...], ...]

    @property
    def t(self) -> int:
        return len(self.cosets)

    @property
    def q(self) -> int:
        return self.field.q


def make_coset_family(field: FieldSpec, subgroup_order: int) -> CosetFamily:
    q = field.q
    if subgroup_order <= 0 or (q - 1) % subgroup_order != 0:
        raise UsageError(
            f"subgroup order {subgroup_order} does not divide q-1 = {q - 1}"
        )
    h = subgroup_order
    t = (q - 1) // h
    subgroup = tuple(sorted(int(field.antilog[(t * k) % (q - 1)]) for k in range(h)))
    cosets = []
    for j in range(t):
        rep = int(field.antilog[j])
        cosets.append(tuple(sorted(field.mul(rep, x) for x in subgroup)))
    cosets.sort(key=lambda c: c[0])
    covered = set().union(*cosets)
    if len(covered) != q - 1 or any(len(c) != h for c in cosets):
        raise InvariantError("cosets do not partition the multiplicative group")
    return CosetFamily(
        field=field, subgroup_order=h, subgroup=subgroup, cosets=tuple(cosets)
    )


def subgroup_power_sum(field: FieldSpec, subgroup: tuple[int, ...], n: int) -> int:
    """Sum of alpha^n over the subgroup: 1 when |H| divides n (|H| odd, char 2),
    else 0. Computed by direct summation, not by the case split."""
    if n < 0:
        raise UsageError("exponent must be nonnegative")
    total = 0
    for alpha in subgroup:
        total ^= field.pow(alpha, n)
    return total


def plan_dyadic_parameters(a_num: int, b_exp: int, n: int) -> tuple[int, int, int]:
    """Parameters (ell, h, t) realizing repair-group exponent alpha = (1 - a/2^b)/2.

    ell = 2^b * n and h = prod over set bits i of a_num of (2^(2^i * n) + 1);
    h divides 2^ell - 1 because 2^(2^b n) - 1 = (2^n - 1) * prod_i (2^(2^i n) + 1).
    """
    if b_exp < 1 or not 0 < a_num < (1 << b_exp):
        raise UsageError(
            f"need 0 < a_num < 2^b_exp for a dyadic alpha in (0, 1/2); "
            f"got a_num={a_num}, b_exp={b_exp}"
        )
    if n < 1:
        raise UsageError(f"n must be a positive integer, got {n}")
    ell = (1 << b_exp) * n
    if ell > MAX_ELL:
        raise UsageError(f"ell = 2^{b_exp}*{n} = {ell} exceeds the desk bound {MAX_ELL}")
    h = math.prod(
        (1 << ((1 << i) * n)) + 1 for i in range(b_exp) if a_num >> i & 1
    )
    if ((1 << ell) - 1) % h != 0:
        raise InvariantError(f"planned h={h} does not divide 2^{ell}-1")
    return ell, h, ((1 << ell) - 1) // h
