"""Exact arithmetic in GF(p^k) with polynomial-basis elements.

Elements are coefficient tuples of length k over Z_p, constant term first.
The reduction modulus is the lexicographically smallest monic irreducible
polynomial of degree k (coefficients compared from the constant term
upward), which pins one canonical model of GF(p^k) per (p, k) and keeps
every downstream construction reproducible across runs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

FieldElement = tuple[int, ...]

MAX_EXTENSION_DEGREE = 16
MAX_CHARACTERISTIC = 2**31


def is_prime(m: int) -> bool:
    """Trial-division primality test, adequate for desk-scale inputs."""
    if m < 2:
        return False
    if m < 4:
        return True
    if m % 2 == 0:
        return False
    f = 3
    while f * f <= m:
        if m % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class PrimePower:
    """An order q = p^k with p prime and k >= 1."""

    q: int
    p: int
    k: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"{self.p} is not prime")
        if self.k < 1:
            raise ValueError("exponent must be at least 1")
        if self.p**self.k != self.q:
            raise ValueError(f"{self.q} != {self.p}^{self.k}")

    @classmethod
    def from_order(cls, q: int) -> "PrimePower":
        """Factor q as p^k, raising ValueError when q is not a prime power."""
        if q < 2:
            raise ValueError(f"{q} is not a prime power")
        p = q
        f = 2
        while f * f <= q:
            if q % f == 0:
                p = f
                break
            f += 1
        k = 0
        m = q
        while m % p == 0:
            m //= p
            k += 1
        if m != 1:
            raise ValueError(f"{q} is not a prime power")
        return cls(q, p, k)


def _poly_mul(a, b, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return out


def _poly_rem(a, mod, p):
    """Remainder of a modulo a monic polynomial, coefficients in Z_p."""
    a = list(a)
    dm = len(mod) - 1
    for i in range(len(a) - 1, dm - 1, -1):
        c = a[i]
        if c:
            a[i] = 0
            for j in range(dm):
                a[i - dm + j] = (a[i - dm + j] - c * mod[j]) % p
    a = a[:dm]
    if len(a) < dm:
        a.extend([0] * (dm - len(a)))
    return a


def _decode_lex(m: int, p: int, k: int) -> list[int]:
    """Coefficients of the m-th degree-k tail in constant-term-first lex order."""
    return [(m // p ** (k - 1 - i)) % p for i in range(k)]


def _is_irreducible(poly, p) -> bool:
    """Trial division by every monic polynomial of degree 1..deg/2."""
    k = len(poly) - 1
    for d in range(1, k // 2 + 1):
        for m in range(p**d):
            div = _decode_lex(m, p, d) + [1]
            if not any(_poly_rem(poly, div, p)):
                return False
    return True


class FieldSpec:
    """Arithmetic context for GF(p^k) under a fixed irreducible modulus.

    Instances are immutable after construction and all operations are pure
    functions of their arguments, so a FieldSpec is safe to share between
    concurrent tasks.
    """

    def __init__(self, prime_power: PrimePower, modulus: Iterable[int]):
        modulus = tuple(int(c) for c in modulus)
        p, k = prime_power.p, prime_power.k
        if len(modulus) != k + 1 or modulus[-1] != 1:
            raise ValueError("modulus must be monic of degree k")
        if any(not 0 <= c < p for c in modulus):
            raise ValueError("modulus coefficients must lie in [0, p)")
        if not _is_irreducible(modulus, p):
            raise ValueError("modulus is reducible")
        self.prime_power = prime_power
        self.p = p
        self.k = k
        self.order = prime_power.q
        self.modulus = modulus
        self._tables: tuple[list[list[int]], list[list[int]], list[int | None]] | None = None

    def __eq__(self, other):
        return (
            isinstance(other, FieldSpec)
            and self.prime_power == other.prime_power
            and self.modulus == other.modulus
        )

    def __hash__(self):
        return hash((self.prime_power, self.modulus))

    def __repr__(self):
        return f"FieldSpec(GF({self.order}), modulus={list(self.modulus)})"

    # -- element plumbing ---------------------------------------------------

    @property
    def zero(self) -> FieldElement:
        return (0,) * self.k

    @property
    def one(self) -> FieldElement:
        return (1,) + (0,) * (self.k - 1)

    def element(self, coeffs: Iterable[int]) -> FieldElement:
        """Reduce an arbitrary coefficient vector into the field."""
        c = [int(v) % self.p for v in coeffs]
        if len(c) > self.k:
            c = _poly_rem(c, self.modulus, self.p)
        c.extend([0] * (self.k - len(c)))
        return tuple(c)

    def element_at(self, index: int) -> FieldElement:
        """Element at a position in constant-term-first lex order."""
        if not 0 <= index < self.order:
            raise ValueError("element index out of range")
        return tuple(_decode_lex(index, self.p, self.k))

    def index_of(self, a: FieldElement) -> int:
        idx = 0
        for c in a:
            idx = idx * self.p + c
        return idx

    def elements(self) -> Iterator[FieldElement]:
        for i in range(self.order):
            yield self.element_at(i)

    # -- arithmetic ---------------------------------------------------------

    def add(self, a: FieldElement, b: FieldElement) -> FieldElement:
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def sub(self, a: FieldElement, b: FieldElement) -> FieldElement:
        p = self.p
        return tuple((x - y) % p for x, y in zip(a, b))

    def neg(self, a: FieldElement) -> FieldElement:
        p = self.p
        return tuple((-x) % p for x in a)

    def mul(self, a: FieldElement, b: FieldElement) -> FieldElement:
        return tuple(_poly_rem(_poly_mul(a, b, self.p), self.modulus, self.p))

    def pow(self, a: FieldElement, e: int) -> FieldElement:
        """a**e for e >= 0, with pow(a, 0) == 1 (also for a == 0)."""
        if e < 0:
            raise ValueError("exponent must be non-negative")
        result = self.one
        base = a
        while e:
            if e & 1:
                result = self.mul(result, base)
            base = self.mul(base, base)
            e >>= 1
        return result

    def inv(self, a: FieldElement) -> FieldElement:
        if a == self.zero:
            raise ZeroDivisionError("inversion of zero")
        return self.pow(a, self.order - 2)

    def frobenius(self, a: FieldElement, m: int) -> FieldElement:
        """The automorphism a -> a^(p^m)."""
        if m < 0:
            raise ValueError("Frobenius power must be non-negative")
        return self.pow(a, self.p**m)

    # -- quadratic-extension helpers ----------------------------------------

    def base_subfield_order(self) -> int:
        if self.k % 2:
            raise ValueError("field degree must be even")
        return self.p ** (self.k // 2)

    def relative_norm(self, a: FieldElement) -> FieldElement:
        """Norm a -> a^(q+1) down to GF(q), where this field is GF(q^2)."""
        q = self.base_subfield_order()
        return self.mul(a, self.pow(a, q))

    def in_base_subfield(self, a: FieldElement) -> bool:
        """True iff a^q == a, i.e. a lies in the index-2 subfield GF(q)."""
        q = self.base_subfield_order()
        return self.pow(a, q) == a

    # -- integer-indexed tables ----------------------------------------------

    def int_tables(self):
        """(add, mul, inv) tables over element indices; built once, cached.

        inv[0] is None.  Intended for exhaustive checks and bulk geometry
        construction where per-call polynomial arithmetic would dominate.
        """
        if self._tables is None:
            elems = [self.element_at(i) for i in range(self.order)]
            add = [
                [self.index_of(self.add(a, b)) for b in elems] for a in elems
            ]
            mul = [
                [self.index_of(self.mul(a, b)) for b in elems] for a in elems
            ]
            one_idx = self.index_of(self.one)
            inv: list[int | None] = [None] * self.order
            for i in range(1, self.order):
                inv[i] = mul[i].index(one_idx)
            self._tables = (add, mul, inv)
        return self._tables


def make_field(p: int, k: int) -> FieldSpec:
    """Build GF(p^k) with the lexicographically smallest irreducible modulus.

    Coefficient vectors are compared from the constant term upward, so the
    result is deterministic across runs and implementations.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if not 1 <= k <= MAX_EXTENSION_DEGREE:
        raise ValueError(f"extension degree must be in 1..{MAX_EXTENSION_DEGREE}")
    if p > MAX_CHARACTERISTIC:
        raise ValueError("characteristic too large")
    for m in range(p**k):
        candidate = _decode_lex(m, p, k) + [1]
        if _is_irreducible(candidate, p):
            return FieldSpec(PrimePower(p**k, p, k), candidate)
    raise AssertionError("no irreducible polynomial found")
