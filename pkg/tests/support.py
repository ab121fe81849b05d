"""Shared oracles and exhaustive checkers for the test suite.

Everything here is deliberately independent of the implementation paths it
checks: reducibility is decided by multiplying smaller polynomials, planes
come from an XOR construction, and equality solutions are found by plain
two-dimensional enumeration.
"""

from __future__ import annotations

import itertools

from blocksets import FieldSpec, build_desarguesian_plane, make_field

_plane_cache: dict[int, object] = {}
_field_cache: dict[tuple[int, int], FieldSpec] = {}


def field(p: int, k: int) -> FieldSpec:
    key = (p, k)
    if key not in _field_cache:
        _field_cache[key] = make_field(p, k)
    return _field_cache[key]


def desarguesian(p: int, k: int):
    """Cached PG(2, p^k); planes are immutable so sharing is safe."""
    q = p**k
    if q not in _plane_cache:
        _plane_cache[q] = build_desarguesian_plane(field(p, k))
    return _plane_cache[q]


# -- polynomial oracle --------------------------------------------------------


def _poly_mul_mod(a, b, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            out[i + j] = (out[i + j] + ai * bj) % p
    return tuple(out)


def monic_polys(p, degree):
    """All monic coefficient tuples (constant first) of the given degree."""
    for tail in itertools.product(range(p), repeat=degree):
        yield tail + (1,)


def irreducible_monics_by_products(p, k):
    """Irreducible = monic minus every product of two smaller monics."""
    reducible = set()
    for d in range(1, k // 2 + 1):
        for f in monic_polys(p, d):
            for g in monic_polys(p, k - d):
                reducible.add(_poly_mul_mod(f, g, p))
    return [f for f in monic_polys(p, k) if f not in reducible]


# -- field axiom checkers -----------------------------------------------------


def check_field_axioms(spec: FieldSpec):
    """Exhaustive triple enumeration of the field axioms via index tables."""
    add_t, mul_t, inv_t = spec.int_tables()
    q = spec.order
    zero = spec.index_of(spec.zero)
    one = spec.index_of(spec.one)
    assert zero == 0
    elems = range(q)

    for a in elems:
        assert add_t[a][zero] == a
        assert mul_t[a][one] == a
        assert mul_t[a][zero] == zero
        for b in range(a + 1, q):
            assert add_t[a][b] == add_t[b][a]
            assert mul_t[a][b] == mul_t[b][a]

    for a in elems:
        row_add, row_mul = add_t[a], mul_t[a]
        for b in elems:
            ab_add, ab_mul = row_add[b], row_mul[b]
            assert add_t[ab_add] == [row_add[x] for x in add_t[b]]
            assert mul_t[ab_mul] == [row_mul[x] for x in mul_t[b]]
            assert [row_mul[x] for x in add_t[b]] == [
                add_t[ab_mul][row_mul[c]] for c in elems
            ]

    for a in elems:
        assert add_t[a].count(zero) == 1
        if a != zero:
            assert mul_t[a][inv_t[a]] == one


def check_frobenius_automorphism(spec: FieldSpec):
    """a -> a^p preserves both operations, exhaustively over the field."""
    add_t, mul_t, _ = spec.int_tables()
    q = spec.order
    frob = [
        spec.index_of(spec.frobenius(spec.element_at(i), 1)) for i in range(q)
    ]
    for a in range(q):
        for b in range(q):
            assert frob[add_t[a][b]] == add_t[frob[a]][frob[b]]
            assert frob[mul_t[a][b]] == mul_t[frob[a]][frob[b]]


# -- independent plane oracle -------------------------------------------------


def xor_fano_lines():
    """Fano plane on points 1..7 relabeled to 0..6: triples with XOR zero."""
    lines = []
    for triple in itertools.combinations(range(1, 8), 3):
        if triple[0] ^ triple[1] ^ triple[2] == 0:
            lines.append(tuple(x - 1 for x in triple))
    return lines


# -- equality-condition oracle -------------------------------------------------


def equality_solutions_by_enumeration(n):
    """All (t, b) with both equality conditions, by plain 2D enumeration."""
    out = []
    for t in range(1, n + 1):
        for b in range(1, 2 * n + 2):
            quad = b * b + b * (1 - t) - t + t * t == t * n
            div = (b - t + 1) != 0 and n % (b - t + 1) == 0
            if quad and div:
                out.append((t, b))
    return out


def is_prime_power_by_factoring(q):
    """Full factorization check, independent of PrimePower.from_order."""
    if q < 2:
        return False
    factors = set()
    m = q
    f = 2
    while f * f <= m:
        while m % f == 0:
            factors.add(f)
            m //= f
        f += 1
    if m > 1:
        factors.add(m)
    return len(factors) == 1
