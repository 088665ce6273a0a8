"""Brute-force element-order oracles for small concrete groups.

These enumerate actual group elements (matrices over small finite fields,
or permutations) and collect their orders, independently of the closed-form
spectra and adjacency criteria they are used to validate.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations
from math import lcm

from .groups import InvalidGroupError, Spectrum, UnsupportedGroupError
from .numtheory import is_prime, prime_power

# Fixed irreducible moduli for the extension fields the oracles need,
# little-endian coefficient tuples (c0, c1, ..., 1).  Chosen once so the
# enumerations are reproducible.
_MODULI: dict[int, tuple[int, ...]] = {
    4: (1, 1, 1),        # x^2 + x + 1 over F2
    8: (1, 1, 0, 1),     # x^3 + x + 1 over F2
    9: (1, 0, 1),        # x^2 + 1 over F3
    25: (2, 0, 1),       # x^2 + 2 over F5
    27: (1, 2, 0, 1),    # x^3 - x + 1 over F3
    49: (1, 0, 1),       # x^2 + 1 over F7
}


@dataclass(frozen=True)
class FiniteFieldSpec:
    """A concrete finite field: characteristic, degree and fixed modulus."""

    p: int
    k: int
    modulus: tuple[int, ...]

    def __post_init__(self) -> None:
        if not is_prime(self.p):
            raise ValueError(f"characteristic {self.p} is not prime")
        if len(self.modulus) != self.k + 1 or self.modulus[-1] != 1:
            raise ValueError("modulus must be monic of the field degree")
        if self.k in (2, 3):
            # degree 2 and 3: irreducible over F_p iff no root in F_p
            for x in range(self.p):
                if self._eval(x) % self.p == 0:
                    raise ValueError(f"modulus has root {x} modulo {self.p}")

    def _eval(self, x: int) -> int:
        acc = 0
        for c in reversed(self.modulus):
            acc = acc * x + c
        return acc

    @property
    def size(self) -> int:
        return self.p**self.k


class GF:
    """Table-driven arithmetic in a small finite field.

    Elements are integers 0 .. q-1 encoding polynomials over F_p in base p;
    addition, multiplication and negation are precomputed tables, which keeps
    the matrix enumerations fast enough to run in the test suite.
    """

    def __init__(self, q: int):
        pk = prime_power(q)
        if pk is None:
            raise ValueError(f"{q} is not a prime power")
        p, k = pk
        if k == 1:
            spec = FiniteFieldSpec(p, 1, (0, 1))
        else:
            if q not in _MODULI:
                raise ValueError(f"no fixed modulus recorded for GF({q})")
            spec = FiniteFieldSpec(p, k, _MODULI[q])
        self.spec = spec
        self.q = q
        self.p = p
        self.k = k
        self.add = [[self._poly_add(a, b) for b in range(q)] for a in range(q)]
        self.neg = [self._poly_neg(a) for a in range(q)]
        self.mul = [[self._poly_mul(a, b) for b in range(q)] for a in range(q)]

    def _digits(self, a: int) -> list[int]:
        out = []
        for _ in range(self.k):
            out.append(a % self.p)
            a //= self.p
        return out

    def _encode(self, digits: list[int]) -> int:
        out = 0
        for c in reversed(digits):
            out = out * self.p + c % self.p
        return out

    def _poly_add(self, a: int, b: int) -> int:
        return self._encode([x + y for x, y in zip(self._digits(a), self._digits(b))])

    def _poly_neg(self, a: int) -> int:
        return self._encode([-x for x in self._digits(a)])

    def _poly_mul(self, a: int, b: int) -> int:
        da, db = self._digits(a), self._digits(b)
        prod = [0] * (2 * self.k - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] += x * y
        mod = self.spec.modulus
        for i in range(len(prod) - 1, self.k - 1, -1):
            c = prod[i] % self.p
            if c:
                for j in range(self.k):
                    prod[i - self.k + j] -= c * mod[j]
            prod[i] = 0
        return self._encode([c % self.p for c in prod[: self.k]])

    def generator(self) -> int:
        """A multiplicative generator (smallest encoding that works)."""
        target = self.q - 1
        for g in range(2, self.q):
            x, n = g, 1
            while x != 1:
                x = self.mul[x][g]
                n += 1
            if n == target:
                return g
        raise AssertionError("no generator found")

    def power(self, a: int, e: int) -> int:
        e %= self.q - 1
        out = 1
        for _ in range(e):
            out = self.mul[out][a]
        return out


_PSL2_SUPPORTED = (4, 5, 7, 8, 9, 11, 13, 25, 27, 49)


@lru_cache(maxsize=None)
def psl2_orders(q: int) -> Spectrum:
    """Element orders of PSL2(q) by full enumeration of SL2(q).

    Scans all q^4 matrices, keeps those of determinant 1, and walks powers of
    each until the first scalar +-1 (the image order in the quotient).
    """
    if q not in _PSL2_SUPPORTED:
        raise UnsupportedGroupError(f"psl2_orders supports q in {_PSL2_SUPPORTED}")
    f = GF(q)
    mul, add, neg = f.mul, f.add, f.neg
    one = 1
    minus_one = neg[one]
    sl2 = []
    for a in range(q):
        for b in range(q):
            for c in range(q):
                bc = mul[b][c]
                for d in range(q):
                    if add[mul[a][d]][neg[bc]] == one:
                        sl2.append((a, b, c, d))
    expected = q * (q * q - 1)
    if len(sl2) != expected:
        raise AssertionError(f"|SL2({q})| = {len(sl2)}, expected {expected}")
    group_order = expected if q % 2 == 0 else expected // 2
    orders: set[int] = set()
    for ma, mb, mc, md in sl2:
        xa, xb, xc, xd = ma, mb, mc, md
        n = 1
        while not (xb == 0 and xc == 0 and xa == xd and (xa == one or xa == minus_one)):
            xa, xb, xc, xd = (
                add[mul[xa][ma]][mul[xb][mc]],
                add[mul[xa][mb]][mul[xb][md]],
                add[mul[xc][ma]][mul[xd][mc]],
                add[mul[xc][mb]][mul[xd][md]],
            )
            n += 1
            if n > group_order:
                raise AssertionError("order computation exceeded the group order")
        orders.add(n)
    return Spectrum.from_generators(orders)


@lru_cache(maxsize=None)
def alt_orders(n: int) -> Spectrum:
    """Element orders of Alt(n) by direct enumeration of even permutations."""
    if n < 5:
        raise InvalidGroupError(f"Alt({n}): degree must be at least 5")
    if n > 12:
        raise UnsupportedGroupError(f"alt_orders is capped at n = 12, got {n}")
    orders: set[int] = set()
    for perm in permutations(range(n)):
        seen = [False] * n
        cycles = []
        for start in range(n):
            if seen[start]:
                continue
            length = 0
            j = start
            while not seen[j]:
                seen[j] = True
                j = perm[j]
                length += 1
            cycles.append(length)
        if (n - len(cycles)) % 2 == 0:
            orders.add(lcm(*cycles))
    return Spectrum.from_generators(orders)


def _sz_unipotent(f: GF, a: int, b: int):
    """Suzuki's lower unitriangular generator x(a, b) of Sz(q)."""
    mul, add = f.mul, f.add
    theta_exp = 2 ** ((f.k + 1) // 2)  # theta: x -> x^(2^(n+1)), theta^2 = squaring

    def theta(x: int) -> int:
        out = x
        for _ in range(theta_exp.bit_length() - 1):
            out = mul[out][out]
        return out

    at = theta(a)
    a_t1 = mul[at][a]                     # a^(theta+1)
    a_t2 = mul[a_t1][a]                   # a^(theta+2)
    entry30 = add[add[a_t2][mul[a][b]]][theta(b)]
    entry31 = add[a_t1][b]
    return (
        (1, 0, 0, 0),
        (a, 1, 0, 0),
        (b, at, 1, 0),
        (entry30, entry31, a, 1),
    )


def _mat4_mul(f: GF, x, y):
    mul, add = f.mul, f.add
    out = []
    for i in range(4):
        row = []
        for j in range(4):
            acc = 0
            for t in range(4):
                acc = add[acc][mul[x[i][t]][y[t][j]]]
            row.append(acc)
        out.append(tuple(row))
    return tuple(out)


_SZ8_ORDER = 29120


@lru_cache(maxsize=1)
def sz8_orders() -> Spectrum:
    """Element orders of Sz(8) by closure from Suzuki's 4x4 generators.

    Generators (after Suzuki's original parametrization of the natural
    4-dimensional representation): the unitriangular x(a, b), the torus
    element diag(w^(2^n + 1), w^(2^n), w^(-2^n), w^(-2^n - 1)) for a field
    generator w, and the antidiagonal involution.  The closure size is
    checked against the known group order.
    """
    f = GF(8)
    w = f.generator()
    half = 2 ** ((f.k - 1) // 2)  # 2^n with q = 2^(2n+1)
    torus = tuple(
        tuple(f.power(w, e) if i == j else 0 for j in range(4))
        for i, e in enumerate((half + 1, half, -half, -half - 1))
    )
    tau = tuple(tuple(1 if i + j == 3 else 0 for j in range(4)) for i in range(4))
    gens = [_sz_unipotent(f, w, 0), _sz_unipotent(f, 0, w), torus, tau]

    identity = tuple(tuple(1 if i == j else 0 for j in range(4)) for i in range(4))
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for m in frontier:
            for g in gens:
                prod = _mat4_mul(f, m, g)
                if prod not in seen:
                    seen.add(prod)
                    nxt.append(prod)
        frontier = nxt
        if len(seen) > _SZ8_ORDER:
            raise AssertionError("closure exceeded |Sz(8)|; generators are wrong")
    if len(seen) != _SZ8_ORDER:
        raise AssertionError(f"closure has {len(seen)} elements, expected {_SZ8_ORDER}")
    orders: set[int] = set()
    for m in seen:
        x = m
        n = 1
        while x != identity:
            x = _mat4_mul(f, x, m)
            n += 1
            if n > _SZ8_ORDER:
                raise AssertionError("order computation exceeded the group order")
        orders.add(n)
    return Spectrum.from_generators(orders)
