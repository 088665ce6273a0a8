"""Exact integer arithmetic for prime-graph work.

Everything here operates on arbitrary-precision integers and is pure and
deterministic, so results are safe to cache and share between threads.

The one convention worth spelling out: the multiplicative order ``e(r, n)``
of ``n`` modulo an odd prime ``r`` is the usual one, but for ``r = 2`` (and
odd ``n``) we put ``e(2, n) = 1`` if ``n = 1 (mod 4)`` and ``e(2, n) = 2``
otherwise.  With that convention the set of primitive prime divisors
``R_i(q) = {r : e(r, q) = i}`` of ``q^i - 1`` is nonempty for every
``q > 1, i >= 1`` except exactly ``(q, i) in {(2, 1), (3, 1), (2, 6)}``,
and the convention is used consistently throughout this package.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd, isqrt

import sympy

PrimeSet = tuple[int, ...]

# Hard cap on factoring work: values beyond this are outside every grid this
# package runs and would need more than general-purpose methods.
_FACTOR_BIT_LIMIT = 4096


class FactorBudgetError(ValueError):
    """Raised when an input is too large for the factoring budget."""


@dataclass(frozen=True)
class Factorization:
    """Prime factorization ``value == prod(p**e)``, primes ascending."""

    value: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        prod = 1
        last = 1
        for p, e in self.factors:
            if p <= last or e < 1:
                raise ValueError("factors must be ascending primes with positive exponents")
            last = p
            prod *= p**e
        if prod != self.value:
            raise ValueError(f"factor product {prod} != value {self.value}")

    @property
    def primes(self) -> PrimeSet:
        return tuple(p for p, _ in self.factors)

    def multiplicity(self, p: int) -> int:
        return dict(self.factors).get(p, 0)

    def as_dict(self) -> dict[int, int]:
        return dict(self.factors)


@lru_cache(maxsize=None)
def is_prime(n: int) -> bool:
    """Primality test; deterministic below 2**64, strong BPSW above.

    No BPSW pseudoprime is known; all values this package ever tests are far
    below the first possible counterexample candidates anyway.
    """
    if n < 2:
        return False
    return bool(sympy.isprime(n))


@lru_cache(maxsize=None)
def factor(n: int) -> Factorization:
    """Full prime factorization of n >= 1 (n = 1 gives the empty product)."""
    if n < 1:
        raise ValueError(f"cannot factor {n}; expected n >= 1")
    if n.bit_length() > _FACTOR_BIT_LIMIT:
        raise FactorBudgetError(f"{n.bit_length()}-bit value exceeds the factoring budget")
    pairs = tuple(sorted((int(p), int(e)) for p, e in sympy.factorint(n).items()))
    return Factorization(n, pairs)


def prime_divisors(n: int) -> PrimeSet:
    """The set of primes dividing n, ascending."""
    return factor(n).primes


def pi_part(n: int, pi: PrimeSet) -> int:
    """Largest divisor of n supported on the primes of pi."""
    if n < 1:
        raise ValueError(f"pi_part needs n >= 1, got {n}")
    rest = n
    for p in pi:
        while rest % p == 0:
            rest //= p
    return n // rest


@lru_cache(maxsize=None)
def divisors(n: int) -> tuple[int, ...]:
    """All positive divisors of n, ascending."""
    out = [1]
    for p, e in factor(n).factors:
        out = [d * p**j for d in out for j in range(e + 1)]
    return tuple(sorted(out))


def moebius(n: int) -> int:
    fac = factor(n).factors
    if any(e > 1 for _, e in fac):
        return 0
    return -1 if len(fac) % 2 else 1


@lru_cache(maxsize=None)
def mult_order(r: int, n: int) -> int:
    """The order e(r, n) of n modulo the prime r, with the r = 2 convention.

    For odd r this is the least i with n**i = 1 (mod r); for r = 2 and odd n
    it is 1 when n = 1 (mod 4) and 2 otherwise.  Negative n is reduced modulo
    r (modulo 4 when r = 2) first.
    """
    if not is_prime(r):
        raise ValueError(f"{r} is not prime")
    if r == 2:
        if n % 2 == 0:
            raise ValueError(f"e(2, {n}) undefined: n must be odd")
        return 1 if n % 4 == 1 else 2
    m = n % r
    if m == 0:
        raise ValueError(f"e({r}, {n}) undefined: {r} divides {n}")
    order = r - 1
    for p, _ in factor(r - 1).factors:
        while order % p == 0 and pow(m, order // p, r) == 1:
            order //= p
    return order


@lru_cache(maxsize=None)
def cyclotomic_value(i: int, a: int) -> int:
    """Phi_i(a), evaluated exactly via the Moebius divisor product."""
    if i < 1:
        raise ValueError(f"cyclotomic index must be >= 1, got {i}")
    if abs(a) < 2:
        raise ValueError(f"need |a| > 1, got {a}")
    num = 1
    den = 1
    for d in divisors(i):
        mu = moebius(i // d)
        if mu == 1:
            num *= a**d - 1
        elif mu == -1:
            den *= a**d - 1
    if num % den:
        raise AssertionError(f"inexact cyclotomic division for Phi_{i}({a})")
    return num // den


@lru_cache(maxsize=None)
def primitive_divisors(i: int, q: int) -> PrimeSet:
    """R_i(q): all primes r with e(r, q) = i, ascending.

    Every such prime divides Phi_i(q) (for r = 2 this relies on the mod-4
    convention), so the candidates come from factoring the cyclotomic value
    and the order filter does the rest.
    """
    if i < 1:
        raise ValueError(f"index must be >= 1, got {i}")
    if abs(q) < 2:
        raise ValueError(f"need |q| > 1, got {q}")
    hits = []
    for r in factor(abs(cyclotomic_value(i, q))).primes:
        if q % r != 0 and mult_order(r, q) == i:
            hits.append(r)
    return tuple(hits)


def zsigmondy_exists(q: int, m: int) -> bool:
    """Whether R_m(q) is nonempty, by the Bang-Zsigmondy exception list.

    The closed form; ``primitive_divisors`` is the computed route, and the
    claim suite checks the two agree on a large grid.
    """
    if q < 2:
        raise ValueError(f"need q > 1, got {q}")
    if m < 1:
        raise ValueError(f"need m >= 1, got {m}")
    return (q, m) not in {(2, 1), (3, 1), (2, 6)}


def primitive_part_direct(i: int, a: int) -> int:
    """Product of primitive prime divisors of a^i - 1, multiplicities counted.

    Brute force straight from the definition: factor a^i - 1 in full and keep
    the p-adic contribution of every prime of order exactly i.  Serves as the
    independent oracle for :func:`primitive_part`.
    """
    if i < 1:
        raise ValueError(f"index must be >= 1, got {i}")
    if abs(a) < 2:
        raise ValueError(f"need |a| > 1, got {a}")
    n = abs(a**i - 1)
    if n == 1:
        return 1
    out = 1
    for p, e in factor(n).factors:
        if mult_order(p, a) == i:
            out *= p**e
    return out


def primitive_part(i: int, a: int) -> int:
    """Product of primitive prime divisors of a^i - 1, by the cyclotomic formula.

    For i > 2 this is Phi_i(a) / gcd(r, Phi_m(a)) where r is the largest
    prime dividing i and m is the r-free part of i.  The formula does not
    apply at i <= 2: i = 1 falls back to the definition and the i = 2 value
    is defined to be the i = 1 value at -a.
    """
    if i < 1:
        raise ValueError(f"index must be >= 1, got {i}")
    if i == 1:
        return primitive_part_direct(1, a)
    if i == 2:
        return primitive_part_direct(1, -a)
    r = factor(i).primes[-1]
    m = i
    while m % r == 0:
        m //= r
    if m == 1:
        correction = gcd(r, a - 1)
    else:
        correction = gcd(r, cyclotomic_value(m, a))
    return cyclotomic_value(i, a) // correction


def nagell_search(x_max: int) -> list[tuple[int, int, int]]:
    """All (x, y, k) with 1 <= x <= x_max, y >= 2, k >= 2 and x^2+x+1 = y^k.

    Exhaustive: perfect squares are tested per x, and every higher power
    y^k <= x_max^2 + x_max + 1 is enumerated into a lookup table.
    """
    if x_max < 1:
        raise ValueError(f"need x_max >= 1, got {x_max}")
    n_max = x_max * x_max + x_max + 1
    powers: dict[int, list[tuple[int, int]]] = {}
    k = 3
    while 2**k <= n_max:
        y = 2
        while (v := y**k) <= n_max:
            powers.setdefault(v, []).append((y, k))
            y += 1
        k += 1
    hits: list[tuple[int, int, int]] = []
    for x in range(1, x_max + 1):
        v = x * x + x + 1
        s = isqrt(v)
        if s * s == v:
            hits.append((x, s, 2))
        for y, kk in sorted(powers.get(v, ())):
            hits.append((x, y, kk))
    return hits


def singleton_prime_residues(q: int, sign: int) -> tuple[int, tuple[int, int]] | None:
    """If q^2 + sign*q + 1 is supported on a single prime r, return r and
    (r mod 6, r mod 8); otherwise None.

    The residue lemma for these values asserts r = 1 (mod 6) always, and
    r mod 8 in {1, 3} whenever q = 1 (mod 8); the claim engine checks both.
    """
    if q <= 2:
        raise ValueError(f"need q > 2, got {q}")
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    ps = prime_divisors(q * q + sign * q + 1)
    if len(ps) != 1:
        return None
    r = ps[0]
    return r, (r % 6, r % 8)


@lru_cache(maxsize=None)
def prime_power(n: int) -> tuple[int, int] | None:
    """(p, k) with n = p**k if n is a prime power, else None."""
    if n < 2:
        return None
    fac = factor(n).factors
    if len(fac) != 1:
        return None
    return fac[0]


def primes_upto(limit: int) -> tuple[int, ...]:
    """All primes <= limit (simple sieve)."""
    if limit < 2:
        return ()
    sieve = bytearray([1]) * (limit + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, isqrt(limit) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(sieve[p * p :: p]))
    return tuple(i for i, b in enumerate(sieve) if b)


def prime_powers_upto(limit: int) -> tuple[int, ...]:
    """All prime powers p**k <= limit, ascending."""
    out = []
    for p in primes_upto(limit):
        v = p
        while v <= limit:
            out.append(v)
            v *= p
    return tuple(sorted(out))
