"""Group identifiers, order formulas, closed-form spectra and candidate search.

The registry covers exactly the families touched by the three-component
classification and the candidate lists it leads to: Alt(n), PSL/PSU up to
dimension 6, PSp up to dimension 8, the 7- to 9-dimensional orthogonal
groups, the exceptional families, and the 26 sporadic groups (orders
embedded as data from the ATLAS of Finite Groups).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import lru_cache, reduce
from math import gcd, lcm

from .numtheory import (
    Factorization,
    PrimeSet,
    factor,
    prime_power,
    prime_powers_upto,
    primes_upto,
)


class InvalidGroupError(ValueError):
    """A group token that does not parse or violates a family constraint."""


class UnsupportedGroupError(ValueError):
    """A valid group for which the requested computation is not implemented."""


# ATLAS orders of the 26 sporadic simple groups.
SPORADIC_ORDERS: dict[str, int] = {
    "M11": 7920,
    "M12": 95040,
    "M22": 443520,
    "M23": 10200960,
    "M24": 244823040,
    "J1": 175560,
    "J2": 604800,
    "J3": 50232960,
    "J4": 86775571046077562880,
    "Co1": 4157776806543360000,
    "Co2": 42305421312000,
    "Co3": 495766656000,
    "Fi22": 64561751654400,
    "Fi23": 4089470473293004800,
    "Fi24'": 1255205709190661721292800,
    "HS": 44352000,
    "McL": 898128000,
    "He": 4030387200,
    "Ru": 145926144000,
    "Suz": 448345497600,
    "O'N": 460815505920,
    "HN": 273030912000000,
    "Ly": 51765179004000000,
    "Th": 90745943887872000,
    "B": 4154781481226426191177580544000000,
    "M": 808017424794512875886459904961710757005754368000000000,
}

# Alternate names seen in the literature for some sporadics.
SPORADIC_ALIASES: dict[str, str] = {
    "HiS": "HS",
    "LyS": "Ly",
    "F1": "M",
    "F2": "B",
    "F3": "Th",
    "F5": "HN",
    "F7": "He",
    "Fi24": "Fi24'",
    "ON": "O'N",
}

_LIE_FAMILIES = frozenset(
    {"PSL", "PSU", "PSp", "POmega", "POmega+", "POmega-", "2D",
     "Sz", "G2", "2G2", "3D4", "F4", "2F4", "E6", "2E6", "E7", "E8"}
)


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise InvalidGroupError(message)


@dataclass(frozen=True, order=True)
class GroupId:
    """A finite simple group given by family token and parameters.

    ``n`` is the alternating degree or the classical dimension parameter,
    ``q`` the field size of a Lie-type group, ``name`` a sporadic name.
    Construction validates the parameters of the family, including the
    constraints that make the group exist and be simple.
    """

    family: str
    n: int = 0
    q: int = 0
    name: str = ""

    def __post_init__(self) -> None:
        fam = self.family
        if fam == "Alt":
            _require(self.n >= 5, f"Alt({self.n}): degree must be at least 5")
            return
        if fam == "Sporadic":
            _require(self.name in SPORADIC_ORDERS, f"unknown sporadic group {self.name!r}")
            return
        _require(fam in _LIE_FAMILIES, f"unknown family {fam!r}")
        pk = prime_power(self.q)
        _require(pk is not None, f"{self}: field size {self.q} is not a prime power")
        p, k = pk
        if fam == "PSL":
            _require(2 <= self.n <= 6, f"{self}: dimension must be between 2 and 6")
            _require(not (self.n == 2 and self.q in (2, 3)),
                     f"{self}: PSL2 is simple only for q > 3")
        elif fam == "PSU":
            _require(3 <= self.n <= 6, f"{self}: dimension must be between 3 and 6")
            _require(not (self.n == 3 and self.q == 2), f"{self}: PSU3(2) is not simple")
        elif fam == "PSp":
            _require(self.n in (4, 6, 8), f"{self}: dimension must be 4, 6 or 8")
            _require(not (self.n == 4 and self.q == 2), f"{self}: PSp4(2) is not simple")
        elif fam in ("POmega+", "POmega-"):
            _require(self.n == 8, f"{self}: only dimension 8 is supported")
        elif fam == "POmega":
            _require(self.n in (7, 9), f"{self}: odd dimension must be 7 or 9")
            _require(p != 2, f"{self}: odd-dimensional orthogonal groups need odd q "
                             "(even q duplicates PSp)")
        elif fam == "2D":
            _require(self.q == 3, f"{self}: this family is defined over the field of 3 elements")
            _require(self.n >= 3 and _is_fermat_prime_index(self.n),
                     f"2D({self.n}): n must be a prime of the form 2^m + 1, n >= 3")
        elif fam == "Sz":
            _require(p == 2 and k % 2 == 1 and self.q > 2,
                     f"{self}: Suzuki groups need q = 2^(2n+1) > 2 (odd exponent)")
        elif fam == "G2":
            _require(self.q >= 3, f"{self}: G2(2) is not simple; need q >= 3")
        elif fam == "2G2":
            _require(p == 3 and k % 2 == 1 and self.q > 3,
                     f"{self}: Ree groups 2G2 need q = 3^(2n+1) > 3 (odd exponent)")
        elif fam == "2F4":
            _require(p == 2 and k % 2 == 1 and self.q > 2,
                     f"{self}: 2F4 needs q = 2^(2n+1) > 2 (odd exponent; the Tits group is excluded)")
        # F4, E6, 2E6, E7, E8, 3D4: any prime power.

    @property
    def p(self) -> int:
        """Characteristic of a Lie-type group."""
        pk = prime_power(self.q)
        if pk is None:
            raise UnsupportedGroupError(f"{self} has no defining characteristic")
        return pk[0]

    @property
    def k(self) -> int:
        """Field exponent: q = p**k."""
        pk = prime_power(self.q)
        if pk is None:
            raise UnsupportedGroupError(f"{self} has no defining field")
        return pk[1]

    def __str__(self) -> str:
        fam = self.family
        if fam == "Sporadic":
            return self.name
        if fam == "Alt":
            return f"Alt({self.n})"
        if fam in ("PSL", "PSU", "PSp"):
            return f"{fam}{self.n}({self.q})"
        if fam in ("POmega+", "POmega-"):
            return f"POmega{self.n}{fam[-1]}({self.q})"
        if fam == "POmega":
            return f"POmega{self.n}({self.q})"
        if fam == "2D":
            return f"2D({self.n})"
        return f"{fam}({self.q})"


def _is_fermat_prime_index(n: int) -> bool:
    # n = 2^m + 1 and prime; the n = 3 case is handled by the n-1 power test too
    from .numtheory import is_prime

    m = n - 1
    return is_prime(n) and (m & (m - 1)) == 0


_TOKEN_RE = re.compile(
    r"""^(?P<fam>2G2|2F4|2E6|3D4|2D|G2|F4|E6|E7|E8|Sz|Alt|PSL|PSU|PSp|POmega)
        (?P<dim>\d+)?(?P<sign>[+-])?
        \(\s*(?P<param>\d+)\s*\)$""",
    re.VERBOSE,
)


def parse_group_id(text: str) -> GroupId:
    """Parse a group token such as "E8(5)", "PSp4(13)", "POmega8+(4)" or "M11"."""
    token = text.strip()
    name = SPORADIC_ALIASES.get(token, token)
    if name in SPORADIC_ORDERS:
        return GroupId("Sporadic", name=name)
    m = _TOKEN_RE.match(token)
    if not m:
        raise InvalidGroupError(f"cannot parse group token {text!r}")
    fam = m.group("fam")
    dim = m.group("dim")
    sign = m.group("sign")
    param = int(m.group("param"))
    if fam in ("PSL", "PSU", "PSp"):
        _require(dim is not None and sign is None, f"{text!r}: expected {fam}<dim>(q)")
        return GroupId(fam, n=int(dim), q=param)
    if fam == "POmega":
        _require(dim is not None, f"{text!r}: expected POmega<dim>[+-](q)")
        d = int(dim)
        if sign:
            return GroupId(f"POmega{sign}", n=d, q=param)
        return GroupId("POmega", n=d, q=param)
    _require(dim is None and sign is None, f"{text!r}: family {fam} takes a single parameter")
    if fam == "Alt":
        return GroupId("Alt", n=param)
    if fam == "2D":
        return GroupId("2D", n=param, q=3)
    return GroupId(fam, q=param)


# Order formulas.  Each Lie family is described by (power of q, list of
# cyclotomic-style integer terms in q, center divisor); the terms are kept as
# explicit q^i +- 1 factors so the prime support can be assembled exactly
# without factoring the full order.

def _lie_order_data(g: GroupId) -> tuple[int, list[int], int]:
    q, n = g.q, g.n
    fam = g.family
    if fam == "PSL":
        return (n * (n - 1) // 2, [q**i - 1 for i in range(2, n + 1)], gcd(n, q - 1))
    if fam == "PSU":
        return (n * (n - 1) // 2, [q**i - (-1) ** i for i in range(2, n + 1)], gcd(n, q + 1))
    if fam == "PSp":
        m = n // 2
        return (m * m, [q ** (2 * i) - 1 for i in range(1, m + 1)], gcd(2, q - 1))
    if fam == "POmega":
        m = (n - 1) // 2
        return (m * m, [q ** (2 * i) - 1 for i in range(1, m + 1)], gcd(2, q - 1))
    if fam == "POmega+":
        m = n // 2
        return (m * (m - 1), [q**m - 1] + [q ** (2 * i) - 1 for i in range(1, m)], gcd(4, q**m - 1))
    if fam in ("POmega-", "2D"):
        m = n // 2 if fam == "POmega-" else n
        return (m * (m - 1), [q**m + 1] + [q ** (2 * i) - 1 for i in range(1, m)], gcd(4, q**m + 1))
    if fam == "Sz":
        return (2, [q * q + 1, q - 1], 1)
    if fam == "G2":
        return (6, [q**6 - 1, q**2 - 1], 1)
    if fam == "2G2":
        return (3, [q**3 + 1, q - 1], 1)
    if fam == "3D4":
        return (12, [q**8 + q**4 + 1, q**6 - 1, q**2 - 1], 1)
    if fam == "F4":
        return (24, [q**12 - 1, q**8 - 1, q**6 - 1, q**2 - 1], 1)
    if fam == "2F4":
        return (12, [q**6 + 1, q**4 - 1, q**3 + 1, q - 1], 1)
    if fam == "E6":
        return (36, [q**12 - 1, q**9 - 1, q**8 - 1, q**6 - 1, q**5 - 1, q**2 - 1], gcd(3, q - 1))
    if fam == "2E6":
        return (36, [q**12 - 1, q**9 + 1, q**8 - 1, q**6 - 1, q**5 + 1, q**2 - 1], gcd(3, q + 1))
    if fam == "E7":
        return (63, [q**18 - 1, q**14 - 1, q**12 - 1, q**10 - 1, q**8 - 1, q**6 - 1, q**2 - 1],
                gcd(2, q - 1))
    if fam == "E8":
        return (120, [q**30 - 1, q**24 - 1, q**20 - 1, q**18 - 1, q**14 - 1, q**12 - 1,
                      q**8 - 1, q**2 - 1], 1)
    raise UnsupportedGroupError(f"no order formula for {g}")


def e8_order(q: int) -> int:
    """|E8(q)| as a polynomial value in q; strictly increasing for q >= 1."""
    return (q**120 * (q**2 - 1) * (q**8 - 1) * (q**12 - 1) * (q**14 - 1)
            * (q**18 - 1) * (q**20 - 1) * (q**24 - 1) * (q**30 - 1))


@lru_cache(maxsize=None)
def order(g: GroupId) -> int:
    """Exact group order."""
    if g.family == "Alt":
        out = 1
        for i in range(3, g.n + 1):
            out *= i
        return out
    if g.family == "Sporadic":
        return SPORADIC_ORDERS[g.name]
    power, terms, center = _lie_order_data(g)
    return g.q**power * reduce(lambda a, b: a * b, terms, 1) // center


@lru_cache(maxsize=None)
def order_factorization(g: GroupId) -> Factorization:
    """Exact factorization of the order, assembled term by term.

    Avoids factoring the full order (which for E8 over a large field would be
    hopeless) by factoring the individual q^i +- 1 terms instead.
    """
    if g.family == "Alt":
        counts: dict[int, int] = {}
        for p in primes_upto(g.n):
            e = 0
            pk = p
            while pk <= g.n:
                e += g.n // pk
                pk *= p
            counts[p] = e
        counts[2] -= 1
        return Factorization(order(g), tuple(sorted((p, e) for p, e in counts.items() if e)))
    if g.family == "Sporadic":
        return factor(order(g))
    power, terms, center = _lie_order_data(g)
    counts = {g.p: power * g.k}
    for t in terms:
        for p, e in factor(t).factors:
            counts[p] = counts.get(p, 0) + e
    for p, e in factor(center).factors:
        counts[p] -= e
    return Factorization(order(g), tuple(sorted((p, e) for p, e in counts.items() if e)))


def prime_spectrum(g: GroupId) -> PrimeSet:
    """pi(G): the primes dividing the group order."""
    return order_factorization(g).primes


@dataclass(frozen=True)
class Spectrum:
    """A divisor-closed set of element orders."""

    orders: frozenset[int]

    def __post_init__(self) -> None:
        if 1 not in self.orders:
            raise ValueError("1 must be an element order")

    @classmethod
    def from_generators(cls, gens) -> "Spectrum":
        """Close the given orders under divisors."""
        from .numtheory import divisors

        closed: set[int] = {1}
        for g in gens:
            closed.update(divisors(g))
        return cls(frozenset(closed))

    @property
    def primes(self) -> PrimeSet:
        from .numtheory import is_prime

        return tuple(sorted(x for x in self.orders if is_prime(x)))

    def __contains__(self, n: int) -> bool:
        return n in self.orders


def spectrum_psl2(q: int) -> Spectrum:
    """Element orders of PSL2(q), q > 3: p and the two torus orders (q+-1)/d."""
    pk = prime_power(q)
    if pk is None or q <= 3:
        raise InvalidGroupError(f"PSL2({q}): need a prime power q > 3")
    d = gcd(2, q - 1)
    return Spectrum.from_generators([pk[0], (q - 1) // d, (q + 1) // d])


def spectrum_sz(q: int) -> Spectrum:
    """Element orders of Sz(q), q = 2^(2n+1) > 2: 4, q-1 and q +- sqrt(2q) + 1."""
    g = GroupId("Sz", q=q)
    root = 2 ** ((g.k + 1) // 2)
    return Spectrum.from_generators([4, q - 1, q - root + 1, q + root + 1])


_ALT_SPECTRUM_LIMIT = 40


def _partitions(n: int, cap: int | None = None):
    if n == 0:
        yield ()
        return
    if cap is None:
        cap = n
    for first in range(min(n, cap), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def spectrum_alt(n: int) -> Spectrum:
    """Element orders of Alt(n): lcms of partitions with even sum of (part-1)."""
    if n < 5:
        raise InvalidGroupError(f"Alt({n}): degree must be at least 5")
    if n > _ALT_SPECTRUM_LIMIT:
        raise UnsupportedGroupError(
            f"Alt({n}): partition enumeration is capped at n = {_ALT_SPECTRUM_LIMIT}")
    gens = set()
    for part in _partitions(n):
        if (n - len(part)) % 2 == 0:
            gens.add(lcm(*part))
    return Spectrum.from_generators(gens)


def is_unisingular(g: GroupId) -> bool:
    """Whether the group is on the unisingularity list.

    Encodes the classification of the simple groups of Lie type in
    characteristic p all of whose elements fix a nonzero point in every
    finite abelian p-group they act on.  Families not on the list (and
    non-Lie groups) return False.
    """
    fam = g.family
    if fam in ("Alt", "Sporadic"):
        return False
    p, k = g.p, g.k
    if fam in ("2G2", "F4", "2F4", "E8"):
        return True
    if fam == "G2":
        return g.q % 2 == 1
    if k != 1:
        return False
    # prime-field conditions
    if fam == "PSL":
        return (p - 1) % g.n == 0
    if fam == "PSU":
        return (p + 1) % g.n == 0
    if fam in ("POmega", "PSp"):
        return p % 2 == 1
    if fam in ("POmega+", "POmega-"):
        if p % 2 == 0:
            return False
        sign = 1 if (g.n // 2) * ((p - 1) // 2) % 2 == 0 else -1
        return sign == (1 if fam == "POmega+" else -1)
    if fam == "E6":
        return (p - 1) % 3 == 0
    if fam == "2E6":
        return (p + 1) % 3 == 0
    if fam == "E7":
        return p % 2 == 1
    return False


@dataclass(frozen=True)
class Bounds:
    """Search limits for candidate enumeration."""

    q_max: int = 64
    n_max: int = 20


def _candidate_ids(bounds: Bounds):
    qs = prime_powers_upto(bounds.q_max)

    def tries():
        for n in range(5, bounds.n_max + 1):
            yield ("Alt", n, 0)
        for dim in range(2, 7):
            for q in qs:
                yield ("PSL", dim, q)
        for dim in range(3, 7):
            for q in qs:
                yield ("PSU", dim, q)
        for dim in (4, 6, 8):
            for q in qs:
                yield ("PSp", dim, q)
        for fam in ("POmega+", "POmega-"):
            for q in qs:
                yield (fam, 8, q)
        for dim in (7, 9):
            for q in qs:
                yield ("POmega", dim, q)
        for fam in ("Sz", "G2", "2G2", "3D4", "F4", "2F4", "E6", "2E6", "E7", "E8"):
            for q in qs:
                yield (fam, 0, q)

    for fam, n, q in tries():
        try:
            yield GroupId(fam, n=n, q=q)
        except InvalidGroupError:
            continue
    for name in SPORADIC_ORDERS:
        yield GroupId("Sporadic", name=name)


def enumerate_candidates(pi: PrimeSet, bounds: Bounds = Bounds()) -> list[GroupId]:
    """All registry groups within bounds whose prime spectrum lies inside pi.

    The containment test strips the primes of pi from the group order, so no
    factoring of large orders is needed.  Results are sorted by (order,
    token), which makes the output deterministic.
    """
    pi = tuple(sorted(set(pi)))
    found = []
    for g in _candidate_ids(bounds):
        rest = order(g)
        for p in pi:
            while rest % p == 0:
                rest //= p
        if rest == 1:
            found.append(g)
    return sorted(found, key=lambda g: (order(g), str(g)))


def recover_e8_q(total_order: int) -> int | None:
    """The prime power q with |E8(q)| equal to the given order, if any.

    Binary search over the strictly increasing order polynomial; returns None
    when the order is not attained or the preimage is not a prime power.
    """
    if total_order < 1:
        return None
    lo, hi = 2, 2
    while e8_order(hi) < total_order:
        lo, hi = hi, hi * 2
    while lo <= hi:
        mid = (lo + hi) // 2
        v = e8_order(mid)
        if v == total_order:
            return mid if prime_power(mid) else None
        if v < total_order:
            lo = mid + 1
        else:
            hi = mid - 1
    return None
