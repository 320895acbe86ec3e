"""Exact integer arithmetic and multiplicative number-theoretic functions.

Everything here works with plain Python ints (no overflow concerns) and is
restricted to squarefree moduli where stated.  Squarefree n up to 10**12 are
supported; factorization is deterministic trial division, which is cheap at
that scale.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterator, Sequence

MAX_N = 10**12

__all__ = [
    "MAX_N",
    "SquarefreeFactorization",
    "FactorizationTriple",
    "NotSquarefree",
    "TooLarge",
    "NotAUnit",
    "NonCoprimeModuli",
    "factor_squarefree",
    "euler_phi",
    "mobius",
    "omega",
    "ord_mod",
    "v_count",
    "crt_combine",
    "triples_of",
    "divisors",
    "divisor_factorizations",
]


class NotSquarefree(ValueError):
    """n is divisible by the square of a prime."""

    def __init__(self, n: int, p: int):
        self.n = n
        self.p = p
        super().__init__(f"{n} is not squarefree: {p}^2 divides it")


class TooLarge(ValueError):
    """n exceeds the supported range."""

    def __init__(self, n: int):
        self.n = n
        super().__init__(f"{n} exceeds the supported range ({MAX_N})")


class NotAUnit(ValueError):
    """Residue is not invertible modulo the given modulus."""

    def __init__(self, k: int, e: int):
        self.k = k
        self.e = e
        super().__init__(f"{k} is not a unit modulo {e}")


class NonCoprimeModuli(ValueError):
    """Residue system has non-coprime moduli."""


@dataclass(frozen=True)
class SquarefreeFactorization:
    """A squarefree positive integer with its sorted prime factors.

    n = 1 is represented by the empty prime tuple.
    """

    n: int
    primes: tuple[int, ...]


@dataclass(frozen=True)
class FactorizationTriple:
    """An ordered factorization n = d * g * z into pairwise coprime parts."""

    d: int
    g: int
    z: int

    @property
    def n(self) -> int:
        return self.d * self.g * self.z


def factor_squarefree(n: int) -> SquarefreeFactorization:
    """Factor a squarefree positive integer by trial division.

    Raises NotSquarefree if a repeated prime factor is found, TooLarge if
    n > 10**12 (so that the trial-division bound sqrt(n) stays small).
    """
    if n < 1:
        raise ValueError(f"n must be a positive integer, got {n}")
    if n > MAX_N:
        raise TooLarge(n)
    primes = []
    m = n
    for p in _trial_divisors(n):
        if p * p > m:
            break
        if m % p == 0:
            m //= p
            if m % p == 0:
                raise NotSquarefree(n, p)
            primes.append(p)
    if m > 1:
        primes.append(m)
    return SquarefreeFactorization(n, tuple(primes))


# wheel mod 30: candidate divisors coprime to 2, 3, 5
_WHEEL = (4, 2, 4, 2, 4, 6, 2, 6)


def _trial_divisors(n: int) -> Iterator[int]:
    yield 2
    yield 3
    yield 5
    d = 7
    i = 0
    while d * d <= n:
        yield d
        d += _WHEEL[i]
        i = (i + 1) % 8


def _factorize(n: int) -> dict[int, int]:
    """Prime factorization of an arbitrary positive integer (exponents kept)."""
    factors: dict[int, int] = {}
    m = n
    for p in _trial_divisors(n):
        while m % p == 0:
            factors[p] = factors.get(p, 0) + 1
            m //= p
    if m > 1:
        factors[m] = factors.get(m, 0) + 1
    return factors


def euler_phi(f: SquarefreeFactorization) -> int:
    """Euler totient of a squarefree integer: product of (p - 1)."""
    phi = 1
    for p in f.primes:
        phi *= p - 1
    return phi


def mobius(f: SquarefreeFactorization) -> int:
    """Mobius function of a squarefree integer: (-1)**omega(n)."""
    return -1 if len(f.primes) % 2 else 1


def omega(f: SquarefreeFactorization) -> int:
    """Number of distinct prime factors."""
    return len(f.primes)


def _ord_mod_prime(a: int, q: int) -> int:
    # order of a in U(q), q prime: strip prime factors off q - 1
    t = q - 1
    for r in _factorize(q - 1):
        while t % r == 0 and pow(a, t // r, q) == 1:
            t //= r
    return t


def ord_mod(k: int, e: int) -> int:
    """Multiplicative order of k modulo squarefree e.

    The least j >= 1 with k**j = 1 (mod e).  Raises NotAUnit when
    gcd(k, e) > 1.
    """
    if e == 1:
        return 1
    k %= e
    if math.gcd(k, e) != 1:
        raise NotAUnit(k, e)
    order = 1
    for q in factor_squarefree(e).primes:
        order = math.lcm(order, _ord_mod_prime(k % q, q))
    return order


def v_count(p: int, f: SquarefreeFactorization) -> int:
    """Number of prime factors q of f with q = 1 (mod p)."""
    return sum(1 for q in f.primes if q % p == 1)


def crt_combine(residues: Sequence[tuple[int, int]]) -> tuple[int, int]:
    """Combine residue/modulus pairs into a single residue mod the product.

    Moduli must be pairwise coprime.  Returns (x, M) with 0 <= x < M where
    M is the product of the moduli; the empty sequence gives (0, 1).
    """
    x, m = 0, 1
    for r, q in residues:
        if q < 1:
            raise ValueError(f"modulus must be positive, got {q}")
        g = math.gcd(m, q)
        if g != 1:
            raise NonCoprimeModuli(f"moduli share the factor gcd={g}")
        # x' = x (mod m), x' = r (mod q)
        t = ((r - x) * pow(m, -1, q)) % q if q > 1 else 0
        x += m * t
        m *= q
    return x % m, m


def divisors(f: SquarefreeFactorization) -> list[int]:
    """All divisors of a squarefree integer, sorted ascending."""
    out = [1]
    for p in f.primes:
        out += [d * p for d in out]
    return sorted(out)


def divisor_factorizations(f: SquarefreeFactorization) -> Iterator[SquarefreeFactorization]:
    """Yield every divisor of f as a SquarefreeFactorization (unsorted order)."""
    for r in range(len(f.primes) + 1):
        for subset in combinations(f.primes, r):
            m = 1
            for p in subset:
                m *= p
            yield SquarefreeFactorization(m, subset)


def triples_of(f: SquarefreeFactorization) -> list[FactorizationTriple]:
    """All 3**omega(n) ordered triples (d, g, z) with d*g*z = n.

    Each prime of n goes to exactly one of the three parts.  Sorted
    lexicographically by (d, g).
    """
    triples = [(1, 1, 1)]
    for p in f.primes:
        triples = [
            t
            for d, g, z in triples
            for t in ((d * p, g, z), (d, g * p, z), (d, g, z * p))
        ]
    triples.sort(key=lambda t: (t[0], t[1]))
    return [FactorizationTriple(d, g, z) for d, g, z in triples]


@lru_cache(maxsize=None)
def smallest_primitive_root(q: int) -> int:
    """Smallest primitive root modulo a prime q."""
    if q == 2:
        return 1
    rs = list(_factorize(q - 1))
    for g in range(2, q):
        if all(pow(g, (q - 1) // r, q) != 1 for r in rs):
            return g
    raise ValueError(f"{q} is not prime")
