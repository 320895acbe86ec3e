"""Classification of groups of squarefree order.

Every group of squarefree order n is metacyclic,

    G(d,e,k) = < sigma, tau | sigma^e = tau^d = 1, tau sigma tau^-1 = sigma^k >

with n = d*e, gcd(d,e) = 1 and ord_e(k) = d, and G(d,e,k) is isomorphic to
G(d',e',k') exactly when d = d', e = e' and k, k' generate the same cyclic
subgroup of U(e).  This module enumerates one canonical representative per
isomorphism class and evaluates the two closed-form counting functions
(number of classes per n, and per factorization triple n = d*g*z).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product

from .numutil import (
    FactorizationTriple,
    SquarefreeFactorization,
    crt_combine,
    divisor_factorizations,
    euler_phi,
    mobius,
    ord_mod,
    smallest_primitive_root,
    v_count,
)

__all__ = [
    "GroupSpec",
    "InvalidSpec",
    "make_spec",
    "enumerate_types",
    "centre_commutator",
    "holder_count",
    "types_per_triple",
]


class InvalidSpec(ValueError):
    """Parameters (d, e, k) do not satisfy the classification conditions."""


@dataclass(frozen=True)
class GroupSpec:
    """One isomorphism type G(d,e,k) with its derived invariants.

    z is the order of the centre, g the order of the commutator subgroup;
    e = g*z and n = d*g*z.  k is the canonical generator of its cyclic
    subgroup of U(e) (see canonical_k).
    """

    n: int
    d: int
    e: int
    k: int
    z: int
    g: int

    @property
    def triple(self) -> FactorizationTriple:
        return FactorizationTriple(self.d, self.g, self.z)

    def presentation(self, ascii_only: bool = False) -> str:
        if ascii_only:
            return (
                f"<sigma,tau | sigma^{self.e} = tau^{self.d} = 1, "
                f"tau sigma tau^-1 = sigma^{self.k}>"
            )
        return (
            f"⟨σ,τ | σ^{self.e} = τ^{self.d} = 1, "
            f"τστ⁻¹ = σ^{self.k}⟩"
        )


def centre_commutator(d: int, e: int, k: int) -> tuple[int, int]:
    """Orders (z, g) of the centre and commutator subgroup of G(d,e,k).

    z = gcd(e, k-1) and g = e/z.  Raises InvalidSpec unless ord_e(k) = d
    and gcd(d, e) = 1.
    """
    if math.gcd(d, e) != 1:
        raise InvalidSpec(f"gcd(d,e) = gcd({d},{e}) != 1")
    if math.gcd(k, e) != 1 or ord_mod(k, e) != d:
        raise InvalidSpec(f"ord_{e}({k}) != {d}")
    z = math.gcd(e, (k - 1) % e) if e > 1 else 1
    return z, e // z


def make_spec(d: int, e: int, k: int) -> GroupSpec:
    """Build a validated GroupSpec from presentation parameters."""
    z, g = centre_commutator(d, e, k)
    return GroupSpec(n=d * e, d=d, e=e, k=k if e > 1 else 1, z=z, g=g)


def _projective_points(p: int, dim: int) -> list[tuple[int, ...]]:
    # points of PG(dim-1, p): first nonzero coordinate normalized to 1
    points = []
    for pivot in range(dim):
        for tail in product(range(p), repeat=dim - pivot - 1):
            points.append((0,) * pivot + (1,) + tail)
    return points


def canonical_k(e_primes: tuple[int, ...], parts: dict[int, dict[int, int]]) -> int:
    """CRT-lift a choice of order-p subgroups of U(e) to a canonical k.

    parts maps each prime p | d to {q: coordinate} over the primes q | e
    with q = 1 (mod p); the coordinate is the exponent of the fixed
    order-p generator of U(q), namely r_q**((q-1)/p) for the smallest
    primitive root r_q.  Primes q untouched by every p get k = 1 (mod q).
    """
    residues = []
    for q in e_primes:
        exp = 0
        for p, coords in parts.items():
            c = coords.get(q, 0)
            if c:
                exp = (exp + c * ((q - 1) // p)) % (q - 1)
        r = pow(smallest_primitive_root(q), exp, q) if exp else 1
        residues.append((r, q))
    k, e = crt_combine(residues)
    return k if e > 1 else 1


def enumerate_types(f: SquarefreeFactorization) -> list[GroupSpec]:
    """All isomorphism types of groups of order n, one GroupSpec each.

    For each divisor pair n = d*e, the types correspond to subgroups of
    order d in U(e) = prod U(q); such a subgroup is an independent choice,
    for each prime p | d, of a line in the p-torsion subgroup, i.e. a
    projective point over F_p in dimension v(p,e).  Output is sorted by
    d ascending, then z descending, then k ascending.
    """
    n = f.n
    out = [GroupSpec(n=n, d=1, e=n, k=1, z=n, g=1)]
    for dfac in divisor_factorizations(f):
        d = dfac.n
        if d == 1:
            continue
        e = n // d
        e_primes = tuple(q for q in f.primes if q not in dfac.primes)
        qs_per_p = {p: [q for q in e_primes if q % p == 1] for p in dfac.primes}
        if any(not qs for qs in qs_per_p.values()):
            continue
        point_sets = [
            [(p, dict(zip(qs_per_p[p], pt))) for pt in _projective_points(p, len(qs_per_p[p]))]
            for p in dfac.primes
        ]
        for combo in product(*point_sets):
            k = canonical_k(e_primes, dict(combo))
            z, g = centre_commutator(d, e, k)
            out.append(GroupSpec(n=n, d=d, e=e, k=k, z=z, g=g))
    out.sort(key=lambda s: (s.d, -s.z, s.k))
    return out


def holder_count(f: SquarefreeFactorization) -> int:
    """Number of isomorphism types of groups of squarefree order n.

    sum over n = d*e of prod over p | d of (p**v(p,e) - 1)/(p - 1).
    """
    total = 0
    for dfac in divisor_factorizations(f):
        e_primes = tuple(q for q in f.primes if q not in dfac.primes)
        efac = SquarefreeFactorization(f.n // dfac.n, e_primes)
        term = 1
        for p in dfac.primes:
            term *= (p ** v_count(p, efac) - 1) // (p - 1)
            if term == 0:
                break
        total += term
    return total


def types_per_triple(f: SquarefreeFactorization, t: FactorizationTriple) -> int:
    """Number of isomorphism types with |Z(G)| = z and |G'| = g for n = d*g*z.

    Evaluates phi(d)^-1 * sum over f | g of mu(g/f) * prod over p | d of
    (p**v(p,f) - 1) in exact integer arithmetic; the division is performed
    last and must be exact.
    """
    if t.d * t.g * t.z != f.n:
        raise ValueError(f"triple {t} does not factor n={f.n}")
    dfac = factorization_of_divisor(f, t.d)
    gfac = factorization_of_divisor(f, t.g)
    acc = 0
    for ffac in divisor_factorizations(gfac):
        cofac = SquarefreeFactorization(
            t.g // ffac.n, tuple(q for q in gfac.primes if q not in ffac.primes)
        )
        term = mobius(cofac)
        for p in dfac.primes:
            term *= p ** v_count(p, ffac) - 1
            if term == 0:
                break
        acc += term
    phi_d = euler_phi(dfac)
    assert acc % phi_d == 0, f"type count for {t} not divisible by phi(d)={phi_d}"
    count = acc // phi_d
    assert count >= 0, f"negative type count for {t}"
    return count


def factorization_of_divisor(f: SquarefreeFactorization, m: int) -> SquarefreeFactorization:
    """Factorization of a divisor m of f.n, reusing f's primes."""
    if m == 1:
        return SquarefreeFactorization(1, ())
    primes = tuple(p for p in f.primes if m % p == 0)
    prod_ = 1
    for p in primes:
        prod_ *= p
    if prod_ != m:
        raise ValueError(f"{m} does not divide {f.n}")
    return SquarefreeFactorization(m, primes)
