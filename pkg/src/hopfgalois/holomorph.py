"""Concrete arithmetic in G(d,e,k), Aut(G) and Hol(G), plus brute-force oracles.

Elements of G = G(d,e,k) are written sigma^a tau^b, so multiplication is

    (a, b) * (a', b') = (a + k^b a' mod e, b + b' mod d).

Aut(G) is generated by theta (sigma -> sigma, tau -> sigma^z tau) and phi_s
(sigma -> sigma^s, tau -> tau) for units s mod e, with relations theta^g = id,
phi_s phi_t = phi_st, phi_s theta phi_s^-1 = theta^s; so theta^c phi_s sends
sigma^a tau^b to sigma^(a s + c z S(k,b)) tau^b where S(h,j) = 1 + h + ... +
h^(j-1).  The holomorph Hol(G) = G x| Aut(G) multiplies as
[alpha, psi][alpha', psi'] = [alpha psi(alpha'), psi psi'] and acts on G by
x -> alpha psi(x).

The oracles at the bottom count regular cyclic subgroups of Hol(G) two ways
(closed-form generator census vs raw permutation-orbit enumeration) and
recover centre/commutator/automorphism orders by exhaustive scans; they
exist to validate the counting formulas at small n.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from .grouptypes import GroupSpec
from .numutil import crt_combine, euler_phi, factor_squarefree

DEFAULT_BUDGET = 10**6

__all__ = [
    "DEFAULT_BUDGET",
    "GroupElement",
    "AutElement",
    "HolElement",
    "OracleReport",
    "NonInvertibleK",
    "PreconditionB1",
    "BudgetExceeded",
    "geometric_sum_S",
    "double_sum_T",
    "group_multiply",
    "group_inverse",
    "aut_apply",
    "aut_compose",
    "hol_identity",
    "hol_multiply",
    "hol_act",
    "hol_power",
    "is_regular_generator",
    "count_regular_cyclic_fast",
    "count_regular_cyclic_perm",
    "regular_cyclic_subgroups",
    "brute_force_structure",
]


class NonInvertibleK(ValueError):
    """k has no inverse modulo the requested modulus."""


class PreconditionB1(ValueError):
    """Operation requires the tau-exponent b = 1."""


class BudgetExceeded(RuntimeError):
    """Enumeration size exceeds the configured budget."""

    def __init__(self, size: int, budget: int):
        self.size = size
        self.budget = budget
        super().__init__(f"enumeration size {size} exceeds budget {budget}")


@dataclass(frozen=True)
class GroupElement:
    """sigma^a tau^b with a mod e, b mod d."""

    a: int
    b: int


@dataclass(frozen=True)
class AutElement:
    """theta^c phi_s with c mod g and s a unit mod e."""

    c: int
    s: int


@dataclass(frozen=True)
class HolElement:
    """[sigma^a tau^b, theta^c phi_s]."""

    a: int
    b: int
    c: int
    s: int


@dataclass(frozen=True)
class OracleReport:
    """Regular-cyclic-subgroup census for one group type.

    generator_count is the number of elements [sigma^a tau, theta^c phi_s]
    generating a regular cyclic subgroup; dividing by phi(e) gives the
    subgroup count e', and scaling by phi(n)/|Aut(G)| gives the Hopf-Galois
    structure count e.
    """

    spec: GroupSpec
    regular_cyclic_subgroup_count: int
    aut_order: int
    hgs_count_oracle: int
    generator_count: int


def geometric_sum_S(h: int, j: int, modulus: int) -> int:
    """S(h,j) = 1 + h + ... + h^(j-1) mod modulus, with S(h,0) = 0."""
    if j < 0:
        raise ValueError(f"j must be >= 0, got {j}")
    h %= modulus
    total, hp = 0, 1 % modulus
    for _ in range(j):
        total = (total + hp) % modulus
        hp = (hp * h) % modulus
    return total


def double_sum_T(k: int, s: int, j: int, modulus: int) -> int:
    """T(k,s,j) = sum over h < j of S(s,h) k^(h-1) mod modulus, T(k,s,0) = 0.

    The h = 0 term carries k^-1, so k must be invertible even though that
    term vanishes (S(s,0) = 0); in practice this is only used with moduli
    dividing e, where gcd(k,e) = 1.
    """
    if j < 0:
        raise ValueError(f"j must be >= 0, got {j}")
    k %= modulus
    try:
        kpow = pow(k, -1, modulus)  # k^(h-1) at h = 0
    except ValueError:
        raise NonInvertibleK(f"{k} is not invertible mod {modulus}") from None
    s %= modulus
    total, ssum, spow = 0, 0, 1 % modulus
    for _ in range(j):
        total = (total + ssum * kpow) % modulus
        ssum = (ssum + spow) % modulus
        spow = (spow * s) % modulus
        kpow = (kpow * k) % modulus
    return total


@lru_cache(maxsize=None)
def _tables(spec: GroupSpec) -> tuple[tuple[int, ...], tuple[int, ...]]:
    # k^b mod e and S(k,b) mod e for b in Z_d
    e, d = spec.e, spec.d
    k = spec.k % e
    return (
        tuple(pow(k, b, e) for b in range(d)),
        tuple(geometric_sum_S(k, b, e) for b in range(d)),
    )


def group_multiply(x: GroupElement, y: GroupElement, spec: GroupSpec) -> GroupElement:
    kpow, _ = _tables(spec)
    return GroupElement((x.a + kpow[x.b] * y.a) % spec.e, (x.b + y.b) % spec.d)


def group_inverse(x: GroupElement, spec: GroupSpec) -> GroupElement:
    kpow, _ = _tables(spec)
    b_inv = (-x.b) % spec.d
    return GroupElement((-kpow[b_inv] * x.a) % spec.e, b_inv)


def aut_apply(psi: AutElement, x: GroupElement, spec: GroupSpec) -> GroupElement:
    _, sk = _tables(spec)
    return GroupElement((x.a * psi.s + psi.c * spec.z * sk[x.b]) % spec.e, x.b)


def aut_compose(psi1: AutElement, psi2: AutElement, spec: GroupSpec) -> AutElement:
    return AutElement((psi1.c + psi1.s * psi2.c) % spec.g, (psi1.s * psi2.s) % spec.e)


def hol_identity(spec: GroupSpec) -> HolElement:
    return HolElement(0, 0, 0, 1 % spec.e)


def hol_multiply(x: HolElement, y: HolElement, spec: GroupSpec) -> HolElement:
    """[alpha, psi][alpha', psi'] = [alpha psi(alpha'), psi psi']."""
    kpow, sk = _tables(spec)
    e = spec.e
    ay = (y.a * x.s + x.c * spec.z * sk[y.b]) % e
    return HolElement(
        (x.a + kpow[x.b] * ay) % e,
        (x.b + y.b) % spec.d,
        (x.c + x.s * y.c) % spec.g,
        (x.s * y.s) % e,
    )


def hol_act(x: HolElement, pt: GroupElement, spec: GroupSpec) -> GroupElement:
    """Left action of Hol(G) on G: pt -> alpha psi(pt)."""
    kpow, sk = _tables(spec)
    ap = (pt.a * x.s + x.c * spec.z * sk[pt.b]) % spec.e
    return GroupElement((x.a + kpow[x.b] * ap) % spec.e, (x.b + pt.b) % spec.d)


def _require_b1(x: HolElement, spec: GroupSpec) -> None:
    if x.b % spec.d != 1 % spec.d:
        raise PreconditionB1(f"tau-exponent must be 1, got b={x.b}")


def hol_power(x: HolElement, j: int, spec: GroupSpec) -> HolElement:
    """Closed form for x^j when x = [sigma^a tau, theta^c phi_s]:

        x^j = [sigma^A(j) tau^j, theta^(c S(s,j)) phi_(s^j)],
        A(j) = a S(sk,j) + c z k T(k,s,j).
    """
    _require_b1(x, spec)
    if j < 0:
        raise ValueError(f"j must be >= 0, got {j}")
    e, k = spec.e, spec.k % spec.e
    a_j = (
        x.a * geometric_sum_S(x.s * k, j, e)
        + x.c * spec.z * k * double_sum_T(k, x.s, j, e)
    ) % e
    return HolElement(
        a_j,
        j % spec.d,
        (x.c * geometric_sum_S(x.s, j, spec.g)) % spec.g,
        pow(x.s % e, j, e),
    )


@lru_cache(maxsize=None)
def _regularity_context(spec: GroupSpec) -> tuple[tuple[int, ...], tuple[tuple[int, int], ...]]:
    # primes of z, and (q, k^-1 mod q) for primes of g
    z_primes = factor_squarefree(spec.z).primes
    g_primes = tuple(
        (q, pow(spec.k % q, -1, q)) for q in factor_squarefree(spec.g).primes
    )
    return z_primes, g_primes


def _passes(s: int, a: int, c: int, z: int, ctx) -> bool:
    z_primes, g_primes = ctx
    for q in z_primes:
        if s % q != 1 or a % q == 0:
            return False
    for q, kinv in g_primes:
        sq = s % q
        if sq == 1:
            if c % q == 0:
                return False
        elif sq == kinv:
            if ((s - 1) * a + c * z) % q == 0:
                return False
        else:
            return False
    return True


def is_regular_generator(x: HolElement, spec: GroupSpec) -> bool:
    """Whether [sigma^a tau, theta^c phi_s] generates a regular cyclic subgroup.

    True iff for every prime q | z: s = 1 (mod q) and q does not divide a,
    and for every prime q | g: either s = 1 and c != 0 (mod q), or
    s = k^-1 and (s-1)a + cz != 0 (mod q).
    """
    _require_b1(x, spec)
    return _passes(x.s, x.a, x.c, spec.z, _regularity_context(spec))


def _candidate_s(spec: GroupSpec) -> list[int]:
    # CRT-assembled candidates: s = 1 mod q for q | z, s in {1, k^-1} mod q
    # for q | g; together these cover every prime of e = z*g, so any s
    # passing the regularity conditions is one of the 2**omega(g) lifts.
    z_primes, g_primes = _regularity_context(spec)
    residues = [(1, q) for q in z_primes]
    options = [[(1, q), (kinv, q)] for q, kinv in g_primes]
    out = []
    for combo in product(*options):
        x, _ = crt_combine(residues + list(combo))
        out.append(x)
    return sorted(set(out))


def count_regular_cyclic_fast(spec: GroupSpec) -> OracleReport:
    """Census of regular-generator triples (s, a, c), reduced to subgroup and
    Hopf-Galois structure counts.

    Only the 2**omega(g) viable s-candidates are scanned (any s passing the
    per-prime conditions must reduce to 1 mod q for q | z and to 1 or k^-1
    mod q for q | g); a and c are scanned in full.  Each regular cyclic
    subgroup contains phi(e) generators with b = 1, and the structure count
    scales by phi(n)/|Aut(G)|.
    """
    ctx = _regularity_context(spec)
    z = spec.z
    census = 0
    for s in _candidate_s(spec):
        for a in range(spec.e):
            for c in range(spec.g):
                if _passes(s, a, c, z, ctx):
                    census += 1
    phi_e = euler_phi(factor_squarefree(spec.e))
    assert census % phi_e == 0, f"census {census} not divisible by phi(e)={phi_e}"
    subgroups = census // phi_e
    aut_order = spec.g * phi_e
    phi_n = euler_phi(factor_squarefree(spec.n))
    assert (phi_n * subgroups) % aut_order == 0
    return OracleReport(
        spec=spec,
        regular_cyclic_subgroup_count=subgroups,
        aut_order=aut_order,
        hgs_count_oracle=phi_n * subgroups // aut_order,
        generator_count=census,
    )


def regular_cyclic_subgroups(
    spec: GroupSpec, budget: int = DEFAULT_BUDGET
) -> list[list[tuple[int, int, int, int]]]:
    """All regular cyclic subgroups of Hol(G) of order n, by raw enumeration.

    Scans every one of the n * g * phi(e) holomorph elements (a, b, c, s),
    computes its powers by the holomorph multiplication law alone, and keeps
    the cyclic subgroups of order n whose orbit of the identity point covers
    all n group elements.  Each subgroup is returned as the ordered power
    list [x, x^2, ..., x^n = 1] of its first-found generator.  Raises
    BudgetExceeded when the holomorph is larger than the budget.
    """
    n, d, e, g = spec.n, spec.d, spec.e, spec.g
    phi_e = euler_phi(factor_squarefree(e))
    size = n * g * phi_e
    if size > budget:
        raise BudgetExceeded(size, budget)
    identity = (0, 0, 0, 1 % e)
    if n == 1:
        return [[identity]]
    k = spec.k % e
    z = spec.z
    kpow = [pow(k, b, e) for b in range(d)]
    sk = [geometric_sum_S(k, b, e) for b in range(d)]
    units = [s for s in range(e) if math.gcd(s, e) == 1] if e > 1 else [0]
    coprime_to_n = [i for i in range(1, n + 1) if math.gcd(i, n) == 1]

    seen: set[tuple[int, int, int, int]] = set()
    found: list[list[tuple[int, int, int, int]]] = []
    for a0 in range(e):
        for b0 in range(d):
            for c0 in range(g):
                for s0 in units:
                    x = (a0, b0, c0, s0)
                    if x == identity or x in seen:
                        continue
                    powers = [x]
                    y = x
                    while len(powers) < n and y != identity:
                        a1, b1, c1, s1 = y
                        ay = (a0 * s1 + c1 * z * sk[b0]) % e
                        y = (
                            (a1 + kpow[b1] * ay) % e,
                            (b1 + b0) % d,
                            (c1 + s1 * c0) % g,
                            (s1 * s0) % e,
                        )
                        powers.append(y)
                    if powers[-1] != identity or len(powers) != n:
                        continue  # order != n
                    orbit = {(p[0], p[1]) for p in powers}
                    if len(orbit) != n:
                        continue  # not regular
                    found.append(powers)
                    for i in coprime_to_n:
                        seen.add(powers[i - 1])
    return found


def count_regular_cyclic_perm(spec: GroupSpec, budget: int = DEFAULT_BUDGET) -> OracleReport:
    """Permutation-orbit oracle: same report as the fast census, computed
    with nothing beyond the holomorph multiplication law."""
    subs = regular_cyclic_subgroups(spec, budget)
    phi_e = euler_phi(factor_squarefree(spec.e))
    aut_order = spec.g * phi_e
    phi_n = euler_phi(factor_squarefree(spec.n))
    count = len(subs)
    assert (phi_n * count) % aut_order == 0
    b1 = 1 % spec.d
    generators = sum(
        1
        for powers in subs
        for i in range(1, spec.n + 1)
        if math.gcd(i, spec.n) == 1 and powers[i - 1][1] == b1
    )
    return OracleReport(
        spec=spec,
        regular_cyclic_subgroup_count=count,
        aut_order=aut_order,
        hgs_count_oracle=phi_n * count // aut_order,
        generator_count=generators,
    )


def brute_force_structure(
    spec: GroupSpec, budget: int = DEFAULT_BUDGET
) -> tuple[int, int, int]:
    """Centre, commutator and automorphism orders by exhaustive scans.

    The centre comes from an all-pairs commutation scan, the commutator
    subgroup from closing the set of all n^2 commutators under
    multiplication, and |Aut(G)| from scanning candidate generator images
    (sigma -> sigma^s for units s, tau -> sigma^a tau) and checking the
    defining relations by element arithmetic.
    """
    n, d, e = spec.n, spec.d, spec.e
    if n * n > budget:
        raise BudgetExceeded(n * n, budget)
    k = spec.k % e
    kpow = [pow(k, b, e) for b in range(d)]
    # element index: a*d + b
    mul = [
        [((a1 + kpow[b1] * a2) % e) * d + (b1 + b2) % d for a2 in range(e) for b2 in range(d)]
        for a1 in range(e)
        for b1 in range(d)
    ]
    inv = [row.index(0) for row in mul]

    centre = sum(
        1 for i in range(n) if all(mul[i][j] == mul[j][i] for j in range(n))
    )

    commutators = {mul[mul[i][j]][inv[mul[j][i]]] for i in range(n) for j in range(n)}
    closure = set(commutators) | {0}
    frontier = list(closure)
    while frontier:
        x = frontier.pop()
        for y in list(closure):
            for p in (mul[x][y], mul[y][x]):
                if p not in closure:
                    closure.add(p)
                    frontier.append(p)

    units = [s for s in range(e) if math.gcd(s, e) == 1] if e > 1 else [0]
    aut = 0
    b1 = 1 % d
    for s in units:
        sig = (s % e) * d
        sig_k = ((s * k) % e) * d
        for a in range(e):
            t = a * d + b1
            y = t
            for _ in range(d - 1):
                y = mul[y][t]
            if y != 0:  # tau-image must have order dividing d
                continue
            if mul[mul[t][sig]][inv[t]] != sig_k:  # conjugation relation
                continue
            aut += 1
    return centre, len(closure), aut
