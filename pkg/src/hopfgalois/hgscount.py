"""Hopf-Galois structure counts on cyclic extensions of squarefree degree.

A cyclic extension of squarefree degree n admits exactly 2**omega(g) * phi(d)
Hopf-Galois structures of type G for each group G of order n, where g = |G'|,
z = |Z(G)| and d = n/(g*z).  The total over all types collapses to a single
sum over ordered triples d*g*z = n:

    sum 2**omega(g) * mu(z) * prod over p | d of (p**v(p,g) - 1).

Both routes are computed here and cross-asserted; the example tables for two,
three and four prime factors are generated from the general machinery (their
closed forms live in the test suite as oracles).
"""

from __future__ import annotations

from dataclasses import dataclass

from .grouptypes import GroupSpec, enumerate_types, factorization_of_divisor, types_per_triple
from .numutil import (
    FactorizationTriple,
    SquarefreeFactorization,
    euler_phi,
    factor_squarefree,
    mobius,
    omega,
    triples_of,
    v_count,
)

__all__ = [
    "TypeReport",
    "FormulaTerm",
    "CountBreakdown",
    "CaseRow",
    "ThreePrimeTable",
    "FourPrimeRow",
    "FourPrimeTable",
    "ConsistencyFailure",
    "NotDistinctPrimes",
    "CongruenceConditionUnmet",
    "hgs_per_type",
    "total_formula",
    "breakdown",
    "three_prime_table",
    "four_prime_table",
]


class ConsistencyFailure(RuntimeError):
    """Per-type sum and triple-sum formula disagree (implementation bug)."""


class NotDistinctPrimes(ValueError):
    """Table input primes are not distinct ascending primes."""


class CongruenceConditionUnmet(ValueError):
    """A required congruence p_j = 1 (mod p_i) fails."""

    def __init__(self, i: int, j: int, pi: int, pj: int):
        self.pair = (i, j)
        super().__init__(f"p{j} = {pj} is not 1 mod p{i} = {pi}")


@dataclass(frozen=True)
class TypeReport:
    """A group type with its Hopf-Galois structure count."""

    spec: GroupSpec
    hgs_count: int
    triple: FactorizationTriple


@dataclass(frozen=True)
class FormulaTerm:
    """One term of the triple-sum formula; zero terms are kept, flagged."""

    triple: FactorizationTriple
    value: int

    @property
    def is_zero(self) -> bool:
        return self.value == 0


@dataclass(frozen=True)
class CountBreakdown:
    n: int
    types: tuple[TypeReport, ...]
    total_by_sum: int
    total_by_formula: int
    formula_terms: tuple[FormulaTerm, ...]


def hgs_per_type(spec: GroupSpec) -> int:
    """Hopf-Galois structures of type G on a cyclic extension: 2**omega(g)*phi(d)."""
    gfac = factor_squarefree(spec.g)
    dfac = factor_squarefree(spec.d)
    return 2 ** omega(gfac) * euler_phi(dfac)


def total_formula(f: SquarefreeFactorization) -> tuple[int, list[FormulaTerm]]:
    """Total count via the sum over ordered triples d*g*z = n.

    Returns (total, terms); terms are listed for every triple in the
    deterministic triples_of order, including zero terms.
    """
    terms = []
    total = 0
    for t in triples_of(f):
        gfac = factorization_of_divisor(f, t.g)
        zfac = factorization_of_divisor(f, t.z)
        value = 2 ** omega(gfac) * mobius(zfac)
        for p in factorization_of_divisor(f, t.d).primes:
            value *= p ** v_count(p, gfac) - 1
            if value == 0:
                break
        terms.append(FormulaTerm(t, value))
        total += value
    return total, terms


def breakdown(f: SquarefreeFactorization) -> CountBreakdown:
    """Per-type table plus both totals, with the consistency assertion checked."""
    types = tuple(
        TypeReport(spec, hgs_per_type(spec), spec.triple) for spec in enumerate_types(f)
    )
    total_by_sum = sum(t.hgs_count for t in types)
    total_by_formula, terms = total_formula(f)
    if total_by_sum != total_by_formula:
        raise ConsistencyFailure(
            f"n={f.n}: sum over types gives {total_by_sum}, "
            f"triple-sum formula gives {total_by_formula}"
        )
    return CountBreakdown(f.n, types, total_by_sum, total_by_formula, tuple(terms))


@dataclass(frozen=True)
class CaseRow:
    """A row of the three-prime table: one factorization case that applies."""

    case: int
    d: int
    g: int
    z: int
    condition: str
    group_count: int
    hgs_per_group: int

    @property
    def subtotal(self) -> int:
        return self.group_count * self.hgs_per_group


@dataclass(frozen=True)
class ThreePrimeTable:
    primes: tuple[int, int, int]
    conditions: tuple[bool, bool, bool]  # p2|(p3-1), p1|(p3-1), p1|(p2-1)
    rows: tuple[CaseRow, ...]
    total_groups: int
    total_hgs: int

    @property
    def condition_key(self) -> str:
        return "-".join("yes" if c else "no" for c in self.conditions)


def _check_distinct_primes(primes: tuple[int, ...]) -> SquarefreeFactorization:
    n = 1
    for p in primes:
        n *= p
    f = factor_squarefree(n)
    if f.primes != primes:
        raise NotDistinctPrimes(f"{primes} must be distinct primes in ascending order")
    return f


def three_prime_table(p1: int, p2: int, p3: int) -> ThreePrimeTable:
    """Applicable factorization cases for n = p1*p2*p3 with counts and total.

    The six possible cases are fixed; which ones apply is decided by the
    congruence conditions between the primes.  All counts come from the
    general enumeration, not from closed forms.
    """
    f = _check_distinct_primes((p1, p2, p3))
    n = f.n
    report = breakdown(f)
    by_triple: dict[FactorizationTriple, list[TypeReport]] = {}
    for tr in report.types:
        by_triple.setdefault(tr.triple, []).append(tr)

    cases = [
        (1, FactorizationTriple(1, 1, n), "always"),
        (2, FactorizationTriple(p1, p2, p3), f"{p2} = 1 (mod {p1})"),
        (3, FactorizationTriple(p1, p3, p2), f"{p3} = 1 (mod {p1})"),
        (4, FactorizationTriple(p1, p2 * p3, 1), f"{p2}, {p3} = 1 (mod {p1})"),
        (5, FactorizationTriple(p2, p3, p1), f"{p3} = 1 (mod {p2})"),
        (6, FactorizationTriple(p1 * p2, p3, 1), f"{p3} = 1 (mod {p1 * p2})"),
    ]
    rows = []
    seen = set()
    for case, triple, condition in cases:
        reports = by_triple.get(triple, [])
        if not reports:
            continue
        seen.add(triple)
        counts = {tr.hgs_count for tr in reports}
        assert len(counts) == 1  # count depends only on (d, g)
        rows.append(
            CaseRow(case, triple.d, triple.g, triple.z, condition,
                    len(reports), counts.pop())
        )
    # the six cases are exhaustive for three primes
    assert seen == set(by_triple), f"unexpected factorization cases: {set(by_triple) - seen}"
    return ThreePrimeTable(
        primes=(p1, p2, p3),
        conditions=((p3 - 1) % p2 == 0, (p3 - 1) % p1 == 0, (p2 - 1) % p1 == 0),
        rows=tuple(rows),
        total_groups=len(report.types),
        total_hgs=report.total_by_sum,
    )


@dataclass(frozen=True)
class FourPrimeRow:
    d: int
    g: int
    z: int
    group_count: int
    hgs_per_group: int

    @property
    def subtotal(self) -> int:
        return self.group_count * self.hgs_per_group


@dataclass(frozen=True)
class FourPrimeTable:
    primes: tuple[int, int, int, int]
    rows: tuple[FourPrimeRow, ...]
    type_total: int
    total_hgs: int


def four_prime_table(p1: int, p2: int, p3: int, p4: int) -> FourPrimeTable:
    """Factorization rows for n = p1*p2*p3*p4 under the full congruence tower.

    Requires p_j = 1 (mod p_i) for all i < j.  Rows are ordered by
    (omega(d), primes of d, omega(g), primes of g), grouping all
    factorizations that admit at least one group.
    """
    primes = (p1, p2, p3, p4)
    f = _check_distinct_primes(primes)
    for i in range(4):
        for j in range(i + 1, 4):
            if (primes[j] - 1) % primes[i] != 0:
                raise CongruenceConditionUnmet(i + 1, j + 1, primes[i], primes[j])
    report = breakdown(f)
    by_triple: dict[FactorizationTriple, list[TypeReport]] = {}
    for tr in report.types:
        by_triple.setdefault(tr.triple, []).append(tr)

    def graded_key(m: int) -> tuple:
        idx = tuple(i for i, p in enumerate(primes) if m % p == 0)
        return (len(idx), idx)

    rows = []
    for triple in sorted(by_triple, key=lambda t: (graded_key(t.d), graded_key(t.g))):
        reports = by_triple[triple]
        counts = {tr.hgs_count for tr in reports}
        assert len(counts) == 1
        rows.append(
            FourPrimeRow(triple.d, triple.g, triple.z, len(reports), counts.pop())
        )
    return FourPrimeTable(
        primes=primes,
        rows=tuple(rows),
        type_total=len(report.types),
        total_hgs=report.total_by_sum,
    )
