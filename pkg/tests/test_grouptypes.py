import math

import pytest

from hopfgalois.grouptypes import (
    GroupSpec,
    InvalidSpec,
    centre_commutator,
    enumerate_types,
    holder_count,
    make_spec,
    types_per_triple,
)
from hopfgalois.numutil import (
    FactorizationTriple,
    divisors,
    factor_squarefree,
    ord_mod,
    triples_of,
)

from conftest import squarefree_up_to


def brute_force_classes(n):
    """Isomorphism classes by raw enumeration: for each divisor pair d*e = n,
    all k in U(e) with ord_e(k) = d via repeated multiplication, partitioned
    by equality of the generated subgroup <k> of U(e)."""
    f = factor_squarefree(n)
    classes = {}
    for d in divisors(f):
        e = n // d
        buckets = {}
        for k in range(1, e + 1) if e > 1 else [1]:
            if math.gcd(k, e) != 1:
                continue
            order, x = 1, k % e
            while x != 1 % e:
                x = (x * k) % e
                order += 1
            if order != d:
                continue
            subgroup = frozenset(pow(k, i, e) for i in range(d))
            buckets.setdefault(subgroup, set()).add(k % e if e > 1 else 1)
        classes[(d, e)] = buckets
    return classes


class TestCentreCommutator:
    def test_abelian(self):
        assert centre_commutator(1, 42, 1) == (42, 1)

    def test_s3(self):
        assert centre_commutator(2, 3, 2) == (1, 3)

    def test_dihedral_30(self):
        assert centre_commutator(2, 15, 14) == (1, 15)

    def test_invalid_order(self):
        with pytest.raises(InvalidSpec):
            centre_commutator(2, 7, 2)  # ord_7(2) = 3, not 2

    def test_invalid_unit(self):
        with pytest.raises(InvalidSpec):
            centre_commutator(2, 15, 5)


class TestEnumerateTypes:
    def test_n15_cyclic_only(self):
        # 3 does not divide phi(5) = 4 and 5 does not divide phi(3) = 2
        assert enumerate_types(factor_squarefree(15)) == [
            GroupSpec(n=15, d=1, e=15, k=1, z=15, g=1)
        ]

    def test_n6(self):
        assert enumerate_types(factor_squarefree(6)) == [
            GroupSpec(n=6, d=1, e=6, k=1, z=6, g=1),
            GroupSpec(n=6, d=2, e=3, k=2, z=1, g=3),
        ]

    def test_n42(self):
        assert enumerate_types(factor_squarefree(42)) == [
            GroupSpec(n=42, d=1, e=42, k=1, z=42, g=1),
            GroupSpec(n=42, d=2, e=21, k=8, z=7, g=3),
            GroupSpec(n=42, d=2, e=21, k=13, z=3, g=7),
            GroupSpec(n=42, d=2, e=21, k=20, z=1, g=21),
            GroupSpec(n=42, d=3, e=14, k=9, z=2, g=7),
            GroupSpec(n=42, d=6, e=7, k=5, z=1, g=7),
        ]

    def test_trivial_group(self):
        assert enumerate_types(factor_squarefree(1)) == [
            GroupSpec(n=1, d=1, e=1, k=1, z=1, g=1)
        ]

    def test_emitted_invariants(self):
        for spec in (s for n in squarefree_up_to(200)
                     for s in enumerate_types(factor_squarefree(n))):
            assert math.gcd(spec.d, spec.e) == 1
            assert spec.d * spec.e == spec.n
            assert ord_mod(spec.k, spec.e) == spec.d
            assert spec.z * spec.g == spec.e
            assert spec.z == (math.gcd(spec.e, spec.k - 1) if spec.e > 1 else 1)

    def test_deterministic_order(self):
        for n in squarefree_up_to(200):
            specs = enumerate_types(factor_squarefree(n))
            keys = [(s.d, -s.z, s.k) for s in specs]
            assert keys == sorted(keys)
            assert len(set(keys)) == len(keys)

    def test_one_representative_per_class(self):
        # independent dedup oracle over raw subgroup enumeration in U(e)
        for n in squarefree_up_to(200):
            specs = enumerate_types(factor_squarefree(n))
            classes = brute_force_classes(n)
            by_pair = {}
            for s in specs:
                by_pair.setdefault((s.d, s.e), []).append(s)
            for (d, e), buckets in classes.items():
                emitted = by_pair.get((d, e), [])
                assert len(emitted) == len(buckets), (n, d, e)
                hit = set()
                for s in emitted:
                    for subgroup, ks in buckets.items():
                        if (s.k % e if e > 1 else 1) in ks:
                            assert subgroup not in hit
                            hit.add(subgroup)
                            break
                    else:
                        raise AssertionError(f"k={s.k} not found for n={n}")
                assert len(hit) == len(buckets)


class TestHolderCount:
    def test_examples(self):
        assert holder_count(factor_squarefree(1)) == 1
        assert holder_count(factor_squarefree(6)) == 2
        assert holder_count(factor_squarefree(15)) == 1
        assert holder_count(factor_squarefree(42)) == 6

    def test_matches_enumeration(self):
        for n in squarefree_up_to(200):
            f = factor_squarefree(n)
            assert holder_count(f) == len(enumerate_types(f)), n

    def test_1806(self):
        # 30 isomorphism types, cross-checked below by raw enumeration
        f = factor_squarefree(1806)
        assert holder_count(f) == 30
        assert len(enumerate_types(f)) == 30

    def test_1806_brute_force(self):
        classes = brute_force_classes(1806)
        assert sum(len(b) for b in classes.values()) == 30
        # the subgroup census per divisor pair, raw
        assert len(classes[(14, 129)]) == 3
        assert len(classes[(6, 301)]) == 12
        assert len(classes[(2, 903)]) == 7


class TestTypesPerTriple:
    def test_cyclic(self):
        f = factor_squarefree(105)
        assert types_per_triple(f, FactorizationTriple(1, 1, 105)) == 1

    def test_42(self):
        f = factor_squarefree(42)
        assert types_per_triple(f, FactorizationTriple(2, 21, 1)) == 1

    def test_three_primes_case4(self):
        # d = p1, g = p2*p3, z = 1 gives p1 - 1 types when both congruences hold
        for p1, p2, p3 in ((2, 3, 7), (3, 7, 13), (5, 11, 31)):
            f = factor_squarefree(p1 * p2 * p3)
            assert types_per_triple(f, FactorizationTriple(p1, p2 * p3, 1)) == p1 - 1

    def test_bad_triple(self):
        with pytest.raises(ValueError):
            types_per_triple(factor_squarefree(6), FactorizationTriple(2, 2, 2))

    def test_sums_to_holder(self):
        for n in squarefree_up_to(200):
            f = factor_squarefree(n)
            total = sum(types_per_triple(f, t) for t in triples_of(f))
            assert total == holder_count(f), n

    def test_matches_enumeration_per_triple(self):
        for n in squarefree_up_to(200):
            f = factor_squarefree(n)
            specs = enumerate_types(f)
            for t in triples_of(f):
                expected = sum(1 for s in specs if s.triple == t)
                assert types_per_triple(f, t) == expected, (n, t)

    def test_1806_missing_row_analogue(self):
        # the factorization (p1*p3, p2*p4, 1) admits exactly p1 types
        f = factor_squarefree(1806)
        assert types_per_triple(f, FactorizationTriple(14, 129, 1)) == 2


class TestMakeSpec:
    def test_roundtrip(self):
        spec = make_spec(2, 3, 2)
        assert spec == GroupSpec(n=6, d=2, e=3, k=2, z=1, g=3)

    def test_rejects_bad_k(self):
        with pytest.raises(InvalidSpec):
            make_spec(2, 7, 3)  # ord_7(3) = 6
