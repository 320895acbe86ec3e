import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hopfgalois.numutil import (
    MAX_N,
    FactorizationTriple,
    NonCoprimeModuli,
    NotAUnit,
    NotSquarefree,
    SquarefreeFactorization,
    TooLarge,
    crt_combine,
    divisors,
    euler_phi,
    factor_squarefree,
    mobius,
    omega,
    ord_mod,
    smallest_primitive_root,
    triples_of,
    v_count,
)

from conftest import squarefree_up_to

SMALL_PRIMES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def prod(xs):
    out = 1
    for x in xs:
        out *= x
    return out


# strategy: a squarefree integer built from an explicit prime subset
# (sizes capped so products stay below the supported 10**12 range)
def squarefree_ints(primes=SMALL_PRIMES, max_size=8):
    return st.lists(st.sampled_from(primes), unique=True, max_size=max_size).map(
        lambda ps: prod(sorted(ps))
    )


class TestFactorSquarefree:
    def test_one(self):
        assert factor_squarefree(1) == SquarefreeFactorization(1, ())

    def test_42(self):
        assert factor_squarefree(42) == SquarefreeFactorization(42, (2, 3, 7))

    def test_not_squarefree(self):
        with pytest.raises(NotSquarefree) as err:
            factor_squarefree(12)
        assert err.value.n == 12 and err.value.p == 2

    def test_prime(self):
        assert factor_squarefree(999999999989).primes == (999999999989,)

    def test_too_large(self):
        with pytest.raises(TooLarge):
            factor_squarefree(MAX_N + 1)

    def test_nonpositive(self):
        with pytest.raises(ValueError):
            factor_squarefree(0)

    @given(squarefree_ints())
    def test_roundtrip(self, n):
        f = factor_squarefree(n)
        assert prod(f.primes) == n
        assert list(f.primes) == sorted(set(f.primes))


class TestMultiplicativeFunctions:
    def test_phi_examples(self):
        assert euler_phi(factor_squarefree(1)) == 1
        assert euler_phi(factor_squarefree(42)) == 12
        assert euler_phi(factor_squarefree(7)) == 6

    def test_mobius_examples(self):
        assert mobius(factor_squarefree(1)) == 1
        assert mobius(factor_squarefree(2)) == -1
        assert mobius(factor_squarefree(6)) == 1

    def test_omega_examples(self):
        assert omega(factor_squarefree(1)) == 0
        assert omega(factor_squarefree(15)) == 2
        assert omega(factor_squarefree(1806)) == 4

    @given(
        squarefree_ints(SMALL_PRIMES[:6]),
        squarefree_ints(SMALL_PRIMES[6:], max_size=5),
    )
    def test_multiplicative(self, r, s):
        # r, s coprime by construction (disjoint prime pools)
        for func in (euler_phi, mobius, lambda f: (-2) ** omega(f)):
            assert func(factor_squarefree(r * s)) == func(
                factor_squarefree(r)
            ) * func(factor_squarefree(s))

    def test_divisor_sum_identity(self):
        # sum over t | m of (-2)**omega(t) equals mu(m) for squarefree m
        for m in squarefree_up_to(2000):
            f = factor_squarefree(m)
            total = sum(
                (-2) ** omega(factor_squarefree(t)) for t in divisors(f)
            )
            assert total == mobius(f), m


class TestOrdMod:
    def test_examples(self):
        assert ord_mod(1, 15) == 1
        assert ord_mod(2, 7) == 3
        assert ord_mod(14, 15) == 2

    def test_not_a_unit(self):
        with pytest.raises(NotAUnit):
            ord_mod(6, 15)

    def test_against_brute_force(self):
        for e in squarefree_up_to(120):
            for k in range(1, e + 1):
                if math.gcd(k, e) != 1:
                    continue
                j, x = 1, k % e
                while x != 1 % e:
                    x = (x * k) % e
                    j += 1
                assert ord_mod(k, e) == j, (k, e)

    def test_divides_phi(self):
        for e in squarefree_up_to(1000)[::7]:
            phi = euler_phi(factor_squarefree(e))
            for k in range(1, min(e, 50) + 1):
                if math.gcd(k, e) == 1:
                    assert phi % ord_mod(k, e) == 0


class TestVCount:
    def test_examples(self):
        assert v_count(3, factor_squarefree(1)) == 0
        assert v_count(2, factor_squarefree(21)) == 2
        assert v_count(3, factor_squarefree(7)) == 1


class TestCrtCombine:
    def test_examples(self):
        assert crt_combine([(0, 1)]) == (0, 1)
        assert crt_combine([(1, 3), (2, 5)]) == (7, 15)
        assert crt_combine([(1, 2), (1, 3), (1, 7)]) == (1, 42)

    def test_empty(self):
        assert crt_combine([]) == (0, 1)

    def test_non_coprime(self):
        with pytest.raises(NonCoprimeModuli):
            crt_combine([(1, 6), (2, 4)])

    @given(
        st.lists(
            st.sampled_from(SMALL_PRIMES),
            unique=True,
            min_size=1,
            max_size=5,
        ).flatmap(
            lambda qs: st.tuples(
                st.just(qs), st.tuples(*(st.integers(0, q - 1) for q in qs))
            )
        )
    )
    def test_roundtrip(self, case):
        qs, rs = case
        x, m = crt_combine(list(zip(rs, qs)))
        assert m == prod(qs)
        assert 0 <= x < m
        for r, q in zip(rs, qs):
            assert x % q == r


class TestTriples:
    def test_trivial(self):
        assert triples_of(factor_squarefree(1)) == [FactorizationTriple(1, 1, 1)]

    def test_six(self):
        ts = triples_of(factor_squarefree(6))
        assert len(ts) == 9
        assert FactorizationTriple(2, 3, 1) in ts
        assert FactorizationTriple(1, 6, 1) in ts

    def test_thirty(self):
        assert len(triples_of(factor_squarefree(30))) == 27

    @given(squarefree_ints())
    def test_properties(self, n):
        f = factor_squarefree(n)
        ts = triples_of(f)
        assert len(ts) == 3 ** omega(f)
        assert len(set(ts)) == len(ts)
        assert all(t.d * t.g * t.z == n for t in ts)
        assert [(t.d, t.g) for t in ts] == sorted((t.d, t.g) for t in ts)


class TestDivisors:
    def test_divisors(self):
        assert divisors(factor_squarefree(30)) == [1, 2, 3, 5, 6, 10, 15, 30]
        assert divisors(factor_squarefree(1)) == [1]


class TestPrimitiveRoot:
    def test_known_values(self):
        assert smallest_primitive_root(3) == 2
        assert smallest_primitive_root(7) == 3
        assert smallest_primitive_root(43) == 3
        assert smallest_primitive_root(191) == 19

    def test_generates(self):
        for q in (3, 5, 7, 11, 13, 43, 101):
            r = smallest_primitive_root(q)
            assert len({pow(r, i, q) for i in range(q - 1)}) == q - 1
