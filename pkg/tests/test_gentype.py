import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from levelkit.algebra import apply_basis_change, direct_sum_zero, zero_algebra
from levelkit.catalog import catalog
from levelkit.degeneration import DegenerationWitness, verify_witness
from levelkit.exact import MPoly, determinant
from levelkit.gentype import (NotMaximalGenerator, catalan, degree_set, f_mu, gen_type,
                              standard_contraction, subalgebra_dim_at, word, word_maps)

from oracles import closure_dim, span_dim

A, B = F(1, 3), F(2, 5)


def unit(n, i):
    return [F(int(j == i)) for j in range(n)]


def test_catalan_recursion():
    for i in range(1, 12):
        assert catalan(i) == sum(catalan(j) * catalan(i - j - 1) for j in range(i))
    assert [catalan(i) for i in range(6)] == [1, 1, 2, 5, 14, 42]


def test_word_sets_and_pairs():
    assert list(degree_set(1)) == [1]
    assert list(degree_set(2)) == [2]
    assert list(degree_set(3)) == [3, 4]
    assert (word(2).left, word(2).right) == (1, 1)
    assert (word(3).left, word(3).right) == (1, 2)
    assert (word(4).left, word(4).right) == (2, 1)


def test_word_maps_monotone_and_bijective():
    table = word_maps(200)
    for w in table[1:]:
        assert table[w.left - 1].degree + table[w.right - 1].degree == w.degree
        assert w.left < w.m and w.right < w.m
    by_degree = {}
    for w in table:
        by_degree.setdefault(w.degree, []).append(w)
    for d, ws in by_degree.items():
        if d < 2:
            continue
        pairs = [(w.left, w.right) for w in ws]
        assert len(set(pairs)) == len(pairs)
        for u in ws:
            for v in ws:
                if u.left <= v.left and u.right <= v.right:
                    assert u.m <= v.m
    # complete degrees get exactly all pairs
    for d in range(2, 7):
        expected = sum(len(degree_set(j)) * len(degree_set(d - j)) for j in range(1, d))
        assert len(by_degree[d]) == expected == catalan(d - 1)


def test_f_mu_examples():
    a3 = catalog("A3")
    x1, x2 = MPoly.gens(2)
    assert tuple(f_mu(a3, 1)) == (x1, x2)
    assert tuple(f_mu(a3, 2)) == (MPoly.zero(2), x1 * x1)
    z = zero_algebra(3)
    for i in (2, 3, 4, 7):
        assert all(p.is_zero() for p in f_mu(z, i))


def test_gen_type_examples():
    for n in (2, 3, 4):
        assert gen_type(catalog("A3+k", [], n)) == 2
    assert gen_type(catalog("eta", [2])) == 1
    assert gen_type(catalog("G_ab", [1, 1])) == 3
    assert gen_type(zero_algebra(4)) == 1
    assert gen_type(catalog("G")) == 3
    for ab in ((A, B), (F(2), F(-1)), (0, 1)):
        assert gen_type(catalog("G_ab", list(ab))) == 3


def test_gen_type_matches_sampled_closure():
    rng = random.Random(3)
    for name, params, n in [("A3+k", [], 3), ("G", [], 3), ("eta", [2], None), ("D2", [A, B], None),
                            ("F", [A, B], None), ("nu", [A], 3), ("kE4", [], 4),
                            ("k2A3", [A, B], None), ("T0_3", [], None)]:
        a = catalog(name, params, n)
        best = 0
        for _ in range(6):
            x = [F(rng.randint(-6, 6), rng.randint(1, 3)) for _ in range(a.dim)]
            best = max(best, closure_dim(a.constants, x))
        assert best == gen_type(a), name


def test_span_of_words_equals_closure():
    rng = random.Random(11)
    for name, params in [("A3+k", []), ("G", []), ("F", [A, B]), ("G_ab", [A, B]), ("n3", []),
                         ("nu", [A])]:
        a = catalog(name, params, 3)
        for _ in range(3):
            x = [F(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(3)]
            words = [[p.evaluate(x) for p in f_mu(a, i)] for i in range(1, 13)]
            assert span_dim(words) == closure_dim(a.constants, x) == subalgebra_dim_at(a, x)


def test_standard_contraction_examples():
    g = catalog("G")
    basis, limit = standard_contraction(g, unit(3, 0))
    assert limit == g
    nu = catalog("nu", [A], 3)
    _, limit = standard_contraction(nu, unit(3, 0))
    assert limit.is_zero()
    a3k = catalog("A3+k", [], 3)
    _, limit = standard_contraction(a3k, unit(3, 0))
    assert limit == a3k
    with pytest.raises(NotMaximalGenerator):
        standard_contraction(catalog("D2", [A, B]), unit(2, 0))


def test_standard_contraction_witnesses_verify():
    cases = [(catalog("D2", [A, B]), [1, 1]), (catalog("kB2", [F(3, 2), A], 4), [1, 1, 1, 1]),
             (catalog("k2A3", [A, B]), [1, 0, 0, 0]), (catalog("G_ab", [A, B]), [1, 0, 0]),
             (direct_sum_zero(catalog("G"), 1), [1, 0, 0, 0])]
    for a, x in cases:
        basis, limit = standard_contraction(a, [F(v) for v in x])
        assert verify_witness(DegenerationWitness(a, basis, limit))
        m = gen_type(a)
        assert gen_type(limit) == m


def random_invertible(rng, n):
    while True:
        g = [[F(rng.randint(-2, 2)) for _ in range(n)] for _ in range(n)]
        if determinant(g):
            return g


POOL = [catalog("A3+k", [], 3), catalog("G"), catalog("F", [A, B]), catalog("nu", [A], 3),
        catalog("E4"), catalog("kA2", [F(1)], 3), catalog("n3", [], 4)]


@settings(max_examples=25, deadline=None)
@given(st.integers(0, len(POOL) - 1), st.integers(0, 10 ** 6))
def test_gen_type_is_basis_free(idx, seed):
    a = POOL[idx]
    g = random_invertible(random.Random(seed), a.dim)
    assert gen_type(apply_basis_change(g, a)) == gen_type(a)
