import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from levelkit.algebra import (AlgebraStructure, BasisChange, IndexOutOfRange, ParseError,
                              annihilator_dim, apply_basis_change, direct_sum_zero, invariants,
                              is_associative, is_commutative, parse_structure,
                              serialize_structure, square_dim, zero_algebra)
from levelkit.catalog import (BadArity, DimensionOutOfRange, UnknownName, catalog,
                              catalog_entry, catalog_names)
from levelkit.exact import MPoly, determinant, mat_mul
from levelkit.gentype import gen_type

from oracles import product_of

SAMPLE = [F(1, 3), F(2, 5), F(3), F(2)]
SPECIAL = {"eta": [2], "eta+k": [2], "kB2t": [1, F(1, 3)], "kD2t": [0, F(1, 3), F(2, 5)]}


def sample_structures(n=4):
    out = []
    for name in catalog_names():
        entry = catalog_entry(name)
        ar = entry.arities[0]
        params = SPECIAL.get(name, SAMPLE[:ar])
        try:
            a = catalog(name, params, max(entry.min_dim, n))
        except DimensionOutOfRange:
            a = catalog(name, params)
        out.append((name, a))
    return out


def numeric_identities(a, rng, trials=12):
    """Identity flags by evaluation at random rational vectors."""
    n = a.dim
    c = a.constants
    mul = lambda x, y: product_of(c, x, y)
    flags = dict(commutative=True, anticommutative=True, associative=True,
                 left_alternative=True, jordan=True)
    for _ in range(trials):
        x, y, z = ([F(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(n)] for _ in range(3))
        xx = mul(x, x)
        flags["commutative"] &= mul(x, y) == mul(y, x)
        flags["anticommutative"] &= all(v == 0 for v in xx)
        flags["associative"] &= mul(mul(x, y), z) == mul(x, mul(y, z))
        flags["left_alternative"] &= mul(xx, y) == mul(x, mul(x, y))
        flags["jordan"] &= (mul(mul(xx, y), x) == mul(xx, mul(y, x))
                            and mul(x, y) == mul(y, x))
    return flags


def test_parse_examples():
    a3 = parse_structure("dim 2\ne1*e1 = e2")
    assert a3.const(1, 1, 2) == 1 and sum(1 for _ in a3.nonzero()) == 1
    assert parse_structure("dim 1").is_zero()
    n3 = parse_structure("dim 3\ne1*e2 = e3\ne2*e1 = -1 e3")
    assert n3 == catalog("n3", [], 3)


def test_parse_errors():
    with pytest.raises(ParseError) as exc:
        parse_structure("dim 2\ne1*e1 = e2\ne1 e2 = e1")
    assert exc.value.lineno == 3
    with pytest.raises(IndexOutOfRange):
        parse_structure("dim 2\ne1*e3 = e2")
    with pytest.raises(ParseError):
        parse_structure("e1*e1 = e2")


def test_serialize_roundtrip_catalog():
    for name, a in sample_structures():
        text = serialize_structure(a)
        assert parse_structure(text) == a, name
        assert serialize_structure(parse_structure(text)) == text


def test_serialize_format():
    a = catalog("D2", [F(1, 3), F(2, 5)])
    assert serialize_structure(a).splitlines()[0] == "dim 2"
    assert "1/3 e2" in serialize_structure(a) or "1/3" in serialize_structure(a)


def test_basis_change_examples():
    n3 = catalog("n3", [], 3)
    assert apply_basis_change(BasisChange([[1, 0, 0], [0, 1, 0], [0, 0, 1]]), n3) == n3
    swapped = apply_basis_change(BasisChange([[0, 1, 0], [1, 0, 0], [0, 0, 1]]), n3)
    assert swapped.const(2, 1, 3) == 1 and swapped.const(1, 2, 3) == -1
    a3 = catalog("A3")
    assert apply_basis_change(BasisChange([[F(1, 2), 0], [0, 1]]), a3).const(1, 1, 2) == 4
    assert apply_basis_change(BasisChange([[2, 0], [0, 1]]), a3).const(1, 1, 2) == F(1, 4)


def test_invariant_examples():
    z = zero_algebra(3)
    inv = invariants(z)
    assert inv.commutative and inv.anticommutative and inv.associative
    assert inv.left_alternative and inv.jordan and inv.annihilator_dim == 3
    eta = invariants(catalog("eta", [2]))
    assert eta.anticommutative and not eta.jordan and eta.square_dim == 1
    e4 = catalog("E4")
    assert not is_commutative(e4)
    # (e1e2)e1 = e1 differs from e1(e2e1) = 0
    assert e4.product(e4.product([1, 0], [0, 1]), [1, 0]) == [1, 0]
    assert e4.product([1, 0], e4.product([0, 1], [1, 0])) == [0, 0]
    assert not is_associative(e4)


def test_catalog_examples():
    p = catalog("p_minus", [], 4)
    for i in range(2, 5):
        assert p.const(1, i, i) == 1 and p.const(i, 1, i) == -1
    alpha = F(2, 7)
    nu = catalog("nu", [alpha], 4)
    assert nu.const(1, 1, 1) == 1
    assert all(nu.const(1, i, i) == alpha and nu.const(i, 1, i) == 1 - alpha for i in (2, 3, 4))
    g = catalog("G", [], 3)
    assert sorted(g.nonzero()) == [(0, 0, 1, 1), (1, 1, 2, 1)]


def test_catalog_errors():
    with pytest.raises(UnknownName):
        catalog("nope")
    with pytest.raises(BadArity):
        catalog("nu", [])
    with pytest.raises(DimensionOutOfRange):
        catalog("eta", [2], 4)


def test_symbolic_identities_match_numeric_evaluation():
    rng = random.Random(7)
    for name, a in sample_structures():
        if a.dim > 6:
            continue
        inv = invariants(a)
        num = numeric_identities(a, rng)
        for key, value in num.items():
            if getattr(inv, key):
                assert value, (name, key)
        # a symbolic failure must be witnessed at some rational point
        failing = [key for key in num if not getattr(inv, key)]
        if any(num[key] for key in failing):
            wide = numeric_identities(a, rng, 40)
            for key in failing:
                assert not wide[key], (name, key)


def generic_square_factor(a):
    """(f, ok): x² = f(x)·x with f linear over the generic point."""
    n = a.dim
    xs = MPoly.gens(n)
    sq = [sum((xs[i] * xs[j] * MPoly.const(n, a.constants[i][j][k])
               for i in range(n) for j in range(n)), MPoly.zero(n)) for k in range(n)]
    # f(x) is read off from the unit vectors
    f = []
    for i in range(n):
        e = [F(int(j == i)) for j in range(n)]
        v = a.product(e, e)
        f.append(v[i])
        if any(v[k] for k in range(n) if k != i):
            return None, False
    fx = sum((xs[i] * MPoly.const(n, f[i]) for i in range(n)), MPoly.zero(n))
    ok = all(sq[k] == fx * xs[k] for k in range(n))
    return f, ok


def test_generation_type_one_square_map_vanishes_on_a_hyperplane():
    coordinate = 0
    for name, a in sample_structures():
        if gen_type(a) != 1:
            continue
        f, ok = generic_square_factor(a)
        assert ok, name
        if all(x == 0 for x in f[1:]):
            coordinate += 1
            n = a.dim
            for i in range(1, n):
                for j in range(1, n):
                    assert all(a.constants[i][j][k] + a.constants[j][i][k] == 0
                               for k in range(n)), name
    assert coordinate >= 10


def test_direct_sum_invariants():
    for name, a in sample_structures(3):
        b = direct_sum_zero(a, 2)
        ia, ib = invariants(a), invariants(b)
        assert ib.annihilator_dim == ia.annihilator_dim + 2, name
        for key in ("commutative", "anticommutative", "associative", "left_alternative",
                    "jordan", "square_dim"):
            assert getattr(ia, key) == getattr(ib, key), (name, key)


def random_invertible(rng, n):
    while True:
        g = [[F(rng.randint(-2, 2)) for _ in range(n)] for _ in range(n)]
        if determinant(g):
            return g


SMALL = [a for _, a in sample_structures(3) if a.dim <= 4]


@settings(max_examples=25, deadline=None)
@given(st.integers(0, len(SMALL) - 1), st.integers(0, 10 ** 6))
def test_basis_change_is_group_action(idx, seed):
    rng = random.Random(seed)
    a = SMALL[idx]
    g, h = random_invertible(rng, a.dim), random_invertible(rng, a.dim)
    lhs = apply_basis_change(mat_mul(g, h), a)
    rhs = apply_basis_change(g, apply_basis_change(h, a))
    assert lhs == rhs


@settings(max_examples=25, deadline=None)
@given(st.integers(0, len(SMALL) - 1), st.integers(0, 10 ** 6))
def test_invariants_are_basis_free(idx, seed):
    rng = random.Random(seed)
    a = SMALL[idx]
    b = apply_basis_change(random_invertible(rng, a.dim), a)
    assert invariants(a) == invariants(b)
    assert annihilator_dim(a) == annihilator_dim(b) and square_dim(a) == square_dim(b)


def test_structure_equality_and_validation():
    a = AlgebraStructure.from_products(2, {(1, 1): {2: 1}})
    assert a == catalog("A3")
    assert a != zero_algebra(2)
