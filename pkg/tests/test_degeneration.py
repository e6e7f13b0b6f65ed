import random
from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from levelkit.algebra import AlgebraStructure, apply_basis_change, structure_in_basis
from levelkit.catalog import catalog
from levelkit.degeneration import (
    ClosedSet, DegenerationWitness, NotASubalgebra, ParametrizedBasis, PoleAtZero,
    SHIPPED_RSETS, SingularBasis, contract_along, iw_contraction, parse_witness,
    rset_contains, rset_level1, rset_lt_invariance, serialize_witness, verify_witness,
    witness_library,
)
from levelkit.exact import LaurentPoly, mat_inverse, mat_transpose

from oracles import product_of

A, B = F(1, 3), F(2, 5)


def lp(*terms):
    """LaurentPoly from (coeff, power) pairs."""
    out = LaurentPoly()
    for c, p in terms:
        out = out + LaurentPoly.monomial(F(c), p)
    return out


def basis(rows):
    n = len(rows)
    return ParametrizedBasis([[lp(*row.get(j, ())) for j in range(n)] for row in rows])


def g_witness(target=None):
    b = basis([{0: [(1, 1)], 1: [(1, 1)]}, {1: [(1, 2)], 2: [(1, 2)]}, {2: [(1, 3)]}])
    return DegenerationWitness(catalog("G", [], 3), b, target or catalog("G_ab", [1, 1], 3))


def identity(n):
    return ParametrizedBasis.constant([[int(i == j) for j in range(n)] for i in range(n)])


def random_structure(rng, n, density=0.3):
    c = [[[F(rng.randint(-2, 2)) if rng.random() < density else F(0) for _ in range(n)]
          for _ in range(n)] for _ in range(n)]
    return AlgebraStructure(n, c)


# ----------------------------------------------------------- contract_along

def test_contract_g_to_g11():
    assert contract_along(g_witness().source, g_witness().basis) == catalog("G_ab", [1, 1], 3)


def test_contract_f_to_a3_plus_k():
    f = catalog("F", [A, B], 3)
    b = basis([{0: [(1, 0)]}, {2: [(1, 0)]}, {1: [(1, 1)]}])
    assert contract_along(f, b) == catalog("A3+k", [], 3)


def test_contract_identity_is_noop():
    rng = random.Random(3)
    for n in (2, 3, 4):
        a = random_structure(rng, n)
        assert contract_along(a, identity(n)) == a


def test_contract_ke4_to_p_minus():
    n = 4
    rows = [{0: [(1, 0)], 1: [(-1, 0)]}, {1: [(1, 1)]}]
    rows += [{i: [(1, 0)]} for i in range(2, n)]
    assert contract_along(catalog("kE4", [], n), basis(rows)) == catalog("p_minus", [], n)


def test_pole_reported():
    # E1 = e1, E2 = t e2 gives E1E1 = e2 = t⁻¹ E2
    a = catalog("A3", [], 2)
    with pytest.raises(PoleAtZero) as exc:
        contract_along(a, basis([{0: [(1, 0)]}, {1: [(1, 1)]}]))
    assert (exc.value.i, exc.value.j, exc.value.k, exc.value.exponent) == (1, 1, 2, -1)


def test_singular_basis():
    b = basis([{0: [(1, 1)], 1: [(1, 1)]}, {0: [(1, 2)], 1: [(1, 2)]}])
    with pytest.raises(SingularBasis):
        contract_along(catalog("A3", [], 2), b)


def test_constant_basis_matches_basis_change():
    rng = random.Random(11)
    for _ in range(20):
        n = rng.choice((2, 3))
        a = random_structure(rng, n, 0.5)
        while True:
            rows = [[F(rng.randint(-2, 2)) for _ in range(n)] for _ in range(n)]
            try:
                p = mat_transpose(rows)
                g = mat_inverse(p)
                break
            except Exception:
                continue
        lim = contract_along(a, ParametrizedBasis.constant(rows))
        assert lim == apply_basis_change(g, a)
        assert lim == structure_in_basis(a, rows)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10 ** 6), st.lists(st.integers(0, 3), min_size=3, max_size=3))
def test_diagonal_contraction_oracle(seed, powers):
    """Diagonal bases: the constant μ_{ij}^k carries t^{p_i+p_j-p_k}."""
    rng = random.Random(seed)
    a = random_structure(rng, 3, 0.4)
    b = ParametrizedBasis.diagonal_powers(powers)
    expect = [[[F(0)] * 3 for _ in range(3)] for _ in range(3)]
    pole = False
    for i, j, k, v in a.nonzero():
        e = powers[i] + powers[j] - powers[k]
        if e < 0:
            pole = True
        elif e == 0:
            expect[i][j][k] = v
    if pole:
        with pytest.raises(PoleAtZero):
            contract_along(a, b)
    else:
        assert contract_along(a, b) == AlgebraStructure(3, expect)


# ------------------------------------------------------------ verify_witness

def test_verify_g_witness():
    v = verify_witness(g_witness())
    assert v.ok and v.message == "VERIFIED"


def test_verify_reports_first_difference():
    v = verify_witness(g_witness(catalog("G", [], 3)))
    assert not v.ok
    assert v.first_difference == (1, 2, 3)


def test_verify_identity_witness():
    a = catalog("F", [A, B], 3)
    assert verify_witness(DegenerationWitness(a, identity(3), a))


def test_verify_pole_is_verdict():
    a = catalog("A3", [], 2)
    v = verify_witness(DegenerationWitness(a, basis([{0: [(1, 0)]}, {1: [(1, 1)]}]), a))
    assert not v.ok and v.pole == (1, 1, 2, -1)


def test_library_verifies():
    lib = witness_library()
    assert len(lib) >= 31
    for name, w in lib:
        assert w.source.dim == w.target.dim
        assert verify_witness(w), name


def test_library_limits_are_proper():
    # a proper degeneration lowers the orbit, so the target differs from the source
    for name, w in witness_library():
        assert w.source != w.target, name


# ------------------------------------------------------------ .deg format

def test_witness_roundtrip():
    for _, w in witness_library():
        back = parse_witness(serialize_witness(w))
        assert back.source == w.source and back.target == w.target
        assert back.basis == w.basis and back.label == w.label


def test_parse_witness_text():
    text = """label: A3 to zero
source:
  dim 2
  e1*e1 = e2
basis:
  E1 = t e1
  E2 = -1/2 e1 + t^-1 e2
target:
  dim 2
"""
    w = parse_witness(text)
    assert w.basis.coeffs[1][0] == lp((F(-1, 2), 0))
    assert w.basis.coeffs[1][1] == lp((1, -1))


# ----------------------------------------------------------- IW contraction

def test_iw_ke4_unchanged():
    a = catalog("kE4", [], 4)
    assert iw_contraction(a, [[1, 0, 0, 0], [0, 1, 0, 0]]) == a


def test_iw_g_to_a3_plus_k():
    assert iw_contraction(catalog("G", [], 3), [[0, 1, 0], [0, 0, 1]]) == catalog("A3+k", [], 3)


def test_iw_n3_to_zero():
    assert iw_contraction(catalog("n3", [], 3), [[0, 0, 1]]).is_zero()


def test_iw_rejects_non_subalgebra():
    with pytest.raises(NotASubalgebra):
        iw_contraction(catalog("G", [], 3), [[1, 0, 0]])
    with pytest.raises(NotASubalgebra):
        iw_contraction(catalog("G", [], 3), [[0, 1, 0], [0, 2, 0]])


def test_iw_output_is_trivial_singular_extension():
    a = catalog("F", [A, B], 3)
    sub = [[0, 1, 0], [0, 0, 1]]  # e2e2 = 0 and e2, e3 products stay in ⟨e3⟩
    r = iw_contraction(a, sub)
    m = len(sub)
    for i, j, k, _ in r.nonzero():
        assert i < m or j < m
        assert k >= m or (i < m and j < m)


# --------------------------------------------------------------- closed sets

def test_rset_level1_contains_a3_relabelled():
    n = 3
    a3 = AlgebraStructure.from_products(n, {(1, 1): {n: 1}})
    assert rset_contains(rset_level1(n), a3)
    assert not rset_contains(rset_level1(n), catalog("n3", [], 3))


def test_empty_rset_contains_everything():
    rng = random.Random(5)
    r = ClosedSet(3, [], "all")
    assert all(rset_contains(r, random_structure(rng, 3)) for _ in range(10))


@pytest.mark.parametrize("n", [3, 4])
@pytest.mark.parametrize("name", sorted(SHIPPED_RSETS))
def test_shipped_rsets_invariant(name, n):
    assert rset_lt_invariance(SHIPPED_RSETS[name](n))


def test_mu111_set_not_invariant():
    from levelkit.degeneration import mu_index
    from levelkit.exact import MPoly
    e = [0] * 8
    e[mu_index(2, 1, 1, 1)] = 1
    r = ClosedSet(2, [MPoly(8, {tuple(e): F(1)})], "mu111")
    v = rset_lt_invariance(r)
    assert not v.ok
    pt = v.point
    assert rset_contains(r, pt)
    moved = apply_basis_change(v.transformation, pt)
    assert not rset_contains(r, moved)


def test_invariance_counterexample_is_concrete():
    """Random linear sets: when a counterexample is reported, it is genuine."""
    from levelkit.degeneration import mu_index
    from levelkit.exact import MPoly
    rng = random.Random(7)
    n = 2
    for _ in range(20):
        keys = rng.sample([(i, j, k) for i in (1, 2) for j in (1, 2) for k in (1, 2)], 2)
        eqs = []
        for key in keys:
            e = [0] * 8
            e[mu_index(n, *key)] = 1
            eqs.append(MPoly(8, {tuple(e): F(1)}))
        r = ClosedSet(n, eqs)
        v = rset_lt_invariance(r)
        if not v.ok:
            assert rset_contains(r, v.point)
            assert not rset_contains(r, apply_basis_change(v.transformation, v.point))


def test_rset_product_oracle():
    # sanity of the oracle helper against the structure product
    a = catalog("G", [], 3)
    x, y = [F(1), F(2), F(0)], [F(0), F(1), F(1)]
    assert a.product(x, y) == product_of(a.constants, x, y)
