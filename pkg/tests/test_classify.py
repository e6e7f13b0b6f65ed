import random
from fractions import Fraction as F

import pytest
import sympy

from levelkit.algebra import (AlgebraStructure, annihilator_dim, invariants, is_anticommutative,
                              is_commutative, is_jordan, is_left_alternative)
from levelkit.catalog import catalog
from levelkit.checks import (FILTER_PREDICATES, GOLDEN_LEVEL2_DIMS, filter_golden_name,
                             level2_golden_name, read_golden)
from levelkit.classify import (
    AntisymmetricInput, NormalFormViolated, NotBilinearForm, UnknownPredicate,
    a3_bilinear_contraction, bilinear_level_chain, check_filtered, filtered_level2,
    derivation_dim, infty_level2_list, is_bilinear_form, level1_list, level1_samples, level1_witness,
    level2_list, render_rows, separating_invariants,
)
from levelkit.degeneration import DegenerationWitness, ParametrizedBasis, verify_witness
from levelkit.gentype import gen_type
from levelkit.tn import level_T, recognize_T

PREDICATES = {
    "commutative": is_commutative,
    "anticommutative": is_anticommutative,
    "jordan": is_jordan,
    "left_alternative": is_left_alternative,
}


def notations(rows):
    return [r.notation for r in rows]


# ------------------------------------------------------------------ lists

def test_level1_lists():
    assert notations(level1_list(2)) == ["A_3", "p^-", "nu^{alpha}"]
    assert notations(level1_list(3)) == ["A_3+k", "n_3", "p^-", "nu^{alpha}"]
    with pytest.raises(ValueError):
        level1_list(1)


def test_level1_n2_only_degenerates_to_zero():
    # every level-1 sample at n = 2 has the same orbit dimension as ν^0, so none
    # of them is a proper degeneration of ν^0; scaling the basis by t reaches zero
    samples = level1_samples(2)
    nu0 = next(a for row, v, a in samples if row.name == "nu" and v == (0,))
    assert all(derivation_dim(b) == derivation_dim(nu0) for _, _, b in samples)
    w = DegenerationWitness(nu0, ParametrizedBasis.diagonal_powers([1, 1]), AlgebraStructure(2))
    assert verify_witness(w)


def test_level2_examples():
    assert notations(level2_list(2)) == ["A_1^{alpha}", "B_2^{alpha}", "D_2^{alpha,beta}",
                                         "A_2", "E_4"]
    n4 = notations(level2_list(4))
    assert "T_0^{3}" in n4 and not any(x.startswith("eta") for x in n4)
    n5 = notations(level2_list(5))
    assert "eta_2" in n5 and "T_0^{2,2}" in n5


@pytest.mark.parametrize("n", GOLDEN_LEVEL2_DIMS)
def test_level2_golden(n):
    assert render_rows(level2_list(n)) == read_golden(level2_golden_name(n))


def test_d2_constraint():
    row = level2_list(2)[2]
    assert row.constraint == "alpha+beta != 1"
    assert not row.admits([F(1, 3), F(2, 3)])
    assert all(a + b != 1 for a, b in row.samples())


def test_samples_are_admissible():
    for n in GOLDEN_LEVEL2_DIMS:
        for row in level2_list(n):
            vals = row.samples()
            assert vals
            for v in vals:
                assert row.admits(v)
                assert row.build(v, n).dim == n


# ---------------------------------------------------------------- filters

def test_filter_examples():
    assert notations(filtered_level2(4, "anticommutative")) == [
        "T_0^{2,bar(alpha,beta)}", "T_0^{3}"]
    assert sorted(notations(filtered_level2(2, "left_alternative"))) == [
        "D_2^{0,0}", "D_2^{1,1}"]
    assert notations(filtered_level2(2, "commutative")) == [
        "A_1^{1/2}", "B_2^{1/2}", "D_2^{alpha,alpha}"]
    assert filtered_level2(2, "commutative")[2].constraint == "alpha != 1/2"


def test_unknown_predicate():
    with pytest.raises(UnknownPredicate):
        filtered_level2(3, "associative")


@pytest.mark.parametrize("n", GOLDEN_LEVEL2_DIMS)
@pytest.mark.parametrize("predicate", FILTER_PREDICATES)
def test_filter_golden(predicate, n):
    rows = filtered_level2(n, predicate)
    assert render_rows(rows) == read_golden(filter_golden_name(predicate, n))
    assert check_filtered(rows, predicate, n)


def _covered(filtered, name, params):
    """Some filtered row of this family takes exactly these catalog parameters."""
    for r in filtered:
        if r.name != name:
            continue
        syms = sympy.symbols(r.symbols) if r.symbols else ()
        if isinstance(syms, sympy.Symbol):
            syms = (syms,)
        names = {str(x): x for x in syms}
        eqs = [sympy.sympify(p, locals=names) - sympy.Rational(str(v))
               for p, v in zip(r.params, params)]
        if not syms:
            if all(e == 0 for e in eqs):
                return True
            continue
        for sol in sympy.solve(eqs, list(syms), dict=True) or ([{}] if all(
                e == 0 for e in eqs) else []):
            if all(s in sol for s in syms):
                vals = [F(str(sol[s])) for s in syms]
                if r.admits(vals):
                    return True
    return False


@pytest.mark.parametrize("n", [2, 3, 4])
@pytest.mark.parametrize("predicate", FILTER_PREDICATES)
def test_filter_matches_pointwise_oracle(predicate, n):
    """At every sampled parameter, the identity holds iff a filtered row covers it."""
    test = PREDICATES[predicate]
    filtered = filtered_level2(n, predicate)
    for row in level2_list(n):
        for v in row.samples(40):
            params = row.param_values(v)
            holds = test(row.build(v, n))
            assert holds == _covered(filtered, row.name, params), (row.notation, v)


# --------------------------------------------------- A_3-bilinear contraction

def test_a3_contraction_examples():
    for n in (3, 4, 5):
        b = a3_bilinear_contraction(catalog("A3_p_minus", [], n))
        assert list(b.nonzero()) == [(n - 2, n - 2, n - 1, 1)]  # A_3 ⊕ k^{n-2} relabelled
        a = catalog("A3+k", [], n)
        moved = a3_bilinear_contraction(a, (1, 2))
        assert moved.const(n - 1, n - 1, n) == 1 and annihilator_dim(moved) == n - 1


def test_a3_contraction_e4():
    for n in (4, 5):
        b = a3_bilinear_contraction(catalog("A3k_E4", [], n))
        assert is_bilinear_form(b)
        assert n - annihilator_dim(b) == 1


def test_a3_contraction_rejects():
    with pytest.raises(NormalFormViolated):
        a3_bilinear_contraction(catalog("p_minus", [], 3))
    with pytest.raises(NormalFormViolated):
        a3_bilinear_contraction(catalog("kA3", [], 3))


# ---------------------------------------------------------- bilinear chains

def bilinear(n, form):
    """Algebra with μ(e_i, e_j) = form[i][j]·e_n on the first n−1 coordinates."""
    prods = {}
    for i, row in enumerate(form):
        for j, c in enumerate(row):
            if c:
                prods[(i + 1, j + 1)] = {n: c}
    return AlgebraStructure.from_products(n, prods)


def check_chain(a):
    chain = bilinear_level_chain(a)
    codim = a.dim - annihilator_dim(a)
    assert len(chain) == codim
    cur = a
    for w in chain:
        assert w.source == cur and verify_witness(w)
        assert w.target.dim - annihilator_dim(w.target) == cur.dim - annihilator_dim(cur) - 1
        cur = w.target
    assert cur.is_zero()
    return chain


def test_chain_examples():
    for n in (3, 4, 5):
        assert len(check_chain(catalog("F+k", [1, 1], n))) == 2
        assert len(check_chain(catalog("A3+k", [], n))) == 1
    full = bilinear(4, [[1, 2, 0], [0, 1, 3], [-1, 0, 1]])
    assert len(check_chain(full)) == 3


def test_chain_random_forms():
    rng = random.Random(9)
    done = 0
    while done < 25:
        n = rng.choice((3, 4, 5))
        form = [[F(rng.randint(-2, 2)) for _ in range(n - 1)] for _ in range(n - 1)]
        a = bilinear(n, form)
        if is_anticommutative(a):
            continue
        check_chain(a)
        done += 1


def test_chain_errors():
    with pytest.raises(AntisymmetricInput):
        bilinear_level_chain(catalog("n3", [], 3))
    with pytest.raises(NotBilinearForm):
        bilinear_level_chain(catalog("G", [], 3))


# ------------------------------------------------------------- infty list

def test_infty_list():
    rows = {r.notation: r for r in infty_level2_list()}
    assert rows["eta_2"].min_dim == 5 and rows["T_0^{2,2}"].min_dim == 5
    assert len(rows) == 4
    for r in rows.values():
        for v in r.samples():
            a = r.build(v, r.min_dim)
            if r.gen_type == 1 and r.name != "eta+k":
                assert level_T(recognize_T(a)) == 2
            elif r.name == "F+k":
                assert len(bilinear_level_chain(a)) == 2


# ------------------------------------------------------------- consistency

@pytest.mark.parametrize("n", GOLDEN_LEVEL2_DIMS)
def test_level2_rows_reach_level1(n):
    for row in level2_list(n):
        for v in row.samples():
            w = level1_witness(row, v, n)
            assert verify_witness(w)


@pytest.mark.parametrize("n", GOLDEN_LEVEL2_DIMS)
def test_level2_separated_from_level1(n):
    ones = [separating_invariants(a) for _, _, a in level1_samples(n)]
    for row in level2_list(n):
        for v in row.samples():
            inv = separating_invariants(row.build(v, n))
            assert inv not in ones, (row.notation, v)


@pytest.mark.parametrize("n", GOLDEN_LEVEL2_DIMS)
def test_level2_gen_types(n):
    for row in level2_list(n):
        for v in row.samples():
            assert gen_type(row.build(v, n)) == row.gen_type <= 2


def test_filtered_samples_consistent_with_invariants():
    for n in (2, 3, 4):
        for p in FILTER_PREDICATES:
            for r in filtered_level2(n, p):
                for v in r.samples():
                    assert getattr(invariants(r.build(v, n)), p)
