import random
from fractions import Fraction as F

import pytest

from levelkit.algebra import apply_basis_change
from levelkit.catalog import catalog
from levelkit.degeneration import verify_witness
from levelkit.exact import mat_inverse, mat_mul
from levelkit.spectra import FullSpecter, enumerate_specters
from levelkit.tn import (
    NotGenType1, NotPrimary, TnPoint, build_T, degenerates_T, emit_tn_tables, level_T,
    primary_set_T, primary_witness_T, recognize_T, render_table, same_orbit_T,
)


def ident(m, c=1):
    return [[F(c) if i == j else F(0) for j in range(m)] for i in range(m)]


def points(max_total, eigenvalues=(0, 1, 2)):
    seen = set()
    for total in range(1, max_total + 1):
        for s in enumerate_specters(total, eigenvalues):
            for r in (0, 1):
                seen.add(TnPoint(r, s))
    return sorted(seen, key=repr)


def reach(p):
    """Reflexive-transitive closure of primary_set_T."""
    out, todo = {p}, [p]
    while todo:
        x = todo.pop()
        for y in primary_set_T(x):
            if y not in out:
                out.add(y)
                todo.append(y)
    return out


POINTS4 = points(4)


# -------------------------------------------------------------- build/recognize

def test_build_identity_is_p_minus():
    for n in (2, 3, 5):
        assert build_T(0, ident(n - 1)) == catalog("p_minus", [], n)


def test_build_scalar_is_nu():
    a = F(2, 7)
    for n in (2, 4):
        assert build_T(1, ident(n - 1, a)) == catalog("nu", [a], n)


def test_build_nilpotent_block_is_n3():
    for n in (3, 4, 5):
        m = [[F(0)] * (n - 1) for _ in range(n - 1)]
        m[1][0] = F(1)
        assert build_T(0, m) == catalog("n3", [], n)


def test_recognize_examples():
    a = F(3, 4)
    assert recognize_T(catalog("nu", [a], 4)) == TnPoint(1, [(a, (1, 1, 1))])
    p = recognize_T(catalog("p_minus", [], 4))
    assert p.r == 0 and same_orbit_T(p, TnPoint(0, [(5, (1, 1, 1))]))


def test_recognize_rejects_bad_symmetric_part():
    a = catalog("p_minus", [], 3)
    c = [[list(row) for row in plane] for plane in a.constants]
    c[0][1][2] = F(1)  # e1e2 + e2e1 gains an e3 component
    from levelkit.algebra import AlgebraStructure
    with pytest.raises(NotGenType1):
        recognize_T(AlgebraStructure(3, c))


def test_recognize_build_roundtrip():
    for p in points(3, (0, 1, 2, F(1, 2))):
        assert recognize_T(p.structure()) == p


def test_conjugation_keeps_orbit():
    rng = random.Random(2)
    for p in points(3):
        n = p.n
        # basis changes fixing e1 preserve the T-shape
        while True:
            g = [[F(rng.randint(-2, 2)) for _ in range(n - 1)] for _ in range(n - 1)]
            try:
                mat_inverse(g)
                break
            except Exception:
                continue
        full = [[F(1)] + [F(0)] * (n - 1)] + [[F(0)] + row for row in g]
        moved = apply_basis_change(full, p.structure())
        assert same_orbit_T(recognize_T(moved), p)
        # scaling e1 by λ rescales r and M together
        lam = F(rng.choice([-3, -1, 2, 5]), rng.choice([1, 2, 3]))
        d = ident(n)
        d[0][0] = 1 / lam
        q = recognize_T(apply_basis_change(d, p.structure()))
        assert same_orbit_T(q, p)


def test_same_orbit_examples():
    s = FullSpecter([(1, (2,))])
    assert same_orbit_T(TnPoint(1, s), TnPoint(1, s))
    assert same_orbit_T(TnPoint(0, [(1, (2,))]), TnPoint(0, [(3, (2,))]))
    assert not same_orbit_T(TnPoint(0, s), TnPoint(1, s))
    assert not same_orbit_T(TnPoint(1, [(1, (2,))]), TnPoint(1, [(3, (2,))]))


# ----------------------------------------------------------------- degenerations

def test_degenerates_examples():
    assert degenerates_T(TnPoint(1, [(1, (2,))]), TnPoint(1, [(1, (1, 1))]))
    assert not degenerates_T(TnPoint(1, [(1, (1, 1))]), TnPoint(0, [(0, (2,))]))
    assert degenerates_T(TnPoint(0, [(0, (2, 1))]), TnPoint(0, [(0, (1, 1, 1))]))


def test_reflexive():
    for p in points(5):
        assert degenerates_T(p, p)


def test_transitive():
    by_n = {}
    for p in points(4):
        by_n.setdefault(p.n, []).append(p)
    for pts in by_n.values():
        rel = {(p, q) for p in pts for q in pts if degenerates_T(p, q)}
        for p, q in rel:
            for r in pts:
                if (q, r) in rel:
                    assert (p, r) in rel, (p, q, r)


def test_degenerates_matches_primary_closure():
    for p in POINTS4:
        closure = reach(p)
        for q in points_of_dim(p.n):
            assert degenerates_T(p, q) == (q in closure), (p, q)


def points_of_dim(n):
    return [q for q in POINTS4 if q.n == n]


def test_no_intermediate_point():
    for p in POINTS4:
        closure = reach(p)
        for q in primary_set_T(p):
            assert degenerates_T(p, q) and q != p
            for r in closure - {p, q}:
                assert not degenerates_T(r, q), (p, r, q)


def test_proper_degeneration_lowers_level():
    for p in POINTS4:
        for q in points_of_dim(p.n):
            if q != p and degenerates_T(p, q):
                assert level_T(q) < level_T(p)


def test_level_is_longest_chain():
    """Brute force over the strict degeneration relation below each point."""
    for p in POINTS4:
        below = sorted(reach(p), key=repr)
        depth = {}
        for x in sorted(below, key=level_T):
            lower = [depth[y] for y in depth if y != x and degenerates_T(x, y)]
            depth[x] = 1 + max(lower) if lower else 0
        assert level_T(p) == depth[p], p


# ------------------------------------------------------------------ level_T

def test_level_examples():
    assert level_T(TnPoint(0, [(0, (2, 1, 1))])) == 1
    assert level_T(TnPoint(1, [(F(2, 3), (1, 1, 1))])) == 1
    # the level-2 row J(α,β), J(β), … has specter {(α,(1)), (β,(1,…,1))}
    assert level_T(TnPoint(0, [(1, (1,)), (2, (1, 1))])) == 2
    assert level_T(TnPoint(0, [(1, (2,)), (2, (1, 1))])) == 4


def test_primary_examples():
    assert primary_set_T(TnPoint(0, [(0, (3, 1))])) == {TnPoint(0, [(0, (2, 2))])}
    assert primary_set_T(TnPoint(1, [(1, (2,))])) == {
        TnPoint(1, [(1, (1, 1))]), TnPoint(0, [(0, (2,))])}
    assert primary_set_T(TnPoint(0, [(0, (1, 1, 1))])) == set()


# ---------------------------------------------------------------- witnesses

def test_witness_examples():
    w = primary_witness_T(TnPoint(1, [(0, (2,))]), TnPoint(1, [(0, (1, 1))]))
    assert w.source.dim == 3 and verify_witness(w)
    w = primary_witness_T(TnPoint(1, [(1, (1,))]), TnPoint(0, [(0, (1,))]))
    assert w.source.dim == 2 and verify_witness(w)


def test_not_primary():
    with pytest.raises(NotPrimary):
        primary_witness_T(TnPoint(0, [(0, (3,))]), TnPoint(0, [(0, (1, 1, 1))]))


def test_all_primary_witnesses_verify():
    count = 0
    for p in POINTS4:
        for q in primary_set_T(p):
            w = primary_witness_T(p, q)
            assert w.source == p.structure() and w.target == q.structure()
            assert verify_witness(w), (p, q)
            count += 1
    assert count > 100


# ------------------------------------------------------------------- tables

def _notations(rows, table, level):
    return [r.notation for r in rows if r.table == table and r.level == level]


def test_emit_examples():
    assert _notations(emit_tn_tables(5, 2, (1,)), 1, 2) == ["T_0^{2,2}"]
    assert _notations(emit_tn_tables(4, 2, (1,)), 1, 2) == ["T_0^{3}"]
    rows = emit_tn_tables(3, 1)
    assert _notations(rows, 1, 1) == ["n_3"]
    assert _notations(rows, 2, 1) == ["p^-"]
    assert _notations(rows, 3, 1) == ["nu^alpha"]


def test_emit_rows_have_their_level():
    rows = emit_tn_tables(6, 5)
    assert rows
    for row in rows:
        values = [F(k + 2, 7) for k in range(len(row.names))]
        assert level_T(row.sample(values)) == row.level, row


def test_render_is_deterministic():
    rows = emit_tn_tables(5, 5)
    assert render_table(rows, 2, 5) == render_table(emit_tn_tables(5, 5), 2, 5)


def test_witness_matrix_identity():
    # the witness source is build_T of the canonical matrix
    p = TnPoint(0, [(0, (2, 1))])
    m = p.matrix()
    assert p.structure() == build_T(0, m)
    assert mat_mul(m, m) == [[F(0)] * 3 for _ in range(3)]
