"""Regenerate the shipped .deg witness library under src/levelkit/witnesses."""

import sys
from fractions import Fraction
from pathlib import Path

from levelkit.catalog import catalog
from levelkit.degeneration import (DegenerationWitness, ParametrizedBasis, parse_basis_line,
                                   serialize_witness, verify_witness)
from levelkit.gentype import standard_contraction
from levelkit.extensions import ExtensionSpec, reduce_extension
from levelkit.spectra import FullSpecter
from levelkit.tn import TnPoint, primary_witness_T

OUT = Path(__file__).resolve().parent.parent / "src" / "levelkit" / "witnesses"

A = Fraction(1, 3)
B = Fraction(2, 5)
EPS = Fraction(3, 2)


def fr(x):
    return format(Fraction(x))


def basis(n, lines):
    rows = [None] * n
    for k, line in enumerate(lines, start=1):
        _, row = parse_basis_line(f"E{k} = {line}", n)
        rows[k - 1] = row
    return ParametrizedBasis(rows)


def tail(n, start, scale=""):
    """Basis entries e_start..e_n, each optionally prefixed by `scale`."""
    return [f"{scale}e{i}".strip() for i in range(start, n + 1)]


def explicit():
    out = []

    def add(fname, label, src, lines, tgt):
        out.append((fname, DegenerationWitness(src, basis(src.dim, lines), tgt, label)))

    # generated standard algebras
    add("lemma_st_G.deg", "G -> G^{1,1}", catalog("G"),
        ["t e1 + t e2", "t^2 e2 + t^2 e3", "t^3 e3"], catalog("G_ab", [1, 1]))
    add("lemma_st_Gab_F.deg", f"G^{{{fr(A)},{fr(B)}}} -> F^{{{fr(A)},{fr(B)}}}",
        catalog("G_ab", [A, B]), ["t e1", "t e2 - t e3", "t^2 e3"], catalog("F", [A, B]))
    add("lemma_st_F_A3.deg", f"F^{{{fr(A)},{fr(B)}}} -> A_3+k",
        catalog("F", [A, B]), ["e1", "e3", "t e2"], catalog("A3+k", [], 3))
    add("lemma_st_drop_top.deg", "G -> A_3+k", catalog("G"),
        ["e1", "e2", "t^-1 e3"], catalog("A3+k", [], 3))

    # orbit closures of level-2 generation-type-1 structures
    n = 4
    add("lemma_orbits_E4_pminus.deg", "k^2 x| E_4 -> p^-", catalog("kE4", [], n),
        ["e1 - e2", "t e2"] + tail(n, 3), catalog("p_minus", [], n))
    add("lemma_orbits_E4_nu.deg", f"k^2 x| E_4 -> nu^{{{fr(A)}}}", catalog("kE4", [], n),
        [f"{fr(A)} e1 + {fr(1 - A)} e2", "t e2"] + tail(n, 3), catalog("nu", [A], n))
    add("lemma_orbits_eta.deg", "eta_2 -> eta_1+k^2", catalog("eta", [2]),
        ["e1", "e2", "e5", "e4", "t e3"], catalog("n3", [], 5))

    # A_3 extensions
    for n in (3, 4):
        add(f"lemma_a3ext_kA3_n{n}.deg", f"k^{n - 2} x| A_3 -> T_0^{{2,bar(0,1)}}",
            catalog("kA3", [], n), ["e1", "t^-1 e2 + e3"] + tail(n, 3),
            catalog("T0_2", [0, 1], n))
    add("lemma_a3ext_k2A3.deg", f"k^2 x|_{{{fr(A)},{fr(B)}}} A_3 -> F^{{{fr(A)},{fr(B)}}}+k",
        catalog("k2A3", [A, B]), ["t e1", "e3", "t e4", "t e2 - e4"],
        catalog("F+k", [A, B], 4))

    # extensions of A_1, A_2, B_2, D_2
    n = 4
    add("lemma_a1_T1.deg", f"k^2 x|_{{{fr(EPS)}}} A_1^{{{fr(A)}}} -> T_1^{{2,bar({fr(A)},{fr(EPS)})}}",
        catalog("kA1", [EPS, A], n), ["e1", f"t^-1 e2 + {fr(1 / (EPS - A))} e3"] + tail(n, 3),
        catalog("T1_2", [A, EPS], n))
    add("lemma_a2_T0.deg", f"k^2 x|_{{{fr(EPS)}}} A_2 -> T_0^{{2,bar(1,{fr(EPS)})}}",
        catalog("kA2", [EPS], n), ["e1", f"t^-1 e2 + {fr(1 / (EPS - 1))} e3"] + tail(n, 3),
        catalog("T0_2", [1, EPS], n))
    add("lemma_b2_F.deg", f"k^2 x|_{{{fr(EPS)}}} B_2^{{{fr(A)}}} -> F+k",
        catalog("kB2", [EPS, A], n), ["t e1 + e2", "e2 + e3", "t e2"] + tail(n, 4),
        catalog("F+k", [A - EPS, 1 - A + EPS], n))
    add("lemma_b2_t1.deg", f"k^2 x|_1^t B_2^{{{fr(A)}}} -> k^2 x| A_3",
        catalog("kB2t", [1, A], n), ["t e1 + e2", "t e2"] + tail(n, 3), catalog("kA3", [], n))
    s = A + B - 1
    add("lemma_d2_F.deg", f"k^2 x|_{{{fr(EPS)}}} D_2^{{{fr(A)},{fr(B)}}} -> F+k",
        catalog("kD2", [EPS, A, B], n),
        ["t e1 + e2", f"{fr(s)} e2 + {fr(s)} e3", f"{fr(s)} t e2"] + tail(n, 4),
        catalog("F+k", [A - EPS, B + EPS - 1], n))
    add("lemma_d2_t1.deg", f"k^2 x|_1^t D_2^{{{fr(A)},{fr(B)}}} -> k^2 x| A_3",
        catalog("kD2t", [1, A, B], n), ["t e1 + e2", f"{fr(s)} t e2"] + tail(n, 3),
        catalog("kA3", [], n))

    # A_3-ideal structures
    n = 5
    lead = [f"e1 + e{n - 1}", f"e{n}"] + [f"t e{i}" for i in range(2, n)]
    add("lemma_nonform_E4_pminus.deg", "(A_3+k) x| E_4 -> A_3 x| p^-", catalog("A3k_E4", [], n),
        ["e1 - e2", "t e2"] + tail(n, 3), catalog("A3_p_minus", [], n))
    add("lemma_nonform_pminus_A2.deg", "A_3 x| p^- -> k^3 x|_1 A_2", catalog("A3_p_minus", [], n),
        lead, catalog("kA2", [1], n))
    add("lemma_nonform_E4_nu.deg", f"(A_3+k) x| E_4 -> A_3 x|_{{{fr(A)}}} nu^{{{fr(A)}}}",
        catalog("A3k_E4", [], n), [f"{fr(A)} e1 + {fr(1 - A)} e2", "t e1 - t e2"] + tail(n, 3),
        catalog("A3_nu", [A], n))
    add("lemma_nonform_nu_A1.deg", f"A_3 x|_{{{fr(A)}}} nu^{{{fr(A)}}} -> k^3 x|_{{{fr(A)}}} A_1^{{{fr(A)}}}",
        catalog("A3_nu", [A], n), lead, catalog("kA1", [A, A], n))
    return out


def standard_rows():
    """Degenerations to a standard 1-generated algebra plus a zero summand."""
    out = []
    cases = [
        ("anytost_D2.deg", f"D_2^{{{fr(A)},{fr(B)}}} -> A_3", catalog("D2", [A, B]), [1, 1]),
        ("anytost_kB2.deg", f"k^2 x|_{{{fr(EPS)}}} B_2^{{{fr(A)}}} -> A_3+k^2",
         catalog("kB2", [EPS, A], 4), [1, 1, 1, 1]),
        ("anytost_nu.deg", f"nu^{{{fr(A)}}} -> k^3", catalog("nu", [A], 3), [1, 0, 0]),
    ]
    for fname, label, a, gen in cases:
        b, limit = standard_contraction(a, [Fraction(x) for x in gen])
        out.append((fname, DegenerationWitness(a, b, limit, label)))
    return out


def _mat(rows):
    return [[Fraction(x) for x in r] for r in rows]


def extension_rows():
    out = []
    L1 = _mat([[1, 2], [0, -1]])
    R1 = _mat([[0, 1], [3, 1]])
    L2 = _mat([[2, 0], [1, 1]])
    R2 = _mat([[-1, 1], [0, 2]])
    bases = {"A4": ("A4", [A]), "B1": ("B1", [A]), "C": ("C", [A, B]),
             "D1": ("D1", [A, B]), "D3": ("D3", [A, B]), "E1": ("E1", [A, B, Fraction(3), 2])}
    for which, (name, params) in bases.items():
        chi = catalog(name, params)
        spec = ExtensionSpec(chi, L1, R1, L2, R2, base=(name, tuple(params)))
        w = reduce_extension(spec, which)
        w.label = f"k^2 x|_(L1,R1,L2,R2) {which} -> reduced extension"
        out.append((f"lemma_3levext_{which}.deg", w))
    chi = catalog("A3")
    spec = ExtensionSpec(chi, _mat([[1, 0], [2, 1]]), _mat([[0, 0], [-1, 0]]),
                         _mat([[0, 0], [0, 0]]), _mat([[0, 0], [0, 0]]), base=("A3", ()))
    w = reduce_extension(spec, "nondiag")
    w.label = "nondiagonal L_1 -> k^2 x|_{2,-1} A_3"
    out.append(("lemma_nondiag.deg", w))
    return out


def tn_rows():
    pairs = [
        ((1, [(0, (2,))]), (1, [(0, (1, 1))])),
        ((1, [(1, (1,))]), (0, [(0, (1,))])),
        ((0, [(1, (2, 1))]), (0, [(1, (1, 1, 1))])),
        ((1, [(2, (3,)), (0, (1,))]), (1, [(2, (2, 1)), (0, (1,))])),
        ((0, [(0, (3, 2))]), (0, [(0, (3, 1, 1))])),
        ((0, [(0, (2, 2, 1))]), (0, [(0, (2, 1, 1, 1))])),
        ((1, [(1, (2, 2)), (2, (1,))]), (0, [(0, (3, 2))])),
        ((0, [(1, (4,))]), (0, [(0, (4,))])),
    ]
    out = []
    for k, ((r, s), (q, t)) in enumerate(pairs, start=1):
        p, pq = TnPoint(r, FullSpecter(s)), TnPoint(q, FullSpecter(t))
        w = primary_witness_T(p, pq)
        w.label = f"T_n primary: {w.label}"
        out.append((f"tn_primary_{k:02d}.deg", w))
    return out


def main():
    items = explicit() + standard_rows() + extension_rows() + tn_rows()
    bad = 0
    for fname, w in items:
        v = verify_witness(w)
        print(f"{fname}: {v.message}")
        if not v:
            bad += 1
    if bad or "--check" in sys.argv:
        return 1 if bad else 0
    OUT.mkdir(parents=True, exist_ok=True)
    for old in OUT.glob("*.deg"):
        old.unlink()
    for fname, w in items:
        (OUT / fname).write_text(serialize_witness(w), encoding="utf-8")
    print(f"wrote {len(items)} witnesses to {OUT}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
