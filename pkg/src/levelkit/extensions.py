"""Trivial singular extensions k^{n-2} ⋊ χ of two-dimensional algebras: the
generation-type-2 criterion, level-reducing witnesses and the B_2/D_2
normal forms."""

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .algebra import AlgebraStructure, direct_sum_zero, structure_in_basis
from .catalog import catalog
from .degeneration import DegenerationWitness, ParametrizedBasis
from .exact import (
    LaurentPoly, mat_add, mat_equal, mat_identity, mat_mul, mat_scalar, mat_scale, mat_sub,
    mat_zero, rational_eigenvalues, to_scalar,
)


class SizeMismatch(ValueError):
    pass


class NotNormalForm(ValueError):
    pass


class RowMismatch(ValueError):
    pass


class HypothesisViolated(ValueError):
    pass


def _scale(c, m):
    return mat_scale(m, to_scalar(c))


def is_normal_form(chi):
    """χ_{1,1}^2 = 1 and χ(e_2,e_2) = χ_{2,2}^2 e_2 with χ_{2,2}^2 ∈ {0, 1}."""
    return (chi.dim == 2 and chi.const(1, 1, 2) == 1 and chi.const(2, 2, 1) == 0
            and chi.const(2, 2, 2) in (0, 1))


@dataclass
class ExtensionSpec:
    """χ on ⟨e1,e2⟩ with μ_{i,j}^k = (L_i)_{kj}, μ_{j,i}^k = (R_i)_{kj}, rows and columns 3..n."""

    chi: AlgebraStructure
    L1: list
    R1: list
    L2: list
    R2: list
    base: tuple = field(default=None)

    def __post_init__(self):
        if self.chi.dim != 2:
            raise ValueError("base must be two-dimensional")
        mats = [mat_scalar(m) if m else [] for m in (self.L1, self.R1, self.L2, self.R2)]
        sizes = {len(m) for m in mats}
        if len(sizes) != 1 or any(len(r) != len(m) for m in mats for r in m):
            raise SizeMismatch("L1, R1, L2, R2 must be square of equal size")
        self.L1, self.R1, self.L2, self.R2 = mats

    @property
    def size(self):
        return len(self.L1)

    @property
    def S(self):
        return mat_sub(mat_add(self.L1, self.R1),
                       _scale(self.chi.const(1, 1, 1), mat_identity(self.size)))

    def is_normal(self):
        return is_normal_form(self.chi)


def zero_spec(chi, m, base=None):
    z = mat_zero(m, m)
    return ExtensionSpec(chi, z, z, z, z, base)


def scalar_spec(chi, m, l1, r1, l2=0, r2=0, base=None):
    sc = [_scale(to_scalar(x), mat_identity(m)) for x in (l1, r1, l2, r2)]
    return ExtensionSpec(chi, *sc, base=base)


def build_extension(spec, n):
    if spec.size != n - 2:
        raise SizeMismatch(f"matrices are {spec.size}×{spec.size}, need {n - 2}")
    c = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]
    for i, j, k, v in spec.chi.nonzero():
        c[i][j][k] = v
    for idx, (lm, rm) in enumerate(((spec.L1, spec.R1), (spec.L2, spec.R2))):
        for j in range(n - 2):
            for k in range(n - 2):
                c[idx][j + 2][k + 2] = lm[k][j]
                c[j + 2][idx][k + 2] = rm[k][j]
    return AlgebraStructure(n, c)


def _g2_parts(chi):
    g = lambda i, j, k: chi.const(i, j, k)
    return dict(
        a11=g(1, 1, 1), c12_1=g(1, 2, 1), c21_1=g(2, 1, 1), c12_2=g(1, 2, 2),
        c21_2=g(2, 1, 2), c22_2=g(2, 2, 2),
    )


def g2_condition(spec):
    """Exact check of the three matrix identities characterizing G = 2."""
    if not spec.is_normal():
        raise NotNormalForm("base is not in the normal form χ_{1,1}^2 = 1, χ(e2,e2) ∈ {0, e2}")
    p = _g2_parts(spec.chi)
    m = spec.size
    eye = mat_identity(m)
    s = spec.S
    l2 = mat_add(mat_mul(mat_sub(_scale(p["c21_2"], eye), spec.R1), s),
                 _scale(p["c21_1"], eye))
    r2 = mat_add(mat_mul(mat_sub(_scale(p["c12_2"], eye), spec.L1), s),
                 _scale(p["c12_1"], eye))
    if not mat_equal(l2, spec.L2) or not mat_equal(r2, spec.R2):
        return False
    s2 = mat_mul(s, s)
    cubic = mat_add(mat_add(mat_mul(s2, s),
                            _scale(p["a11"] - p["c12_2"] - p["c21_2"], s2)),
                    _scale(p["c22_2"] - p["c12_1"] - p["c21_1"], s))
    return all(x == 0 for row in cubic for x in row)


def g2_condition_batch(chi, L1, R1, L2, R2):
    """Vectorized g2_condition for integer matrices; arrays of shape (..., m, m)."""
    if not is_normal_form(chi):
        raise NotNormalForm("base is not in normal form")
    p = {k: int(v) for k, v in _g2_parts(chi).items()}
    if any(Fraction(v) != x for v, x in zip(p.values(), _g2_parts(chi).values())):
        raise ValueError("batch check needs an integral base")
    L1, R1, L2, R2 = (np.asarray(x, dtype=np.int64) for x in (L1, R1, L2, R2))
    m = L1.shape[-1]
    eye = np.eye(m, dtype=np.int64)
    s = L1 + R1 - p["a11"] * eye
    l2 = (p["c21_2"] * eye - R1) @ s + p["c21_1"] * eye
    r2 = (p["c12_2"] * eye - L1) @ s + p["c12_1"] * eye
    s2 = s @ s
    cubic = s2 @ s + (p["a11"] - p["c12_2"] - p["c21_2"]) * s2 \
        + (p["c22_2"] - p["c12_1"] - p["c21_1"]) * s
    ok = (l2 == L2).all(axis=(-1, -2)) & (r2 == R2).all(axis=(-1, -2))
    return ok & (cubic == 0).all(axis=(-1, -2))


def g2_completion(chi, L1, R1):
    """(L2, R2) forced by the identities; the cubic on S still has to hold."""
    spec = ExtensionSpec(chi, L1, R1, L1, R1)
    p = _g2_parts(chi)
    eye = mat_identity(spec.size)
    s = spec.S
    l2 = mat_add(mat_mul(mat_sub(_scale(p["c21_2"], eye), spec.R1), s),
                 _scale(p["c21_1"], eye))
    r2 = mat_add(mat_mul(mat_sub(_scale(p["c12_2"], eye), spec.L1), s),
                 _scale(p["c12_1"], eye))
    return l2, r2


def cubic_roots(chi):
    """Rational roots of x^3 + (χ11^1 − χ12^2 − χ21^2) x^2 + (χ22^2 − χ12^1 − χ21^1) x."""
    p = _g2_parts(chi)
    b = p["a11"] - p["c12_2"] - p["c21_2"]
    c = p["c22_2"] - p["c12_1"] - p["c21_1"]
    comp = [[0, 0, 0], [1, 0, -c], [0, 1, -b]]
    return rational_eigenvalues(mat_scalar(comp))


# --------------------------------------------------------- pre-conjugation

def conjugate_base(spec, rows):
    """Spec of the same μ in the basis f1 = a e1 + b e2, f2 = c e1 + d e2, e3, ..., en."""
    (a, b), (c, d) = [[to_scalar(x) for x in r] for r in rows]
    chi = structure_in_basis(spec.chi, [[a, b], [c, d]])
    comb = lambda x, y, u, v: mat_add(_scale(u, x), _scale(v, y))
    return ExtensionSpec(chi, comb(spec.L1, spec.L2, a, b), comb(spec.R1, spec.R2, a, b),
                         comb(spec.L1, spec.L2, c, d), comb(spec.R1, spec.R2, c, d), spec.base)


def preconjugation(name, params):
    """Basis change bringing a two-dimensional base into normal form, or None if already normal."""
    params = [to_scalar(x) for x in params]
    if name == "B2":
        return [[1, 1], [0, 1]]
    if name == "D2":
        alpha, beta = params
        return [[1, 1], [0, alpha + beta - 1]]
    return None


def normal_base(name, params=()):
    """(χ in normal form, rows used) for one of the bases A3, A1, A2, B2, D2."""
    chi = catalog(name, params)
    rows = preconjugation(name, params)
    if rows is not None:
        chi = structure_in_basis(chi, rows)
    if not is_normal_form(chi):
        raise NotNormalForm(f"{name} has no stored normal-form conjugation")
    return chi, rows


# -------------------------------------------------------------- witnesses

_REDUCTIONS = {
    # target (L1, R1) of the reduced extension; L2 = R2 = 0
    "A4": lambda s: (_neg(s.L2), _neg(s.R2)),
    "B1": lambda s: (s.L1, s.R1),
    "C": lambda s: (s.L2, s.R2),
    "D1": lambda s: (s.L1, s.R1),
    "D3": lambda s: (s.L1, s.R1),
    "E1": lambda s: (s.L1, s.R1),
}


def _neg(m):
    return _scale(-1, m)


def _reduction_basis(which, n):
    t = lambda c, e: LaurentPoly.monomial(Fraction(c), e)
    z = LaurentPoly()
    if which == "A4":
        e1, e2 = [t(1, 1), t(-1, 0)], [z, t(1, 2)]
    elif which == "B1":
        e1, e2 = [t(1, 0), t(1, 1)], [z, t(-1, 2)]
    elif which == "C":
        e1, e2 = [t(1, 1), t(1, 0)], [z, t(1, 2)]
    else:
        e1, e2 = [t(1, 0), z], [z, t(1, 1)]
    rows = [e1 + [z] * (n - 2), e2 + [z] * (n - 2)]
    for i in range(2, n):
        rows.append([t(1, 0) if j == i else z for j in range(n)])
    return ParametrizedBasis(rows)


def _target_base(which, params):
    params = [to_scalar(x) for x in params]
    if which == "A4" or which == "B1":
        return catalog("A2")
    if which == "C":
        return catalog("A1", [params[0]])
    if which == "D1":
        return catalog("D2", [params[1], -params[1]])
    if which == "D3":
        return catalog("D2", params)
    if which == "E1":
        return catalog("D2", [params[1], params[3]])
    raise RowMismatch(which)


def reduce_extension(spec, which, n=None):
    """Witness for a three-level extension row (by base name) or the nondiag reduction."""
    n = n or spec.size + 2
    source = build_extension(spec, n)
    if which == "nondiag":
        if not spec.is_normal() or n < 4:
            raise RowMismatch("nondiag needs a normal-form base and n ≥ 4")
        a, b = spec.L1[1][0], spec.R1[1][0]
        if a == 0 and b == 0:
            raise RowMismatch("needs (μ_{1,3}^4, μ_{3,1}^4) ≠ (0, 0)")
        target = direct_sum_zero(
            AlgebraStructure.from_products(4, {(1, 1): {2: 1}, (1, 3): {4: a}, (3, 1): {4: b}}),
            n - 4)
        powers = [2, 4, 0, 2] + [1] * (n - 4)
        return DegenerationWitness(source, ParametrizedBasis.diagonal_powers(powers), target,
                                   "nondiag")
    if which not in _REDUCTIONS:
        raise RowMismatch(f"unknown row {which!r}")
    if spec.base is None or spec.base[0] != which:
        raise RowMismatch(f"source base is not {which}")
    params = spec.base[1] if len(spec.base) > 1 else ()
    if catalog(which, params) != spec.chi:
        raise RowMismatch(f"base structure differs from {which}{list(params)}")
    l1, r1 = _REDUCTIONS[which](spec)
    z = mat_zero(spec.size, spec.size)
    tgt = ExtensionSpec(_target_base(which, params), l1, r1, z, z)
    return DegenerationWitness(source, _reduction_basis(which, n), build_extension(tgt, n),
                               f"3levext {which}")


# ---------------------------------------------------------- B2 / D2 normal forms

@dataclass(frozen=True)
class BDForm:
    tag: str          # "eps", "t0" or "t1"
    epsilon: Fraction
    scale: Fraction   # factor applied to e2
    catalog_name: str
    params: tuple


def _scalar_of(m):
    k = len(m)
    c = m[0][0] if k else Fraction(0)
    if any(m[i][j] != (c if i == j else 0) for i in range(k) for j in range(k)):
        return None
    return c


def normalize_BD(spec):
    if spec.base is None or spec.base[0] not in ("B2", "D2"):
        raise HypothesisViolated("base must be tagged B2 or D2")
    name, params = spec.base[0], [to_scalar(x) for x in spec.base[1]]
    if catalog(name, params) != spec.chi:
        raise HypothesisViolated("base structure does not match its tag")
    eps = _scalar_of(mat_add(spec.L1, spec.L2))
    kap = _scalar_of(mat_add(spec.R1, spec.R2))
    if eps is None or kap is None:
        raise HypothesisViolated("L1 + L2 and R1 + R2 must be scalar")
    conj = conjugate_base(spec, preconjugation(name, params))
    if not g2_condition(conj):
        raise HypothesisViolated("generation type is not 2")
    alpha = params[0]
    first = Fraction(0) if name == "B2" else Fraction(1)
    n = spec.size + 2
    if eps + kap == first:
        tag, scale = "eps", Fraction(1)
        cname, cparams = ("kB2", (eps, alpha)) if name == "B2" else ("kD2", (eps, *params))
    elif eps == alpha:
        tag, scale = "t0", Fraction(1)
        cname, cparams = ("kB2t", (0, alpha)) if name == "B2" else ("kD2t", (0, *params))
    else:
        tag, scale = "t1", 1 / (eps - alpha)
        cname, cparams = ("kB2t", (1, alpha)) if name == "B2" else ("kD2t", (1, *params))
    mu = build_extension(spec, n)
    rows = [[Fraction(int(i == j)) * (scale if i == 1 else 1) for j in range(n)]
            for i in range(n)]
    if structure_in_basis(mu, rows) != catalog(cname, cparams, n):
        raise ArithmeticError("normal form check failed")
    return BDForm(tag, eps, scale, cname, tuple(Fraction(x) for x in cparams))


# ------------------------------------------------------------- oracle sweep

@dataclass
class SweepReport:
    total: int = 0
    g2_true: int = 0
    certified: int = 0
    symbolic: int = 0
    disagreements: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.disagreements


_POINTS = ((1, 2, 3, 5, 7, 11), (1, -1, 2, -3, 5, -7), (1, 0, 1, 1, 2, 3))


class _BatchProduct:
    """μ(x, y) for a batch of extensions sharing χ, L1 and R1."""

    def __init__(self, chi, L1, R1, L2, R2):
        self.chi = [(i, j, k, int(v)) for i, j, k, v in chi.nonzero()]
        self.L1, self.R1, self.L2, self.R2 = L1, R1, L2, R2

    def __call__(self, x, y):
        out = np.zeros(np.broadcast_shapes(x.shape, y.shape), dtype=np.int64)
        for i, j, k, v in self.chi:
            out[:, k] += v * x[:, i] * y[:, j]
        xv, yv = x[:, 2:], y[:, 2:]
        out[:, 2:] += (x[:, :1] * (yv @ self.L1.T) + y[:, :1] * (xv @ self.R1.T)
                       + x[:, 1:2] * np.einsum("bkj,bj->bk", self.L2, yv)
                       + y[:, 1:2] * np.einsum("bkj,bj->bk", self.R2, xv))
        return out


def _det3(a):
    return (a[:, 0, 0] * (a[:, 1, 1] * a[:, 2, 2] - a[:, 1, 2] * a[:, 2, 1])
            - a[:, 0, 1] * (a[:, 1, 0] * a[:, 2, 2] - a[:, 1, 2] * a[:, 2, 0])
            + a[:, 0, 2] * (a[:, 1, 0] * a[:, 2, 1] - a[:, 1, 1] * a[:, 2, 0]))


def _rank_at_least_3(vecs):
    """vecs: (b, r, n) integer arrays; True where rank ≥ 3 (via 3×3 minors)."""
    from itertools import combinations
    b, r, n = vecs.shape
    out = np.zeros(b, dtype=bool)
    open_ = np.arange(b)
    for rows in combinations(range(r), 3):
        for cols in combinations(range(n), 3):
            if not len(open_):
                return out
            sub = vecs[open_][:, rows, :][:, :, cols]
            hit = _det3(sub) != 0
            out[open_[hit]] = True
            open_ = open_[~hit]
    return out


def _certify_g3(mul, count, point):
    u = np.broadcast_to(np.asarray(point, dtype=np.int64), (count, len(point)))
    w = mul(u, u)
    vecs = np.stack([u, w, mul(u, w), mul(w, u), mul(w, w)], axis=1)
    if np.abs(vecs).max(initial=0) > 2 ** 19:
        raise OverflowError("certificate entries too large for int64 minors")
    return _rank_at_least_3(vecs)


def _sweep_rows(chi, entries, m, rows):
    from itertools import product

    from .gentype import gen_type

    mats = np.array([np.reshape(v, (m, m)) for v in product(entries, repeat=m * m)],
                    dtype=np.int64)
    k = len(mats)
    li, ri = np.meshgrid(np.arange(k), np.arange(k), indexing="ij")
    L2 = mats[li.ravel()]
    R2 = mats[ri.ravel()]
    report = SweepReport()
    points = [p[:m + 2] for p in _POINTS]
    for a in rows:
        for b in range(k):
            L1, R1 = mats[a], mats[b]
            g2 = g2_condition_batch(chi, np.broadcast_to(L1, L2.shape),
                                    np.broadcast_to(R1, L2.shape), L2, R2)
            pending = ~g2
            for pt in points:
                if not pending.any():
                    break
                idx = np.nonzero(pending)[0]
                mul = _BatchProduct(chi, L1, R1, L2[idx], R2[idx])
                pending[idx[_certify_g3(mul, len(idx), pt)]] = False
            report.total += len(g2)
            report.g2_true += int(g2.sum())
            report.certified += int((~g2).sum() - pending.sum())
            for idx in np.nonzero(g2 | pending)[0]:
                spec = ExtensionSpec(chi, L1.tolist(), R1.tolist(), L2[idx].tolist(),
                                     R2[idx].tolist())
                report.symbolic += 1
                if (gen_type(build_extension(spec, m + 2)) == 2) != bool(g2[idx]):
                    report.disagreements.append(spec)
    return report


def g2_sweep(chi, entries=(-1, 0, 1), m=2, jobs=1):
    """g2_condition ⇔ gen_type = 2 over all (L1, R1, L2, R2) with the given entries.

    False cases are certified by a point generating ≥ 3 dimensions; the rest
    are decided by the symbolic generation type.
    """
    k = len(entries) ** (m * m)
    if jobs <= 1:
        return _sweep_rows(chi, entries, m, range(k))
    from concurrent.futures import ProcessPoolExecutor
    chunks = [range(i, k, jobs) for i in range(jobs)]
    total = SweepReport()
    with ProcessPoolExecutor(jobs) as pool:
        for r in pool.map(_sweep_rows, [chi] * jobs, [entries] * jobs, [m] * jobs, chunks):
            total.total += r.total
            total.g2_true += r.g2_true
            total.certified += r.certified
            total.symbolic += r.symbolic
            total.disagreements.extend(r.disagreements)
    return total


__all__ = [
    "SizeMismatch", "NotNormalForm", "RowMismatch", "HypothesisViolated", "ExtensionSpec",
    "BDForm", "is_normal_form", "zero_spec", "scalar_spec", "build_extension", "g2_condition",
    "g2_condition_batch", "g2_completion", "cubic_roots", "conjugate_base", "preconjugation",
    "normal_base", "reduce_extension", "normalize_BD", "SweepReport", "g2_sweep",
]
