"""Level-1 and level-2 classification lists, identity filters, bilinear-form
level chains and the A_3-bilinear form contraction."""

import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iproduct

import sympy

from .algebra import (annihilator_dim, invariants, is_anticommutative,
                      is_commutative, is_jordan, is_left_alternative, structure_in_basis)
from .catalog import catalog
from .degeneration import (DegenerationWitness, ParametrizedBasis, contract_along,
                           verify_witness)
from .exact import LaurentPoly, kernel_basis, mat_inverse, rank_exact, to_scalar
from .gentype import gen_type, standard_contraction, subalgebra_dim_at
from .spectra import k_representative, kstar_representative


class NormalFormViolated(ValueError):
    pass


class AntisymmetricInput(ValueError):
    pass


class NotBilinearForm(ValueError):
    pass


class UnknownPredicate(ValueError):
    pass


# ------------------------------------------------------------------ rows

_NAMES = {s: sympy.Symbol(s) for s in ("alpha", "beta", "gamma", "delta")}


def _sx(text):
    if isinstance(text, sympy.Basic):
        return text
    return sympy.sympify(text, locals=_NAMES)


def _sym_text(e):
    return str(e).replace(" ", "")


@dataclass(frozen=True)
class ClassRow:
    """A catalog family restricted to a parameter domain.

    params are expressions in `symbols`; kset is None or (kind, groups) with
    kind "K" or "K*"; excludes lists expressions that must not vanish.
    """

    notation: str
    name: str
    params: tuple = ()
    symbols: tuple = ()
    kset: object = None
    excludes: tuple = ()
    min_dim: int = 2
    max_dim: object = None
    gen_type: int = 2

    @property
    def constraint(self):
        if not self.symbols:
            return "-"
        names = ",".join(self.symbols)
        if self.kset is not None:
            kind, groups = self.kset
            text = f"({names}) in {kind}_{{{','.join(map(str, groups))}}}"
        elif not self.excludes:
            text = f"{names} in k"
        else:
            text = ""
        parts = [text] if text else []
        parts += [_exclusion_text(e) for e in self.excludes]
        return ", ".join(parts)

    def _exprs(self):
        return [_sx(p) for p in self.params]

    def admits(self, values):
        sub = dict(zip(sympy.symbols(self.symbols), [sympy.Rational(str(v)) for v in values]))
        if any(_sx(e).subs(sub) == 0 for e in self.excludes):
            return False
        if self.kset is None:
            return True
        kind, groups = self.kset
        vals = [to_scalar(v) for v in self.param_values(values)]
        if kind == "K*":
            return any(vals) and kstar_representative(vals, groups)[1] == tuple(vals)
        return k_representative(vals, groups) == tuple(vals)

    def param_values(self, values=()):
        values = [to_scalar(v) for v in values]
        if len(values) != len(self.symbols):
            raise ValueError(f"{self.notation} takes {len(self.symbols)} parameter values")
        sub = {sympy.Symbol(s): sympy.Rational(v.numerator, v.denominator)
               for s, v in zip(self.symbols, values)}
        out = []
        for e in self._exprs():
            r = sympy.nsimplify(e.subs(sub))
            out.append(Fraction(int(r.p), int(r.q)))
        return out

    def build(self, values=(), n=None):
        n = self.min_dim if n is None else n
        return catalog(self.name, self.param_values(values), n)

    def samples(self, count=5):
        """Deterministic admissible parameter values, at most `count` of them."""
        if not self.symbols:
            return [()]
        pool = [Fraction(x) for x in ("1/3", "-2", "1", "0", "1/2", "3", "-1/5", "2/7")]
        out = []
        seen = set()
        for combo in iproduct(pool, repeat=len(self.symbols)):
            vals = self._normalized(combo)
            if vals is None or vals in seen:
                continue
            seen.add(vals)
            out.append(vals)
            if len(out) == count:
                break
        return out

    def _normalized(self, combo):
        combo = tuple(combo)
        if self.kset is not None and self.params == self.symbols:
            kind, groups = self.kset
            if kind == "K*":
                if not any(combo):
                    return None
                combo = kstar_representative(combo, groups)[1]
            else:
                combo = k_representative(combo, groups)
        try:
            if not self.admits(combo):
                return None
            self.build(combo)
        except ValueError:
            return None
        return combo

    def render(self):
        return f"{self.notation} | {self.name}[{','.join(self.params)}] | {self.constraint}"


def _exclusion_text(expr):
    e = sympy.expand(_sx(expr))
    free = sorted(e.free_symbols, key=str)
    if len(free) == 1 and sympy.degree(e, free[0]) == 1:
        (root,) = sympy.solve(e, free[0])
        return f"{free[0]} != {_sym_text(root)}"
    const, rest = e.as_coeff_Add()
    return f"{_sym_text(rest)} != {_sym_text(-const)}"


def _pad(d):
    return "k" if d == 1 else f"k^{d}"


def _plus_k(d):
    return "" if d == 0 else "+" + _pad(d)


# --------------------------------------------------------------- level 1

def level1_list(n):
    if n < 2:
        raise ValueError("n must be at least 2")
    rows = [ClassRow(f"A_3{_plus_k(n - 2)}", "A3+k", min_dim=n)]
    if n >= 3:
        rows.append(ClassRow(f"n_3{_plus_k(n - 3)}", "n3", min_dim=n, gen_type=1))
    rows.append(ClassRow("p^-", "p_minus", min_dim=n, gen_type=1))
    rows.append(ClassRow("nu^{alpha}", "nu", ("alpha",), ("alpha",), min_dim=n, gen_type=1))
    return rows


# --------------------------------------------------------------- level 2

_AB = ("alpha", "beta")


def level2_list(n):
    if n < 2:
        raise ValueError("n must be at least 2")
    if n == 2:
        return [
            ClassRow("A_1^{alpha}", "A1", ("alpha",), ("alpha",)),
            ClassRow("B_2^{alpha}", "B2", ("alpha",), ("alpha",)),
            ClassRow("D_2^{alpha,beta}", "D2", _AB, _AB, excludes=("alpha+beta-1",)),
            ClassRow("A_2", "A2"),
            ClassRow("E_4", "E4", gen_type=1),
        ]
    k = _pad(n - 2)
    small = n == 3
    rows = [
        ClassRow(f"{k} x|_{{alpha}} A_1^{{alpha}}", "kA1", ("alpha", "alpha"), ("alpha",),
                 min_dim=n),
        ClassRow(f"{k} x|_0^t B_2^{{alpha}}", "kB2t", ("0", "alpha"), ("alpha",), min_dim=n),
        ClassRow(f"{k} x|_0^t D_2^{{alpha,beta}}", "kD2t", ("0", "alpha", "beta"), _AB,
                 excludes=("alpha+beta-1",), min_dim=n),
        ClassRow(f"F^{{alpha,beta}}{_plus_k(n - 3)}", "F+k", _AB, _AB, ("K*", (2,)),
                 min_dim=n),
        ClassRow("T_0^{2,bar(alpha,beta)}", "T0_2", _AB, _AB,
                 ("K*", (2,) if small else (1, 1)), min_dim=n, gen_type=1),
        ClassRow("T_1^{2,bar(alpha,beta)}", "T1_2", _AB, _AB,
                 ("K", (2,) if small else (1, 1)), min_dim=n, gen_type=1),
        ClassRow(f"{k} x|_1 A_2", "kA2", ("1",), min_dim=n),
    ]
    if n == 4:
        rows.append(ClassRow("T_0^{3}", "T0_3", min_dim=n, gen_type=1))
    if n >= 5:
        rows.append(ClassRow("T_0^{2,2}", "T0_22", min_dim=n, gen_type=1))
    rows.append(ClassRow(f"{k} x| E_4", "kE4", min_dim=n, gen_type=1))
    if n >= 5:
        rows.append(ClassRow(f"eta_2{_plus_k(n - 5)}", "eta+k", ("2",), min_dim=n,
                             gen_type=1))
    return rows


def infty_level2_list():
    """Stable classes of ∞-level 2 with their minimal carrier dimensions."""
    return [
        ClassRow("T_0^{2,bar(1,0)}", "T0_2", ("1", "0"), min_dim=3, gen_type=1),
        ClassRow("T_0^{2,2}", "T0_22", min_dim=5, gen_type=1),
        ClassRow("eta_2", "eta+k", ("2",), min_dim=5, gen_type=1),
        ClassRow("F^{alpha,beta}", "F+k", _AB, _AB, ("K*", (2,)), min_dim=3),
    ]


def render_rows(rows):
    return "".join(r.render() + "\n" for r in rows)


# ------------------------------------------------------- identity filters

_PREDICATES = {
    "commutative": is_commutative,
    "anticommutative": is_anticommutative,
    "jordan": is_jordan,
    "left_alternative": is_left_alternative,
}


def _symbolic_constants(row, n):
    """Structure constants as sympy expressions; entries are affine in the symbols."""
    syms = sympy.symbols(row.symbols) if row.symbols else ()
    if isinstance(syms, sympy.Symbol):
        syms = (syms,)
    base = [Fraction(1, p) for p in (3, 7, 11, 13, 17)][:len(syms)]

    def at(vals):
        return catalog(row.name, row.param_values(vals), n).constants

    c0 = at(base)
    slopes = []
    for q in range(len(syms)):
        pt = list(base)
        pt[q] += 1
        cq = at(pt)
        slopes.append([[[cq[i][j][k] - c0[i][j][k] for k in range(n)] for j in range(n)]
                       for i in range(n)])

    def expr(i, j, k):
        e = sympy.Rational(str(c0[i][j][k]))
        for q, s in enumerate(syms):
            e += sympy.Rational(str(slopes[q][i][j][k])) * (s - sympy.Rational(str(base[q])))
        return sympy.expand(e)

    consts = [[[expr(i, j, k) for k in range(n)] for j in range(n)] for i in range(n)]
    check = [b + Fraction(2 * q + 3, 5) for q, b in enumerate(base)]
    sub = dict(zip(syms, [sympy.Rational(str(v)) for v in check]))
    cc = at(check)
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if consts[i][j][k].subs(sub) != sympy.Rational(str(cc[i][j][k])):
                    raise ArithmeticError(f"{row.name} is not affine in its parameters")
    return syms, consts


def _sym_product(c, x, y):
    n = len(x)
    return [sympy.expand(sum(c[i][j][k] * x[i] * y[j] for i in range(n) for j in range(n)
                             if c[i][j][k] != 0))
            for k in range(n)]


def _identity_equations(predicate, consts, n):
    """Polynomial conditions on the parameters for the identity to hold."""
    eqs = []
    if predicate in ("commutative", "jordan"):
        eqs += [consts[i][j][k] - consts[j][i][k]
                for i in range(n) for j in range(i + 1, n) for k in range(n)]
    if predicate == "anticommutative":
        eqs += [consts[i][j][k] + consts[j][i][k]
                for i in range(n) for j in range(i, n) for k in range(n)]
    if predicate in ("jordan", "left_alternative"):
        xs = sympy.symbols(f"x1:{n + 1}")
        ys = sympy.symbols(f"y1:{n + 1}")
        xx = _sym_product(consts, xs, xs)
        if predicate == "left_alternative":
            left = _sym_product(consts, xx, ys)
            right = _sym_product(consts, xs, _sym_product(consts, xs, ys))
        else:
            left = _sym_product(consts, _sym_product(consts, xx, ys), xs)
            right = _sym_product(consts, xx, _sym_product(consts, ys, xs))
        for l, r in zip(left, right):
            d = sympy.expand(l - r)
            if d != 0:
                eqs += sympy.Poly(d, *xs, *ys).coeffs()
    return [sympy.expand(e) for e in eqs if sympy.expand(e) != 0]


def _restrict(row, sub, notation_values):
    params = tuple(_sym_text(_sx(p).subs(sub)) for p in row.params)
    free = sorted({str(s) for p in params for s in _sx(p).free_symbols},
                  key=row.symbols.index)
    excludes = []
    for e in row.excludes:
        v = sympy.expand(_sx(e).subs(sub))
        if v == 0:
            return None
        if v.free_symbols:
            excludes.append(_sym_text(v))
    notation = row.notation
    for s, v in notation_values.items():
        notation = re.sub(rf"\b{s}\b", v, notation)
    return ClassRow(notation, row.name, params, tuple(free), None, tuple(excludes),
                    row.min_dim, row.max_dim, row.gen_type)


def _solve_row(row, predicate, n):
    syms, consts = _symbolic_constants(row, n)
    eqs = _identity_equations(predicate, consts, n)
    if not eqs:
        return [row]
    if not syms or any(not e.free_symbols for e in eqs):
        return []
    sols = sympy.solve(eqs, list(syms)[::-1], dict=True)
    out = []
    seen = set()
    for sol in sols:
        if any(not v.is_rational for v in sol.values() if not v.free_symbols):
            continue
        vals = {s: _sx(sol.get(s, s)) for s in syms}
        free = set().union(*(v.free_symbols for v in vals.values()))
        if row.kset is not None:
            kind, groups = row.kset
            if free and kind == "K*" and all(
                    v == 0 or (v / next(iter(free))).is_number for v in vals.values()) \
                    and len(free) == 1:
                vals = {s: v.subs(next(iter(free)), 1) for s, v in vals.items()}
                free = set()
            if free:
                raise NotImplementedError("partial restriction of a K-set family")
            point = [Fraction(str(vals[s])) for s in syms]
            if kind == "K*":
                if not any(point):
                    continue
                point = list(kstar_representative(point, groups)[1])
            else:
                point = list(k_representative(point, groups))
            vals = {s: sympy.Rational(str(p)) for s, p in zip(syms, point)}
        key = tuple(str(vals[s]) for s in syms)
        if key in seen:
            continue
        seen.add(key)
        r = _restrict(row, vals, {str(s): _sym_text(v) for s, v in vals.items()})
        if r is not None:
            out.append(r)
    out.sort(key=lambda r: [sympy.Rational(p) if not _sx(p).free_symbols else 0
                            for p in r.params], reverse=True)
    return out


def filtered_level2(n, predicate):
    """Rows of level2_list(n), restricted to the parameters satisfying the identity."""
    if predicate not in _PREDICATES:
        raise UnknownPredicate(predicate)
    out = []
    for row in level2_list(n):
        out.extend(_solve_row(row, predicate, n))
    return out


def check_filtered(rows, predicate, n):
    """Each surviving row satisfies the predicate at all its samples."""
    test = _PREDICATES[predicate]
    return all(test(r.build(v, n)) for r in rows for v in r.samples())


# ----------------------------------------------- A_3-bilinear contraction

def _unit(n, i):
    return [Fraction(int(k == i)) for k in range(n)]


def a3_bilinear_contraction(a, ideal=None):
    """Limit along E_i = t e_i (i < n), E_n = t² e_n.

    `ideal` = (p, q), 1-based, names the coordinates playing e_{n−1}, e_n;
    they are moved to the end first.
    """
    n = a.dim
    if n < 2:
        raise NormalFormViolated("dimension must be at least 2")
    if ideal is not None:
        p, q = ideal
        rest = [i for i in range(1, n + 1) if i not in (p, q)]
        order = rest + [p, q]
        a = structure_in_basis(a, [_unit(n, i - 1) for i in order])
    u, v = n - 2, n - 1
    c = a.constants
    if c[u][u] != tuple(_unit(n, v)):
        raise NormalFormViolated("e_{n-1}e_{n-1} must equal e_n")
    for x, y in ((u, v), (v, u), (v, v)):
        if any(c[x][y]):
            raise NormalFormViolated(f"e_{x + 1}e_{y + 1} must vanish")
    for i in range(n - 2):
        for j in (u, v):
            if any(c[i][j][k] or c[j][i][k] for k in range(n - 2)):
                raise NormalFormViolated(f"<e_{n - 1},e_{n}> is not an ideal at e_{i + 1}")
    basis = ParametrizedBasis.diagonal_powers([1] * (n - 1) + [2])
    b = contract_along(a, basis)
    if not is_bilinear_form(b):
        raise ArithmeticError("contraction is not an algebra of a bilinear form")
    return b


# ---------------------------------------------------- bilinear form chains

def is_bilinear_form(a):
    """All products lie in a line that annihilates everything."""
    n = a.dim
    c = a.constants
    sq = [list(c[i][j]) for i in range(n) for j in range(n)]
    r = rank_exact(sq)
    if r == 0:
        return True
    if r > 1:
        return False
    w = next(row for row in sq if any(row))
    return all(not any(a.product(w, _unit(n, j))) and not any(a.product(_unit(n, j), w))
               for j in range(n))


def _form(a, w, x, y):
    """Coefficient of μ(x, y) along w."""
    p = a.product(x, y)
    k = next(i for i, c in enumerate(w) if c)
    return p[k] / w[k]


def _annihilator_basis(a):
    n = a.dim
    c = a.constants
    rows = []
    for j in range(n):
        for k in range(n):
            rows.append([c[i][j][k] for i in range(n)])
            rows.append([c[j][i][k] for i in range(n)])
    return kernel_basis(rows)


def _complete(rows, n):
    rows = [list(r) for r in rows]
    for j in range(n):
        if len(rows) == n:
            break
        e = _unit(n, j)
        if rank_exact(rows + [e]) > len(rows):
            rows.append(e)
    return rows


def _link(a, rows, scaled):
    """Witness for the basis rows with row `scaled` multiplied by t."""
    n = a.dim
    powers = [1 if i == scaled else 0 for i in range(n)]
    basis = ParametrizedBasis.diagonal_powers(powers, rows)
    target = contract_along(a, basis)
    return DegenerationWitness(a, basis, target, "bilinear")


def _radical(a, w, vecs):
    """Vectors u in span(vecs) with B(v, u) = B(u, v) = 0 for every v in vecs."""
    m = len(vecs)
    rows = []
    for v in vecs:
        rows.append([_form(a, w, v, x) for x in vecs])
        rows.append([_form(a, w, x, v) for x in vecs])
    ker = kernel_basis(rows) if rows else []
    return [[sum(k[i] * vecs[i][j] for i in range(m)) for j in range(a.dim)] for k in ker]


def _comb(*terms):
    n = len(terms[0][1])
    return [sum(c * v[j] for c, v in terms) for j in range(n)]


def _normal_basis(a):
    """Basis rows e_1..e_n with B(e_m, e_m) = 1, B(e_i, e_m) = B(e_m, e_i) = 0 for
    i ≤ m−2, B(e_{m−1}, e_{m−1}) ≠ 0, and e_{m+1}..e_n spanning Ann with e_n on A²."""
    n = a.dim
    c = a.constants
    sq = [list(c[i][j]) for i in range(n) for j in range(n)]
    w = next(row for row in sq if any(row))
    ann = _annihilator_basis(a)
    ann_rows = _complete([w], n)[:1]
    for v in ann:
        if rank_exact(ann_rows + [v]) > len(ann_rows):
            ann_rows.append(v)
    ann_rows = ann_rows[1:] + ann_rows[:1]
    comp = _complete(ann_rows, n)[len(ann_rows):]
    m = len(comp)
    cands = comp + [_comb((1, x), (1, y)) for i, x in enumerate(comp) for y in comp[i + 1:]]
    v = next((x for x in cands if _form(a, w, x, x) != 0), None)
    if v is None:
        raise AntisymmetricInput("μ(v, v) = 0 for every v")
    v = [x / _form(a, w, v, v) for x in v]
    others = []
    for x in comp:
        if rank_exact([v] + others + [x]) > len(others) + 1:
            others.append(x)
    others = [_comb((1, x), (-_form(a, w, x, v), v)) for x in others]
    if m >= 2:
        idx = next((i for i, x in enumerate(others) if _form(a, w, v, x) != 0), None)
        if idx is not None:
            x = others.pop(idx)
            x = [y / _form(a, w, v, x) for y in x]
            others = [_comb((1, y), (-_form(a, w, v, y), x)) for y in others] + [x]
        last = others[-1]
        for alpha in _small_rationals():
            cand = _comb((1, last), (alpha, v))
            if _form(a, w, cand, cand) != 0:
                others[-1] = cand
                break
    return others + [v], ann_rows, w


def _small_rationals():
    yield Fraction(0)
    for q in range(1, 50):
        for p in range(1, 50):
            for s in (1, -1):
                yield Fraction(s * p, q)


def bilinear_level_chain(a):
    """Degenerations dropping n − dim Ann by one at each step, ending at the zero algebra."""
    if not is_bilinear_form(a):
        raise NotBilinearForm("products do not lie in one annihilating line")
    if is_anticommutative(a):
        raise AntisymmetricInput("μ(v, v) = 0 for every v")
    chain = []
    cur = a
    while not cur.is_zero():
        n = cur.dim
        comp, ann_rows, w = _normal_basis(cur)
        m = len(comp)
        rows = comp + ann_rows
        if m == 1:
            chain.append(_link(cur, rows, 0))
            cur = chain[-1].target
            continue
        vecs = comp[:-1]
        rad = _radical(cur, w, vecs)
        if not rad:
            scaled = m - 1
        else:
            u = rad[0]
            rows = comp[:-2] + [u, comp[-1]] + ann_rows
            if rank_exact(rows) < n:
                raise ArithmeticError("radical vector lies in the leading span")
            scaled = m - 2
        link = _link(cur, rows, scaled)
        if n - annihilator_dim(link.target) != m - 1:
            raise ArithmeticError("chain link does not drop the annihilator codimension")
        chain.append(link)
        cur = link.target
    return chain


# ------------------------------------------------------ validation helpers

def level1_samples(n):
    """Level-1 structures at the sample parameters (ν^α at several α)."""
    out = []
    for row in level1_list(n):
        vals = row.samples(8) if row.symbols else [()]
        for v in vals:
            out.append((row, v, row.build(v, n)))
    return out


def derivation_dim(a):
    """dim Der(A); the orbit dimension is n² minus this."""
    n = a.dim
    c = a.constants
    rows = []
    # D e_i = Σ_p d[p][i] e_p, unknown d[p][i] at index p*n + i
    for i in range(n):
        for j in range(n):
            for k in range(n):
                row = [Fraction(0)] * (n * n)
                for l in range(n):
                    if c[i][j][l]:
                        row[k * n + l] += c[i][j][l]
                for p in range(n):
                    if c[p][j][k]:
                        row[p * n + i] -= c[p][j][k]
                    if c[i][p][k]:
                        row[p * n + j] -= c[i][p][k]
                if any(row):
                    rows.append(row)
    return n * n - rank_exact(rows) if rows else n * n


def separating_invariants(a):
    return (invariants(a), gen_type(a), derivation_dim(a))


def _maximal_generator(a):
    n = a.dim
    g = gen_type(a)
    cands = [_unit(n, i) for i in range(n)]
    cands += [[Fraction(1 + (i * 7 + j) % 5) for i in range(n)] for j in range(4)]
    for x in cands:
        if subalgebra_dim_at(a, x) == g:
            return x
    raise ArithmeticError("no maximal generator among the candidates")


def _is_level1(b):
    """Whether b equals a level-1 catalog structure, up to the T_n normal form."""
    from .tn import NotAbelShape, NotGenType1, level_T, recognize_T
    n = b.dim
    if b == catalog("A3+k", (), n):
        return True
    try:
        p = recognize_T(b)
    except (NotAbelShape, NotGenType1, ValueError):
        return False
    return level_T(p) == 1


def _e4_witness(a, n):
    rows = [_comb((1, _unit(n, 0)), (-1, _unit(n, 1)))] + [_unit(n, i) for i in range(1, n)]
    powers = [0, 1] + [0] * (n - 2)
    basis = ParametrizedBasis.diagonal_powers(powers, rows)
    return DegenerationWitness(a, basis, contract_along(a, basis), "E4 to p^-")


def _eta_witness(a, n):
    # η_2 ⊕ k^{n−5} → η_1 ⊕ k^{n−3} via (e_1, e_2, e_5, e_4, t e_3, e_6, ...)
    order = [0, 1, 4, 3, 2] + list(range(5, n))
    rows = [_unit(n, i) for i in order]
    basis = ParametrizedBasis.diagonal_powers([0, 0, 0, 0, 1] + [0] * (n - 5), rows)
    return DegenerationWitness(a, basis, contract_along(a, basis), "eta_2 to n_3")


def level1_witness(row, values, n):
    """A verified degeneration from the built row to a level-1 structure."""
    from .tn import level_T, primary_set_T, primary_witness_T, recognize_T
    a = row.build(values, n)
    if row.name in ("E4", "kE4"):
        w = _e4_witness(a, n)
    elif row.name == "eta+k":
        w = _eta_witness(a, n)
    elif row.gen_type == 1:
        p = recognize_T(a)
        q = next(q for q in primary_set_T(p) if level_T(q) == 1)
        w = primary_witness_T(p, q)
        if w.source != a:
            rows = _t_normal_rows(a, w.source)
            w = DegenerationWitness(a, _compose(rows, w.basis), w.target, w.label)
    else:
        basis, limit = standard_contraction(a, _maximal_generator(a))
        w = DegenerationWitness(a, basis, limit, "standard contraction")
    if not verify_witness(w):
        raise ArithmeticError(f"{row.notation}: witness does not verify")
    if not _is_level1(w.target):
        raise ArithmeticError(f"{row.notation}: target is not of level 1")
    return w


def _t_normal_rows(a, b):
    """Constant rows g with contract_along(a, g) == b for T_n structures in one orbit."""
    from .spectra import equal_mod_scaling, fs_of_matrix
    from .tn import _columns, _jordan_chains
    n = a.dim
    ma = [[a.constants[0][i][j] for i in range(1, n)] for j in range(1, n)]
    mb = [[b.constants[0][i][j] for i in range(1, n)] for j in range(1, n)]
    c = Fraction(1)
    if a.constants[0][0][0] == 0:
        s = equal_mod_scaling(fs_of_matrix(ma), fs_of_matrix(mb))
        if s is None:
            raise ArithmeticError("structures are not in the same T_n orbit")
        c = s
    ma = [[c * x for x in row] for row in ma]
    qa = _columns(_jordan_chains(ma))
    qb = _columns(_jordan_chains(mb))
    k = n - 1
    qbinv = mat_inverse(qb)
    p = [[sum(qa[i][l] * qbinv[l][j] for l in range(k)) for j in range(k)] for i in range(k)]
    rows = [[c] + [Fraction(0)] * k]
    for i in range(k):
        rows.append([Fraction(0)] + [p[j][i] for j in range(k)])
    if structure_in_basis(a, rows) != b:
        raise ArithmeticError("conjugation between T_n presentations failed")
    return rows


def _compose(rows, basis):
    n = basis.dim
    coeffs = [[sum((basis.coeffs[i][l] * LaurentPoly.const(rows[l][j]) for l in range(n)),
                   LaurentPoly()) for j in range(n)] for i in range(n)]
    return ParametrizedBasis(coeffs)


__all__ = [
    "NormalFormViolated", "AntisymmetricInput", "NotBilinearForm", "UnknownPredicate",
    "ClassRow", "level1_list", "level2_list", "infty_level2_list", "render_rows",
    "filtered_level2", "check_filtered", "a3_bilinear_contraction", "is_bilinear_form",
    "bilinear_level_chain", "level1_samples", "derivation_dim", "separating_invariants", "level1_witness",
]
