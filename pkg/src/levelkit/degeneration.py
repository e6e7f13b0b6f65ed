"""Parametrized-basis contractions, witness verification, IW contractions and
closed sets invariant under lower triangular basis changes."""

import re
from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import (
    AlgebraStructure, ParseError, first_differing_constant, parse_structure_lines,
    serialize_structure, structure_in_basis,
)
from .exact import (
    LaurentPoly, MPoly, RatFunc, SingularMatrix, determinant, format_scalar, kernel_basis,
    rank_exact, solve_left, to_scalar,
)


class PoleAtZero(ArithmeticError):
    def __init__(self, i, j, k, exponent):
        super().__init__(f"coordinate of E{k} in E{i}*E{j} has t^{exponent}")
        self.i, self.j, self.k, self.exponent = i, j, k, exponent


class SingularBasis(SingularMatrix):
    pass


class NotASubalgebra(ValueError):
    pass


# ---------------------------------------------------------- parametrized bases

class ParametrizedBasis:
    """Rows E_i^t = Σ_j coeffs[i][j] e_j with LaurentPoly entries."""

    __slots__ = ("dim", "coeffs")

    def __init__(self, coeffs):
        rows = [[LaurentPoly.lift(c) for c in row] for row in coeffs]
        n = len(rows)
        if n == 0 or any(len(r) != n for r in rows):
            raise ValueError("basis must be a square matrix")
        self.dim = n
        self.coeffs = tuple(tuple(r) for r in rows)

    @classmethod
    def constant(cls, rows):
        return cls([[LaurentPoly.const(to_scalar(c)) for c in row] for row in rows])

    @classmethod
    def diagonal_powers(cls, powers, rows=None):
        """E_i = t^{powers[i]} · rows[i] (rows default to the standard basis)."""
        n = len(powers)
        rows = rows or [[int(i == j) for j in range(n)] for i in range(n)]
        return cls([[LaurentPoly.monomial(to_scalar(c), p) if c else LaurentPoly() for c in row]
                    for row, p in zip(rows, powers)])

    def determinant(self):
        return determinant([list(r) for r in self.coeffs])

    def at(self, t):
        t = to_scalar(t)
        return [[c.evaluate(t) for c in row] for row in self.coeffs]

    def __eq__(self, other):
        return isinstance(other, ParametrizedBasis) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return "ParametrizedBasis(" + "; ".join(_format_basis_row(r) for r in self.coeffs) + ")"


@dataclass
class DegenerationWitness:
    source: AlgebraStructure
    basis: ParametrizedBasis
    target: AlgebraStructure
    label: str = ""


@dataclass
class Verdict:
    ok: bool
    message: str = ""
    first_difference: object = None
    pole: object = None
    limit: object = None

    def __bool__(self):
        return self.ok


def contract_along(source, basis):
    """Limit at t = 0 of the structure constants of source in the basis E^t."""
    n = source.dim
    if basis.dim != n:
        raise ValueError("dimension mismatch")
    if basis.determinant().is_zero():
        raise SingularBasis("basis determinant vanishes identically")
    rows = [list(r) for r in basis.coeffs]
    pairs = []
    rhs = []
    for i in range(n):
        for j in range(n):
            v = source.product(rows[i], rows[j])
            if any(not c.is_zero() for c in v):
                pairs.append((i, j))
                rhs.append([RatFunc(c) for c in v])
    c = [[RatFunc(x) for x in r] for r in rows]
    consts = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]
    if rhs:
        sols = solve_left(c, rhs)
        for (i, j), x in zip(pairs, sols):
            for k, f in enumerate(x):
                if f.is_zero():
                    continue
                o = f.order_at_zero()
                if o < 0:
                    raise PoleAtZero(i + 1, j + 1, k + 1, o)
                consts[i][j][k] = f.value_at_zero()
    return AlgebraStructure(n, consts)


def verify_witness(w):
    try:
        limit = contract_along(w.source, w.basis)
    except PoleAtZero as e:
        return Verdict(False, str(e), pole=(e.i, e.j, e.k, e.exponent))
    except SingularBasis as e:
        return Verdict(False, str(e))
    if limit.dim != w.target.dim:
        return Verdict(False, "dimension mismatch", limit=limit)
    diff = first_differing_constant(limit, w.target)
    if diff is None:
        return Verdict(True, "VERIFIED", limit=limit)
    i, j, k = diff
    return Verdict(
        False,
        f"limit differs at mu_{{{i},{j}}}^{k}: {format_scalar(limit.const(i, j, k))} "
        f"vs {format_scalar(w.target.const(i, j, k))}",
        first_difference=diff,
        limit=limit,
    )


# --------------------------------------------------------------- IW contraction

def _in_span(rows, v):
    return rank_exact(rows + [v]) == rank_exact(rows)


def iw_contraction(a, subalgebra):
    """Contract along (b_1, …, b_m, t·c_1, …, t·c_{n-m}) for the given subalgebra
    vectors b and a coordinate complement c; the result keeps the subalgebra in
    the leading coordinates."""
    n = a.dim
    sub = [[to_scalar(x) for x in v] for v in subalgebra]
    m = len(sub)
    if m and rank_exact(sub) < m:
        raise NotASubalgebra("vectors are not independent")
    for u in sub:
        for w in sub:
            if not _in_span(sub, a.product(u, w)):
                raise NotASubalgebra("span is not closed under the product")
    rows = [list(v) for v in sub]
    for j in range(n):
        e = [Fraction(int(k == j)) for k in range(n)]
        if len(rows) < n and rank_exact(rows + [e]) > len(rows):
            rows.append(e)
    powers = [0] * m + [1] * (n - m)
    result = contract_along(a, ParametrizedBasis.diagonal_powers(powers, rows))
    # trivial singular extension of the subalgebra
    for i, j, k, _ in result.nonzero():
        if i >= m and j >= m:
            raise ArithmeticError("complement ideal does not square to zero")
        if k < m and (i >= m or j >= m):
            raise ArithmeticError("complement is not an ideal")
    base = structure_in_basis(a, rows) if m else None
    for i in range(m):
        for j in range(m):
            for k in range(m):
                if result.constants[i][j][k] != base.constants[i][j][k]:
                    raise ArithmeticError("subalgebra constants changed")
    return result


# ------------------------------------------------------------------ closed sets

def mu_index(n, i, j, k):
    """Variable index of μ_{i,j}^k (1-based) among n³ symbols."""
    return ((i - 1) * n + (j - 1)) * n + (k - 1)


def _linear_form(n, coeffs):
    """MPoly from {(i, j, k): c}."""
    nv = n ** 3
    terms = {}
    for (i, j, k), c in coeffs.items():
        e = [0] * nv
        e[mu_index(n, i, j, k)] = 1
        terms[tuple(e)] = terms.get(tuple(e), 0) + to_scalar(c)
    return MPoly(nv, terms)


@dataclass
class ClosedSet:
    dim: int
    equations: list = field(default_factory=list)
    name: str = ""

    def evaluate(self, a):
        point = [c for plane in a.constants for row in plane for c in row]
        return [eq.evaluate(point) for eq in self.equations]


def rset_contains(r, a):
    if r.dim != a.dim:
        raise ValueError("dimension mismatch")
    return all(v == 0 for v in r.evaluate(a))


def _linear_matrix(r):
    """Coefficient matrix of a homogeneous linear ClosedSet, or None."""
    n = r.dim
    nv = n ** 3
    mat = []
    for eq in r.equations:
        row = [Fraction(0)] * nv
        for e, c in eq.terms.items():
            if sum(e) != 1:
                return None
            row[e.index(1)] = c
        mat.append(row)
    return mat


def _structure_from_vector(n, vec):
    return AlgebraStructure(n, [[[vec[mu_index(n, i, j, k)] for k in range(1, n + 1)]
                                 for j in range(1, n + 1)] for i in range(1, n + 1)])


def _transform_constants(n, mu_vec, g, ginv):
    """Constants of g*μ where μ, g, g⁻¹ have entries in a common ring."""
    zero = g[0][0] * 0
    cols = [[ginv[r][i] for r in range(n)] for i in range(n)]
    out = [zero] * (n ** 3)
    for i in range(n):
        for j in range(n):
            v = [zero] * n
            for p in range(n):
                if _zero(cols[i][p]):
                    continue
                for q in range(n):
                    if _zero(cols[j][q]):
                        continue
                    f = cols[i][p] * cols[j][q]
                    for s in range(n):
                        c = mu_vec[mu_index(n, p + 1, q + 1, s + 1)]
                        if c:
                            v[s] = v[s] + f * c
            for k in range(n):
                acc = zero
                for s in range(n):
                    if not _zero(g[k][s]) and not _zero(v[s]):
                        acc = acc + g[k][s] * v[s]
                out[mu_index(n, i + 1, j + 1, k + 1)] = acc
    return out


def _zero(x):
    return x.is_zero() if isinstance(x, MPoly) else x == 0


@dataclass
class InvarianceVerdict:
    ok: bool
    message: str = ""
    transformation: object = None
    point: object = None

    def __bool__(self):
        return self.ok


def rset_lt_invariance(r):
    """Check that the linear closed set r is stable under the torus and the
    elementary lower unipotents I + c·E_{a,b} (a > b), which generate the
    lower triangular group; returns a counterexample specialization on failure."""
    n = r.dim
    mat = _linear_matrix(r)
    if mat is None:
        raise NotImplementedError("invariance check needs homogeneous linear equations")
    nv = n ** 3
    params = kernel_basis(mat) if mat else [[Fraction(int(i == j)) for j in range(nv)]
                                            for i in range(nv)]
    # torus: constants scale by d_k / (d_i d_j); equations are cleared by Π d_l²
    for p in params:
        for ridx, row in enumerate(mat):
            total = MPoly.zero(n)
            for i in range(1, n + 1):
                for j in range(1, n + 1):
                    for k in range(1, n + 1):
                        idx = mu_index(n, i, j, k)
                        c = row[idx] * p[idx]
                        if not c:
                            continue
                        e = [2] * n
                        e[i - 1] -= 1
                        e[j - 1] -= 1
                        e[k - 1] += 1
                        total = total + MPoly(n, {tuple(e): c})
            if not total.is_zero():
                diag = [Fraction(l + 2) for l in range(n)]
                g = [[diag[x] if x == y else Fraction(0) for y in range(n)] for x in range(n)]
                return InvarianceVerdict(
                    False, f"equation {ridx + 1} fails under diagonal scaling",
                    transformation=g, point=_structure_from_vector(n, p))
    # elementary lower unipotents
    c = MPoly.var(1, 0)
    one = MPoly.const(1, 1)
    zero = MPoly.zero(1)
    for a_ in range(n):
        for b_ in range(a_):
            g = [[one if x == y else zero for y in range(n)] for x in range(n)]
            gi = [[one if x == y else zero for y in range(n)] for x in range(n)]
            g[a_][b_] = c
            gi[a_][b_] = -c
            for p in params:
                mu_vec = [MPoly.const(1, x) if x else 0 for x in p]
                out = _transform_constants(n, mu_vec, g, gi)
                for ridx, row in enumerate(mat):
                    total = zero
                    for idx, coef in enumerate(row):
                        if coef and not _zero(out[idx]):
                            total = total + out[idx].scale(coef)
                    if not total.is_zero():
                        gnum = [[Fraction(int(x == y)) for y in range(n)] for x in range(n)]
                        gnum[a_][b_] = Fraction(1)
                        return InvarianceVerdict(
                            False,
                            f"equation {ridx + 1} fails under e{b_ + 1} -> e{b_ + 1} + c e{a_ + 1}",
                            transformation=gnum, point=_structure_from_vector(n, p))
    return InvarianceVerdict(True, "invariant")


class _Builder:
    """Accumulates linear equations on the constants μ_{i,j}^k."""

    def __init__(self, n):
        self.n = n
        self.eqs = []

    def zero(self, i, j, k):
        self.eqs.append({(i, j, k): 1})

    def equal(self, lhs, rhs):
        """Σ lhs = Σ rhs with lhs, rhs as {(i, j, k): coeff}."""
        eq = dict(lhs)
        for key, c in rhs.items():
            eq[key] = eq.get(key, 0) - to_scalar(c)
        eq = {k: v for k, v in eq.items() if v}
        if eq:
            self.eqs.append(eq)

    def product_is(self, i, j, allowed):
        """μ(e_i, e_j) has coordinates given by `allowed`: k -> dict or None (free)."""
        for k in range(1, self.n + 1):
            spec = allowed.get(k, {})
            if spec is None:
                continue
            self.equal({(i, j, k): 1}, spec)

    def build(self, name):
        return ClosedSet(self.n, [_linear_form(self.n, e) for e in self.eqs], name)


def rset_level1(n):
    b = _Builder(n)
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            for k in range(1, n + 1):
                if (i, j, k) != (1, 1, n):
                    b.zero(i, j, k)
    return b.build("level1")


def rset_a3ext(n):
    b = _Builder(n)
    b.product_is(1, 1, {n: None})
    for i in range(2, n + 1):
        for j in range(2, n + 1):
            b.product_is(i, j, {})
    b.product_is(1, n, {})
    b.product_is(n, 1, {})
    for i in range(2, n):
        b.product_is(1, i, {i: {(1, 2, 2): 1}, n: None})
        b.product_is(i, 1, {i: {(1, 2, 2): -1}, n: {(1, i, n): -1}})
    return b.build("A3ext")


def rset_a1(n, alpha):
    alpha = to_scalar(alpha)
    b = _Builder(n)
    b.product_is(1, 1, {1: None, n: None})
    for i in range(2, n + 1):
        for j in range(2, n + 1):
            b.product_is(i, j, {})
    for i in range(2, n + 1):
        b.product_is(1, i, {i: {(1, 1, 1): alpha}})
        b.product_is(i, 1, {i: {(1, 1, 1): 1 - alpha}})
    return b.build("A1")


def rset_a2(n):
    b = _Builder(n)
    b.product_is(1, 1, {n: None})
    for i in range(2, n + 1):
        for j in range(2, n + 1):
            b.product_is(i, j, {})
    for i in range(2, n + 1):
        if i != n:
            b.product_is(1, i, {i: {(1, n, n): 1}})
        else:
            b.product_is(1, n, {n: None})
        b.product_is(i, 1, {i: {(1, n, n): -1}})
    return b.build("A2")


def rset_b2(n, alpha):
    alpha = to_scalar(alpha)
    b = _Builder(n)
    b.zero(1, 1, 1)
    for i in range(2, n + 1):
        for j in range(2, n + 1):
            b.product_is(i, j, {})
    s = {(1, 2, 2): 1, (2, 1, 2): 1}
    for i in range(2, n + 1):
        b.product_is(1, i, {i: {key: alpha * c for key, c in s.items()}})
        b.product_is(i, 1, {i: {key: (1 - alpha) * c for key, c in s.items()}})
    return b.build("B2")


def rset_d2(n, alpha, beta):
    alpha, beta = to_scalar(alpha), to_scalar(beta)
    b = _Builder(n)
    for i in range(2, n + 1):
        for j in range(2, n + 1):
            b.product_is(i, j, {})
    for i in range(2, n + 1):
        b.product_is(1, i, {i: {(1, 1, 1): alpha}})
        b.product_is(i, 1, {i: {(1, 1, 1): beta}})
    return b.build("D2")


def rset_a3ext_ab(n, alpha, beta):
    """The (α, β)-dependent companion set used for k²⋊_{α,β}A_3 ⊕ k^{n-4}."""
    alpha, beta = to_scalar(alpha), to_scalar(beta)
    b = _Builder(n)
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i >= 3 or j >= 3 or (i, j) == (2, 2):
                b.product_is(i, j, {})
    for k in range(1, n):
        b.zero(1, 2, k)
        b.zero(2, 1, k)
    b.equal({(2, 1, n): alpha}, {(1, 2, n): beta})
    for k in range(1, n - 1):
        b.zero(1, 1, k)
    return b.build("A3ext_ab")


SHIPPED_RSETS = {
    "level1": lambda n: rset_level1(n),
    "A3ext": lambda n: rset_a3ext(n),
    "A1": lambda n, alpha=Fraction(1, 3): rset_a1(n, alpha),
    "A2": lambda n: rset_a2(n),
    "B2": lambda n, alpha=Fraction(1, 3): rset_b2(n, alpha),
    "D2": lambda n, alpha=Fraction(1, 3), beta=Fraction(2, 5): rset_d2(n, alpha, beta),
}


# ------------------------------------------------------------------ .deg format

_LTERM_RE = re.compile(r"^([+-]?(?:\d+(?:/\d+)?)?)(?:t(?:\^([+-]?\d+))?)?e(\d+)$")


def _format_basis_row(row):
    parts = []
    for j, c in enumerate(row, start=1):
        for e in sorted(c.terms):
            coeff = c.terms[e]
            tpart = "" if e == 0 else ("t" if e == 1 else f"t^{e}")
            cpart = "" if coeff == 1 else format_scalar(coeff)
            parts.append(" ".join(x for x in (cpart, tpart, f"e{j}") if x))
    return " + ".join(parts) if parts else "0"


def parse_basis_line(line, n, lineno=None):
    m = re.match(r"^E(\d+)\s*=\s*(.+)$", line.strip())
    if not m:
        raise ParseError(f"cannot parse basis line {line!r}", lineno)
    i = int(m.group(1))
    rhs = re.sub(r"(?<=\S)\s+-\s+", " + -", m.group(2).strip())
    row = [LaurentPoly() for _ in range(n)]
    for term in (t.strip() for t in rhs.split("+")):
        if not term:
            continue
        tm = _LTERM_RE.match(re.sub(r"\s+", "", term))
        if not tm:
            raise ParseError(f"bad basis term {term!r}", lineno)
        sign = tm.group(1)
        coeff = Fraction(-1 if sign == "-" else 1) if sign in ("", "+", "-") else Fraction(sign)
        if "t" in term:
            power = int(tm.group(2)) if tm.group(2) is not None else 1
        else:
            power = 0
        j = int(tm.group(3))
        if not 1 <= j <= n:
            raise ParseError(f"basis index e{j} exceeds dim {n}", lineno)
        row[j - 1] = row[j - 1] + LaurentPoly.monomial(coeff, power)
    return i, row


def parse_witness(text):
    lines = text.splitlines()
    label = ""
    sections = {"source": [], "basis": [], "target": []}
    starts = {}
    current = None
    for idx, raw in enumerate(lines, start=1):
        stripped = raw.split("#", 1)[0].strip()
        if stripped.startswith("label:"):
            label = raw.split(":", 1)[1].strip()
            current = None
            continue
        m = re.match(r"^(source|basis|target):\s*$", stripped)
        if m:
            current = m.group(1)
            starts[current] = idx + 1
            continue
        if not stripped:
            if current:
                sections[current].append("")
            continue
        if current is None:
            raise ParseError(f"content outside a section: {stripped!r}", idx)
        sections[current].append(raw)
    for s in ("source", "basis", "target"):
        if s not in starts:
            raise ParseError(f"missing section '{s}:'")
    source = parse_structure_lines(sections["source"], starts["source"])
    target = parse_structure_lines(sections["target"], starts["target"])
    n = source.dim
    rows = [None] * n
    for off, line in enumerate(sections["basis"]):
        body = line.split("#", 1)[0].strip()
        if not body:
            continue
        i, row = parse_basis_line(body, n, starts["basis"] + off)
        if not 1 <= i <= n or rows[i - 1] is not None:
            raise ParseError(f"bad or repeated basis vector E{i}", starts["basis"] + off)
        rows[i - 1] = row
    if any(r is None for r in rows):
        raise ParseError("basis section must define E1..En")
    return DegenerationWitness(source, ParametrizedBasis(rows), target, label)


def _indent(text):
    return "".join("  " + line + "\n" for line in text.splitlines())


def serialize_witness(w):
    out = []
    if w.label:
        out.append(f"label: {w.label}\n")
    out.append("source:\n" + _indent(serialize_structure(w.source)))
    out.append("basis:\n" + "".join(f"  E{i} = {_format_basis_row(r)}\n"
                                     for i, r in enumerate(w.basis.coeffs, start=1)))
    out.append("target:\n" + _indent(serialize_structure(w.target)))
    return "".join(out)


def load_witness(path):
    with open(path, encoding="utf-8") as fh:
        return parse_witness(fh.read())


def witness_library():
    """All shipped witness files as (filename, witness), sorted by filename."""
    from importlib import resources
    root = resources.files("levelkit") / "witnesses"
    out = []
    for entry in sorted(root.iterdir(), key=lambda p: p.name):
        if entry.name.endswith(".deg"):
            out.append((entry.name, parse_witness(entry.read_text(encoding="utf-8"))))
    return out


__all__ = [
    "PoleAtZero", "SingularBasis", "NotASubalgebra", "ParametrizedBasis",
    "DegenerationWitness", "Verdict", "contract_along", "verify_witness", "iw_contraction",
    "ClosedSet", "mu_index", "rset_contains", "rset_lt_invariance", "InvarianceVerdict",
    "rset_level1", "rset_a3ext", "rset_a1", "rset_a2", "rset_b2", "rset_d2", "rset_a3ext_ab",
    "SHIPPED_RSETS", "parse_witness", "serialize_witness", "load_witness", "witness_library",
]
