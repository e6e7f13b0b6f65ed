"""The variety T_n of generation-type-1 algebras with a square-zero ideal of
codimension 1: construction, recognition, orbits, degenerations, levels and
the tables of low levels."""

from dataclasses import dataclass
from fractions import Fraction

from .catalog import t_structure
from .degeneration import DegenerationWitness, ParametrizedBasis
from .exact import (
    LaurentPoly, kernel_basis, mat_inverse, mat_pow, mat_scalar,
    mat_sub, rank_exact, to_scalar,
)
from .partitions import Partition, dominates, enumerate_partitions, level, preceding
from .spectra import (
    FullSpecter, block_groups, canonical_matrix, equal_mod_scaling, fs_of_matrix,
    normalize_scaling,
)


class NotAbelShape(ValueError):
    pass


class NotGenType1(ValueError):
    pass


class NotPrimary(ValueError):
    pass


@dataclass(frozen=True)
class TnPoint:
    """T_r^S; for r = 0 the specter is stored in its K*-normalized form."""

    r: int
    spec: FullSpecter

    def __init__(self, r, spec):
        r = int(r)
        if r not in (0, 1):
            raise ValueError("r must be 0 or 1")
        if not isinstance(spec, FullSpecter):
            spec = FullSpecter(spec)
        if r == 0:
            spec = normalize_scaling(spec)
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "spec", spec)

    @property
    def n(self):
        return self.spec.dim + 1

    def is_nilpotent(self):
        return self.r == 0 and self.spec.is_nilpotent()

    def is_solvable(self):
        return self.r == 0

    def matrix(self):
        return canonical_matrix(self.spec)

    def structure(self):
        return build_T(self.r, self.matrix())

    def __repr__(self):
        return f"T_{self.r}^{self.spec!r}"


def build_T(r, m):
    """T_r^M with rows and columns of M indexed by e_2..e_n."""
    return t_structure(r, mat_scalar(m) if m else [])


def build_point(p):
    return p.structure()


def recognize_T(a):
    n = a.dim
    c = a.constants
    for i in range(1, n):
        for j in range(1, n):
            if any(c[i][j]):
                raise NotAbelShape(f"e{i + 1}*e{j + 1} is nonzero")
        if c[0][i][0] or c[i][0][0]:
            raise NotAbelShape(f"products of e1 and e{i + 1} leave <e2..en>")
    alpha = c[0][0][0]
    if any(c[0][0][1:]):
        raise NotGenType1("e1*e1 is not a multiple of e1")
    for i in range(1, n):
        s = [c[0][i][k] + c[i][0][k] for k in range(n)]
        if any(s[k] != (alpha if k == i else 0) for k in range(n)):
            raise NotGenType1(f"e1*e{i + 1} + e{i + 1}*e1 is not a multiple of e{i + 1}")
    m = [[c[0][i][j] for i in range(1, n)] for j in range(1, n)]
    if alpha:
        return TnPoint(1, fs_of_matrix([[x / alpha for x in row] for row in m]) if m else [])
    return TnPoint(0, fs_of_matrix(m) if m else [])


def same_orbit_T(p, q):
    if p.n != q.n:
        raise ValueError("dimension mismatch")
    if p.r != q.r:
        return False
    if p.r == 1:
        return p.spec == q.spec
    return equal_mod_scaling(p.spec, q.spec) is not None


def _dominates_per_eigenvalue(src, dst):
    """dst has the eigenvalues of src with dominated Jordan types."""
    if src.eigenvalues != dst.eigenvalues:
        return False
    return all(a.total == b.total and dominates(a, b)
               for (_, a), (_, b) in zip(src.pairs, dst.pairs))


def degenerates_T(p, q):
    if p.n != q.n:
        raise ValueError("dimension mismatch")
    if not p.spec.pairs:
        return p == q
    r_, s_ = p.spec, q.spec
    if q.r == 0 and s_.is_nilpotent():
        if dominates(r_.total_partition(), s_.pairs[0][1]):
            return True
    if p.r == 1 and q.r == 1:
        return _dominates_per_eigenvalue(r_, s_)
    if p.r == 0 and q.r == 0:
        if r_.is_nilpotent():
            return s_.is_nilpotent() and _dominates_per_eigenvalue(r_, s_)
        lam = next(x for x in r_.eigenvalues if x)
        for mu in s_.eigenvalues:
            if mu and _dominates_per_eigenvalue(r_.scaled(mu / lam), s_):
                return True
    return False


def level_T(p):
    if p.is_nilpotent():
        return level(p.spec.pairs[0][1]) if p.spec.pairs else 0
    return level(p.spec.total_partition()) + 1


def primary_set_T(p):
    pairs = list(p.spec.pairs)
    if p.is_nilpotent():
        if not pairs:
            return set()
        return {TnPoint(0, [(0, b)]) for b in preceding(pairs[0][1])}
    out = set()
    for idx, (lam, a) in enumerate(pairs):
        for b in preceding(a):
            new = pairs[:idx] + [(lam, b)] + pairs[idx + 1:]
            out.add(TnPoint(p.r, new))
    out.add(TnPoint(0, [(0, p.spec.total_partition())]))
    return out


# ------------------------------------------------------------------ witnesses

def _jordan_chains(m):
    """Chains (λ, [v, Nv, ..., N^{s-1}v]) with N = M − λ, sorted by (λ, −s)."""
    k = len(m)
    out = []
    for lam, a in fs_of_matrix(m).pairs:
        nmat = mat_sub(m, [[lam if i == j else 0 for j in range(k)] for i in range(k)])
        bottoms = []
        for s in a:
            for cand in kernel_basis(mat_pow(nmat, s)):
                chain = [list(cand)]
                for _ in range(s - 1):
                    chain.append(_apply(nmat, chain[-1]))
                if rank_exact(bottoms + [chain[-1]]) > len(bottoms):
                    bottoms.append(chain[-1])
                    out.append((lam, chain))
                    break
            else:
                raise ArithmeticError("Jordan chain construction failed")
    out.sort(key=lambda item: (item[0], -len(item[1])))
    return out


def _apply(m, v):
    return [sum((row[j] * v[j] for j in range(len(v)) if v[j]), Fraction(0)) for row in m]


def _columns(chains):
    cols = [v for _, chain in chains for v in chain]
    return [[cols[j][i] for j in range(len(cols))] for i in range(len(cols))]


def _move_family(chains, lam, big, small):
    """Chains of sizes (big, small) at λ become (big − 1, small + 1) as t → 0."""
    rest = [(l, [[LaurentPoly.const(x) for x in v] for v in ch]) for l, ch in chains]
    xi = next(i for i, (l, ch) in enumerate(chains) if l == lam and len(ch) == big)
    x = chains[xi][1]
    y = []
    drop = {xi}
    if small:
        yi = next(i for i, (l, ch) in enumerate(chains)
                  if l == lam and len(ch) == small and i != xi)
        y = chains[yi][1]
        drop.add(yi)
    rest = [c for i, c in enumerate(rest) if i not in drop]
    k = len(x[0])
    t = LaurentPoly.monomial(1, 1)
    first = []
    for i in range(big - 1):
        v = [LaurentPoly.const(c) for c in x[i + 1]]
        if i < small:
            v = [a + LaurentPoly.const(b) for a, b in zip(v, y[i])]
        first.append(v)
    second = [[t * c for c in x[i]] for i in range(small + 1)]
    rest += [(lam, first), (lam, second)]
    rest.sort(key=lambda item: (item[0], -len(item[1])))
    cols = [v for _, ch in rest for v in ch]
    return [[cols[j][i] for j in range(k)] for i in range(k)]


def _assemble(e1, cols):
    """Rows E_1 = e1 coefficient, E_{i+2} = Σ_j cols[j][i] e_{j+2}."""
    k = len(cols)
    rows = [[LaurentPoly.lift(e1)] + [LaurentPoly() for _ in range(k)]]
    for i in range(k):
        rows.append([LaurentPoly()] + [LaurentPoly.lift(cols[j][i]) for j in range(k)])
    return ParametrizedBasis(rows)


def _collapse_witness(p, q):
    b = p.spec.total_partition()
    powers = [1]
    for part in b:
        powers.extend(range(part))
    return DegenerationWitness(p.structure(), ParametrizedBasis.diagonal_powers(powers),
                               q.structure(), f"{p!r} -> {q!r} (collapse)")


def _move_witness(p, q):
    c = Fraction(1)
    if p.r == 0 and not p.spec.is_nilpotent():
        for lam, a in p.spec.pairs:
            for b in preceding(a):
                cand = FullSpecter([(l, b if l == lam else x) for l, x in p.spec.pairs])
                s = equal_mod_scaling(cand, q.spec)
                if s is not None and cand.scaled(s) == q.spec:
                    c = s
                    break
            else:
                continue
            break
    src_spec = p.spec.scaled(c) if c != 1 else p.spec
    moved = None
    for lam, a in src_spec.pairs:
        b = q.spec.partition_of(lam)
        if b is not None and b != a:
            moved = (lam, a, b)
    lam, a, b = moved
    length = max(len(a), len(b))
    diff = [(i, a.part(i) - b.part(i)) for i in range(1, length + 1) if a.part(i) != b.part(i)]
    (i_big, _), (i_small, _) = diff
    big, small = a.part(i_big), a.part(i_small)
    m0 = mat_scalar(canonical_matrix(p.spec))
    if c != 1:
        m0 = [[c * x for x in row] for row in m0]
    family = _move_family(_jordan_chains(m0), lam, big, small)
    q2 = _columns(_jordan_chains(mat_scalar(canonical_matrix(q.spec))))
    q2inv = mat_inverse(q2)
    k = len(m0)
    cols = [[sum((family[i][l] * q2inv[l][j] for l in range(k) if q2inv[l][j]), LaurentPoly())
             for j in range(k)] for i in range(k)]
    return DegenerationWitness(p.structure(), _assemble(c, cols), q.structure(),
                               f"{p!r} -> {q!r} (block move)")


def primary_witness_T(p, q):
    if q not in primary_set_T(p):
        raise NotPrimary(f"{q!r} is not a primary degeneration of {p!r}")
    if not p.is_nilpotent() and q == TnPoint(0, [(0, p.spec.total_partition())]):
        return _collapse_witness(p, q)
    return _move_witness(p, q)


# --------------------------------------------------------------------- tables

_NAMES = ("alpha", "beta", "gamma", "delta", "epsilon", "zeta", "eta", "theta")

GROUPS = {1: "nilpotent", 2: "solvable nonnilpotent", 3: "nonsolvable"}


@dataclass(frozen=True)
class TableRow:
    table: int
    level: int
    r: int
    shape: Partition
    blocks: str
    notation: str
    domain: str
    products: str
    names: tuple = ()

    def matrix(self, values=()):
        """Matrix of the row with its parameters set to the given rationals."""
        vals = _row_values(self, values)
        return _table_matrix(self.shape, vals)

    def sample(self, values=()):
        return recognize_T(build_T(self.r, self.matrix(values)))


def _row_values(row, values):
    if row.table == 1:
        return [Fraction(0)] * (row.shape[0] if row.shape else 0)
    if not row.names:
        return [Fraction(1)]
    if len(values) != len(row.names):
        raise ValueError(f"row needs {len(row.names)} parameter values")
    return [to_scalar(v) for v in values]


def _table_matrix(shape, vals):
    """Blocks J(vals[-s:]) for each part s of the shape, in order."""
    k = shape.total
    m = [[Fraction(0)] * k for _ in range(k)]
    pos = 0
    for s in shape:
        diag = vals[len(vals) - s:]
        for i in range(s):
            m[pos + i][pos + i] = diag[i]
            if i + 1 < s:
                m[pos + i + 1][pos + i] = Fraction(1)
        pos += s
    return m


def _shape_label(b):
    return ",".join(str(x) for x in b if x > 1)


def _fmt_coeff_term(coeff, idx):
    return f"e{idx}" if coeff == "1" else f"{coeff} e{idx}"


def _join_terms(terms):
    out = ""
    for coeff, idx in terms:
        neg = coeff.startswith("-")
        body = _fmt_coeff_term(coeff[1:] if neg else coeff, idx)
        if not out:
            out = ("-" + body) if neg else body
        else:
            out += (" - " if neg else " + ") + body
    return out


def _products_text(r, shape, names):
    """Symbolic table; names[p] is the value at chain position p (table layout)."""
    parts = []
    if r:
        parts.append("e1e1 = e1")
    idx = 2
    for s in shape:
        diag = names[len(names) - s:]
        for i in range(s):
            lam = diag[i]
            left, right = [], []
            if lam != "0":
                left.append((lam, idx))
            if r:
                co = {"0": "1", "1": "0"}.get(lam, f"(1-{lam})")
            else:
                co = "0" if lam == "0" else f"-{lam}"
            if co != "0":
                right.append((co, idx))
            if i + 1 < s:
                left.append(("1", idx + 1))
                right.append(("-1", idx + 1))
            if left:
                parts.append(f"e1e{idx} = {_join_terms(left)}")
            if right:
                parts.append(f"e{idx}e1 = {_join_terms(right)}")
            idx += 1
    return ", ".join(parts)


def _domain(names, shape, starred):
    groups = [g for g in reversed(block_groups(shape)) if g]
    sub = ",".join(str(g) for g in groups)
    var = names[0] if len(names) == 1 else "(" + ",".join(names) + ")"
    if len(names) == 1:
        return f"{var} in k"
    return f"{var} in K{'*' if starred else ''}_{{{sub}}}"


def _nilpotent_row(b, lev):
    n = b.total + 1
    if b[0] == 2 and all(x <= 1 for x in b[1:]) and b.count(2) == 1:
        pad = n - 3
        notation = "n_3" + (f"+k^{pad}" if pad else "")
    else:
        notation = f"T_0^{{{_shape_label(b)}}}"
    names = ["0"] * b[0]
    return TableRow(1, lev, 0, b, str(b), notation, "-", _products_text(0, b, names))


def _general_row(table, b, lev):
    r = 0 if table == 2 else 1
    width = b[0]
    names = list(_NAMES[:width])
    starred = r == 0
    if width == 1:
        if starred:
            blocks = ", ".join(["J(1)"] * b.total)
            return TableRow(2, lev, 0, b, blocks, "p^-", "-", _products_text(0, b, ["1"]))
        blocks = ", ".join(["J(alpha)"] * b.total)
        return TableRow(3, lev, 1, b, blocks, "nu^alpha", "alpha in k",
                        _products_text(1, b, names), ("alpha",))
    blocks = ", ".join("J(" + ",".join(names[width - s:]) + ")" for s in b)
    notation = f"T_{r}^{{{_shape_label(b)},bar({','.join(names)})}}"
    return TableRow(table, lev, r, b, blocks, notation, _domain(names, b, starred),
                    _products_text(r, b, names), tuple(names))


def emit_tn_tables(n, max_level, tables=(1, 2, 3)):
    """Rows of the nilpotent (1), r = 0 (2) and r = 1 (3) tables for T_n up to the given level."""
    if not 1 <= max_level <= 5:
        raise ValueError("max_level must be between 1 and 5")
    if n < 2:
        raise ValueError("n must be at least 2")
    parts = list(enumerate_partitions(n - 1))
    rows = []
    for table in tables:
        for lev in range(1, max_level + 1):
            for b in sorted(parts, reverse=True):
                if table == 1:
                    if level(b) == lev:
                        rows.append(_nilpotent_row(b, lev))
                elif level(b) == lev - 1:
                    rows.append(_general_row(table, b, lev))
    return rows


def render_table(rows, table, n):
    lines = [f"# Table {table}: {GROUPS[table]} algebras in T_{n}",
             "# level | blocks | notation | parameters | products"]
    for row in rows:
        if row.table == table:
            lines.append(" | ".join([str(row.level), row.blocks, row.notation, row.domain,
                                     row.products]))
    return "\n".join(lines) + "\n"


__all__ = [
    "NotAbelShape", "NotGenType1", "NotPrimary", "TnPoint", "TableRow", "build_T",
    "build_point", "recognize_T", "same_orbit_T", "degenerates_T", "level_T",
    "primary_set_T", "primary_witness_T", "emit_tn_tables", "render_table", "GROUPS",
]
