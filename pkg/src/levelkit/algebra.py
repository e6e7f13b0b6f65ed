"""Algebra structures given by structure constants, basis changes, identity
predicates, invariants and the .alg text format."""

import re
from dataclasses import dataclass
from fractions import Fraction

from .exact import (
    MPoly, SingularMatrix, format_scalar, mat_inverse, mat_scalar, rank_exact, solve_left,
    to_scalar,
)

_ZERO = Fraction(0)


class IndexOutOfRange(ValueError):
    pass


class ParseError(SyntaxError):
    def __init__(self, msg, lineno=None):
        super().__init__(f"line {lineno}: {msg}" if lineno else msg)
        self.lineno = lineno


class AlgebraStructure:
    """n-dimensional algebra; constants[i][j][k] = μ_{i+1,j+1}^{k+1}."""

    __slots__ = ("dim", "constants", "_nz", "_hash")

    def __init__(self, dim, constants=None):
        self.dim = n = int(dim)
        if n < 1:
            raise ValueError("dimension must be positive")
        if constants is None:
            c = tuple(tuple(tuple(_ZERO for _ in range(n)) for _ in range(n)) for _ in range(n))
        else:
            c = tuple(tuple(tuple(to_scalar(x) for x in row) for row in plane) for plane in constants)
            if len(c) != n or any(len(p) != n or any(len(r) != n for r in p) for p in c):
                raise ValueError("constants must be n×n×n")
        self.constants = c
        self._nz = tuple(
            (i, j, k, c[i][j][k])
            for i in range(n) for j in range(n) for k in range(n) if c[i][j][k]
        )
        self._hash = None

    @classmethod
    def from_products(cls, n, table):
        """Build from {(i, j): {k: coeff}} with 1-based indices."""
        c = [[[_ZERO] * n for _ in range(n)] for _ in range(n)]
        for (i, j), terms in table.items():
            for k, v in terms.items():
                for idx in (i, j, k):
                    if not 1 <= idx <= n:
                        raise IndexOutOfRange(f"basis index {idx} exceeds dim {n}")
                c[i - 1][j - 1][k - 1] += to_scalar(v)
        return cls(n, c)

    def const(self, i, j, k):
        """μ_{i,j}^k with 1-based indices."""
        return self.constants[i - 1][j - 1][k - 1]

    def nonzero(self):
        """Tuples (i, j, k, value), 0-based, for nonzero constants."""
        return self._nz

    def product(self, x, y):
        """μ(x, y) for coordinate vectors with entries in any commutative ring."""
        n = self.dim
        zero = (x[0] * 0) if n else 0
        out = [zero] * n
        for i, j, k, c in self._nz:
            xi = x[i]
            if _iszero(xi):
                continue
            yj = y[j]
            if _iszero(yj):
                continue
            out[k] = out[k] + xi * yj * c
        return out

    def basis_product(self, i, j):
        """μ(e_i, e_j) as a coordinate list (1-based i, j)."""
        return list(self.constants[i - 1][j - 1])

    def is_zero(self):
        return not self._nz

    def __eq__(self, other):
        return isinstance(other, AlgebraStructure) and self.constants == other.constants

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.dim, self._nz))
        return self._hash

    def __repr__(self):
        return f"AlgebraStructure({serialize_structure(self)!r})"


def _iszero(x):
    if isinstance(x, MPoly):
        return not x.terms
    return x == 0


def zero_algebra(n):
    return AlgebraStructure(n)


def direct_sum_zero(a, m):
    """a ⊕ k^m with the new basis vectors appended."""
    if m < 0:
        raise ValueError("negative padding")
    n = a.dim + m
    table = {}
    for i, j, k, c in a.nonzero():
        table.setdefault((i + 1, j + 1), {})[k + 1] = c
    return AlgebraStructure.from_products(n, table)


def first_differing_constant(a, b):
    """1-based (i, j, k) of the first constant where a and b differ, or None."""
    n = a.dim
    for i in range(n):
        for j in range(n):
            for k in range(n):
                if a.constants[i][j][k] != b.constants[i][j][k]:
                    return (i + 1, j + 1, k + 1)
    return None


# -------------------------------------------------------------- basis changes

@dataclass(frozen=True)
class BasisChange:
    matrix: tuple

    def __init__(self, matrix):
        object.__setattr__(self, "matrix", tuple(tuple(to_scalar(x) for x in r) for r in matrix))


def apply_basis_change(g, a):
    """(g*μ)(x, y) = g μ(g⁻¹x, g⁻¹y); g acts on column vectors."""
    m = g.matrix if isinstance(g, BasisChange) else mat_scalar(g)
    n = a.dim
    if len(m) != n or any(len(r) != n for r in m):
        raise ValueError("dimension mismatch")
    if rank_exact(m) < n:
        raise SingularMatrix("basis change is not invertible")
    ginv = mat_inverse([list(r) for r in m])
    cols = [[ginv[r][i] for r in range(n)] for i in range(n)]
    c = [[[_ZERO] * n for _ in range(n)] for _ in range(n)]
    for i in range(n):
        for j in range(n):
            v = a.product(cols[i], cols[j])
            if not any(v):
                continue
            for k in range(n):
                c[i][j][k] = sum((m[k][l] * v[l] for l in range(n) if v[l]), _ZERO)
    return AlgebraStructure(n, c)


def structure_in_basis(a, rows):
    """Structure constants of μ in the basis E_i = Σ_j rows[i][j] e_j."""
    n = a.dim
    rows = [[to_scalar(x) for x in r] for r in rows]
    if rank_exact(rows) < n:
        raise SingularMatrix("rows do not form a basis")
    prods = [a.product(rows[i], rows[j]) for i in range(n) for j in range(n)]
    coords = solve_left(rows, prods)
    c = [[[_ZERO] * n for _ in range(n)] for _ in range(n)]
    for idx, x in enumerate(coords):
        i, j = divmod(idx, n)
        c[i][j] = list(x)
    return AlgebraStructure(n, c)


# ------------------------------------------------------------ identities

def symbolic_vectors(n, count):
    """`count` independent generic vectors in one polynomial ring of n·count variables."""
    nv = n * count
    gens = MPoly.gens(nv)
    return [gens[q * n:(q + 1) * n] for q in range(count)]


def is_commutative(a):
    c = a.constants
    n = a.dim
    return all(c[i][j] == c[j][i] for i in range(n) for j in range(i + 1, n))


def is_anticommutative(a):
    c = a.constants
    n = a.dim
    return all(
        c[i][j][k] + c[j][i][k] == 0 for i in range(n) for j in range(i, n) for k in range(n)
    )


def is_associative(a):
    n = a.dim
    basis = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    prods = [[a.product(basis[i], basis[j]) for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(n):
            for k in range(n):
                left = a.product(prods[i][j], basis[k])
                right = a.product(basis[i], prods[j][k])
                if left != right:
                    return False
    return True


def left_alternative_defect(a):
    """Coordinates of (xx)y − x(xy) for symbolic x, y."""
    x, y = symbolic_vectors(a.dim, 2)
    xx = a.product(x, x)
    left = a.product(xx, y)
    right = a.product(x, a.product(x, y))
    return [l - r for l, r in zip(left, right)]


def jordan_defect(a):
    """Coordinates of (x²y)x − x²(yx) for symbolic x, y."""
    x, y = symbolic_vectors(a.dim, 2)
    xx = a.product(x, x)
    left = a.product(a.product(xx, y), x)
    right = a.product(xx, a.product(y, x))
    return [l - r for l, r in zip(left, right)]


def is_left_alternative(a):
    return all(p.is_zero() for p in left_alternative_defect(a))


def is_jordan(a):
    return is_commutative(a) and all(p.is_zero() for p in jordan_defect(a))


def annihilator_dim(a):
    n = a.dim
    c = a.constants
    rows = []
    # x = Σ x_i e_i annihilates iff Σ_i x_i μ_{i,j}^k = 0 and Σ_i x_i μ_{j,i}^k = 0
    for j in range(n):
        for k in range(n):
            rows.append([c[i][j][k] for i in range(n)])
            rows.append([c[j][i][k] for i in range(n)])
    return n - rank_exact(rows)


def square_dim(a):
    n = a.dim
    return rank_exact([list(a.constants[i][j]) for i in range(n) for j in range(n)])


@dataclass(frozen=True)
class Invariants:
    commutative: bool
    anticommutative: bool
    associative: bool
    left_alternative: bool
    jordan: bool
    annihilator_dim: int
    square_dim: int


def invariants(a):
    return Invariants(
        commutative=is_commutative(a),
        anticommutative=is_anticommutative(a),
        associative=is_associative(a),
        left_alternative=is_left_alternative(a),
        jordan=is_jordan(a),
        annihilator_dim=annihilator_dim(a),
        square_dim=square_dim(a),
    )


# --------------------------------------------------------------- .alg format

_PRODUCT_RE = re.compile(r"^e(\d+)\s*\*\s*e(\d+)\s*=\s*(.+)$")
_TERM_RE = re.compile(r"^([+-]?\d+(?:/\d+)?)?\s*e(\d+)$")


def _split_terms(rhs):
    rhs = rhs.strip()
    # allow "a - b" as sugar for "a + -b"
    rhs = re.sub(r"(?<=\S)\s+-\s+", " + -", rhs)
    return [t.strip() for t in rhs.split("+") if t.strip()] if rhs not in ("0",) else []


def parse_term(text, lineno=None):
    m = _TERM_RE.match(text.replace(" ", "") if "e" in text else text)
    if not m:
        # coefficient and e<k> may be separated by spaces
        m = _TERM_RE.match(re.sub(r"\s+", "", text))
    if not m:
        raise ParseError(f"bad term {text!r}", lineno)
    coeff = Fraction(m.group(1)) if m.group(1) not in (None, "+", "-") else Fraction(1)
    return coeff, int(m.group(2))


def parse_structure_lines(lines, first_lineno=1):
    n = None
    table = {}
    for offset, raw in enumerate(lines):
        lineno = first_lineno + offset
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if n is None:
            m = re.match(r"^dim\s+(\d+)$", line)
            if not m:
                raise ParseError("expected 'dim <n>'", lineno)
            n = int(m.group(1))
            if n < 1:
                raise ParseError("dimension must be positive", lineno)
            continue
        m = _PRODUCT_RE.match(line)
        if not m:
            raise ParseError(f"cannot parse {line!r}", lineno)
        i, j = int(m.group(1)), int(m.group(2))
        if (i, j) in table:
            raise ParseError(f"product e{i}*e{j} given twice", lineno)
        terms = {}
        for t in _split_terms(m.group(3)):
            coeff, k = parse_term(t, lineno)
            terms[k] = terms.get(k, Fraction(0)) + coeff
        for idx in (i, j, *terms):
            if not 1 <= idx <= n:
                raise IndexOutOfRange(f"line {lineno}: basis index {idx} exceeds dim {n}")
        table[(i, j)] = terms
    if n is None:
        raise ParseError("missing 'dim <n>' line", first_lineno)
    return AlgebraStructure.from_products(n, table)


def parse_structure(text):
    return parse_structure_lines(text.splitlines())


def format_vector(coeffs, name="e"):
    """Render Σ c_k e_k with k ascending, e.g. '2 e1 + -1/3 e2'."""
    parts = []
    for k, c in enumerate(coeffs, start=1):
        if c:
            parts.append(f"{name}{k}" if c == 1 else f"{format_scalar(c)} {name}{k}")
    return " + ".join(parts) if parts else "0"


def serialize_structure(a):
    lines = [f"dim {a.dim}"]
    n = a.dim
    for i in range(n):
        for j in range(n):
            v = a.constants[i][j]
            if any(v):
                lines.append(f"e{i + 1}*e{j + 1} = {format_vector(v)}")
    return "\n".join(lines) + "\n"


def catalog(name, params=(), n=None):
    """Named structure from the registry in `levelkit.catalog`."""
    from .catalog import catalog as _catalog
    return _catalog(name, params, n)
