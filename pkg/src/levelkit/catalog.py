"""Registry of named algebra structures.

Names and parameter order:

  two-dimensional (dim 2): zero, A1 [α], A2, A3, A4 [α], B1 [α], B2 [α],
      C [α,β], D1 [α,β], D2 [α,β], D3 [α,β], E1 [α,β,γ,δ], E4
  fixed dimension: G, G_ab [α,β], F [α,β] (dim 3), eta [m] (dim 2m+1)
  Any fixed-dimension name X also exists as "X+k", meaning X ⊕ k^{n-d}.
  one-vector extensions of zero (T_r^M shapes):
      p_minus, nu [α], n3,
      T0_<shape> with [] (nilpotent) or one parameter per row of the largest
      block, T1_<shape> with one parameter per row of the largest block,
      shapes 2, 3, 22, 222, 2222, 4, 32 (T0 nilpotent also 33, 322, 22222)
  singular extensions of 2-dim algebras (n ≥ 3): kA1 [ε,α], kA2 [ε], kA3,
      k2A3 [α,β] (n = 4), kB2 [ε,α], kB2t [ε,α], kD2 [ε,α,β], kD2t [ε,α,β], kE4
  A3-ideal structures: A3_p_minus, A3_nu [α] (n ≥ 3), A3k_E4 (n ≥ 4)
"""

from dataclasses import dataclass
from fractions import Fraction

from .algebra import AlgebraStructure, direct_sum_zero
from .exact import to_scalar


class UnknownName(KeyError):
    pass


class BadArity(ValueError):
    pass


class DimensionOutOfRange(ValueError):
    pass


class ParameterOutOfDomain(ValueError):
    pass


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    arities: tuple
    min_dim: int
    max_dim: object
    builder: object
    description: str = ""

    def build(self, params, n):
        return self.builder(list(params), n)


_ONE = Fraction(1)


def _alg(n, products):
    """products: iterable of (i, j, {k: c}) with 1-based indices; repeated keys add up."""
    table = {}
    for i, j, terms in products:
        slot = table.setdefault((i, j), {})
        for k, c in terms.items():
            slot[k] = slot.get(k, 0) + to_scalar(c)
    return AlgebraStructure.from_products(n, table)


# ---------------------------------------------------------------- T_r shapes

def t_structure(r, matrix):
    """T_r^M: e1e1 = r e1, e1e_i = Σ_j M_{j,i} e_j, e_ie1 = r e_i − e1e_i (i ≥ 2)."""
    r = to_scalar(r)
    m = len(matrix)
    n = m + 1
    prods = []
    if r:
        prods.append((1, 1, {1: r}))
    for i in range(m):
        col = {j + 2: to_scalar(matrix[j][i]) for j in range(m) if matrix[j][i]}
        if col:
            prods.append((1, i + 2, col))
        right = {k: -v for k, v in col.items()}
        if r:
            right[i + 2] = right.get(i + 2, 0) + r
        right = {k: v for k, v in right.items() if v}
        if right:
            prods.append((i + 2, 1, right))
    return _alg(n, prods)


def _shape_matrix(shape, params, n):
    """Blocks J(params[-s:]) for each part s of the shape, then the tail value."""
    m = n - 1
    mat = [[Fraction(0)] * m for _ in range(m)]
    pos = 0
    tail = params[-1] if params else Fraction(0)
    for s in shape:
        diag = params[-s:] if params else [Fraction(0)] * s
        for q in range(s):
            mat[pos + q][pos + q] = diag[q]
            if q + 1 < s:
                mat[pos + q + 1][pos + q] = _ONE
        pos += s
    for q in range(pos, m):
        mat[q][q] = tail
    return mat


# ---------------------------------------------------------- two-dimensional

def _two_dim():
    def a1(p, n):
        (a,) = p
        return _alg(2, [(1, 1, {1: 1, 2: 1}), (1, 2, {2: a}), (2, 1, {2: 1 - a})])

    def a4(p, n):
        (a,) = p
        return _alg(2, [(1, 1, {1: a, 2: 1}), (1, 2, {1: 1, 2: a}), (2, 1, {1: -1})])

    def b1(p, n):
        (a,) = p
        return _alg(2, [(1, 2, {1: 1 - a, 2: 1}), (2, 1, {1: a, 2: -1})])

    def b2(p, n):
        (a,) = p
        return _alg(2, [(1, 2, {2: a}), (2, 1, {2: 1 - a})])

    def c(p, n):
        a, b = p
        return _alg(2, [(1, 1, {2: 1}), (1, 2, {1: 1 - a, 2: b}), (2, 1, {1: a, 2: -b}),
                        (2, 2, {2: 1})])

    def d1(p, n):
        a, b = p
        return _alg(2, [(1, 1, {1: 1}), (1, 2, {1: 1 - a, 2: b}), (2, 1, {1: a, 2: -b})])

    def d2(p, n):
        a, b = p
        if a + b == 1:
            raise ParameterOutOfDomain("D2 requires α+β ≠ 1")
        return _alg(2, [(1, 1, {1: 1}), (1, 2, {2: a}), (2, 1, {2: b})])

    def d3(p, n):
        a, b = p
        if a + b == 1:
            raise ParameterOutOfDomain("D3 requires α+β ≠ 1")
        return _alg(2, [(1, 1, {1: 1}), (1, 2, {1: 1, 2: a}), (2, 1, {1: -1, 2: b})])

    def e1(p, n):
        a, b, g, d = p
        if b + d == 1:
            raise ParameterOutOfDomain("E1 requires β+δ ≠ 1")
        return _alg(2, [(1, 1, {1: 1}), (1, 2, {1: a, 2: b}), (2, 1, {1: g, 2: d}),
                        (2, 2, {2: 1})])

    return {
        "zero": (0, lambda p, n: AlgebraStructure(2)),
        "A1": (1, a1),
        "A2": (0, lambda p, n: _alg(2, [(1, 1, {2: 1}), (1, 2, {2: 1}), (2, 1, {2: -1})])),
        "A3": (0, lambda p, n: _alg(2, [(1, 1, {2: 1})])),
        "A4": (1, a4),
        "B1": (1, b1),
        "B2": (1, b2),
        "C": (2, c),
        "D1": (2, d1),
        "D2": (2, d2),
        "D3": (2, d3),
        "E1": (4, e1),
        "E4": (0, lambda p, n: _alg(2, [(1, 1, {1: 1}), (1, 2, {1: 1, 2: 1}), (2, 2, {2: 1})])),
    }


# ---------------------------------------------------- singular extensions

def _ext_products(base, n, left, right):
    """base products plus e1e_i = left·e_i, e_ie1 = right·e_i for 3 ≤ i ≤ n."""
    prods = list(base)
    for i in range(3, n + 1):
        if left:
            prods.append((1, i, {i: left}))
        if right:
            prods.append((i, 1, {i: right}))
    return prods


def _extension_rows():
    def ka1(p, n):
        eps, a = p
        base = [(1, 1, {1: 1, 2: 1}), (1, 2, {2: a}), (2, 1, {2: 1 - a})]
        return _alg(n, _ext_products(base, n, eps, 1 - eps))

    def ka2(p, n):
        (eps,) = p
        base = [(1, 1, {2: 1}), (1, 2, {2: 1}), (2, 1, {2: -1})]
        return _alg(n, _ext_products(base, n, eps, -eps))

    def ka3(p, n):
        return _alg(n, _ext_products([(1, 1, {2: 1})], n, 1, -1))

    def k2a3(p, n):
        a, b = p
        return _alg(4, [(1, 1, {2: 1}), (1, 3, {4: a}), (3, 1, {4: b})])

    def kb2(p, n):
        eps, a = p
        base = [(1, 2, {2: a}), (2, 1, {2: 1 - a})]
        return _alg(n, _ext_products(base, n, eps, -eps))

    def kb2t(p, n):
        eps, a = p
        if eps not in (0, 1):
            raise ParameterOutOfDomain("ε must be 0 or 1")
        prods = []
        for i in range(2, n + 1):
            prods += [(1, i, {i: a}), (i, 1, {i: 1 - a})]
        for i in range(3, n + 1):
            prods += [(2, i, {i: eps}), (i, 2, {i: -eps})]
        return _alg(n, prods)

    def kd2(p, n):
        eps, a, b = p
        if a + b == 1:
            raise ParameterOutOfDomain("D2 requires α+β ≠ 1")
        base = [(1, 1, {1: 1}), (1, 2, {2: a}), (2, 1, {2: b})]
        return _alg(n, _ext_products(base, n, eps, 1 - eps))

    def kd2t(p, n):
        eps, a, b = p
        if eps not in (0, 1):
            raise ParameterOutOfDomain("ε must be 0 or 1")
        if a + b == 1:
            raise ParameterOutOfDomain("D2 requires α+β ≠ 1")
        prods = [(1, 1, {1: 1})]
        for i in range(2, n + 1):
            prods += [(1, i, {i: a}), (i, 1, {i: b})]
        for i in range(3, n + 1):
            prods += [(2, i, {i: eps}), (i, 2, {i: -eps})]
        return _alg(n, prods)

    def ke4(p, n):
        prods = [(1, 1, {1: 1}), (1, 2, {1: 1, 2: 1}), (2, 2, {2: 1})]
        for i in range(3, n + 1):
            prods += [(1, i, {i: 1}), (i, 2, {i: 1})]
        return _alg(n, prods)

    return {
        "kA1": (2, ka1, 3, None),
        "kA2": (1, ka2, 3, None),
        "kA3": (0, ka3, 3, None),
        "k2A3": (2, k2a3, 4, 4),
        "kB2": (2, kb2, 3, None),
        "kB2t": (2, kb2t, 3, None),
        "kD2": (3, kd2, 3, None),
        "kD2t": (3, kd2t, 3, None),
        "kE4": (0, ke4, 3, None),
    }


# ------------------------------------------------------------------ others

def _g(p, n):
    return _alg(3, [(1, 1, {2: 1}), (2, 2, {3: 1})])


def _g_ab(p, n):
    a, b = p
    return _alg(3, [(1, 1, {2: 1}), (1, 2, {3: a}), (2, 1, {3: b})])


def _f(p, n):
    a, b = p
    return _alg(3, [(1, 1, {3: 1}), (1, 2, {3: a}), (2, 1, {3: b})])


def eta(m):
    n = 2 * m + 1
    prods = []
    for i in range(1, m + 1):
        prods += [(2 * i - 1, 2 * i, {n: 1}), (2 * i, 2 * i - 1, {n: -1})]
    return _alg(n, prods)


def _a3_p_minus(p, n):
    prods = [(n - 1, n - 1, {n: 1})]
    for i in range(2, n + 1):
        prods += [(1, i, {i: 1}), (i, 1, {i: -1})]
    return _alg(n, prods)


def _a3_nu(p, n):
    (a,) = p
    prods = [(1, 1, {1: 1}), (n - 1, n - 1, {n: 1})]
    for i in range(2, n + 1):
        prods += [(1, i, {i: a}), (i, 1, {i: 1 - a})]
    return _alg(n, prods)


def _a3k_e4(p, n):
    prods = [(1, 1, {1: 1}), (1, 2, {1: 1, 2: 1}), (2, 2, {2: 1}), (n - 1, n - 1, {n: 1})]
    for i in range(3, n + 1):
        prods += [(1, i, {i: 1}), (i, 2, {i: 1})]
    return _alg(n, prods)


_T0_BARRED = ("2", "3", "22", "222", "2222", "4", "32")
_T0_NIL_ONLY = ("33", "322", "22222")
_T1 = ("2", "3", "22", "222", "2222", "4", "32")


def _registry():
    reg = {}

    def add(name, arities, min_dim, max_dim, builder, desc=""):
        reg[name] = CatalogEntry(name, tuple(arities), min_dim, max_dim, builder, desc)

    for name, (ar, fn) in _two_dim().items():
        add(name, [ar], 2, 2, fn, "two-dimensional")
    for name, (ar, fn, lo, hi) in _extension_rows().items():
        add(name, [ar], lo, hi, fn, "singular extension")
    add("G", [0], 3, 3, _g)
    add("G_ab", [2], 3, 3, _g_ab)
    add("F", [2], 3, 3, _f)
    add("eta", [1], 3, None, lambda p, n: eta(_int_param(p[0])))
    add("A3_p_minus", [0], 3, None, _a3_p_minus)
    add("A3_nu", [1], 3, None, _a3_nu)
    add("A3k_E4", [0], 4, None, _a3k_e4)

    add("p_minus", [0], 2, None, lambda p, n: t_structure(0, _shape_matrix((), [_ONE], n)))
    add("nu", [1], 2, None, lambda p, n: t_structure(1, _shape_matrix((), p, n)))
    add("n3", [0], 3, None, lambda p, n: t_structure(0, _shape_matrix((2,), [], n)))

    def shape_builder(r, shape):
        return lambda p, n: t_structure(r, _shape_matrix(shape, p, n))

    for s in _T0_BARRED + _T0_NIL_ONLY:
        shape = tuple(int(c) for c in s)
        lo = 1 + sum(shape)
        hi = lo if s == "33" else None
        arities = [0] if s in _T0_NIL_ONLY else [0, shape[0]]
        add(f"T0_{s}", arities, lo, hi, shape_builder(0, shape))
    for s in _T1:
        shape = tuple(int(c) for c in s)
        add(f"T1_{s}", [shape[0]], 1 + sum(shape), None, shape_builder(1, shape))
    return reg


def _int_param(x):
    x = to_scalar(x)
    if x.denominator != 1 or x < 1:
        raise ParameterOutOfDomain("m must be a positive integer")
    return int(x)


_REGISTRY = _registry()


def catalog_names():
    fixed = [k for k, e in _REGISTRY.items() if e.max_dim is not None or k == "eta"]
    return sorted(_REGISTRY) + sorted(f"{k}+k" for k in fixed)


def catalog_entry(name):
    base = name[:-2] if name.endswith("+k") else name
    if base not in _REGISTRY:
        raise UnknownName(name)
    return _REGISTRY[base]


def catalog(name, params=(), n=None):
    """Build the named structure in dimension n (defaults to the smallest allowed)."""
    padded = name.endswith("+k")
    entry = catalog_entry(name)
    params = [to_scalar(p) for p in params]
    if len(params) not in entry.arities:
        raise BadArity(f"{name} takes {' or '.join(map(str, entry.arities))} parameters, "
                       f"got {len(params)}")
    if entry.name == "eta":
        native = 2 * _int_param(params[0]) + 1
        lo, hi = native, native
    else:
        lo, hi = entry.min_dim, entry.max_dim
    if n is None:
        n = lo
    n = int(n)
    if padded:
        if hi is None and entry.name != "eta":
            raise UnknownName(f"{name}: padding applies only to fixed-dimension structures")
        if n < lo:
            raise DimensionOutOfRange(f"{name} needs n ≥ {lo}")
        return direct_sum_zero(entry.build(params, hi), n - hi)
    if n < lo or (hi is not None and n > hi):
        rng = f"n = {lo}" if hi == lo else (f"n ≥ {lo}" if hi is None else f"{lo} ≤ n ≤ {hi}")
        raise DimensionOutOfRange(f"{name} requires {rng}, got n = {n}")
    return entry.build(params, n)
