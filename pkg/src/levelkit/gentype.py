"""Generation type, Catalan word indices and the contraction to a standard
1-generated algebra."""

import threading
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .algebra import AlgebraStructure
from .exact import LaurentPoly, MPoly, rank_exact, to_scalar


class NotMaximalGenerator(ValueError):
    pass


def catalan(i):
    return comb(2 * i, i) // (i + 1)


@dataclass(frozen=True)
class WordIndex:
    m: int
    degree: int
    left: object = None
    right: object = None


_WORDS = [None, WordIndex(1, 1)]
_WORD_LOCK = threading.Lock()


def _extend_words(max_index):
    with _WORD_LOCK:
        while len(_WORDS) <= max_index:
            deg = _WORDS[-1].degree + 1
            start = len(_WORDS)
            by_degree = {}
            for w in _WORDS[1:]:
                by_degree.setdefault(w.degree, []).append(w.m)
            pairs = []
            for j in range(1, deg):
                for l in by_degree.get(j, []):
                    for r in by_degree.get(deg - j, []):
                        pairs.append((l, r))
            pairs.sort()
            assert len(pairs) == catalan(deg - 1)
            for offset, (l, r) in enumerate(pairs):
                _WORDS.append(WordIndex(start + offset, deg, l, r))


def word_maps(max_index):
    """WordIndex entries for 1..max_index; F_i orders pairs (𝔩, 𝔯) lexicographically."""
    if max_index < 1:
        raise ValueError("max_index must be positive")
    _extend_words(max_index)
    return _WORDS[1:max_index + 1]


def word(m):
    _extend_words(m)
    return _WORDS[m]


def degree_set(i):
    """S_i as a range of indices."""
    lo = sum(catalan(l) for l in range(i - 1))
    return range(lo + 1, lo + catalan(i - 1) + 1)


# --------------------------------------------------------------- f^{μ,i}

_F_CACHE = {}


def word_vectors(a, x, count):
    """v_1..v_count with v_1 = x and v_i = μ(v_𝔩, v_𝔯)."""
    out = [None, list(x)]
    word_maps(max(count, 1))
    for m in range(2, count + 1):
        w = _WORDS[m]
        out.append(a.product(out[w.left], out[w.right]))
    return out[1:]


def f_mu(a, i):
    """The i-th word polynomial tuple of a in variables x_1..x_n."""
    if i < 1:
        raise ValueError("index must be positive")
    cached = _F_CACHE.get(a)
    if cached is None:
        cached = [tuple(MPoly.gens(a.dim))]
        _F_CACHE.setdefault(a, cached)
        cached = _F_CACHE[a]
    word_maps(i)
    while len(cached) < i:
        w = _WORDS[len(cached) + 1]
        cached.append(tuple(a.product(list(cached[w.left - 1]), list(cached[w.right - 1]))))
    return cached[i - 1]


# ---------------------------------------------------------- echelon closure

def _normalize(v):
    """Divide an MPoly vector by the gcd of its rational contents."""
    from math import gcd
    g = 0
    lcm = 1
    for p in v:
        for c in p.terms.values():
            g = gcd(g, c.numerator)
            lcm = lcm * c.denominator // gcd(lcm, c.denominator)
    if g in (0, 1) and lcm == 1:
        return v
    f = Fraction(lcm, g)
    return [p.scale(f) for p in v]


class _Echelon:
    """Incremental fraction-free echelon basis over the polynomial fraction field."""

    def __init__(self):
        self.rows = []

    def reduce(self, v):
        for piv, b in self.rows:
            x = v[piv]
            if x.is_zero():
                continue
            bp = b[piv]
            v = [bp * vi - x * bi for vi, bi in zip(v, b)]
            v = _normalize(v)
        return v

    def add(self, v):
        v = self.reduce(v)
        piv = next((k for k, p in enumerate(v) if not p.is_zero()), None)
        if piv is None:
            return False
        self.rows.append((piv, v))
        return True

    def __len__(self):
        return len(self.rows)


def _closure_dim_symbolic(a, vec):
    n = a.dim
    ech = _Echelon()
    elems = []
    if ech.add(vec):
        elems.append(vec)
    frontier = list(elems)
    while frontier and len(ech) < n:
        new = []
        for u in frontier:
            for w in elems:
                for p in ((u, w), (w, u)) if u is not w else ((u, u),):
                    prod = a.product(*p)
                    if ech.add(prod):
                        new.append(prod)
                        if len(ech) == n:
                            return n
        elems.extend(new)
        frontier = new
    return len(ech)


def gen_type(a):
    """Dimension of the subalgebra generated by the generic vector Σ x_i e_i."""
    return _closure_dim_symbolic(a, MPoly.gens(a.dim))


def generated_subalgebra(a, x):
    """Basis (list of rows) of the subalgebra generated by a rational vector x."""
    x = [to_scalar(c) for c in x]
    basis = []
    if any(x):
        basis.append(x)
    frontier = list(basis)
    while frontier:
        new = []
        for u in frontier:
            for w in basis + new:
                for prod in (a.product(u, w), a.product(w, u)):
                    if rank_exact(basis + new + [prod]) > len(basis) + len(new):
                        new.append(prod)
        basis.extend(new)
        frontier = new
    return basis


def subalgebra_dim_at(a, x):
    return len(generated_subalgebra(a, x))


# ------------------------------------------------------ standard contraction

def _degree_of_index(i):
    return word(i).degree


def standard_contraction(a, generator):
    """Parametrized basis E_l = t^{d_l} v_{i_l} (l ≤ m), t^{d_m} on a coordinate
    complement, and the limit, which is a standard 1-generated algebra ⊕ zero."""
    from .degeneration import ParametrizedBasis, contract_along

    n = a.dim
    g = [to_scalar(c) for c in generator]
    m = subalgebra_dim_at(a, g)
    if m != gen_type(a):
        raise NotMaximalGenerator(f"generator spans {m} dimensions, G(A) = {gen_type(a)}")
    chosen = []
    degrees = []
    count = 1
    vs = []
    while len(chosen) < m:
        count = max(2 * count, 8)
        vs = word_vectors(a, g, count)
        chosen, degrees = [], []
        for i, v in enumerate(vs, start=1):
            if rank_exact(chosen + [v]) > len(chosen):
                chosen.append(v)
                degrees.append(_degree_of_index(i))
                if len(chosen) == m:
                    break
        if count > 100000:
            raise ArithmeticError("word enumeration did not reach the generated subalgebra")
    rows = [list(v) for v in chosen]
    for j in range(n):
        e = [Fraction(int(k == j)) for k in range(n)]
        if len(rows) < n and rank_exact(rows + [e]) > len(rows):
            rows.append(e)
    dmax = degrees[-1]
    all_degrees = degrees + [dmax] * (n - m)
    coeffs = [[LaurentPoly.monomial(c, d) if c else LaurentPoly() for c in row]
              for row, d in zip(rows, all_degrees)]
    basis = ParametrizedBasis(coeffs)
    limit = contract_along(a, basis)
    _check_standard(limit, m, all_degrees[:m])
    return basis, limit


def _check_standard(chi, m, degrees):
    n = chi.dim
    for i, j, k, _ in chi.nonzero():
        if i >= m or j >= m or k >= m:
            raise ArithmeticError("limit is not zero off the generated block")
        if degrees[k] != degrees[i] + degrees[j]:
            raise ArithmeticError("limit does not respect the grading")
    sub = AlgebraStructure(m, [[[chi.constants[i][j][k] for k in range(m)] for j in range(m)]
                               for i in range(m)])
    e1 = [Fraction(int(k == 0)) for k in range(m)]
    if subalgebra_dim_at(sub, e1) != m:
        raise ArithmeticError("e_1 does not generate the limit block")
    return n


__all__ = [
    "NotMaximalGenerator", "WordIndex", "catalan", "word_maps", "word", "degree_set",
    "f_mu", "word_vectors", "gen_type", "generated_subalgebra", "subalgebra_dim_at",
    "standard_contraction",
]
