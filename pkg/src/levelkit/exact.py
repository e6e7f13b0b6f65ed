"""Exact scalars, Laurent polynomials in t, sparse multivariate polynomials
and small dense matrix helpers over them."""

from fractions import Fraction
from math import gcd, isqrt

Scalar = Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)


class NonSplitSpectrum(ArithmeticError):
    """The characteristic polynomial has an irreducible factor of degree >= 2 over Q."""


class SingularMatrix(ArithmeticError):
    pass


def to_scalar(x):
    if isinstance(x, Fraction):
        return x
    if isinstance(x, str):
        return Fraction(x.strip())
    if isinstance(x, float):
        raise TypeError("floats are not exact scalars; pass a Fraction or a string")
    return Fraction(x)


def format_scalar(x):
    x = to_scalar(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


# ---------------------------------------------------------------- LaurentPoly

class LaurentPoly:
    """Laurent polynomial in the deformation parameter t."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for e, c in terms.items():
                c = to_scalar(c)
                if c:
                    clean[int(e)] = c
        self.terms = clean

    @classmethod
    def const(cls, c):
        return cls({0: c})

    @classmethod
    def monomial(cls, c, e):
        return cls({e: c})

    @classmethod
    def lift(cls, x):
        if isinstance(x, LaurentPoly):
            return x
        return cls({0: x})

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def min_exp(self):
        return min(self.terms) if self.terms else None

    def max_exp(self):
        return max(self.terms) if self.terms else None

    def is_polynomial(self):
        return not self.terms or self.min_exp() >= 0

    def coeff(self, e):
        return self.terms.get(e, _ZERO)

    def lead(self):
        e = self.max_exp()
        return e, self.terms[e]

    def __eq__(self, other):
        if not isinstance(other, LaurentPoly):
            try:
                other = LaurentPoly.lift(other)
            except (TypeError, ValueError):
                return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def __add__(self, other):
        other = LaurentPoly.lift(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, _ZERO) + c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        r = LaurentPoly()
        r.terms = out
        return r

    __radd__ = __add__

    def __neg__(self):
        r = LaurentPoly()
        r.terms = {e: -c for e, c in self.terms.items()}
        return r

    def __sub__(self, other):
        return self + (-LaurentPoly.lift(other))

    def __rsub__(self, other):
        return LaurentPoly.lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, LaurentPoly):
            c = to_scalar(other)
            r = LaurentPoly()
            r.terms = {e: v * c for e, v in self.terms.items()} if c else {}
            return r
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = e1 + e2
                out[e] = out.get(e, _ZERO) + c1 * c2
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k):
        r = LaurentPoly.const(1)
        for _ in range(k):
            r = r * self
        return r

    def shift(self, k):
        r = LaurentPoly()
        r.terms = {e + k: c for e, c in self.terms.items()}
        return r

    def evaluate(self, x):
        x = to_scalar(x)
        return sum((c * x ** e for e, c in self.terms.items()), _ZERO)

    def divmod_poly(self, other):
        """Polynomial long division; both operands must be polynomials."""
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        if not (self.is_polynomial() and other.is_polynomial()):
            raise ValueError("divmod_poly needs polynomial operands")
        de, dc = other.lead()
        q = {}
        r = self
        while r.terms and r.max_exp() >= de:
            re_, rc = r.lead()
            f = rc / dc
            q[re_ - de] = f
            r = r - other.shift(re_ - de) * f
        return LaurentPoly(q), r

    def exact_div(self, other):
        """Exact division in the Laurent ring (units t^k are absorbed)."""
        if other.is_zero():
            raise ZeroDivisionError("division by zero")
        if self.is_zero():
            return LaurentPoly()
        a = self.shift(-self.min_exp())
        b = other.shift(-other.min_exp())
        q, r = a.divmod_poly(b)
        if r:
            raise ArithmeticError("inexact Laurent division")
        return q.shift(self.min_exp() - other.min_exp())

    def monic(self):
        e, c = self.lead()
        return self * (1 / c)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms):
            c = format_scalar(self.terms[e])
            parts.append(f"{c}*t^{e}" if e else c)
        return " + ".join(parts)


def poly_gcd(a, b):
    """Monic gcd of two polynomials in t (Euclid over Q)."""
    while b:
        _, r = a.divmod_poly(b)
        a, b = b, r
    if a.is_zero():
        return a
    return a.monic()


class RatFunc:
    """Element of Q(t) held as num/den with coprime polynomial parts and monic den."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = LaurentPoly.lift(num)
        den = LaurentPoly.const(1) if den is None else LaurentPoly.lift(den)
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        # move negative powers of t across
        s = 0
        if num.terms and num.min_exp() < 0:
            s = max(s, -num.min_exp())
        num, den = num.shift(s), den.shift(s)
        if den.min_exp() < 0:
            k = -den.min_exp()
            num, den = num.shift(k), den.shift(k)
        if num.is_zero():
            self.num, self.den = LaurentPoly(), LaurentPoly.const(1)
            return
        g = poly_gcd(num, den)
        if g.max_exp() > 0:
            num, _ = num.divmod_poly(g)
            den, _ = den.divmod_poly(g)
        e, c = den.lead()
        self.num, self.den = num * (1 / c), den * (1 / c)

    @classmethod
    def lift(cls, x):
        return x if isinstance(x, RatFunc) else cls(x)

    def is_zero(self):
        return self.num.is_zero()

    def __bool__(self):
        return not self.num.is_zero()

    def __add__(self, o):
        o = RatFunc.lift(o)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        r = RatFunc.__new__(RatFunc)
        r.num, r.den = -self.num, self.den
        return r

    def __sub__(self, o):
        return self + (-RatFunc.lift(o))

    def __mul__(self, o):
        o = RatFunc.lift(o)
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, o):
        o = RatFunc.lift(o)
        if o.is_zero():
            raise ZeroDivisionError
        return RatFunc(self.num * o.den, self.den * o.num)

    def __eq__(self, o):
        o = RatFunc.lift(o)
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash((self.num, self.den))

    def order_at_zero(self):
        """t-adic valuation (None for zero)."""
        if self.is_zero():
            return None
        return self.num.min_exp() - self.den.min_exp()

    def value_at_zero(self):
        v = self.order_at_zero()
        if v is None:
            return _ZERO
        if v < 0:
            raise ZeroDivisionError("pole at t = 0")
        if v > 0:
            return _ZERO
        return self.num.coeff(self.num.min_exp()) / self.den.coeff(self.den.min_exp())

    def as_laurent(self):
        """Return the LaurentPoly when den is a power of t, else None."""
        if len(self.den.terms) == 1:
            e, c = self.den.lead()
            return self.num.shift(-e) * (1 / c)
        return None

    def __repr__(self):
        if len(self.den.terms) == 1 and self.den.terms.get(0) == 1:
            return repr(self.num)
        return f"({self.num!r})/({self.den!r})"


# --------------------------------------------------------------------- MPoly

class MPoly:
    """Sparse polynomial with rational coefficients in a fixed number of variables."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars, terms=None):
        self.nvars = nvars
        clean = {}
        if terms:
            for e, c in terms.items():
                c = to_scalar(c)
                if c:
                    clean[tuple(e)] = c
        self.terms = clean

    @classmethod
    def _raw(cls, nvars, terms):
        p = cls.__new__(cls)
        p.nvars = nvars
        p.terms = terms
        return p

    @classmethod
    def const(cls, nvars, c):
        c = to_scalar(c)
        return cls._raw(nvars, {(0,) * nvars: c} if c else {})

    @classmethod
    def zero(cls, nvars):
        return cls._raw(nvars, {})

    @classmethod
    def var(cls, nvars, i, c=1):
        e = [0] * nvars
        e[i] = 1
        return cls._raw(nvars, {tuple(e): to_scalar(c)})

    @classmethod
    def gens(cls, nvars):
        return [cls.var(nvars, i) for i in range(nvars)]

    def _lift(self, x):
        if isinstance(x, MPoly):
            if x.nvars != self.nvars:
                raise ValueError("variable count mismatch")
            return x
        return MPoly.const(self.nvars, x)

    def is_zero(self):
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def is_constant(self):
        return not self.terms or (len(self.terms) == 1 and (0,) * self.nvars in self.terms)

    def constant_value(self):
        return self.terms.get((0,) * self.nvars, _ZERO)

    def degree(self):
        return max((sum(e) for e in self.terms), default=-1)

    def __eq__(self, other):
        if isinstance(other, MPoly):
            return self.nvars == other.nvars and self.terms == other.terms
        try:
            return self.terms == MPoly.const(self.nvars, other).terms
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __add__(self, other):
        other = self._lift(other)
        if not other.terms:
            return self
        if not self.terms:
            return other
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e)
            if v is None:
                out[e] = c
            else:
                v = v + c
                if v:
                    out[e] = v
                else:
                    del out[e]
        return MPoly._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self):
        return MPoly._raw(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def scale(self, c):
        c = to_scalar(c)
        if not c:
            return MPoly.zero(self.nvars)
        return MPoly._raw(self.nvars, {e: v * c for e, v in self.terms.items()})

    def __mul__(self, other):
        if not isinstance(other, MPoly):
            return self.scale(other)
        if not self.terms or not other.terms:
            return MPoly.zero(self.nvars)
        out = {}
        get = out.get
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple([a + b for a, b in zip(e1, e2)])
                out[e] = get(e, _ZERO) + c1 * c2
        return MPoly._raw(self.nvars, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k):
        r = MPoly.const(self.nvars, 1)
        base = self
        while k:
            if k & 1:
                r = r * base
            k >>= 1
            if k:
                base = base * base
        return r

    def evaluate(self, point):
        point = [to_scalar(p) for p in point]
        total = _ZERO
        for e, c in self.terms.items():
            v = c
            for x, k in zip(point, e):
                if k:
                    v *= x ** k
            total += v
        return total

    def substitute(self, mapping, nvars=None):
        """Replace variable i by mapping[i] (an MPoly in `nvars` variables or a scalar)."""
        nv = self.nvars if nvars is None else nvars
        out = MPoly.zero(nv)
        cache = {}
        for e, c in self.terms.items():
            term = MPoly.const(nv, c)
            for i, k in enumerate(e):
                if not k:
                    continue
                if i in mapping:
                    key = (i, k)
                    if key not in cache:
                        base = mapping[i]
                        if not isinstance(base, MPoly):
                            base = MPoly.const(nv, base)
                        cache[key] = base ** k
                    term = term * cache[key]
                else:
                    if nv != self.nvars:
                        raise ValueError("unmapped variable with changed ring")
                    term = term * MPoly.var(nv, i) ** k
            out = out + term
        return out

    def leading(self):
        """Lexicographically largest exponent and its coefficient."""
        e = max(self.terms)
        return e, self.terms[e]

    def content(self):
        """Positive rational content (gcd of numerators over lcm of denominators)."""
        if not self.terms:
            return _ONE
        g = 0
        lcm = 1
        for c in self.terms.values():
            g = gcd(g, c.numerator)
            lcm = lcm * c.denominator // gcd(lcm, c.denominator)
        return Fraction(g, lcm)

    def primitive(self):
        """Scale to integer coefficients with gcd 1 and positive leading coefficient."""
        if not self.terms:
            return self
        c = self.content()
        if self.leading()[1] < 0:
            c = -c
        return self.scale(1 / c)

    def exact_div(self, other):
        """Exact polynomial division; raises ArithmeticError if not divisible."""
        if isinstance(other, MPoly) and other.is_constant():
            other = other.constant_value()
        if not isinstance(other, MPoly):
            other = to_scalar(other)
            if not other:
                raise ZeroDivisionError
            return self.scale(1 / other)
        if other.is_zero():
            raise ZeroDivisionError
        de, dc = other.leading()
        q = {}
        r = self
        while r.terms:
            re_, rc = r.leading()
            diff = tuple(a - b for a, b in zip(re_, de))
            if min(diff) < 0:
                raise ArithmeticError("inexact polynomial division")
            f = rc / dc
            q[diff] = f
            mono = MPoly._raw(self.nvars, {diff: f})
            r = r - other * mono
        return MPoly._raw(self.nvars, q)

    def __repr__(self):
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, reverse=True):
            c = self.terms[e]
            mono = "*".join(
                (f"x{i + 1}" if k == 1 else f"x{i + 1}^{k}") for i, k in enumerate(e) if k
            )
            if not mono:
                parts.append(format_scalar(c))
            elif c == 1:
                parts.append(mono)
            else:
                parts.append(f"{format_scalar(c)}*{mono}")
        return " + ".join(parts)


# ------------------------------------------------------------------- matrices

def _is_zero(x):
    if isinstance(x, (MPoly, LaurentPoly, RatFunc)):
        return x.is_zero()
    return x == 0


def _exact_div(a, b):
    if isinstance(a, (MPoly, LaurentPoly)):
        return a.exact_div(b)
    if isinstance(b, (MPoly, LaurentPoly)):
        raise TypeError("mixed division")
    return a / b


def _nonzero_count(m, c, rows):
    return sum(1 for r in rows if not _is_zero(m[r][c]))


def _rank_rational(a):
    rank = 0
    ncols = len(a[0])
    rows = [r for r in a if any(r)]
    for c in range(ncols):
        piv = next((r for r in rows if r[c]), None)
        if piv is None:
            continue
        rows.remove(piv)
        inv = 1 / piv[c]
        nxt = []
        for r in rows:
            x = r[c]
            if x:
                f = x * inv
                r = [u - f * v if v else u for u, v in zip(r, piv)]
                if any(r):
                    nxt.append(r)
            else:
                nxt.append(r)
        rows = nxt
        rank += 1
        if not rows:
            break
    return rank


def rank_exact(m):
    """Rank over the fraction field of the entry ring (fraction-free elimination)."""
    a = [list(row) for row in m]
    if not a or not a[0]:
        return 0
    if not any(isinstance(x, (MPoly, LaurentPoly, RatFunc)) for row in a for x in row):
        return _rank_rational([[to_scalar(x) for x in row] for row in a])
    nrows, ncols = len(a), len(a[0])
    rows = list(range(nrows))
    cols = list(range(ncols))
    prev = None
    rank = 0
    while rows and cols:
        # densest column first, then sparsest pivot row within it
        best = None
        for c in cols:
            cnt = _nonzero_count(a, c, rows)
            if cnt and (best is None or cnt > best[0]):
                best = (cnt, c)
        if best is None:
            break
        c = best[1]
        cands = [r for r in rows if not _is_zero(a[r][c])]
        pr = min(cands, key=lambda r: sum(1 for k in cols if not _is_zero(a[r][k])))
        piv = a[pr][c]
        rows.remove(pr)
        cols.remove(c)
        for r in rows:
            x = a[r][c]
            for k in cols:
                v = piv * a[r][k] - x * a[pr][k]
                if prev is not None:
                    v = _exact_div(v, prev)
                a[r][k] = v
            a[r][c] = piv * 0
        prev = piv
        rank += 1
    return rank


def mat_identity(n, one=_ONE):
    zero = one * 0
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def mat_zero(r, c, zero=_ZERO):
    return [[zero for _ in range(c)] for _ in range(r)]


def mat_mul(a, b):
    k, m = len(b), len(b[0]) if b else 0
    out = []
    for ai in a:
        row = None
        for t in range(k):
            x = ai[t]
            if _is_zero(x):
                continue
            bt = b[t]
            if row is None:
                row = [x * y for y in bt]
            else:
                row = [u + x * y for u, y in zip(row, bt)]
        if row is None:
            z = ai[0] * 0 if ai else _ZERO
            row = [z * (b[0][j] if k else 0) for j in range(m)] if k else []
        out.append(row)
    return out


def mat_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(a, c):
    return [[x * c for x in row] for row in a]


def mat_pow(a, p):
    r = mat_identity(len(a))
    for _ in range(p):
        r = mat_mul(r, a)
    return r


def mat_transpose(a):
    return [list(col) for col in zip(*a)]


def mat_scalar(a):
    return [[to_scalar(x) for x in row] for row in a]


def mat_equal(a, b):
    return len(a) == len(b) and all(
        len(ra) == len(rb) and all(x == y for x, y in zip(ra, rb)) for ra, rb in zip(a, b)
    )


def mat_inverse(a):
    """Gauss-Jordan inverse over a field (Fraction or RatFunc entries)."""
    n = len(a)
    one = a[0][0] * 0 + 1 if n else _ONE
    m = [list(row) + [one if i == j else one * 0 for j in range(n)] for i, row in enumerate(a)]
    for c in range(n):
        pr = next((r for r in range(c, n) if not _is_zero(m[r][c])), None)
        if pr is None:
            raise SingularMatrix("matrix is singular")
        m[c], m[pr] = m[pr], m[c]
        inv = 1 / m[c][c] if not isinstance(m[c][c], RatFunc) else RatFunc(1) / m[c][c]
        m[c] = [x * inv for x in m[c]]
        for r in range(n):
            if r != c and not _is_zero(m[r][c]):
                f = m[r][c]
                m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    return [row[n:] for row in m]


def solve_left(c, rhs_rows):
    """Solve x·C = v for each row vector v in rhs_rows over a field (Gauss-Jordan on Cᵀ)."""
    n = len(c)
    ct = mat_transpose(c)
    k = len(rhs_rows)
    # augmented system Cᵀ xᵀ = vᵀ for all right-hand sides at once
    m = [list(ct[i]) + [rhs_rows[j][i] for j in range(k)] for i in range(n)]
    for col in range(n):
        pr = next((r for r in range(col, n) if not _is_zero(m[r][col])), None)
        if pr is None:
            raise SingularMatrix("basis matrix is singular")
        m[col], m[pr] = m[pr], m[col]
        p = m[col][col]
        m[col] = [x / p for x in m[col]]
        for r in range(n):
            if r != col and not _is_zero(m[r][col]):
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return [[m[i][n + j] for i in range(n)] for j in range(k)]


def determinant(a):
    """Determinant via fraction-free Bareiss (works over integral domains)."""
    n = len(a)
    if n == 0:
        return _ONE
    m = [list(row) for row in a]
    sign = 1
    prev = None
    for c in range(n - 1):
        pr = next((r for r in range(c, n) if not _is_zero(m[r][c])), None)
        if pr is None:
            return m[0][0] * 0
        if pr != c:
            m[c], m[pr] = m[pr], m[c]
            sign = -sign
        for r in range(c + 1, n):
            for k in range(c + 1, n):
                v = m[c][c] * m[r][k] - m[r][c] * m[c][k]
                if prev is not None:
                    v = _exact_div(v, prev)
                m[r][k] = v
        prev = m[c][c]
    d = m[n - 1][n - 1]
    return d if sign > 0 else -d


def kernel_basis(a):
    """Basis of the right null space {x : A x = 0} over Q."""
    rows = [[to_scalar(x) for x in r] for r in a]
    ncols = len(rows[0]) if rows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pr = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        p = rows[r][c]
        rows[r] = [x / p for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [_ZERO] * ncols
        v[f] = _ONE
        for i, pc in enumerate(pivots):
            v[pc] = -rows[i][f]
        basis.append(v)
    return basis


# ------------------------------------------------------------ eigenvalues

def charpoly(m):
    """Coefficients [c_0, ..., c_n] of det(λI − M) (monic), Faddeev-LeVerrier."""
    a = mat_scalar(m)
    n = len(a)
    coeffs = [_ZERO] * (n + 1)
    coeffs[n] = _ONE
    mk = mat_zero(n, n)
    for k in range(1, n + 1):
        mk = mat_mul(a, mk)
        c_prev = coeffs[n - k + 1]
        mk = [[mk[i][j] + (c_prev if i == j else 0) for j in range(n)] for i in range(n)]
        am = mat_mul(a, mk)
        tr = sum(am[i][i] for i in range(n))
        coeffs[n - k] = -tr / k
    return coeffs


def _divisors(x):
    x = abs(x)
    out = set()
    for d in range(1, isqrt(x) + 1):
        if x % d == 0:
            out.add(d)
            out.add(x // d)
    return out


def _synthetic_div(coeffs, r):
    """Divide polynomial (low→high coefficients) by (λ − r); return quotient, remainder."""
    n = len(coeffs) - 1
    q = [_ZERO] * n
    acc = _ZERO
    for i in range(n, 0, -1):
        acc = acc * r + coeffs[i]
        q[i - 1] = acc
    rem = acc * r + coeffs[0]
    return q, rem


def rational_eigenvalues(m):
    """Distinct eigenvalues with algebraic multiplicities, sorted ascending."""
    n = len(m)
    if n == 0:
        return []
    coeffs = charpoly(m)
    roots = {}
    # strip zero roots
    while len(coeffs) > 1 and coeffs[0] == 0:
        coeffs = coeffs[1:]
        roots[_ZERO] = roots.get(_ZERO, 0) + 1
    while len(coeffs) > 1:
        den = 1
        for c in coeffs:
            den = den * c.denominator // gcd(den, c.denominator)
        ints = [int(c * den) for c in coeffs]
        found = None
        for p in sorted(_divisors(ints[0])):
            for q in sorted(_divisors(ints[-1])):
                for s in (1, -1):
                    r = Fraction(s * p, q)
                    _, rem = _synthetic_div(coeffs, r)
                    if rem == 0:
                        found = r
                        break
                if found is not None:
                    break
            if found is not None:
                break
        if found is None:
            raise NonSplitSpectrum(f"irreducible factor of degree {len(coeffs) - 1}")
        coeffs, _ = _synthetic_div(coeffs, found)
        roots[found] = roots.get(found, 0) + 1
    return sorted(roots.items())


__all__ = [
    "Scalar", "to_scalar", "format_scalar", "NonSplitSpectrum", "SingularMatrix",
    "LaurentPoly", "RatFunc", "MPoly", "poly_gcd", "rank_exact", "determinant",
    "mat_identity", "mat_zero", "mat_mul", "mat_add", "mat_sub", "mat_scale", "mat_pow",
    "mat_transpose", "mat_inverse", "mat_equal", "solve_left", "kernel_basis",
    "charpoly", "rational_eigenvalues",
]
