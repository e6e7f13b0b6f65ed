"""Full specters (eigenvalue, Jordan type) of matrices, their canonical
representatives M(S), and the scaling action of k*."""

from fractions import Fraction

from .exact import (
    format_scalar, mat_identity, mat_mul, mat_scalar, mat_sub, mat_zero, rank_exact,
    rational_eigenvalues, to_scalar,
)
from .partitions import Partition, partition_sum


class FullSpecter:
    """Set of (eigenvalue, partition) pairs, stored sorted by eigenvalue."""

    __slots__ = ("pairs",)

    def __init__(self, pairs):
        items = []
        seen = set()
        for lam, a in (pairs.items() if isinstance(pairs, dict) else pairs):
            lam = to_scalar(lam)
            a = Partition(a)
            if not a:
                raise ValueError("empty Jordan type")
            if lam in seen:
                raise ValueError(f"repeated eigenvalue {lam}")
            seen.add(lam)
            items.append((lam, a))
        self.pairs = tuple(sorted(items))

    @property
    def dim(self):
        return sum(a.total for _, a in self.pairs)

    @property
    def eigenvalues(self):
        return tuple(lam for lam, _ in self.pairs)

    def partition_of(self, lam):
        for l, a in self.pairs:
            if l == lam:
                return a
        return None

    def is_nilpotent(self):
        return all(lam == 0 for lam, _ in self.pairs)

    def total_partition(self):
        return partition_sum([a for _, a in self.pairs])

    def scaled(self, alpha):
        alpha = to_scalar(alpha)
        if alpha == 0:
            raise ValueError("scaling factor must be nonzero")
        return FullSpecter([(alpha * lam, a) for lam, a in self.pairs])

    def __eq__(self, other):
        return isinstance(other, FullSpecter) and self.pairs == other.pairs

    def __hash__(self):
        return hash(self.pairs)

    def __repr__(self):
        inner = ", ".join(f"({format_scalar(l)},{a})" for l, a in self.pairs)
        return "{" + inner + "}"


def fs_of_matrix(m):
    m = mat_scalar(m)
    n = len(m)
    pairs = []
    for lam, mult in rational_eigenvalues(m):
        shifted = mat_sub(m, [[lam if i == j else 0 for j in range(n)] for i in range(n)])
        ranks = [n]
        power = mat_identity(n)
        while True:
            power = mat_mul(power, shifted)
            ranks.append(rank_exact(power))
            if n - ranks[-1] == mult or ranks[-1] == ranks[-2]:
                break
        drops = [ranks[p - 1] - ranks[p] for p in range(1, len(ranks))]
        drops = [d for d in drops if d]
        pairs.append((lam, Partition(drops).conjugate()))
    return FullSpecter(pairs)


def _sort_key(x):
    return -x


def k_representative(values, groups):
    """Sort values non-increasingly within each consecutive group."""
    out = []
    pos = 0
    for g in groups:
        out.extend(sorted(values[pos:pos + g], key=_sort_key))
        pos += g
    return tuple(out)


def kstar_representative(values, groups):
    """Canonical representative of the k*-scaling and group-permutation orbit.

    Returns (scale, tuple): tuple = k_representative(scale·values) with first
    nonzero entry 1, choosing the lexicographically largest such tuple.
    """
    values = [to_scalar(v) for v in values]
    nonzero = sorted({v for v in values if v})
    if not nonzero:
        raise ValueError("K* excludes the zero tuple")
    best = None
    for v in nonzero:
        c = 1 / v
        rep = k_representative([c * x for x in values], groups)
        first = next(x for x in rep if x)
        if first != 1:
            continue
        if best is None or rep > best[1]:
            best = (c, rep)
    return best


def block_groups(b):
    """Group sizes (b_len, b_{len-1}-b_len, ..., b_1-b_2) with zero entries kept."""
    b = Partition(b)
    sizes = []
    for j in range(len(b), 0, -1):
        sizes.append(b.part(j) - b.part(j + 1))
    return sizes


def alpha_assignment(s):
    """The α-tuple of M(S) (positions 1..b_1) and the partition b = Σ a^i."""
    b = s.total_partition()
    alphas = []
    for j in range(len(b), 0, -1):
        group = []
        for lam, a in s.pairs:
            group.extend([lam] * (a.part(j) - a.part(j + 1)))
        alphas.extend(sorted(group, key=_sort_key))
    return alphas, b


def jordan_chain_matrix(diagonals):
    """Lower bidiagonal matrix with the given diagonal and ones below it."""
    k = len(diagonals)
    m = mat_zero(k, k)
    for i, d in enumerate(diagonals):
        m[i][i] = to_scalar(d)
        if i + 1 < k:
            m[i + 1][i] = Fraction(1)
    return m


def block_diag(blocks):
    n = sum(len(b) for b in blocks)
    m = mat_zero(n, n)
    off = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, x in enumerate(row):
                m[off + i][off + j] = x
        off += len(b)
    return m


def matrix_from_alphas(b, alphas):
    return block_diag([jordan_chain_matrix(alphas[:bj]) for bj in Partition(b)])


def canonical_matrix(s):
    """M(S): blocks J_{1,...,1}(α_1..α_{b_j}) for the parts b_j of Σ a^i."""
    alphas, b = alpha_assignment(s)
    return matrix_from_alphas(b, alphas)


def equal_mod_scaling(s1, s2):
    """Some α ≠ 0 with α*s1 = s2, or None."""
    if s1.dim != s2.dim or len(s1.pairs) != len(s2.pairs):
        return None
    if s1.is_nilpotent() or s2.is_nilpotent():
        return Fraction(1) if s1 == s2 else None
    lam = next(l for l in s1.eigenvalues if l)
    for mu in s2.eigenvalues:
        if mu and s1.scaled(mu / lam) == s2:
            return mu / lam
    return None


def normalize_scaling(s):
    """Canonical K*-normalized representative of the k*-orbit of s."""
    if s.is_nilpotent():
        return s
    alphas, b = alpha_assignment(s)
    groups = [g for g in block_groups(b) if g]
    c, _ = kstar_representative(alphas, groups)
    return s.scaled(c)


def enumerate_specters(total, eigenvalues):
    """All full specters of the given size with eigenvalues from the given set."""
    from itertools import combinations, product

    from .partitions import enumerate_partitions

    vals = sorted({to_scalar(v) for v in eigenvalues})
    out = []

    def compositions(n, k):
        if k == 1:
            yield (n,)
            return
        for first in range(1, n - k + 2):
            for rest in compositions(n - first, k - 1):
                yield (first,) + rest

    for k in range(1, min(len(vals), total) + 1):
        for chosen in combinations(vals, k):
            for sizes in compositions(total, k):
                for parts in product(*(enumerate_partitions(s) for s in sizes)):
                    out.append(FullSpecter(list(zip(chosen, parts))))
    return out
