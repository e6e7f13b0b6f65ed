"""Integer partitions, dominance order, covers and dominance levels."""

from functools import lru_cache
from itertools import accumulate


class UnequalTotals(ValueError):
    pass


class Partition(tuple):
    """Weakly decreasing tuple of positive integers."""

    def __new__(cls, parts=()):
        if isinstance(parts, str):
            parts = parse_partition(parts)
        parts = tuple(int(p) for p in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(p <= 0 for p in parts):
            raise ValueError(f"parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @property
    def total(self):
        return sum(self)

    def part(self, i):
        """a_i with 1-based i; zero past the length."""
        return self[i - 1] if 1 <= i <= len(self) else 0

    def conjugate(self):
        if not self:
            return Partition()
        return Partition(sum(1 for p in self if p >= j) for j in range(1, self[0] + 1))

    def __repr__(self):
        return "(" + ",".join(str(p) for p in self) + ")"

    __str__ = __repr__


def parse_partition(text):
    text = text.strip().strip("()[]")
    if not text:
        return ()
    return tuple(int(p) for p in text.replace(" ", "").split(",") if p)


def dominates(a, b):
    """a ⪰ b in dominance order."""
    a, b = Partition(a), Partition(b)
    if a.total != b.total:
        raise UnequalTotals(f"{a} and {b} have different totals")
    n = max(len(a), len(b))
    pa = list(accumulate(a.part(i) for i in range(1, n + 1)))
    pb = list(accumulate(b.part(i) for i in range(1, n + 1)))
    return all(x >= y for x, y in zip(pa, pb))


def preceding(a):
    """The set a⁻ of partitions covered by a in dominance order."""
    a = Partition(a)
    L = len(a)
    part = a.part
    out = set()
    for k in range(1, L + 1):
        # move one box from row k to row k+1
        if part(k) - 1 > part(k + 1):
            b = list(a) + [0]
            b[k - 1] -= 1
            b[k] += 1
            out.add(Partition(b))
        # move one box from row k past a run of equal rows k+1..k+l
        l = 1
        while part(k + l) == part(k) - 1 and part(k) - 1 > 0:
            if part(k + l + 1) + 1 == part(k) - 1:
                b = list(a) + [0] * (l + 2)
                b[k - 1] -= 1
                b[k + l] += 1
                out.add(Partition(b))
            l += 1
    return out


@lru_cache(maxsize=None)
def _level(a):
    below = preceding(a)
    if not below:
        return 0
    return 1 + max(_level(b) for b in below)


def level(a):
    return _level(Partition(a))


def partition_sum(parts):
    parts = [Partition(p) for p in parts]
    n = max((len(p) for p in parts), default=0)
    return Partition(sum(p.part(i) for p in parts) for i in range(1, n + 1))


def enumerate_partitions(n):
    """All partitions of n in reverse-lexicographic order."""
    if n < 1:
        raise ValueError("n must be positive")
    out = []

    def rec(remaining, maxpart, prefix):
        if remaining == 0:
            out.append(Partition(prefix))
            return
        for p in range(min(remaining, maxpart), 0, -1):
            prefix.append(p)
            rec(remaining - p, p, prefix)
            prefix.pop()

    rec(n, n, [])
    return out

