"""Pure-Python incremental integer echelon (fallback for the compiled kernel)."""

from math import gcd


def _primitive(vec):
    g = 0
    for x in vec:
        if x:
            g = gcd(g, x)
            if g == 1:
                break
    lead = next(x for x in vec if x)
    if lead < 0:
        g = -g
    if g != 1:
        vec = [x // g for x in vec]
    return vec


class Echelon:
    """Row echelon form over Z of a growing set of integer vectors.

    Rows are kept primitive with a positive pivot.  Elimination is forward
    only, in insertion order, so the first ``k`` rows always span the
    first ``k`` accepted vectors.
    """

    __slots__ = ("n", "rows", "pivots")

    def __init__(self, n):
        self.n = n
        self.rows = []
        self.pivots = []

    def __len__(self):
        return len(self.rows)

    def reduce(self, vec, limit=-1):
        """Residual of ``vec`` (a list of ints) against the first ``limit`` rows.

        Returns ``None`` when the residual vanishes.
        """
        v = list(vec)
        rows = self.rows
        pivots = self.pivots
        k = len(rows) if limit < 0 else min(limit, len(rows))
        n = self.n
        for i in range(k):
            p = pivots[i]
            a = v[p]
            if not a:
                continue
            row = rows[i]
            b = row[p]
            g = gcd(a, b)
            a //= g
            b //= g
            if b == 1:
                for j in range(p, n):
                    r = row[j]
                    if r:
                        v[j] -= a * r
            else:
                for j in range(n):
                    v[j] = b * v[j] - a * row[j]
        for x in v:
            if x:
                return _primitive(v)
        return None

    def add(self, vec):
        """Insert ``vec``; return True if it enlarged the span."""
        res = self.reduce(vec)
        if res is None:
            return False
        p = next(j for j, x in enumerate(res) if x)
        self.rows.append(res)
        self.pivots.append(p)
        return True

    def contains(self, vec, limit=-1):
        return self.reduce(vec, limit) is None

    def copy(self, limit=-1):
        k = len(self.rows) if limit < 0 else min(limit, len(self.rows))
        out = Echelon(self.n)
        out.rows = [list(r) for r in self.rows[:k]]
        out.pivots = list(self.pivots[:k])
        return out
