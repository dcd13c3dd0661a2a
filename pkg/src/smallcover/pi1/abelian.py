"""Abelianization through the Smith normal form, in exact integer arithmetic.

Entries are Python ints, so intermediate growth can never wrap around.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from math import gcd

from .presentation import exponent_sums


@dataclass(frozen=True)
class AbelianInvariants:
    free_rank: int
    torsion: tuple[int, ...]

    def __post_init__(self):
        t = tuple(int(d) for d in self.torsion)
        assert all(d >= 2 for d in t), t
        assert all(b % a == 0 for a, b in zip(t, t[1:])), t
        object.__setattr__(self, "torsion", t)

    def direct_sum(self, other):
        ds = list(self.torsion) + list(other.torsion)
        rows = [[d if i == j else 0 for j in range(len(ds))] for i, d in enumerate(ds)]
        return AbelianInvariants(self.free_rank + other.free_rank,
                                 tuple(d for d in invariant_factors(rows, len(ds)) if d != 1))

    def mod2_rank(self):
        """Dimension of H_1 tensor Z_2."""
        return self.free_rank + sum(1 for d in self.torsion if d % 2 == 0)

    def __str__(self):
        parts = []
        if self.free_rank == 1:
            parts.append("Z")
        elif self.free_rank > 1:
            parts.append("Z^%d" % self.free_rank)
        parts.extend("Z/%d" % d for d in self.torsion)
        return " + ".join(parts) if parts else "0"

    def to_dict(self):
        return {"free_rank": self.free_rank, "torsion": list(self.torsion)}

    def to_json(self):
        return json.dumps(self.to_dict())


def _diagonalize(rows, ncols):
    """Reduce to a diagonal by unimodular row/column operations; returns the nonzero diagonal."""
    A = [list(r) for r in rows if any(r)]
    m = len(A)
    diag = []
    t = 0
    while t < m and t < ncols:
        # pivot = entry of least absolute value in the trailing block
        best = None
        for i in range(t, m):
            for j in range(t, ncols):
                x = A[i][j]
                if x and (best is None or abs(x) < best[0]):
                    best = (abs(x), i, j)
                    if best[0] == 1:
                        break
            if best is not None and best[0] == 1:
                break
        if best is None:
            break
        _, i, j = best
        A[t], A[i] = A[i], A[t]
        if j != t:
            for row in A:
                row[t], row[j] = row[j], row[t]
        while True:
            p = A[t][t]
            dirty = False
            for i in range(t + 1, m):
                x = A[i][t]
                if x:
                    q = x // p
                    Ai, At = A[i], A[t]
                    for j in range(t, ncols):
                        if At[j]:
                            Ai[j] -= q * At[j]
                    if Ai[t]:
                        dirty = True
            for j in range(t + 1, ncols):
                x = A[t][j]
                if x:
                    q = x // p
                    for i in range(t, m):
                        if A[i][t]:
                            A[i][j] -= q * A[i][t]
                    if A[t][j]:
                        dirty = True
            if not dirty:
                break
            # move a smaller remainder into the pivot position and repeat
            best = None
            for i in range(t, m):
                if A[i][t] and (best is None or abs(A[i][t]) < best[0]):
                    best = (abs(A[i][t]), i, None)
            for j in range(t, ncols):
                if A[t][j] and (best is None or abs(A[t][j]) < best[0]):
                    best = (abs(A[t][j]), None, j)
            _, i, j = best
            if i is not None:
                A[t], A[i] = A[i], A[t]
            else:
                for row in A:
                    row[t], row[j] = row[j], row[t]
        diag.append(abs(A[t][t]))
        t += 1
    return diag


def invariant_factors(rows, ncols):
    """Nonzero Smith invariant factors d1 | d2 | ... of an integer matrix."""
    d = _diagonalize(rows, ncols)
    # diag(a, b) is equivalent to diag(gcd, lcm); this turns any diagonal into a divisor chain
    n = len(d)
    for i in range(n):
        for j in range(i + 1, n):
            a, b = d[i], d[j]
            g = gcd(a, b)
            d[i], d[j] = g, a // g * b
    return d


def abelianization(pres):
    rows = [exponent_sums(r, pres.ngens) for r in pres.relators]
    factors = invariant_factors(rows, pres.ngens)
    rank = len(factors)
    return AbelianInvariants(pres.ngens - rank, tuple(d for d in factors if d != 1))


def mod2_betti1(P):
    """First mod-2 Betti number of any small cover over ``P``: f2 - 3."""
    return len(P.facets) - 3
