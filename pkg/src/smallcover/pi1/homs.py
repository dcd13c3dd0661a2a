"""Counting homomorphisms from a finitely presented group into a finite group.

The search follows a static plan computed once per (presentation) call:
generators are either *branched* over all elements of the target, or
*forced* by a relator in which they are the only unassigned generator and
occur exactly once.  Relators are checked as soon as all their letters are
assigned.  Partial assignments are processed as numpy arrays, level by
level, and split into chunks to bound memory.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np


class CapExceeded(RuntimeError):
    pass


@dataclass(frozen=True, eq=False)
class FiniteGroupTable:
    name: str
    table: np.ndarray
    identity: int = 0

    def __post_init__(self):
        t = np.asarray(self.table, dtype=np.int64)
        n = t.shape[0]
        if t.shape != (n, n) or t.min() < 0 or t.max() >= n:
            raise ValueError("table must be n x n with entries in 0..n-1")
        e = self.identity
        if not (np.array_equal(t[e], np.arange(n)) and np.array_equal(t[:, e], np.arange(n))):
            raise ValueError("%d is not an identity" % e)
        # associativity: (ab)c == a(bc) for all triples
        if not np.array_equal(t[t, :], t[:, t]):
            raise ValueError("table is not associative")
        inv = np.full(n, -1)
        for a in range(n):
            hits = np.nonzero(t[a] == e)[0]
            if len(hits) != 1 or t[hits[0], a] != e:
                raise ValueError("element %d has no two-sided inverse" % a)
            inv[a] = hits[0]
        object.__setattr__(self, "table", t)
        object.__setattr__(self, "inverse", inv)

    @property
    def order(self):
        return self.table.shape[0]


def cyclic_group(n):
    a = np.arange(n)
    return FiniteGroupTable("Z%d" % n, (a[:, None] + a[None, :]) % n)


def elementary_abelian(k):
    """(Z_2)^k with elements as bit masks."""
    a = np.arange(2 ** k)
    return FiniteGroupTable("Z2^%d" % k if k > 1 else "Z2", a[:, None] ^ a[None, :])


def symmetric_group(n):
    perms = list(itertools.permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    # (p*q)(x) = p(q(x))
    table = [[index[tuple(p[q[x]] for x in range(n))] for q in perms] for p in perms]
    return FiniteGroupTable("S%d" % n, np.array(table))


TARGETS = {
    "z2": lambda: elementary_abelian(1),
    "z2^2": lambda: elementary_abelian(2),
    "z2^3": lambda: elementary_abelian(3),
    "s3": lambda: symmetric_group(3),
    "z3": lambda: cyclic_group(3),
    "z4": lambda: cyclic_group(4),
}


def target_group(name):
    try:
        return TARGETS[name.lower()]()
    except KeyError:
        raise ValueError("unknown target group %r (known: %s)" % (name, ", ".join(TARGETS))) from None


def _plan(pres):
    rels = [r for r in pres.relators]
    letters = [set(g for g, _ in r) for r in rels]
    known = set()
    checked = [False] * len(rels)
    steps = []
    ngens = pres.ngens
    unused_gens = set(range(ngens)) - set().union(*letters) if rels else set(range(ngens))
    while len(known) < ngens:
        step = None
        for ri, r in enumerate(rels):
            if checked[ri]:
                continue
            unknown = letters[ri] - known
            if len(unknown) == 1:
                g = next(iter(unknown))
                if sum(1 for x, _ in r if x == g) == 1:
                    step = ("force", g, ri)
                    break
        if step is None:
            free = [g for g in range(ngens) if g not in known and g not in unused_gens]
            if free:
                # branch where forcing then settles the most generators and relators;
                # ties go to the generator in the most nearly-complete relators
                def score(g):
                    near = sum(1.0 / len(letters[ri] - known) for ri in range(len(rels))
                               if not checked[ri] and g in letters[ri])
                    return _closure(rels, letters, known | {g}, checked) + (near, -g)
                g = max(free, key=score)
            else:
                g = min(g for g in unused_gens if g not in known)
            step = ("branch", g, None)
        kind, g, src = step
        known.add(g)
        if src is not None:
            checked[src] = True
        done = [ri for ri in range(len(rels)) if not checked[ri] and letters[ri] <= known]
        for ri in done:
            checked[ri] = True
        steps.append((kind, g, src, done))
    return steps


def _closure(rels, letters, known, checked):
    """(generators forced, relators completed) by propagating from ``known``."""
    known = set(known)
    open_ = [ri for ri in range(len(rels)) if not checked[ri]]
    forced = 0
    progress = True
    while progress:
        progress = False
        for ri in open_:
            unknown = letters[ri] - known
            if len(unknown) == 1:
                g = next(iter(unknown))
                if sum(1 for x, _ in rels[ri] if x == g) == 1:
                    known.add(g)
                    forced += 1
                    progress = True
    return forced, sum(1 for ri in open_ if letters[ri] <= known)


def _eval(word, vals, H):
    x = np.full(vals.shape[0], H.identity, dtype=np.int64)
    for g, s in word:
        col = vals[:, g] if s > 0 else H.inverse[vals[:, g]]
        x = H.table[x, col]
    return x


def count_homs(pres, H, cap=10 ** 7, chunk=1 << 16):
    """Number of homomorphisms ``pres -> H``.

    ``cap`` bounds the number of branched assignments (partial assignments
    created by trying an element for a free generator); exceeding it raises
    :class:`CapExceeded`.  Forced assignments are not counted.
    """
    steps = _plan(pres)
    rels = pres.relators
    n = H.order
    used = [0]

    def run(front, k):
        while k < len(steps):
            kind, g, src, done = steps[k]
            if kind == "branch":
                if len(front) * n > chunk and len(front) > 1:
                    half = len(front) // 2
                    return run(front[:half], k) + run(front[half:], k)
                used[0] += len(front) * n
                if used[0] > cap:
                    raise CapExceeded("more than %d assignments needed" % cap)
                front = np.repeat(front, n, axis=0)
                front[:, g] = np.tile(np.arange(n), len(front) // n)
            else:
                r = rels[src]
                i = next(j for j, (x, _) in enumerate(r) if x == g)
                a = _eval(r[:i], front, H)
                b = _eval(r[i + 1:], front, H)
                val = H.inverse[H.table[b, a]]          # g^s = (b a)^-1
                front[:, g] = val if r[i][1] > 0 else H.inverse[val]
            for ri in done:
                ok = _eval(rels[ri], front, H) == H.identity
                front = front[ok]
            if len(front) == 0:
                return 0
            k += 1
        return len(front)

    start = np.zeros((1, pres.ngens), dtype=np.int64)
    return int(run(start, 0))
