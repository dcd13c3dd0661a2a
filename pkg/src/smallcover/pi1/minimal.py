"""Minimal balanced presentation of pi_1 of a small cover from a vertex order.

Start from the cell-structure presentation whose spanning tree is the Morse
parent tree (0-lift of each parent edge is trivial).  For every index-1
vertex ``v`` the other lift of its incoming edge is kept as ``a{v}``.
Index-2 vertices are processed by increasing rank: the three lifts on the
two incoming edges of ``w`` are eliminated through three of the four copies
of the facet whose top is ``w``; the fourth copy becomes ``r{F}``.  Finally
the five lifts into the sink are eliminated against the twelve copies of the
sink facets and the seven words left there are dropped.  They need not be
trivial words: typically they repeat a kept relator, or are products of
conjugates of kept relators.  Each is classified as empty, a cyclic
duplicate, or (weakest) a consequence in H_1, and the certificate records
the weakest class that occurred.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .. import cover as _cover
from ..charmap import CharMapError, validate_charmap
from ..morse import morse_data
from .abelian import abelianization
from .homs import CapExceeded, count_homs, elementary_abelian
from .presentation import Presentation, canonical_cyclic, cyclic_reduce, free_reduce, invert


class PostCheckError(AssertionError):
    """The minimal presentation disagrees with the cell-structure presentation."""


class WordGrowthError(RuntimeError):
    pass


@dataclass
class Certificate:
    eliminations: str = "certified"     # or "heuristic"
    leftovers: str = "freely-trivial"   # or "free-consequence", "abelian-consequence"
    fallbacks: list = field(default_factory=list)
    homs_checked: dict = field(default_factory=dict)

    @property
    def level(self):
        return "%s/%s" % (self.eliminations, self.leftovers)

    def to_dict(self):
        return {
            "level": self.level,
            "eliminations": self.eliminations,
            "leftovers": self.leftovers,
            "fallbacks": list(self.fallbacks),
            "homs_checked": dict(self.homs_checked),
        }


@dataclass(frozen=True)
class MinimalResult:
    presentation: Presentation
    certificate: Certificate
    cw: Presentation


def _sub(word, g, sol, sol_inv):
    out = []
    for x, s in word:
        if x == g:
            out.extend(sol if s > 0 else sol_inv)
        else:
            out.append((x, s))
    return free_reduce(out)


class _Eliminator:
    """Relators keyed by face copy; generators are lift indices that never get renumbered."""

    def __init__(self, relators, max_length):
        self.rels = dict(relators)
        self.max_length = max_length

    def occurs_once(self, key, g):
        return sum(1 for x, _ in self.rels[key] if x == g) == 1

    def eliminate(self, g, key):
        word = self.rels.pop(key)
        i = next(j for j, (x, _) in enumerate(word) if x == g)
        sol = invert(word[:i]) + invert(word[i + 1:])
        if word[i][1] < 0:
            sol = invert(sol)
        sol = free_reduce(sol)
        sol_inv = invert(sol)
        for k, w in self.rels.items():
            if any(x == g for x, _ in w):
                w = _sub(w, g, sol, sol_inv)
                if len(w) > self.max_length:
                    raise WordGrowthError("relator %r grew to %d letters (cap %d)" % (k, len(w), self.max_length))
                self.rels[k] = w

    def run(self, targets, local, cert, stage):
        """Eliminate ``targets`` through relators in ``local``; fall back to any relator."""
        pending = list(targets)
        while pending:
            hit = None
            for g in pending:
                for key in local:
                    if key in self.rels and self.occurs_once(key, g):
                        hit = (g, key)
                        break
                if hit:
                    break
            if hit is None:
                for g in pending:
                    for key in sorted(self.rels):
                        if self.occurs_once(key, g):
                            hit = (g, key)
                            break
                    if hit:
                        break
                if hit is None:
                    raise RuntimeError("%s: no relator eliminates any of %s" % (stage, pending))
                cert.eliminations = "heuristic"
                cert.fallbacks.append("%s: generator %d via relator %r" % (stage, hit[0], hit[1]))
            self.eliminate(*hit)
            pending.remove(hit[0])


def minimal_presentation(P, colors, order, max_length=10 ** 4, check_cap=2 * 10 ** 5):
    """Balanced presentation with ``f2 - 3`` generators ``a{v}`` and relators ``r{F}``.

    The result is checked against the cell-structure presentation: equal
    abelianization, and equal numbers of homomorphisms to Z2, Z2^2, Z2^3 where
    the count stays within ``check_cap`` assignments.  Disagreement raises
    :class:`PostCheckError`.
    """
    problems = validate_charmap(P, colors)
    if problems:
        raise CharMapError("invalid characteristic map: " + "; ".join(problems))
    md = morse_data(P, order)
    rank = order.rank
    tree = md.tree()
    copies = _cover.face_copies(P, colors, order)
    trivial = {2 * e for e in tree}

    relators = {}
    for fc in copies:
        relators[(fc.facet, fc.label)] = free_reduce(
            tuple((li, s) for li, s in fc.boundary if li not in trivial))
    elim = _Eliminator(relators, max_length)
    cert = Certificate()

    protected = {v: 2 * md.e_v[v] + 1 for v in md.e_v}

    def lifts_into(w):
        ins = [P.edge_id(w, u) for u in P.neighbors(w) if rank[u] < rank[w]]
        return sorted(li for e in ins for li in (2 * e, 2 * e + 1) if li not in trivial)

    labels = {f: sorted(lab for (g, lab) in relators if g == f) for f in range(len(P.facets))}
    r_keys = {}
    index2 = sorted(md.vertices_of_index(2), key=lambda v: rank[v])
    facet_of_top = {md.top_vertex[f]: f for f in range(len(P.facets)) if md.sink not in P.facets[f]}
    for w in index2:
        F = facet_of_top[w]
        local = [(F, lab) for lab in labels[F]]
        targets = lifts_into(w)
        assert len(targets) == 3
        elim.run(targets, local, cert, "vertex %d / facet %d" % (w, F))
        left = [k for k in local if k in elim.rels]
        if len(left) != 1:
            cert.eliminations = "heuristic"
            cert.fallbacks.append("facet %d kept %d copies" % (F, len(left)))
        r_keys[F] = left[0] if left else None

    sink_facets = sorted(P.vertex_facets[md.sink])
    local = [(F, lab) for F in sink_facets for lab in labels[F]]
    targets = lifts_into(md.sink)
    assert len(targets) == 5
    elim.run(targets, local, cert, "sink %d" % md.sink)

    keep = {k for k in r_keys.values() if k is not None}
    alphas = sorted(protected, key=lambda v: rank[v])
    gen_of = {protected[v]: i for i, v in enumerate(alphas)}

    def renamed(key):
        w = cyclic_reduce(elim.rels[key])
        if any(x not in gen_of for x, _ in w):
            raise PostCheckError("relator %r still uses non-protected generators" % (key,))
        return tuple((gen_of[x], s) for x, s in w)

    shelling_pos = {f: i for i, f in enumerate(md.shelling)}
    rel_facets = sorted((F for F, k in r_keys.items() if k is not None), key=lambda F: shelling_pos[F])
    rels = [renamed(r_keys[F]) for F in rel_facets]
    names = ["r%d" % F for F in rel_facets]
    pres = Presentation(tuple("a%d" % v for v in alphas), tuple(rels), tuple(names))

    leftovers = [renamed(k) for k in sorted(elim.rels) if k not in keep]
    _classify_leftovers(pres, leftovers, cert)

    cw = _cover.cw_presentation(P, colors, tree, order)
    _post_check(pres, cw, cert, check_cap)
    return MinimalResult(pres, cert, cw)


def _classify_leftovers(pres, leftovers, cert):
    """Words left on the sink facets must follow from the kept relators.

    Empty words and cyclic duplicates of kept relators (up to inversion)
    follow freely.  Anything else is only accepted when it lies in the
    integer span of the kept relators' exponent vectors, i.e. adding it
    leaves H_1 unchanged.
    """
    kept = {canonical_cyclic(r) for r in pres.relators}
    rest = [w for w in leftovers if w and canonical_cyclic(w) not in kept]
    if not rest:
        cert.leftovers = "freely-trivial" if not any(leftovers) else "free-consequence"
        return
    extended = Presentation(pres.generators, pres.relators + tuple(rest))
    if abelianization(extended) != abelianization(pres):
        raise PostCheckError("leftover relators are not consequences of the kept ones even in H_1")
    cert.leftovers = "abelian-consequence"


def _post_check(pres, cw, cert, cap):
    a, b = abelianization(pres), abelianization(cw)
    if a != b:
        raise PostCheckError("abelianization %s differs from cell structure %s" % (a, b))
    for k in (1, 2, 3):
        H = elementary_abelian(k)
        # every hom to an elementary abelian group factors through H_1, so the
        # count is predictable; skip the search when it would exceed the cap
        if (2 ** k) ** a.mod2_rank() > cap:
            cert.homs_checked[H.name] = "skipped"
            continue
        try:
            x, y = count_homs(pres, H, cap), count_homs(cw, H, cap)
        except CapExceeded:
            cert.homs_checked[H.name] = "skipped"
            continue
        if x != y:
            raise PostCheckError("hom count to %s: %d vs %d" % (H.name, x, y))
        cert.homs_checked[H.name] = x
