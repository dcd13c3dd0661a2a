"""Cell structure of the small cover M(P, lambda) = P x Z_2^3 / ~ and the
presentations of pi_1 read off it.

Cells: one 0-cell per vertex of P, two 1-cells per edge (cosets of
``G_e = <lambda(F), lambda(F')>``), four 2-cells per facet (cosets of
``<lambda(F)>``) and eight 3-cells.  Cosets are labelled by their minimal
element in the 0..7 encoding.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .charmap import CharMapError, coset_label, span, validate_charmap
from .pi1.abelian import abelianization
from .pi1.presentation import (
    Presentation,
    PresentationError,
    canonical_cyclic,
    cyclic_reduce,
    kill_generator,
    occurrences,
    tietze_eliminate,
)
from .polytope import f_vector


@dataclass(frozen=True)
class LiftedEdge:
    edge: int
    label: int
    tail: int
    head: int

    @property
    def name(self):
        return "e%d_%d" % (self.edge, self.label)


@dataclass(frozen=True)
class FaceCopy:
    facet: int
    label: int
    boundary: tuple[tuple[int, int], ...]   # (lift index, +1 along canonical direction / -1 against)


@dataclass(frozen=True)
class GenusReport:
    handlebody_1: tuple[int, int]
    handlebody_2: tuple[int, int]
    reduced_genus: int
    minimal_genus: int

    def to_dict(self):
        return {
            "handlebody_1": list(self.handlebody_1),
            "handlebody_2": list(self.handlebody_2),
            "reduced_canonical_genus": self.reduced_genus,
            "minimal_genus": self.minimal_genus,
        }


def _check(P, colors):
    problems = validate_charmap(P, colors)
    if problems:
        raise CharMapError("invalid characteristic map: " + "; ".join(problems))


def edge_group(P, colors, e):
    a, b = P.edges[e].facets
    return span(colors[a], colors[b])


def lift_index(P, colors, e, g):
    """Index (2e or 2e+1) of the lift of edge ``e`` whose coset contains ``g``."""
    return 2 * e + (0 if coset_label(g, edge_group(P, colors, e)) == 0 else 1)


def lifted_edges(P, colors, order=None):
    """The ``2 f1`` lifted edges; lift ``2e`` is the 0-coset, ``2e + 1`` the other one.

    Direction is from lower to higher rank when an order is given, else
    from lower to higher vertex id.
    """
    _check(P, colors)
    out = []
    for e, edge in enumerate(P.edges):
        u, v = edge.u, edge.v
        if order is not None and order.rank[u] > order.rank[v]:
            u, v = v, u
        G = edge_group(P, colors, e)
        assert len(G) == 4
        other = min(x for x in range(8) if x not in G)
        out.append(LiftedEdge(e, 0, u, v))
        out.append(LiftedEdge(e, other, u, v))
    return out


def face_copies(P, colors, order=None):
    lifts = lifted_edges(P, colors, order)
    out = []
    for f, cyc in enumerate(P.facets):
        sub = (0, colors[f])
        labels = sorted({coset_label(g, sub) for g in range(8)})
        k = len(cyc)
        for g in labels:
            word = []
            for i in range(k):
                u, w = cyc[i], cyc[(i + 1) % k]
                e = P.edge_id(u, w)
                li = lift_index(P, colors, e, g)
                word.append((li, 1 if lifts[li].tail == u else -1))
            out.append(FaceCopy(f, g, tuple(word)))
    return out


def bfs_tree(P, root=0):
    """Spanning tree (edge ids) of the vertex-edge graph by breadth-first search."""
    seen = {root}
    tree = set()
    queue = deque([root])
    while queue:
        v = queue.popleft()
        for w in P.neighbors(v):
            if w not in seen:
                seen.add(w)
                tree.add(P.edge_id(v, w))
                queue.append(w)
    return frozenset(tree)


def _check_tree(P, tree):
    tree = set(tree)
    n = P.vertex_count
    if len(tree) != n - 1 or not all(0 <= e < len(P.edges) for e in tree):
        raise ValueError("not a spanning tree: need %d edges" % (n - 1))
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for e in tree:
        a, b = find(P.edges[e].u), find(P.edges[e].v)
        if a == b:
            raise ValueError("not a spanning tree: edge %d closes a cycle" % e)
        parent[a] = b


def cw_presentation(P, colors, tree=None, order=None):
    """Presentation from the 2-skeleton: generators are all lifts except the
    0-lift of each tree edge, relators the boundaries of the 4 f2 face copies."""
    if tree is None:
        tree = bfs_tree(P)
    _check_tree(P, tree)
    lifts = lifted_edges(P, colors, order)
    trivial = {2 * e for e in tree}
    kept = [i for i in range(len(lifts)) if i not in trivial]
    gid = {li: j for j, li in enumerate(kept)}
    rels = []
    for fc in face_copies(P, colors, order):
        rels.append(tuple((gid[li], s) for li, s in fc.boundary if li in gid))
    return Presentation(tuple(lifts[i].name for i in kept), tuple(rels))


def wu_yu_presentation(P, colors, v0=0):
    """Presentation with generators ``s{F}_{g}`` (g the minimal coset element of <lambda(F)>).

    Involutions ``s_{F,g+lambda(F)} = s_{F,g}^-1`` are applied to the
    symbols; relators are the 4-cycles around each edge, deduplicated up to
    rotation and inversion, followed by ``s_{F,g} = 1`` for facets at ``v0``.
    """
    _check(P, colors)
    if not 0 <= v0 < P.vertex_count:
        raise ValueError("invalid vertex %r" % (v0,))
    names = []
    index = {}
    for f in range(len(P.facets)):
        for g in sorted({coset_label(x, (0, colors[f])) for x in range(8)}):
            index[(f, g)] = len(names)
            names.append("s%d_%d" % (f, g))

    def s(f, g):
        rep = coset_label(g, (0, colors[f]))
        return (index[(f, rep)], 1 if g == rep else -1)

    def inv(letter):
        return (letter[0], -letter[1])

    rels = []
    seen = set()
    for e in P.edges:
        F, G = e.facets
        lf, lg = colors[F], colors[G]
        for g in range(8):
            w = (s(F, g), s(G, g ^ lf), inv(s(F, g ^ lg)), inv(s(G, g)))
            key = canonical_cyclic(w)
            if key and key not in seen:
                seen.add(key)
                rels.append(w)
    for f in sorted(P.vertex_facets[v0]):
        for g in sorted({coset_label(x, (0, colors[f])) for x in range(8)}):
            rels.append((s(f, g),))
    return Presentation(tuple(names), tuple(rels))


@dataclass(frozen=True)
class SimplifyResult:
    presentation: Presentation
    complete: bool      # False when a growth cap stopped the simplification early


def _tidy(pres):
    seen = set()
    rels, names = [], []
    for i, r in enumerate(pres.relators):
        r = cyclic_reduce(r)
        key = canonical_cyclic(r)
        if not r or key in seen:
            continue
        seen.add(key)
        rels.append(r)
        if pres.relator_names is not None:
            names.append(pres.relator_names[i])
    return Presentation(pres.generators, tuple(rels), names if pres.relator_names is not None else None)


def simplify(pres, max_relator_length=10 ** 4, max_total_length=10 ** 5):
    """Generic Tietze simplification.

    Repeats: cyclic reduction and deduplication of relators; removal of
    generators made trivial by a length-1 relator; elimination of a
    generator that occurs once in some relator (cheapest growth first).
    The abelianization is recomputed and compared at the end.
    """
    before = abelianization(pres)
    p = _tidy(pres)
    complete = True
    while True:
        short = next((r for r in p.relators if len(r) == 1), None)
        if short is not None:
            p = _tidy(kill_generator(p, short[0][0]))
            continue
        best = None
        for ri, r in enumerate(p.relators):
            for g in sorted({x for x, _ in r}):
                if occurrences(r, g) != 1:
                    continue
                elsewhere = sum(occurrences(w, g) for j, w in enumerate(p.relators) if j != ri)
                growth = elsewhere * (len(r) - 2) - len(r)
                new_max = max([len(r) - 1] + [len(w) + occurrences(w, g) * (len(r) - 2)
                                              for j, w in enumerate(p.relators) if j != ri])
                key = (growth, len(r), ri, g)
                if best is None or key < best[0]:
                    best = (key, g, ri, new_max)
        if best is None:
            break
        _, g, ri, new_max = best
        if new_max > max_relator_length or p.total_length() + best[0][0] > max_total_length:
            complete = False
            break
        p = _tidy(tietze_eliminate(p, g, ri))
    after = abelianization(p)
    if after != before:
        raise PresentationError("simplification changed the abelianization: %s -> %s" % (before, after))
    return SimplifyResult(p, complete)


def heegaard_report(P):
    f0, f1, f2 = f_vector(P)
    assert 8 - 4 * f2 == f0 - 2 * f1
    return GenusReport((8, 4 * f2), (f0, 2 * f1), 4 * (f2 - 3), f2 - 3)
