"""Combinatorial simple 3-polytopes.

A polytope is stored as a list of facet cycles over vertex ids ``0..f0-1``.
Edges, vertex-facet incidences and the facet adjacency are derived once on
construction and the object is treated as immutable afterwards.

Numbering used by :func:`build` (fixtures depend on it):

* ``simplex``: facet ``i`` is the triangle opposite vertex ``i``.
* ``cube``: vertex ``x + 2y + 4z`` for ``x, y, z`` in ``{0, 1}``; facets
  ``x=0, y=0, z=0, x=1, y=1, z=1`` in that order, so facets ``i`` and
  ``i + 3`` are opposite.
* ``prism(n)``: bottom vertices ``0..n-1``, top vertices ``n..2n-1``;
  facet 0 is the bottom ``n``-gon, facet 1 the top, facet ``2 + i`` the
  square over bottom edge ``(i, i+1)``.
* ``dodecahedron``: outer pentagon ``0..4``, middle 10-ring ``5..14``,
  inner pentagon ``15..19``; facet 0 is the outer pentagon, facets 1-5 the
  outer band, facets 6-10 the inner band, facet 11 the inner pentagon.
* ``permutohedron``: vertices are permutations of ``(0, 1, 2, 3)`` in
  :func:`itertools.permutations` order; facet for a proper coordinate subset
  ``S`` holds the permutations that put the smallest ``|S|`` values on ``S``,
  facets sorted by ``(|S|, S)``.
"""
from __future__ import annotations

import itertools
import json
from collections import deque
from dataclasses import dataclass, field


class PolytopeError(ValueError):
    """Raised when input does not describe a simple 3-polytope."""


@dataclass(frozen=True)
class Edge:
    u: int
    v: int
    facets: tuple[int, int]

    @property
    def vertices(self):
        return (self.u, self.v)


@dataclass(frozen=True, eq=False)
class Polytope:
    vertex_count: int
    facets: tuple[tuple[int, ...], ...]
    edges: tuple[Edge, ...] = field(init=False)
    vertex_facets: tuple[frozenset, ...] = field(init=False)

    def __post_init__(self):
        facets = tuple(tuple(int(v) for v in f) for f in self.facets)
        object.__setattr__(self, "facets", facets)
        _check_and_derive(self)

    def __eq__(self, other):
        if not isinstance(other, Polytope):
            return NotImplemented
        return self.vertex_count == other.vertex_count and self.facets == other.facets

    def __hash__(self):
        return hash((self.vertex_count, self.facets))

    def __repr__(self):
        return "Polytope(f=%s)" % (f_vector(self),)

    # lookups used everywhere else
    def edge_id(self, u, v):
        return self._edge_index[(min(u, v), max(u, v))]

    def neighbors(self, v):
        return self._neighbors[v]

    def adjacent_facets(self, f):
        """Facets sharing an edge with facet ``f``."""
        return self._facet_adj[f]

    def facet_edges(self, f):
        """Edge ids of facet ``f`` in cycle order: edge ``i`` joins ``cycle[i]`` and ``cycle[i+1]``."""
        cyc = self.facets[f]
        k = len(cyc)
        return tuple(self.edge_id(cyc[i], cyc[(i + 1) % k]) for i in range(k))

    def other_facet(self, e, f):
        a, b = self.edges[e].facets
        if f == a:
            return b
        if f == b:
            return a
        raise PolytopeError("facet %d does not contain edge %d" % (f, e))

    def to_dict(self):
        return {"vertex_count": self.vertex_count, "facets": [list(f) for f in self.facets]}

    def to_json(self):
        return json.dumps(self.to_dict())


def _check_and_derive(P):
    n = P.vertex_count
    if not isinstance(n, int) or n < 4:
        raise PolytopeError("vertex_count must be an integer >= 4")
    if len(P.facets) < 4:
        raise PolytopeError("at least 4 facets required")

    vertex_facets = [set() for _ in range(n)]
    edge_facets = {}
    for fi, cyc in enumerate(P.facets):
        if len(cyc) < 3:
            raise PolytopeError("facet %d: facet cycle too short" % fi)
        if len(set(cyc)) != len(cyc):
            raise PolytopeError("facet %d repeats a vertex" % fi)
        for v in cyc:
            if not 0 <= v < n:
                raise PolytopeError("facet %d: vertex id %d out of range" % (fi, v))
            vertex_facets[v].add(fi)
        for i in range(len(cyc)):
            u, w = cyc[i], cyc[(i + 1) % len(cyc)]
            edge_facets.setdefault((min(u, w), max(u, w)), []).append(fi)

    for v, fs in enumerate(vertex_facets):
        if not fs:
            raise PolytopeError("vertex %d lies in no facet" % v)
        if len(fs) != 3:
            raise PolytopeError("vertex %d lies in %d facets" % (v, len(fs)))
    for (u, w), fs in edge_facets.items():
        if len(fs) != 2:
            raise PolytopeError("edge (%d, %d) lies in %d facets" % (u, w, len(fs)))
        if fs[0] == fs[1]:
            raise PolytopeError("edge (%d, %d) repeated in facet %d" % (u, w, fs[0]))

    keys = sorted(edge_facets)
    edges = tuple(Edge(u, w, tuple(sorted(edge_facets[(u, w)]))) for (u, w) in keys)
    neighbors = [[] for _ in range(n)]
    for e in edges:
        neighbors[e.u].append(e.v)
        neighbors[e.v].append(e.u)
    for v, nb in enumerate(neighbors):
        if len(nb) != 3:
            raise PolytopeError("vertex %d has degree %d" % (v, len(nb)))

    facet_adj = [set() for _ in P.facets]
    for e in edges:
        a, b = e.facets
        if b in facet_adj[a]:
            raise PolytopeError("facets %d and %d share more than one edge" % (a, b))
        facet_adj[a].add(b)
        facet_adj[b].add(a)

    f0, f1, f2 = n, len(edges), len(P.facets)
    if f0 - f1 + f2 != 2:
        raise PolytopeError("Euler relation fails: %d - %d + %d != 2" % (f0, f1, f2))

    seen = {0}
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for w in neighbors[v]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    if len(seen) != n:
        raise PolytopeError("vertex-edge graph is not connected")

    object.__setattr__(P, "edges", edges)
    object.__setattr__(P, "vertex_facets", tuple(frozenset(s) for s in vertex_facets))
    object.__setattr__(P, "_edge_index", {k: i for i, k in enumerate(keys)})
    object.__setattr__(P, "_neighbors", tuple(tuple(sorted(nb)) for nb in neighbors))
    object.__setattr__(P, "_facet_adj", tuple(frozenset(s) for s in facet_adj))


def parse_polytope(text):
    """Parse the JSON polytope format ``{"vertex_count": N, "facets": [[...], ...]}``.

    Extra keys are ignored, so bundle files that also carry colors or an
    order are accepted.
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise PolytopeError("syntax error: %s" % exc) from None
    if not isinstance(data, dict) or "vertex_count" not in data or "facets" not in data:
        raise PolytopeError("syntax error: expected keys 'vertex_count' and 'facets'")
    facets = data["facets"]
    if not isinstance(facets, list) or not all(
        isinstance(f, list) and all(isinstance(v, int) and not isinstance(v, bool) for v in f)
        for f in facets
    ):
        raise PolytopeError("syntax error: 'facets' must be a list of integer lists")
    if not isinstance(data["vertex_count"], int):
        raise PolytopeError("syntax error: 'vertex_count' must be an integer")
    return Polytope(data["vertex_count"], tuple(tuple(f) for f in facets))


def f_vector(P):
    return (P.vertex_count, len(P.edges), len(P.facets))


def h_vector(P):
    f0, _, f2 = f_vector(P)
    h = (1, f2 - 3, f2 - 3, 1)
    assert sum(h) == f0
    return h


def _canonical_cycle(seq):
    k = len(seq)
    variants = []
    for s in (list(seq), list(reversed(seq))):
        for i in range(k):
            variants.append(tuple(s[i:] + s[:i]))
    return min(variants)


def _share_vertex(P, fs):
    common = set(P.facets[fs[0]])
    for f in fs[1:]:
        common &= set(P.facets[f])
    return bool(common)


def find_belts(P, k):
    """All ``k``-belts (``k`` in 3, 4) as canonical facet cycles, sorted."""
    if k not in (3, 4):
        raise ValueError("k must be 3 or 4")
    adj = P.adjacent_facets
    belts = set()
    m = len(P.facets)
    if k == 3:
        for a in range(m):
            for b in adj(a):
                if b <= a:
                    continue
                for c in adj(a) & adj(b):
                    if c <= b:
                        continue
                    if not _share_vertex(P, (a, b, c)):
                        belts.add((a, b, c))
    else:
        for a in range(m):
            for b in adj(a):
                for d in adj(a):
                    if d <= b:
                        continue
                    for c in adj(b) & adj(d):
                        if c == a:
                            continue
                        # non-consecutive members must be disjoint
                        if _share_vertex(P, (a, c)) or _share_vertex(P, (b, d)):
                            continue
                        belts.add(_canonical_cycle((a, b, c, d)))
    return sorted(belts)


def is_simplex(P):
    return len(P.facets) == 4


def is_flag(P):
    if is_simplex(P):
        return False
    return not find_belts(P, 3)


def is_pogorelov(P):
    return is_flag(P) and not find_belts(P, 4)


def face_injectivity(P, index, kind="facet"):
    """Combinatorial pi_1-injectivity of the face submanifold over a facet or an edge.

    For a facet: it lies in no 3-belt.  For an edge ``e = uv``: the two
    facets meeting ``e`` only in ``u`` resp. ``v`` are disjoint.
    """
    if kind == "facet":
        if not 0 <= index < len(P.facets):
            raise PolytopeError("invalid facet id %r" % (index,))
        return all(index not in b for b in find_belts(P, 3))
    if kind == "edge":
        if not 0 <= index < len(P.edges):
            raise PolytopeError("invalid edge id %r" % (index,))
        e = P.edges[index]
        gu = next(iter(P.vertex_facets[e.u] - set(e.facets)))
        gv = next(iter(P.vertex_facets[e.v] - set(e.facets)))
        return not _share_vertex(P, (gu, gv))
    raise ValueError("kind must be 'facet' or 'edge'")


# builders ------------------------------------------------------------------

def _simplex():
    return Polytope(4, ((1, 2, 3), (0, 2, 3), (0, 1, 3), (0, 1, 2)))


def _cube():
    facets = []
    for side in (0, 1):
        for axis in range(3):
            b1, b2 = [1 << a for a in range(3) if a != axis]
            base = (1 << axis) * side
            facets.append((base, base + b1, base + b1 + b2, base + b2))
    return Polytope(8, tuple(facets))


def _prism(n):
    if n < 3:
        raise PolytopeError("prism needs n >= 3, got %d" % n)
    facets = [tuple(range(n)), tuple(range(n, 2 * n))]
    for i in range(n):
        j = (i + 1) % n
        facets.append((i, j, n + j, n + i))
    return Polytope(2 * n, tuple(facets))


def _dodecahedron():
    u = lambda i: i % 5
    m = lambda i: 5 + i % 10
    w = lambda i: 15 + i % 5
    facets = [tuple(u(i) for i in range(5))]
    for i in range(5):
        facets.append((u(i), u(i + 1), m(2 * i + 2), m(2 * i + 1), m(2 * i)))
    for i in range(5):
        facets.append((m(2 * i + 1), m(2 * i + 2), m(2 * i + 3), w(i + 1), w(i)))
    facets.append(tuple(w(i) for i in range(5)))
    return Polytope(20, tuple(facets))


def _cycle_of(vertices, adjacent):
    """Order a vertex set whose induced subgraph is a single cycle."""
    vs = set(vertices)
    start = min(vs)
    cyc = [start]
    prev, cur = None, start
    while True:
        nxt = min(w for w in adjacent(cur) if w in vs and w != prev)
        if nxt == start:
            break
        prev, cur = cur, nxt
        cyc.append(cur)
    assert len(cyc) == len(vs)
    return tuple(cyc)


def _permutohedron():
    perms = list(itertools.permutations(range(4)))
    index = {p: i for i, p in enumerate(perms)}
    nbrs = [[] for _ in perms]
    for i, p in enumerate(perms):
        for val in range(3):
            q = tuple(val + 1 if x == val else val if x == val + 1 else x for x in p)
            nbrs[i].append(index[q])
    subsets = [s for r in (1, 2, 3) for s in itertools.combinations(range(4), r)]
    facets = []
    for s in subsets:
        members = [i for i, p in enumerate(perms) if {p[c] for c in s} == set(range(len(s)))]
        facets.append(_cycle_of(members, lambda v: nbrs[v]))
    return Polytope(24, tuple(facets))


def build(shape, n=None):
    """Canonical polytope by name: simplex, cube, prism (needs ``n``), dodecahedron, permutohedron.

    ``"prism:5"`` is accepted as shorthand for ``build("prism", 5)``.
    """
    if isinstance(shape, str) and shape.startswith("prism:"):
        shape, n = "prism", int(shape.split(":", 1)[1])
    if shape == "simplex":
        return _simplex()
    if shape == "cube":
        return _cube()
    if shape == "prism":
        if n is None:
            raise PolytopeError("prism needs n")
        return _prism(int(n))
    if shape == "dodecahedron":
        return _dodecahedron()
    if shape == "permutohedron":
        return _permutohedron()
    raise PolytopeError("unknown shape %r" % (shape,))


def truncate_vertex(P, v):
    """Cut off vertex ``v``; the new triangle is appended as the last facet.

    The cut point on the edge towards the smallest neighbour reuses id ``v``;
    the other two get ids ``f0`` and ``f0 + 1``.  All other ids are kept.
    """
    if not isinstance(v, int) or not 0 <= v < P.vertex_count:
        raise PolytopeError("invalid vertex id %r" % (v,))
    nb = P.neighbors(v)
    cut = {nb[0]: v, nb[1]: P.vertex_count, nb[2]: P.vertex_count + 1}
    facets = []
    for cyc in P.facets:
        if v not in cyc:
            facets.append(cyc)
            continue
        k = len(cyc)
        i = cyc.index(v)
        prev, nxt = cyc[(i - 1) % k], cyc[(i + 1) % k]
        facets.append(cyc[:i] + (cut[prev], cut[nxt]) + cyc[i + 1:])
    facets.append((cut[nb[0]], cut[nb[1]], cut[nb[2]]))
    return Polytope(P.vertex_count + 2, tuple(facets))
