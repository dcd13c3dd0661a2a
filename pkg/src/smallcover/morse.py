"""Generic vertex orders on a simple 3-polytope and the Morse data they induce.

A height function is replaced by an abstract rank order.  An order is
admissible when the induced edge orientation (low -> high) has a unique
source and sink globally and on every facet; these are exactly the facts the
presentation procedure relies on.
"""
from __future__ import annotations

import json
import random
from dataclasses import dataclass

from .polytope import f_vector, h_vector


class OrderError(ValueError):
    pass


@dataclass(frozen=True)
class VertexOrder:
    rank: tuple[int, ...]

    @property
    def by_rank(self):
        """Vertex ids listed from lowest to highest."""
        out = [0] * len(self.rank)
        for v, r in enumerate(self.rank):
            out[r] = v
        return tuple(out)

    def to_json(self):
        return json.dumps({"rank": list(self.rank)})


@dataclass(frozen=True)
class MorseData:
    index: tuple[int, ...]
    parent_edge: dict          # vertex -> incoming edge id (absent for the source)
    e_v: dict                  # index-1 vertex -> its unique incoming edge id
    top_vertex: tuple[int, ...]
    shelling: tuple[int, ...]
    source: int
    sink: int

    def vertices_of_index(self, i):
        return [v for v, k in enumerate(self.index) if k == i]

    def tree(self):
        return frozenset(self.parent_edge.values())


def order_violations(P, rank):
    """List what is wrong with ``rank`` as an admissible order (empty if fine)."""
    n = P.vertex_count
    if len(rank) != n or sorted(rank) != list(range(n)):
        return ["rank is not a permutation of 0..%d" % (n - 1)]
    problems = []
    lows = [v for v in range(n) if all(rank[w] > rank[v] for w in P.neighbors(v))]
    highs = [v for v in range(n) if all(rank[w] < rank[v] for w in P.neighbors(v))]
    if len(lows) != 1:
        problems.append("not generic/LP-admissible: %d global minima %s" % (len(lows), lows))
    if len(highs) != 1:
        problems.append("not generic/LP-admissible: %d global maxima %s" % (len(highs), highs))
    for fi, cyc in enumerate(P.facets):
        k = len(cyc)
        mins = sum(1 for i in range(k) if rank[cyc[i]] < rank[cyc[i - 1]] and rank[cyc[i]] < rank[cyc[(i + 1) % k]])
        maxs = sum(1 for i in range(k) if rank[cyc[i]] > rank[cyc[i - 1]] and rank[cyc[i]] > rank[cyc[(i + 1) % k]])
        if mins != 1 or maxs != 1:
            problems.append("not generic/LP-admissible: facet %d has %d local minima and %d local maxima"
                            % (fi, mins, maxs))
    if not problems:
        counts = [0, 0, 0, 0]
        for v in range(n):
            counts[sum(1 for w in P.neighbors(v) if rank[w] < rank[v])] += 1
        if tuple(counts) != h_vector(P):
            problems.append("index counts %s differ from h-vector %s" % (counts, h_vector(P)))
    return problems


def order_from_rank(P, rank):
    rank = tuple(int(r) for r in rank)
    problems = order_violations(P, rank)
    if problems:
        raise OrderError("; ".join(problems))
    return VertexOrder(rank)


def order_from_heights(P, heights):
    if len(heights) != P.vertex_count:
        raise OrderError("need %d heights, got %d" % (P.vertex_count, len(heights)))
    if len(set(heights)) != len(heights):
        raise OrderError("heights must be distinct")
    ids = sorted(range(len(heights)), key=lambda v: heights[v])
    rank = [0] * len(ids)
    for r, v in enumerate(ids):
        rank[v] = r
    return order_from_rank(P, rank)


def parse_order(P, text):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise OrderError("syntax error: %s" % exc) from None
    rank = data.get("rank") if isinstance(data, dict) else None
    if not isinstance(rank, list) or not all(isinstance(r, int) for r in rank):
        raise OrderError("syntax error: expected {\"rank\": [int, ...]}")
    return order_from_rank(P, rank)


def _search_order(P, choose, limit=200000):
    """Grow a lower set one vertex at a time, keeping every facet's lower part
    an arc and the unplaced vertices connected; backtrack on dead ends."""
    n = P.vertex_count
    facet_pos = [{v: i for i, v in enumerate(cyc)} for cyc in P.facets]
    placed = [False] * n
    in_facet = [0] * len(P.facets)
    seq = []
    budget = [limit]

    def arc_ok(v):
        for f in P.vertex_facets[v]:
            if in_facet[f] == 0:
                continue
            cyc = P.facets[f]
            i = facet_pos[f][v]
            if not (placed[cyc[i - 1]] or placed[cyc[(i + 1) % len(cyc)]]):
                return False
        return True

    def rest_connected():
        rest = [v for v in range(n) if not placed[v]]
        if len(rest) <= 1:
            return True
        seen = {rest[0]}
        stack = [rest[0]]
        while stack:
            v = stack.pop()
            for w in P.neighbors(v):
                if not placed[w] and w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(rest)

    def place(v, on):
        placed[v] = on
        for f in P.vertex_facets[v]:
            in_facet[f] += 1 if on else -1

    def grow():
        if len(seq) == n:
            return True
        budget[0] -= 1
        if budget[0] < 0:
            raise OrderError("order search exceeded its budget")
        frontier = sorted({w for v in seq for w in P.neighbors(v) if not placed[w]})
        for v in choose(frontier):
            if not arc_ok(v):
                continue
            place(v, True)
            seq.append(v)
            if rest_connected() and grow():
                return True
            seq.pop()
            place(v, False)
        return False

    for start in choose(list(range(n))):
        place(start, True)
        seq.append(start)
        if rest_connected() and grow():
            rank = [0] * n
            for r, v in enumerate(seq):
                rank[v] = r
            return order_from_rank(P, rank)
        seq.pop()
        place(start, False)
    raise OrderError("no admissible order found")


def default_order(P):
    """Deterministic admissible order: smallest admissible frontier vertex first."""
    return _search_order(P, lambda xs: xs)


def random_order(P, rng=None):
    """Admissible order from a randomized search; ``rng`` is a :class:`random.Random` or seed."""
    if not isinstance(rng, random.Random):
        rng = random.Random(rng)

    def shuffled(xs):
        xs = list(xs)
        rng.shuffle(xs)
        return xs

    return _search_order(P, shuffled)


def morse_data(P, order):
    rank = order.rank
    n = P.vertex_count
    index = tuple(sum(1 for w in P.neighbors(v) if rank[w] < rank[v]) for v in range(n))
    parent = {}
    for v in range(n):
        lower = [w for w in P.neighbors(v) if rank[w] < rank[v]]
        if lower:
            w = min(lower, key=lambda x: rank[x])
            parent[v] = P.edge_id(v, w)
    e_v = {v: parent[v] for v in range(n) if index[v] == 1}
    top = tuple(max(cyc, key=lambda x: rank[x]) for cyc in P.facets)
    source = order.by_rank[0]
    sink = order.by_rank[-1]
    shelling = tuple(sorted(range(len(P.facets)), key=lambda f: (rank[top[f]], f)))
    md = MorseData(index, parent, e_v, top, shelling, source, sink)
    _check_morse(P, md)
    return md


def _check_morse(P, md):
    assert sum(md.index) == f_vector(P)[1]
    tops = [md.top_vertex[f] for f in range(len(P.facets)) if md.sink not in P.facets[f]]
    assert sorted(tops) == sorted(md.vertices_of_index(2)), "top vertices are not the index-2 vertices"
    assert [f for f in md.shelling[-3:]] == sorted(P.vertex_facets[md.sink])
