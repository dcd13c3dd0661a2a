"""Characteristic maps: facets -> nonzero vectors of Z_2^3.

Vectors are ints 1..7 (bit 0 = e1, bit 1 = e2, bit 2 = e3); addition is XOR.
A characteristic map is just a sequence of such ints, one per facet.
"""
from __future__ import annotations

import json
from dataclasses import dataclass

E1, E2, E3 = 1, 2, 4
E123 = 7
ORIENTABLE_PALETTE = (E1, E2, E3, E123)
LINEAR_PALETTE = (E1, E2, E3)


class CharMapError(ValueError):
    pass


@dataclass(frozen=True)
class SurfaceType:
    orientable: bool
    genus: int

    def __str__(self):
        return ("S_%d" if self.orientable else "N_%d") % self.genus


def parity(x):
    return bin(x).count("1") & 1


def independent(a, b, c):
    """Linear independence of three vectors of Z_2^3."""
    return all(x != 0 for x in (a, b, c, a ^ b, a ^ c, b ^ c, a ^ b ^ c))


def span(*vs):
    out = {0}
    for v in vs:
        out |= {x ^ v for x in out}
    return frozenset(out)


def coset_label(g, subgroup):
    """Minimal element of the coset ``g + subgroup``."""
    return min(g ^ h for h in subgroup)


def parse_charmap(text):
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CharMapError("syntax error: %s" % exc) from None
    colors = data.get("colors") if isinstance(data, dict) else None
    if not isinstance(colors, list) or not all(isinstance(c, int) for c in colors):
        raise CharMapError("syntax error: expected {\"colors\": [int, ...]}")
    for c in colors:
        if not 1 <= c <= 7:
            raise CharMapError("color %d outside 1..7" % c)
    return tuple(colors)


def charmap_json(colors):
    return json.dumps({"colors": list(colors)})


def validate_charmap(P, colors):
    """Return the list of violations; an empty list means the map is valid."""
    if len(colors) != len(P.facets):
        raise CharMapError("charmap has %d entries for %d facets" % (len(colors), len(P.facets)))
    problems = []
    for f, c in enumerate(colors):
        if not 1 <= c <= 7:
            problems.append("facet %d: value %r is not a nonzero vector of Z_2^3" % (f, c))
    if problems:
        return problems
    for v, fs in enumerate(P.vertex_facets):
        a, b, c = (colors[f] for f in sorted(fs))
        if not independent(a, b, c):
            problems.append("vertex %d: facets %s have dependent colors %s" % (v, sorted(fs), (a, b, c)))
    return problems


def _require_valid(P, colors):
    problems = validate_charmap(P, colors)
    if problems:
        raise CharMapError("invalid characteristic map: " + "; ".join(problems))


def orienting_functional(colors):
    """Smallest nonzero functional phi (as a bit mask) with phi(c) = 1 for every color, or None."""
    for phi in range(1, 8):
        if all(parity(phi & c) for c in colors):
            return phi
    return None


def is_orientable(P, colors):
    _require_valid(P, colors)
    return orienting_functional(colors) is not None


def find_coloring(P, palette=ORIENTABLE_PALETTE):
    """Proper facet coloring from ``palette`` by plain backtracking, or None.

    Facets are assigned in id order and colors tried in palette order.
    """
    m = len(P.facets)
    colors = [0] * m
    adj = [sorted(P.adjacent_facets(f)) for f in range(m)]

    def extend(f):
        if f == m:
            return True
        for c in palette:
            if all(colors[g] != c for g in adj[f] if g < f):
                colors[f] = c
                if extend(f + 1):
                    return True
        colors[f] = 0
        return False

    return tuple(colors) if extend(0) else None


def iter_colorings(P, palette=ORIENTABLE_PALETTE):
    """All proper facet colorings from ``palette``, in backtracking order."""
    m = len(P.facets)
    colors = [0] * m
    adj = [sorted(g for g in P.adjacent_facets(f) if g < f) for f in range(m)]

    def extend(f):
        if f == m:
            yield tuple(colors)
            return
        for c in palette:
            if all(colors[g] != c for g in adj[f]):
                colors[f] = c
                yield from extend(f + 1)
        colors[f] = 0

    yield from extend(0)


def relabeled(colors):
    """Colors renamed in order of first appearance (canonical up to palette permutation)."""
    names = {}
    return tuple(names.setdefault(c, len(names)) for c in colors)


def distinct_colorings(P, count, palette=ORIENTABLE_PALETTE, limit=100000):
    """Up to ``count`` proper colorings that differ beyond a renaming of colors."""
    out, seen = [], set()
    for i, col in enumerate(iter_colorings(P, palette)):
        if i >= limit or len(out) >= count:
            break
        key = relabeled(col)
        if key not in seen:
            seen.add(key)
            out.append(col)
    return out


def truncation_colors(P, colors, v):
    """Colors for ``truncate_vertex(P, v)``: old facets keep theirs, the new
    triangle gets the sum of the three colors at ``v``."""
    a, b, c = (colors[f] for f in P.vertex_facets[v])
    return tuple(colors) + (a ^ b ^ c,)


def find_orientable_coloring(P):
    return find_coloring(P, ORIENTABLE_PALETTE)


def linear_model(P):
    """Proper 3-coloring by e1, e2, e3 if one exists."""
    return find_coloring(P, LINEAR_PALETTE)


def is_linear_model_polytope(P):
    return all(len(f) % 2 == 0 for f in P.facets)


def induced_map(P, colors, f):
    """Induced Z_2^2-valued map on the edges of facet ``f``, in cycle order.

    Values are quotient classes modulo ``<colors[f]>`` labelled by their
    minimal element.
    """
    _require_valid(P, colors)
    if not 0 <= f < len(P.facets):
        raise CharMapError("invalid facet id %r" % (f,))
    sub = (0, colors[f])
    return tuple(coset_label(colors[P.other_facet(e, f)], sub) for e in P.facet_edges(f))


def face_surface_type(P, colors, f):
    values = induced_map(P, colors, f)
    gon = len(values)
    if len(set(values)) == 2 and gon % 2 == 0:
        return SurfaceType(True, (gon - 2) // 2)
    return SurfaceType(False, gon - 2)
