import itertools

import pytest
from hypothesis import given, settings, strategies as st

from smallcover.charmap import (
    CharMapError,
    SurfaceType,
    face_surface_type,
    find_orientable_coloring,
    induced_map,
    is_linear_model_polytope,
    is_orientable,
    iter_colorings,
    linear_model,
    parse_charmap,
    truncation_colors,
    validate_charmap,
)
from smallcover.polytope import build, truncate_vertex

from conftest import NONORIENTABLE, SHAPES, corpus_polytopes, dodecahedron_colors


def apply(M, x):
    """Matrix (tuple of 3 column bit masks) times vector bit mask."""
    out = 0
    for i in range(3):
        if x >> i & 1:
            out ^= M[i]
    return out


def gl3():
    mats = []
    for cols in itertools.product(range(1, 8), repeat=3):
        if len({apply(cols, x) for x in range(8)}) == 8:
            mats.append(cols)
    return mats


GL3 = gl3()


def orientable_oracle(colors):
    # orientable iff some basis change sends every color to an odd-weight vector
    return any(all(bin(apply(M, c)).count("1") % 2 for c in colors) for M in GL3)


def rank2(x):
    return bin(x).count("1")


def test_gl3_size():
    assert len(GL3) == 168


def test_parse_ok():
    assert parse_charmap('{"colors": [1, 2, 4, 7]}') == (1, 2, 4, 7)


@pytest.mark.parametrize("text", ['[1,2]', '{"colors": [1, "x"]}', "nope", '{"colors": [0, 1]}', '{"colors": [8]}'])
def test_parse_errors(text):
    with pytest.raises(CharMapError):
        parse_charmap(text)


def test_simplex_valid_and_orientable():
    S = build("simplex")
    assert validate_charmap(S, (1, 2, 4, 7)) == []
    assert is_orientable(S, (1, 2, 4, 7))


def test_simplex_dependent_rejected():
    S = build("simplex")
    problems = validate_charmap(S, (1, 2, 3, 7))
    assert problems and all("vertex" in p for p in problems)
    with pytest.raises(CharMapError):
        is_orientable(S, (1, 2, 3, 7))


def test_wrong_length():
    with pytest.raises(CharMapError):
        validate_charmap(build("cube"), (1, 2, 4))


@pytest.mark.parametrize("shape, colors", NONORIENTABLE)
def test_nonorientable_fixtures(shape, colors):
    P = build(shape)
    assert validate_charmap(P, colors) == []
    assert not is_orientable(P, colors)
    assert not orientable_oracle(colors)


def test_dodecahedron_fixture():
    D = build("dodecahedron")
    colors = dodecahedron_colors()
    assert validate_charmap(D, colors) == []
    assert is_orientable(D, colors)
    assert set(colors) == {1, 2, 4, 7}


@pytest.mark.parametrize("shape", ["simplex", "cube", "prism:3", "prism:4"])
def test_orientability_matches_oracle_on_all_maps(shape):
    # every valid characteristic map on a small polytope
    P = build(shape)
    seen = 0
    for colors in itertools.product(range(1, 8), repeat=len(P.facets)):
        if validate_charmap(P, colors):
            continue
        seen += 1
        assert is_orientable(P, colors) == orientable_oracle(colors)
    assert seen > 0


@settings(max_examples=40, deadline=None)
@given(st.sampled_from([0, 1]), st.sampled_from(range(168)))
def test_orientability_gl3_invariant(which, m):
    shape, colors = [("cube", linear_model(build("cube"))), NONORIENTABLE[1]][which]
    P = build(shape)
    M = GL3[m]
    moved = tuple(apply(M, c) for c in colors)
    assert validate_charmap(P, moved) == []
    assert is_orientable(P, moved) == is_orientable(P, colors)


def test_four_colorings_are_proper(shape):
    P = build(shape)
    col = find_orientable_coloring(P)
    assert col is not None
    for f in range(len(P.facets)):
        assert all(col[f] != col[g] for g in P.adjacent_facets(f))
    assert validate_charmap(P, col) == []
    assert is_orientable(P, col)


@pytest.mark.parametrize("shape, expected", [
    ("cube", True), ("permutohedron", True), ("prism:4", True), ("prism:6", True),
    ("simplex", False), ("prism:3", False), ("dodecahedron", False),
])
def test_linear_model_exists_iff_even(shape, expected):
    P = build(shape)
    assert is_linear_model_polytope(P) is expected
    assert (linear_model(P) is not None) is expected


def test_iter_colorings_count_simplex():
    # the four facets of the simplex pairwise touch: 4! proper colorings
    assert len(list(iter_colorings(build("simplex")))) == 24


@pytest.mark.parametrize("name, P", corpus_polytopes(), ids=lambda x: x if isinstance(x, str) else "")
def test_induced_map_proper(name, P):
    col = find_orientable_coloring(P)
    for f in range(len(P.facets)):
        vals = induced_map(P, col, f)
        assert len(vals) == len(P.facets[f])
        assert all(0 < x < 8 and x != col[f] for x in vals)
        # consecutive edges of a facet meet at a vertex, so induced values differ
        assert all(vals[i] != vals[i - 1] for i in range(len(vals)))


def surface_oracle(P, colors, f):
    # Euler characteristic of four n-gons glued: V = n, E = 2n, F = 4
    n = len(P.facets[f])
    chi = n - 2 * n + 4
    vals = induced_map(P, colors, f)
    c = colors[f]
    # orientable iff a functional on Z_2^3 / <c> is 1 on every value
    orient = any(all(bin(phi & x).count("1") % 2 for x in vals)
                 for phi in range(1, 8) if bin(phi & c).count("1") % 2 == 0)
    return SurfaceType(True, (2 - chi) // 2) if orient else SurfaceType(False, 2 - chi)


@pytest.mark.parametrize("name, P", corpus_polytopes(), ids=lambda x: x if isinstance(x, str) else "")
def test_face_surface_matches_euler_oracle(name, P):
    for col in [find_orientable_coloring(P)] + [c for s, c in NONORIENTABLE if build(s) == P]:
        for f in range(len(P.facets)):
            assert face_surface_type(P, col, f) == surface_oracle(P, col, f)


def test_face_surface_examples():
    assert str(face_surface_type(build("simplex"), (1, 2, 4, 7), 0)) == "N_1"
    cube = build("cube")
    assert str(face_surface_type(cube, linear_model(cube), 0)) == "S_1"
    D = build("dodecahedron")
    kinds = {str(face_surface_type(D, dodecahedron_colors(), f)) for f in range(12)}
    assert kinds == {"N_3"}


def test_induced_map_bad_facet():
    with pytest.raises(CharMapError):
        induced_map(build("cube"), linear_model(build("cube")), 9)


@pytest.mark.parametrize("shape", SHAPES)
def test_truncation_colors_valid(shape):
    P = build(shape)
    col = find_orientable_coloring(P)
    for v in range(min(P.vertex_count, 6)):
        T = truncate_vertex(P, v)
        tc = truncation_colors(P, col, v)
        assert validate_charmap(T, tc) == []
        assert is_orientable(T, tc)
