import pytest
from hypothesis import given, settings, strategies as st

from smallcover.charmap import CharMapError, find_orientable_coloring
from smallcover.morse import default_order, morse_data, random_order
from smallcover.pi1 import (
    WordGrowthError,
    abelianization,
    count_homs,
    minimal_presentation,
    symmetric_group,
)
from smallcover.polytope import build

from conftest import NONORIENTABLE, SHAPES, colorings_for


def test_names_follow_order_and_shelling():
    P = build("dodecahedron")
    order = random_order(P, 4)
    md = morse_data(P, order)
    res = minimal_presentation(P, colorings_for("dodecahedron", P)[0], order)
    pres = res.presentation
    ones = sorted(md.vertices_of_index(1), key=lambda v: order.rank[v])
    assert pres.generators == tuple("a%d" % v for v in ones)
    names = [int(n[1:]) for n in pres.relator_names]
    assert names == [f for f in md.shelling if f in names]
    assert len(names) == 9 and md.sink not in {v for f in names for v in P.facets[f]}


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(SHAPES), st.integers(0, 10 ** 6))
def test_balanced_and_certified(shape, seed):
    P = build(shape)
    colors = colorings_for(shape, P)[0]
    res = minimal_presentation(P, colors, random_order(P, seed))
    f2 = len(P.facets)
    assert res.presentation.ngens == res.presentation.nrels == f2 - 3
    assert res.certificate.eliminations == "certified"
    assert abelianization(res.presentation) == abelianization(res.cw)


@pytest.mark.parametrize("shape", ["simplex", "prism:3", "prism:5", "cube"])
def test_s3_counts_match_cell_structure(shape):
    # a finer check than the built-in post-check, which only uses abelian targets
    P = build(shape)
    for colors in colorings_for(shape, P):
        res = minimal_presentation(P, colors, default_order(P))
        S3 = symmetric_group(3)
        assert count_homs(res.presentation, S3) == count_homs(res.cw, S3)


@pytest.mark.parametrize("shape, colors", NONORIENTABLE)
def test_nonorientable_maps_work(shape, colors):
    P = build(shape)
    res = minimal_presentation(P, colors, default_order(P))
    assert res.presentation.ngens == len(P.facets) - 3
    assert abelianization(res.presentation) == abelianization(res.cw)


def test_certificate_records_checks():
    P = build("prism:3")
    cert = minimal_presentation(P, find_orientable_coloring(P), default_order(P)).certificate
    d = cert.to_dict()
    assert d["level"] == cert.level
    assert d["homs_checked"] == {"Z2": 4, "Z2^2": 16, "Z2^3": 64}


def test_permutohedron_skips_large_checks():
    P = build("permutohedron")
    cert = minimal_presentation(P, colorings_for("permutohedron", P)[0], default_order(P)).certificate
    assert cert.homs_checked["Z2"] == 2 ** 11
    assert cert.homs_checked["Z2^3"] == "skipped"


def test_invalid_colors():
    P = build("simplex")
    with pytest.raises(CharMapError):
        minimal_presentation(P, (1, 2, 3, 7), default_order(P))


def test_word_growth_cap():
    P = build("dodecahedron")
    with pytest.raises(WordGrowthError):
        minimal_presentation(P, colorings_for("dodecahedron", P)[0], default_order(P), max_length=3)
