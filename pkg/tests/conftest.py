import pathlib

import pytest

from smallcover.charmap import distinct_colorings, iter_colorings, find_orientable_coloring, linear_model, parse_charmap
from smallcover.polytope import build, truncate_vertex

DATA = pathlib.Path(__file__).resolve().parents[1] / "src" / "smallcover" / "data"

SHAPES = ["simplex", "cube", "prism:3", "prism:4", "prism:5", "prism:6", "dodecahedron", "permutohedron"]

# (base shape, vertices truncated in turn)
TRUNCATIONS = [
    ("simplex", (0,)),
    ("simplex", (0, 1)),
    ("cube", (0,)),
    ("prism:4", (5,)),
    ("dodecahedron", (0,)),
    ("permutohedron", (0,)),
]

# valid but nonorientable characteristic maps
NONORIENTABLE = [
    ("prism:3", (1, 1, 2, 4, 6)),
    ("cube", (1, 2, 4, 1, 2, 6)),
]

ACCEPTANCE_LOG = []


def dodecahedron_colors():
    return parse_charmap((DATA / "dodecahedron_coloring.json").read_text())


def truncated(shape, vertices):
    P = build(shape)
    for v in vertices:
        P = truncate_vertex(P, v)
    return P


def corpus_polytopes():
    out = [(s, build(s)) for s in SHAPES]
    out += [("%s/t%s" % (s, "".join(map(str, vs))), truncated(s, vs)) for s, vs in TRUNCATIONS]
    return out


def colorings_for(name, P, count=2):
    """Orientable colorings used for a corpus polytope (fixture first where one exists)."""
    if name == "dodecahedron":
        first = dodecahedron_colors()
    elif name in ("cube", "permutohedron"):
        first = linear_model(P)
    else:
        first = find_orientable_coloring(P)
    out = [first]
    for col in distinct_colorings(P, count + 1):
        if len(out) >= count:
            break
        if col != first:
            out.append(col)
    # only one class up to renaming colors (the simplex): take another map anyway
    for col in iter_colorings(P):
        if len(out) >= count:
            break
        if col not in out:
            out.append(col)
    return out


@pytest.fixture(params=SHAPES)
def shape(request):
    return request.param


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LOG:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LOG:
            terminalreporter.write_line(line)
