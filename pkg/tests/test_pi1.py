import itertools
from math import gcd

import pytest
import sympy
from hypothesis import given, settings, strategies as st

from smallcover.pi1 import (
    AbelianInvariants,
    CapExceeded,
    FiniteGroupTable,
    Presentation,
    PresentationError,
    abelianization,
    count_homs,
    cyclic_group,
    elementary_abelian,
    invariant_factors,
    parse_presentation,
    symmetric_group,
    target_group,
    tietze_eliminate,
)
from smallcover.pi1.presentation import (
    canonical_cyclic, cyclic_reduce, free_reduce, invert, kill_generator)

from conftest import DATA


def determinantal_factors(rows, ncols):
    """Invariant factors as ratios of gcds of k x k minors."""
    M = sympy.Matrix(rows) if rows else sympy.zeros(0, ncols)
    m = M.rows
    D = [1]
    for k in range(1, min(m, ncols) + 1):
        g = 0
        for ri in itertools.combinations(range(m), k):
            for ci in itertools.combinations(range(ncols), k):
                g = gcd(g, int(M.extract(list(ri), list(ci)).det()))
        if g == 0:
            break
        D.append(g)
    return [D[i] // D[i - 1] for i in range(1, len(D))]


matrices = st.integers(1, 4).flatmap(
    lambda n: st.lists(st.lists(st.integers(-6, 6), min_size=n, max_size=n), min_size=0, max_size=4)
    .map(lambda rows: (rows, n)))


@settings(max_examples=150, deadline=None)
@given(matrices)
def test_snf_matches_determinantal_divisors(mat):
    rows, n = mat
    assert invariant_factors(rows, n) == determinantal_factors(rows, n)


def test_snf_matches_sympy():
    from sympy.matrices.normalforms import smith_normal_form
    rows = [[2, 4, 4], [-6, 6, 12], [10, -4, -16]]
    S = smith_normal_form(sympy.Matrix(rows), domain=sympy.ZZ)
    diag = [abs(int(S[i, i])) for i in range(3) if S[i, i] != 0]
    assert invariant_factors(rows, 3) == diag == [2, 6, 12]


def test_snf_large_entries():
    big = 10 ** 30
    assert invariant_factors([[big, 0], [0, big * 3]], 2) == [big, 3 * big]


def test_abelian_invariants_str():
    assert str(AbelianInvariants(0, ())) == "0"
    assert str(AbelianInvariants(3, ())) == "Z^3"
    assert str(AbelianInvariants(1, (2, 2))) == "Z + Z/2 + Z/2"
    assert AbelianInvariants(2, (2, 4)).mod2_rank() == 4
    assert AbelianInvariants(0, (3,)).mod2_rank() == 0


def test_direct_sum():
    a = AbelianInvariants(0, (2,)).direct_sum(AbelianInvariants(1, (3,)))
    assert a == AbelianInvariants(1, (6,))


def test_abelianization_basic():
    P = parse_presentation("gens: a, b\nrel: a b a^-1 b^-1\n")
    assert abelianization(P) == AbelianInvariants(2, ())
    Q = parse_presentation("gens: a, b\nrel: a^-1 a^-1 a^-1\nrel: b b\n")
    assert abelianization(Q) == AbelianInvariants(0, (6,))


def test_words():
    w = ((0, 1), (1, 1), (1, -1), (2, 1))
    assert free_reduce(w) == ((0, 1), (2, 1))
    assert cyclic_reduce(((0, -1), (1, 1), (0, 1))) == ((1, 1),)
    assert invert(((0, 1), (1, -1))) == ((1, 1), (0, -1))
    a = ((0, 1), (1, 1), (2, -1))
    assert canonical_cyclic(a) == canonical_cyclic(a[1:] + a[:1]) == canonical_cyclic(invert(a))


def test_presentation_normalizes():
    P = Presentation(("a",), (((0, 1), (0, -1)), ((0, 1),)))
    assert P.relators == (((0, 1),),)
    with pytest.raises(PresentationError):
        Presentation(("a",), (((1, 1),),))


@pytest.mark.parametrize("text", [
    "rel: a\ngens: a\n",
    "gens: a\nrel: b\n",
    "gens: a, a\n",
    "gens: a\nbogus\n",
    "gens: a\nrel:\n",
    "",
])
def test_parse_errors(text):
    with pytest.raises(PresentationError):
        parse_presentation(text)


def test_parse_roundtrip():
    text = "gens: x, y\n# a comment\nrel: x y x^-1 y^-1\nrel: x x\n"
    P = parse_presentation(text)
    assert parse_presentation(P.to_text()) == P


def brute_homs(pres, H):
    n = H.order
    inv = list(H.inverse)
    tab = H.table.tolist()
    total = 0
    for vals in itertools.product(range(n), repeat=pres.ngens):
        ok = True
        for r in pres.relators:
            x = H.identity
            for g, s in r:
                x = tab[x][vals[g] if s > 0 else inv[vals[g]]]
            if x != H.identity:
                ok = False
                break
        total += ok
    return total


words = st.lists(st.tuples(st.integers(0, 2), st.sampled_from([1, -1])), min_size=1, max_size=6)
presentations = st.tuples(st.integers(1, 3), st.lists(words, min_size=0, max_size=3)).map(
    lambda t: Presentation(tuple("abc"[:t[0]]), tuple(tuple((g % t[0], s) for g, s in w) for w in t[1])))


@settings(max_examples=80, deadline=None)
@given(presentations, st.sampled_from(["z2", "z2^2", "s3", "z3", "z4"]))
def test_count_homs_matches_brute_force(pres, name):
    H = target_group(name)
    assert count_homs(pres, H) == brute_homs(pres, H)


@settings(max_examples=60, deadline=None)
@given(presentations)
def test_abelian_hom_count_from_h1(pres):
    # |Hom(G, Z_2^k)| = 2^(k * mod2 rank of H_1)
    a = abelianization(pres)
    for k in (1, 2):
        assert count_homs(pres, elementary_abelian(k)) == 2 ** (k * a.mod2_rank())


@settings(max_examples=60, deadline=None)
@given(presentations, st.data())
def test_tietze_preserves_invariants(pres, data):
    cands = [(g, r) for r, w in enumerate(pres.relators) for g in range(pres.ngens)
             if sum(1 for x, _ in w if x == g) == 1]
    if not cands:
        return
    g, r = data.draw(st.sampled_from(cands))
    Q = tietze_eliminate(pres, g, r)
    assert Q.ngens == pres.ngens - 1
    assert abelianization(Q) == abelianization(pres)
    S3 = symmetric_group(3)
    assert count_homs(Q, S3) == count_homs(pres, S3)


def test_tietze_requires_single_occurrence():
    P = parse_presentation("gens: a, b\nrel: a a b\n")
    with pytest.raises(PresentationError):
        tietze_eliminate(P, 0, 0)
    Q = tietze_eliminate(P, 1, 0)
    assert abelianization(Q) == AbelianInvariants(1, ())


def test_kill_generator():
    P = parse_presentation("gens: a, b\nrel: a b a b\n")
    assert abelianization(kill_generator(P, 1)) == AbelianInvariants(0, (2,))


def test_group_tables():
    assert symmetric_group(3).order == 6
    assert cyclic_group(5).order == 5
    with pytest.raises(ValueError):
        FiniteGroupTable("bad", [[0, 1], [0, 1]])
    with pytest.raises(ValueError):
        target_group("a5")


def test_cap_exceeded():
    free = Presentation(("a", "b", "c"), ())
    with pytest.raises(CapExceeded):
        count_homs(free, symmetric_group(3), cap=100)
    assert count_homs(free, symmetric_group(3), cap=10 ** 4) == 216


def test_hom_counts_known_groups():
    # Z/2 -> S3: identity and three transpositions
    rp3 = parse_presentation("gens: a\nrel: a a\n")
    assert count_homs(rp3, symmetric_group(3)) == 4
    z2z2 = parse_presentation("gens: a, b\nrel: a a\nrel: b b\nrel: a b a^-1 b^-1\n")
    assert count_homs(z2z2, symmetric_group(3)) == 10


def test_shipped_relator_lists():
    dod = parse_presentation((DATA / "dodecahedral_space_relators.txt").read_text())
    assert (dod.ngens, dod.nrels) == (9, 9)
    assert abelianization(dod) == AbelianInvariants(0, (2,) * 9)
    perm = parse_presentation((DATA / "permutohedral_space_relators.txt").read_text())
    assert (perm.ngens, perm.nrels) == (11, 11)
    assert abelianization(perm) == AbelianInvariants(11, ())
