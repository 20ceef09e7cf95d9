from collections import Counter

import pytest

from tscomplex import (
    SimplicialComplex,
    facet_ideal_decomposition,
    friendship_cover_count,
    is_unmixed,
    minimal_vertex_covers,
    stanley_reisner_generators,
)
from tscomplex.covers import decomposition_text
from oracles import brute_force_minimal_covers


def test_covers_of_one_triangle():
    rep = minimal_vertex_covers(SimplicialComplex.from_facets([(1, 2, 3)]))
    assert rep.covers == ((1,), (2,), (3,))
    assert rep.unmixed


def test_covers_of_c42_fixture(c42_fix):
    rep = minimal_vertex_covers(c42_fix)
    assert (1, 4, 5, 6, 8, 9) in rep.covers
    assert (1, 2, 4, 5, 6, 8, 10) in rep.covers
    assert not rep.unmixed
    assert len(rep.covers) == 34
    assert sorted(set(rep.cardinalities)) == [6, 7]


def test_friendship_cover_census(tsc_friendship):
    # enumeration is authoritative; the closed form counts only the
    # cardinality-(3n+1) covers, and larger minimal covers exist for n >= 2
    expected = {
        1: {4: 15},
        2: {7: 55, 8: 9},
        3: {10: 252, 12: 13},
    }
    for n, histogram in expected.items():
        rep = minimal_vertex_covers(tsc_friendship[n])
        assert dict(Counter(len(c) for c in rep.covers)) == histogram
        assert rep.unmixed == (n == 1)


def test_friendship_closed_form_matches_cardinality_census(tsc_friendship):
    for n in (2, 3):
        rep = minimal_vertex_covers(tsc_friendship[n])
        at_card = sum(1 for c in rep.covers if len(c) == 3 * n + 1)
        assert at_card == friendship_cover_count(n)


def test_is_unmixed_examples(corpus):
    assert not is_unmixed(corpus["c42_fixture"])
    assert is_unmixed(corpus["tsc_f1"])
    assert is_unmixed(corpus["segment"])


def test_every_cover_covers_and_is_irredundant(corpus):
    for name in ("tsc_p3", "c42_fixture", "tsc_f2", "hollow_triangle"):
        cx = corpus[name]
        facets = [set(f) for f in cx.facets]
        rep = minimal_vertex_covers(cx)
        for cover in rep.covers:
            cs = set(cover)
            assert all(cs & f for f in facets), (name, cover)
            for v in cover:
                smaller = cs - {v}
                assert any(not (smaller & f) for f in facets), (name, cover, v)


def test_cover_enumeration_matches_brute_force(corpus):
    for name, cx in corpus.items():
        if len(cx.vertices) <= 16:
            rep = minimal_vertex_covers(cx)
            assert list(rep.covers) == brute_force_minimal_covers(cx), name


def test_decomposition_of_path():
    cx = SimplicialComplex.from_facets([(1, 2), (2, 3)])
    comps = facet_ideal_decomposition(cx)
    assert [c.variables for c in comps] == [(1, 3), (2,)]
    assert decomposition_text(comps) == "(x1, x3) ∩ (x2)"


def test_decomposition_of_triangle():
    comps = facet_ideal_decomposition(SimplicialComplex.from_facets([(1, 2, 3)]))
    assert [c.variables for c in comps] == [(1,), (2,), (3,)]


def test_decomposition_bijects_with_covers(tsc_friendship):
    cx = tsc_friendship[2]
    rep = minimal_vertex_covers(cx)
    comps = facet_ideal_decomposition(cx)
    assert [c.variables for c in comps] == list(rep.covers)
    assert len(comps) == 64  # 55 of size 7 plus 9 of size 8


def test_stanley_reisner_generators():
    hollow = SimplicialComplex.from_facets([(1, 2), (2, 3), (1, 3)])
    assert stanley_reisner_generators(hollow) == [(1, 2, 3)]

    full = SimplicialComplex.from_facets([(1, 2, 3, 4)])
    assert stanley_reisner_generators(full) == []


def test_stanley_reisner_generators_f1(tsc_friendship):
    # the full 2-skeleton on six vertices: every 4-subset is a minimal non-face
    gens = stanley_reisner_generators(tsc_friendship[1])
    assert len(gens) == 15
    assert all(len(g) == 4 for g in gens)


def test_stanley_reisner_generators_of_disjoint_points():
    cx = SimplicialComplex.from_facets([(1,), (2,)])
    assert stanley_reisner_generators(cx) == [(1, 2)]


def test_friendship_cover_count_values():
    assert friendship_cover_count(2) == 55
    assert friendship_cover_count(3) == 252
    assert friendship_cover_count(4) == 1053


def test_friendship_cover_count_rejects_n1():
    with pytest.raises(ValueError):
        friendship_cover_count(1)


def test_friendship_n1_count_recorded(tsc_friendship):
    # open point: the formula evaluates to 10 at n = 1, while enumeration
    # (authoritative, checked against the 2^6 brute force) finds the 15
    # complements of 2-subsets; neither formula value is asserted.
    rep = minimal_vertex_covers(tsc_friendship[1])
    assert list(rep.covers) == brute_force_minimal_covers(tsc_friendship[1])
    assert len(rep.covers) == 15
    assert set(rep.cardinalities) == {4}
