import pytest

from tscomplex import (
    PrimeField,
    Rationals,
    SimplicialComplex,
    build_tsc,
    default_labeling,
    gen_c42,
    gen_friendship,
    graph_from_edge_list,
    homology_summary,
    is_cm,
    is_cm_t,
    is_connected,
    is_unmixed,
    tsc_cm_shortcut,
    vertex_links_connected,
)
from conftest import all_labeled_graphs, tsc_of


def test_is_cm_friendship(tsc_friendship):
    for n in (1, 2):
        report = is_cm(tsc_friendship[n])
        assert report.verdict and report.witness is None and report.purity_ok


def test_is_cm_full_simplex():
    assert is_cm(SimplicialComplex.from_facets([(1, 2, 3, 4)])).verdict


def test_is_cm_failure_carries_witness(corpus):
    report = is_cm(corpus["two_triangles_shared_vertex"])
    assert not report.verdict
    assert report.witness is not None
    assert report.witness.face == (3,) and report.witness.r == 0
    # re-check the witness: the link really is disconnected
    link = corpus["two_triangles_shared_vertex"].link(report.witness.face)
    assert not link.is_facet_connected()


def test_is_cm_disconnected_complex(corpus):
    report = is_cm(corpus["two_disjoint_edges"])
    assert not report.verdict
    assert report.witness.face == () and report.witness.r == 0


def test_c42_fixture_is_cm_but_not_unmixed(c42_fix):
    # Surprising but triple-checked: the bundled 73-facet complex is pure,
    # every vertex link is connected, and its first reduced homology
    # vanishes over every field (its integral H1 is torsion-free), so the
    # Reisner-type criterion holds even though the complex is not unmixed.
    # Mixed cover cardinalities do not obstruct Stanley-Reisner
    # Cohen-Macaulayness; they obstruct unmixedness of the facet ideal.
    for field in (PrimeField(32003), Rationals(), PrimeField(2)):
        report = is_cm(c42_fix, field)
        assert report.verdict and report.witness is None
    assert not is_unmixed(c42_fix)


def test_report_json_shape(corpus):
    report = is_cm(corpus["two_triangles_shared_vertex"])
    data = report.to_json_dict()
    assert data == {
        "verdict": False,
        "field": "gf:32003",
        "witness": {"face": [3], "r": 0, "betti": 1},
        "purity_ok": True,
    }


def test_is_cm_t_p3_is_buchsbaum(corpus):
    assert is_cm_t(corpus["tsc_p3"], 1).verdict


def test_is_cm_t_impure_fails_on_purity():
    cx = SimplicialComplex.from_facets([(1,), (2, 3)])
    for t in (0, 1, 2):
        report = is_cm_t(cx, t)
        assert not report.verdict and not report.purity_ok and report.witness is None


def test_is_cm_t_simplex_t0():
    assert is_cm_t(SimplicialComplex.from_facets([(1, 2, 3)]), 0).verdict


def test_is_cm_t_rejects_bad_t(corpus):
    with pytest.raises(ValueError):
        is_cm_t(corpus["solid_triangle"], 4)
    with pytest.raises(ValueError):
        is_cm_t(corpus["solid_triangle"], -1)


def test_buchsbaum_but_not_cm():
    # two disjoint triangles: every vertex link is an edge, but the complex
    # itself is disconnected, which only the t=0 check sees
    cx = SimplicialComplex.from_facets([(1, 2, 3), (4, 5, 6)])
    assert is_cm_t(cx, 1).verdict
    assert not is_cm(cx).verdict
    assert not is_cm_t(cx, 0).verdict


def test_cm_t0_agrees_with_reisner_on_pure_complexes(corpus):
    for name, cx in corpus.items():
        if cx.is_pure():
            assert is_cm(cx).verdict == is_cm_t(cx, 0).verdict, name


def test_tsc_cm_shortcut_friendship():
    for n in (1, 2, 3):
        assert tsc_cm_shortcut(*gen_friendship(n))


def test_tsc_cm_shortcut_k2():
    g = graph_from_edge_list(2, [(1, 2)])
    assert tsc_cm_shortcut(g, default_labeling(g))


def test_tsc_cm_shortcut_c42():
    # The first reduced homology of the constructed complex vanishes (it is
    # (0, 0, 29) over every field), so the shortcut reports Cohen-Macaulay.
    g, lab = gen_c42()
    assert homology_summary(build_tsc(g, lab)).reduced_betti == (0, 0, 29)
    assert tsc_cm_shortcut(g, lab)


def test_tsc_cm_shortcut_rejects_disconnected():
    g = graph_from_edge_list(4, [(1, 2), (3, 4)])
    with pytest.raises(ValueError):
        tsc_cm_shortcut(g, default_labeling(g))


def test_vertex_links_connected(corpus):
    assert vertex_links_connected(corpus["tsc_f1"])
    assert vertex_links_connected(corpus["tsc_p3"])
    assert not vertex_links_connected(SimplicialComplex.from_facets([(1, 2), (1, 3)]))


def test_shortcut_equals_reisner_on_small_connected_graphs():
    for g in all_labeled_graphs(4):
        if is_connected(g):
            lab = default_labeling(g)
            assert tsc_cm_shortcut(g, lab) == is_cm(tsc_of(g)).verdict, (g.m, g.edges)


def test_buchsbaum_on_small_connected_graphs():
    for g in all_labeled_graphs(4):
        if is_connected(g):
            assert is_cm_t(tsc_of(g), 1).verdict, (g.m, g.edges)


def test_cm_implies_pure_on_corpus(corpus):
    for name, cx in corpus.items():
        if is_cm(cx).verdict:
            assert cx.is_pure(), name
