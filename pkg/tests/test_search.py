import pytest

from matchkit.families import family_graph, family_id
from matchkit.graph import CapacityError, canonical_form, to_graph6
from matchkit.matching import Order, match_vector, quasi_compare
from matchkit.search import (
    CorpusSpec, SlowGateError, brute_force_classes, class_report, enumerate_graphs, generate,
    verify_claim,
)


def certs(graphs):
    return [canonical_form(g).certificate for g in graphs]


def test_small_examples():
    assert len(list(enumerate_graphs(CorpusSpec(4, 6)))) == 1
    trees = list(enumerate_graphs(CorpusSpec(4, 3)))
    assert len(trees) == 2
    assert {g.degrees().count(1) for g in trees} == {2, 3}


def test_matches_labelled_brute_force_up_to_6():
    for n in range(1, 7):
        for m in range(n * (n - 1) // 2 + 1):
            for connected in (True, False):
                spec = CorpusSpec(n, m, connected)
                found = certs(enumerate_graphs(spec))
                assert len(found) == len(set(found))
                assert set(found) == brute_force_classes(spec), spec


def test_counts_match_networkx_atlas_at_7():
    import networkx as nx
    from collections import Counter
    atlas = Counter(h.number_of_edges() for h in nx.graph_atlas_g()
                    if h.number_of_nodes() == 7 and nx.is_connected(h))
    for m in range(6, 22):
        assert len(list(enumerate_graphs(CorpusSpec(7, m)))) == atlas[m]


def test_known_tricyclic_counts(tricyclic):
    # Connected graphs with n vertices and n + 2 edges.
    assert [len(tricyclic[n]) for n in range(4, 9)] == [1, 4, 22, 107, 486]
    for gs in tricyclic.values():
        assert len(set(certs(gs))) == len(gs)


def test_gates_and_validation():
    with pytest.raises(SlowGateError):
        list(enumerate_graphs(CorpusSpec(9, 11)))
    with pytest.raises(CapacityError):
        list(enumerate_graphs(CorpusSpec(11, 13), slow=True))
    with pytest.raises(ValueError):
        CorpusSpec(4, 7)
    assert CorpusSpec(5, 7).filename == "g_5_7_c.g6"
    assert CorpusSpec(5, 7, False).filename == "g_5_7.g6"


def test_workers_and_cache_are_deterministic(tmp_path):
    spec = CorpusSpec(7, 9)
    a, b = tmp_path / "a", tmp_path / "b"
    one = [to_graph6(g) for g in generate(spec, jobs=1, cache_dir=a)]
    two = [to_graph6(g) for g in generate(spec, jobs=2, cache_dir=b)]
    assert one == two
    assert (a / spec.filename).read_bytes() == (b / spec.filename).read_bytes()
    assert sorted(one) == one
    # Warm cache returns the same corpus.
    assert [to_graph6(g) for g in generate(spec, cache_dir=a)] == one


def test_class_report_n8(corpus_cache):
    r = class_report(CorpusSpec(8, 10), cache_dir=corpus_cache)
    assert r.greatest is not None and r.maximal == [r.greatest]
    assert len(r.classes[r.greatest].members) == 1
    assert r.corpus_size == 486
    members = [g for c in r.classes for g in c.members]
    assert len(members) == len({canonical_form(g) for g in members})
    for c in r.classes:
        assert all(match_vector(g) == c.mvector for g in c.members)
    doc = r.to_json()
    assert doc["schema_version"] and doc["greatest_class_index"] == r.greatest


def test_greater_matrix_agrees_with_quasi_compare(corpus_cache):
    r = class_report(CorpusSpec(7, 9), cache_dir=corpus_cache)
    for i, a in enumerate(r.classes):
        for j, b in enumerate(r.classes):
            assert r.greater[i, j] == (quasi_compare(a.mvector, b.mvector).order is Order.GREATER)


@pytest.mark.parametrize("claim,n", [("unicyclic", 7), ("tricyclic-min", 6), ("bicyclic", 8)])
def test_verify_examples(claim, n, corpus_cache):
    r = verify_claim(claim, n, cache_dir=corpus_cache)
    assert r["holds"], r["checks"]
    assert r["ranked"][0]["me"] >= r["ranked"][-1]["me"]


def test_tricyclic_min_finds_both_graphs(corpus_cache):
    r = verify_claim("tricyclic-min", 6, cache_dir=corpus_cache)
    found = set(r["checks"]["minimum"]["found"])
    expected = {to_graph6(g) for g in (family_graph(family_id("snstarstar", 6)),
                                       family_graph(family_id("k4pendant", 6)))}
    canon = lambda s: canonical_form(__import__("matchkit").from_graph6(s)).certificate  # noqa: E731
    assert {canon(s) for s in found} == {canon(s) for s in expected}


def test_verify_argument_errors():
    with pytest.raises(ValueError):
        verify_claim("bicyclic", 9)
    with pytest.raises(ValueError):
        verify_claim("pentacyclic", 8)


def test_verify_beyond_cap_uses_families():
    r = verify_claim("tricyclic-max", 11)
    assert r["source"] == "families" and r["order"] == "greater"
    assert "INCONSISTENT" in r["anomaly"]["note"]
    assert verify_claim("tricyclic-max", 14)["holds"]


@pytest.mark.slow
def test_greatest_class_n9(corpus_cache):
    r = class_report(CorpusSpec(9, 11), slow=True, cache_dir=corpus_cache)
    g = r.classes[r.greatest]
    assert len(g.members) == 2


@pytest.mark.slow
def test_tricyclic_max_n10(corpus_cache):
    r = verify_claim("tricyclic-max", 10, slow=True, cache_dir=corpus_cache)
    assert r["checks"]["two_maximal_classes"]["holds"]
    assert r["checks"]["maximum_is_g10_2"]["me"] == pytest.approx(13.9042, abs=2e-3)
