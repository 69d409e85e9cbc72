import pytest

import ore_extremal as ore


def test_bound():
    assert ore.ore_max_size(5, 2) == 9
    b = ore.bound_breakdown(8, 3)
    assert (b.path_edges, b.cross_edges, b.clique_edges, b.total) == (3, 12, 6, 21)
    with pytest.raises(ore.DomainError):
        ore.ore_max_size(5, 1)


def test_graph_and_g6():
    k3 = ore.Graph.complete(3)
    assert ore.encode_g6(k3) == "Bw"
    assert ore.decode_g6("Bw") == k3
    assert ore.diameter(ore.Graph(2)) is None
    assert ore.bfs_distances(ore.Graph.path(4), 0) == [0, 1, 2, 3]
    with pytest.raises(ore.ParseError):
        ore.decode_g6("D?")


def test_construct_and_recognize():
    classes = ore.enumerate_extremal_up_to_iso(6, 3)
    assert len(classes) == 2
    for form, g in classes:
        assert g.size() == 10
        assert ore.diameter(g) == 3
        cert = ore.extract_certificate(g, 3)
        assert cert is not None
        assert ore.validate_certificate(g, cert, 3)
        assert ore.window_union_lemma(g, cert)
        assert ore.canonical_form(g) == form
    assert ore.extract_certificate(ore.Graph.cycle(6), 3) is None


def test_oracle_matches_constructor():
    report = ore.oracle_search(6, 4, workers=2)
    assert report.max_size == ore.ore_max_size(6, 4)
    assert report.extremal_forms == [f for f, _ in ore.enumerate_extremal_up_to_iso(6, 4)]
    with pytest.raises(ore.CapacityError):
        ore.oracle_search(9, 3)
