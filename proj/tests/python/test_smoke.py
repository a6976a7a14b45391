import pytest

import semiproper as sp

TIGHT_CACTUS = "6 7\n0 1\n0 2\n1 2\n2 3\n3 4\n3 5\n4 5\n"


def in_weights(n, arcs):
    w = [0] * n
    for _, head, weight in arcs:
        w[head] += weight
    return w


def is_semi_proper(graph, arcs):
    w = in_weights(graph.vertex_count, arcs)
    oriented = sorted(tuple(sorted((t, h))) for t, h, _ in arcs)
    return oriented == sorted(tuple(sorted(e)) for e in graph.edges) and all(w[u] != w[v] for u, v in graph.edges)


def test_parse_and_serialize_round_trip():
    g = sp.parse_graph(TIGHT_CACTUS)
    assert (g.vertex_count, g.edge_count) == (6, 7)
    assert sp.serialize_graph(g) == TIGHT_CACTUS
    assert sp.max_degree(g) == 3
    assert g == sp.Graph(6, [(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (3, 5), (4, 5)])


def test_parse_error_is_a_value_error():
    with pytest.raises(ValueError):
        sp.parse_graph("3 2\n0 1\n1 1\n")
    with pytest.raises(sp.ParseError):
        sp.parse_graph("")


def test_generate_and_classify():
    g, meta = sp.generate("uop", 3)
    assert (g.vertex_count, g.edge_count) == (12, 21)
    assert meta["family"] == "uop"
    assert sp.classify(g)["class"] == "ear_peelable"
    cactus, meta = sp.generate("random-cactus", 10, seed=5)
    assert meta["seed"] == 5
    assert sp.classify(cactus)["class"] == "cactus"
    with pytest.raises(ValueError):
        sp.generate("petersen")


@pytest.mark.parametrize("family,size", [("uop", 4), ("random-cactus", 20), ("random-maximal-outerplanar", 30)])
def test_orient_is_semi_proper_within_bound(family, size):
    g, _ = sp.generate(family, size, seed=7)
    o, report = sp.orient(g)
    assert is_semi_proper(g, o.arcs)
    assert o.in_weights == in_weights(g.vertex_count, o.arcs)
    assert o.mu == report["mu"] <= report["bound"]
    assert sp.validate(g, o.arcs, mu_bound=report["bound"], max_weight=2)["accepted"]


def test_orient_rejects_unsupported_graphs():
    k4, _ = sp.generate("complete", 4)
    with pytest.raises(sp.UnsupportedClass):
        sp.orient(k4)


def test_validate_reports_conflicts():
    g = sp.parse_graph("3 3\n0 1\n0 2\n1 2\n")
    verdict = sp.validate(g, [(0, 1, 1), (1, 2, 1), (2, 0, 1)])
    assert not verdict["accepted"]
    assert verdict["violations"]


def test_exact_solvers_agree():
    g = sp.parse_graph(TIGHT_CACTUS)
    brute = sp.solve(g)
    labeling = sp.solve(g, method="labeling", mu_cap=4)
    assert brute["value"] == labeling["value"] == 3
    assert is_semi_proper(g, [tuple(a) for a in brute["witness"]["arcs"]])
    below = sp.solve(g, method="labeling", mu_cap=2)
    assert below["result"] == "certificate"
    tiny = sp.solve(sp.generate("uop", 4)[0], method="labeling", mu_cap=3, budget_nodes=5)
    assert tiny["result"] == "inconclusive"


def test_synthesize_path_gadget():
    arcs = sp.synthesize(3, required={0: 0, 2: 0})
    assert arcs is not None and len(arcs) == 2
    profile = [0, 0, 0]
    for i, (forward, weight) in enumerate(arcs):
        profile[i + 1 if forward else i] += weight
    assert profile[0] == profile[2] == 0
    assert profile[1] != 0
    assert sp.synthesize(3, required={0: 0, 1: 0}) is None


def test_peel_ears_and_audit():
    g, _ = sp.generate("book", 3)
    peeled = sp.peel_ears(g)
    assert len(peeled["base_cycle"]) >= 3
    audit = sp.inequality_audit(sp.parse_graph(TIGHT_CACTUS))
    assert audit["holds"]
    assert audit["chi_s"] == 3
