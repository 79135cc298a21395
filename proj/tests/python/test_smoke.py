import math

import pytest

import hso


def test_indices():
    assert hso.hso("star:5") == pytest.approx(4 * math.sqrt(17), rel=1e-14)
    assert hso.hso("Bw") == pytest.approx(3 * math.sqrt(2), rel=1e-14)
    assert hso.so(hso.build("star:4")) == pytest.approx(3 * math.sqrt(10), rel=1e-14)
    assert hso.edge_term(2, 1) == pytest.approx(math.sqrt(5))
    terms = hso.edge_terms("path:4")
    assert [t["term"] for t in terms] == pytest.approx([math.sqrt(5), math.sqrt(2), math.sqrt(5)])


def test_graph_roundtrip():
    g = hso.Graph.from_edges(3, [(0, 1), (1, 2)])
    assert g.graph6 == "Bg"
    assert hso.parse_graph6("Bg") == g
    assert g.degrees == [1, 2, 1]
    assert g.with_edge(0, 2).classify() == "unicyclic"
    assert hso.are_isomorphic(g, "path:3")


def test_enumerate_counts():
    assert len(hso.enumerate("tree", 7)) == 11
    assert len(hso.enumerate("connected", 5)) == 21
    assert len(hso.enumerate("bicyclic", 4)) == 1
    assert len(hso.enumerate("connected", 5, edges=5)) == 5


def test_family_closed_form():
    for spec in ["tripend:2,1,0", "cprime:3,5", "cdprime:4,4", "sdprime:7", "c33:6"]:
        assert hso.hso(spec) == pytest.approx(hso.closed_form_hso(spec), rel=1e-12)


def test_checks_and_campaigns():
    r = hso.check("sandwich", "star:4")
    assert r["eq_upper"] and not r["eq_lower"]
    assert r["structural_class"] == "GammaMember"

    summary = hso.verify_campaign("tree-bounds", n_lo=3, n_hi=8)["summary"]
    assert summary["violations"] == []
    assert summary["graphs_examined"] == 1 + 2 + 3 + 6 + 11 + 23

    table = hso.extremal_table("unicyclic", 3, 7)
    assert [e["min"]["families"] for e in table["extrema"]] == [[f"cycle:{n}"] for n in range(3, 8)]

    sweep = hso.star_max_sweep(5)
    assert sweep["extrema"][0]["max"]["families"] == ["star:5"]

    ws = hso.monotonicity_witnesses(3)
    assert len(ws) == 1
    assert ws[0]["delta"] == pytest.approx(3 * math.sqrt(2) - 2 * math.sqrt(5))


def test_errors_are_value_errors():
    with pytest.raises(hso.HsoError):
        hso.parse_graph6("B!")
    with pytest.raises(ValueError):
        hso.build("cycle:2")
    with pytest.raises(ValueError):
        hso.enumerate("connected", 9)
