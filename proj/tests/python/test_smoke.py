import pytest

import bchrome


def test_petersen_value():
    g = bchrome.petersen()
    assert (g.order, g.size, g.regular_degree(), g.girth()) == (10, 15, 3, 5)
    value, exact, colors = bchrome.b_chromatic_number(g)
    assert (value, exact) == (3, True)
    assert bchrome.is_b_coloring(g, colors, 3)


def test_graph6_round_trip():
    g = bchrome.hoffman_singleton()
    text = bchrome.write_graph6(g)
    assert bchrome.parse_graph6(text) == g
    assert bchrome.parse_dimacs(bchrome.write_dimacs(g)) == g
    with pytest.raises(bchrome.Error, match="MalformedGraph6"):
        bchrome.parse_graph6("I~~~")


def test_two_bunch_certificate():
    g = bchrome.relabel(bchrome.hoffman_singleton(), 3)
    cert = bchrome.color(g, "two-bunch", 7)
    assert cert["k"] == 8 and cert["center"] == 7
    assert bchrome.verify(g, cert)[0]
    center_color = cert["colors"][7]
    neighbor = g.neighbors(7)[0]
    cert["colors"][7] = cert["colors"][neighbor]
    accepted, reason, _ = bchrome.verify(g, cert)
    assert not accepted and reason == "ImproperEdge"
    assert center_color != cert["colors"][neighbor]


def test_no_c6_precondition():
    with pytest.raises(bchrome.Error, match="PreconditionViolated"):
        bchrome.color(bchrome.petersen(), "no-c6", 0)


def test_hypothesis_report_and_oracle():
    g = bchrome.random_regular(7, 300, seed=1)
    report = bchrome.hypothesis_report(g, threads=2)
    assert report["d"] == 7 and report["girth"] == 5
    assert report["vertices_with_strategy"] > 0
    cert = bchrome.color(g)
    assert bchrome.verify(g, cert) == (True, "None", "")
    outcome, colors, _ = bchrome.b_coloring_exists(g, 8)
    assert outcome == "Yes" and bchrome.is_b_coloring(g, colors, 8)
    assert bchrome.b_coloring_exists(g, 9)[0] == "No"


def test_cycle_and_c6_count():
    assert bchrome.b_chromatic_number(bchrome.cycle(5))[:2] == (3, True)
    hs = bchrome.hoffman_singleton()
    assert bchrome.count_c6_in_n2(hs, 0) > 0
    assert len(bchrome.closed_bunches(hs, 0)) == 7
