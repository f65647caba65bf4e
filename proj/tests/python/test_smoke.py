from fractions import Fraction

import pytest

import hypdeg


def test_polytope_of_hyperelliptic_sextic():
    r = hypdeg.polytope("y^2*z^4 - 2*x^6 - z^6")
    corners = [c["h"] for c in r["polytope"]["corners"]]
    assert corners == [[0, 0, 6], [0, 2, 4], [6, 0, 0]]
    assert r["polytope"]["G"] == 2
    assert r["polytope"]["valid"]


def test_exp_diagonal_is_m_over_d_squared():
    for m, d in [(2, 3), (3, 2), (4, 5)]:
        poly = " + ".join(f"x{j}^{d}" for j in range(1, m + 1))
        assert Fraction(hypdeg.exp(poly)["value"]) == Fraction(m, d * d)


def test_exp_lower_reports_every_singleton_by_default():
    r = hypdeg.exp("x^2 - 2*y^2 + x*z", mode="lower")
    assert len(r["singletons"]) == 3
    assert Fraction(r["best"]["value"]) == max(Fraction(s["result"]["value"]) for s in r["singletons"])


def test_degree_window_is_even():
    w = hypdeg.degrees("y^2*z^4 - 2*x^6 - z^6", bound=60)
    assert w["G"] == 2 and w["fixed_point"]
    for start, end, member in w["membership"]:
        if member:
            assert start == end or start % 2 == 0


def test_specialize_is_deterministic():
    a = hypdeg.specialize("x^2 - 2*y^2", [2, 3], T=10, seed=7)
    b = hypdeg.specialize("x^2 - 2*y^2", [2, 3], T=10, seed=7)
    assert a == b
    assert a["D"] == 6


def test_springer_and_coray_round_trips():
    s = hypdeg.springer("x^2 + y^2 - 2*z^2", from_point=[1, 1, 1], k=2, seed=3)
    assert s["ascended"]["degree"] == 5
    assert s["descent"]["point"]["degree"] == 1
    c = hypdeg.coray("x^3 + y^3 - 2*z^3", from_point=[1, 1, 1], seed=3)
    assert c["ascended"]["degree"] == 2
    assert c["descent"]["degree"] == 1


def test_hyperelliptic_targets():
    r = hypdeg.hyper("2*t^6 + t^2 - t + 1", [3, 4, 5, 7, 9])
    assert [p["degree"] for p in r["points"]] == [3, 4, 5, 7, 9]
    assert all(p["verdict"]["status"] == "Irreducible" for p in r["points"])


def test_certificates_and_probes():
    a = hypdeg.certify_no_odd("t^2 + 1", 3, probe=30)
    assert a["certified"] and a["verified"] and a["probe"]["found"] == []
    b = hypdeg.certify_index("x^2 + x*y + y^2 - 2", 2, 2, probe=30)
    assert b["certified"] and b["verified"] and b["probe"]["found"] == []


def test_experiment_and_rih():
    cfg = {"f": "x^2 - 2*y^2", "d": [2, 3], "heights": [10, 30], "budget": 20, "seed": 9}
    r = hypdeg.experiment(cfg)
    assert [rec["T"] for rec in r["records"]] == [10, 30]
    assert r["records"][1]["cumulative_distinct"] > r["records"][0]["cumulative_distinct"]
    assert hypdeg.experiment(cfg) == r
    rih = hypdeg.probe_rih("x + y", 1, 2)
    assert rih["tuples"] == 625 and rih["max_multiplicity"] > 1


def test_factor_and_errors():
    assert hypdeg.factor("t^4 - 1") == [("t - 1", 1), ("t + 1", 1), ("t^2 + 1", 1)]
    assert hypdeg.is_irreducible("t^3 - t - 1") == "Irreducible"
    assert hypdeg.thread_count() >= 1
    with pytest.raises(hypdeg.HypdegError, match="ConfigError"):
        hypdeg.experiment({"f": "x^2 - y", "d": [1, 1], "heights": [3]})
    with pytest.raises(hypdeg.HypdegError, match="ParseError"):
        hypdeg.polytope("x^^2")
