import json

import pytest

import lcsc

PAIR = {
    "vertices": ["x", "y"],
    "morphisms": [
        {"id": "x", "src": "x", "rng": "x"},
        {"id": "y", "src": "y", "rng": "y"},
        {"id": "a", "src": "x", "rng": "y"},
        {"id": "abar", "src": "y", "rng": "x"},
    ],
    "identities": {"x": "x", "y": "y"},
    "compose": [
        ["x", "x", "x"], ["y", "y", "y"],
        ["a", "x", "a"], ["y", "a", "a"],
        ["abar", "y", "abar"], ["x", "abar", "abar"],
        ["a", "abar", "y"], ["abar", "a", "x"],
    ],
}

Z2 = json.dumps({"kind": "table", "elements": ["0", "1"], "mul": [[0, 1], [1, 0]]})


def test_validate_and_query():
    c = lcsc.category(PAIR)
    assert c.num_vertices == 2
    assert c.num_morphisms == 4
    assert c.is_left_cancellative()
    assert c.is_connected()
    assert c.compose("a", "abar") == "y"
    assert c.compose("a", "a") is None
    assert sorted(c.invertibles()) == ["a", "abar", "x", "y"]


def test_validation_errors_surface():
    broken = dict(PAIR, compose=[t for t in PAIR["compose"] if t != ["a", "x", "a"]])
    with pytest.raises(lcsc.LcscError, match="MissingComposite"):
        lcsc.category(broken)


def test_skew_product_and_covering():
    c = lcsc.category(PAIR)
    skew, projection = lcsc.skew_product(c, lcsc.cocycle_json({"a": "1", "abar": "1"}), Z2)
    assert skew.num_vertices == 4
    assert skew.num_morphisms == 8
    assert len(skew.connected_components()) == 2
    ok, witness = lcsc.is_covering(skew, c, projection)
    assert ok, witness


def test_pi1_and_universal_group():
    c = lcsc.category(PAIR)
    pi = lcsc.pi1(c)
    assert pi["abelianization"] == []
    u = lcsc.universal_group(c, "connected")
    assert u["abelianization"] == [0]
    assert u["hom_counts"]["S3"] == 6


def test_path_category_and_ep():
    graph = json.dumps({
        "vertices": ["v"],
        "edges": [{"id": "a", "src": "v", "rng": "v"}, {"id": "b", "src": "v", "rng": "v"}],
    })
    paths = lcsc.path_category(graph, 2)
    assert paths.num_morphisms == 7  # v, a, b, aa, ab, ba, bb
    assert lcsc.principal_ideal(paths, "a") == ["a", "aa", "ab"]
    assert lcsc.join(paths, "a", "b") == []


def test_connectivity_report():
    c = lcsc.category(PAIR)
    report = lcsc.connectivity(c, lcsc.cocycle_json({"a": "1", "abar": "1"}), Z2)
    assert report["nondegenerate"]
    assert report["direct"] == report["via_pi"] == False  # noqa: E712


def test_suite_runner_smoke():
    report = json.loads(lcsc.run_suites(seed=3, scale=2))
    assert report["suites"]
    for suite in report["suites"]:
        assert suite["failed"] == 0, suite


def test_dot_export():
    dot = lcsc.export_dot(lcsc.pair_groupoid())
    assert '"x" -> "y"' in dot
