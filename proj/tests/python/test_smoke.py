import json
import os

import pytest

import simpsec

FIXTURES = os.environ.get("SIMPSEC_FIXTURES") or os.path.join(
    os.path.dirname(__file__), "..", "..", "fixtures"
)


def fixture(name):
    return os.path.join(FIXTURES, name)


def test_parse_print_roundtrip():
    f = simpsec.parse_formula("S{a} p -> ~K{b} p")
    assert str(f) == "S{a} p -> ~K{b} p"
    assert simpsec.parse_formula(str(f)) == f
    assert f.agents() == ["a", "b"]


def test_parse_error():
    with pytest.raises(simpsec.ToolkitError):
        simpsec.parse_formula("S{a} p ->")


def test_running_model():
    m = simpsec.Model.load_file(fixture("running.json"))
    assert len(m.facets()) == 9
    assert m.satisfies("u0+w1", "S{a} p")
    assert not m.satisfies("u1+w1", "S{a} p")
    assert m.truth_set("S{a} p") == ["u0+w1", "u0+w2", "u0+w3"]
    assert m.valid_on("S{a} p -> K{a} p")
    assert m.sn_violations() == []
    witnesses = {w["facet"]: w["witness"] for w in m.sn_witnesses()}
    assert witnesses == {"u0+w1": "u2+w1", "u0+w2": "u1+w2", "u0+w3": "u1+w3"}


def test_canonical_roundtrip():
    m = simpsec.Model.load_file(fixture("running.json"))
    text = m.to_json()
    again = simpsec.Model.load_json(text)
    assert again.to_json() == text
    doc = json.loads(text)
    assert doc["agents"] == ["a", "b"]


def test_normalization_preserves_truth():
    m = simpsec.Model.load_file(fixture("running.json"))
    n = m.normalized()
    for phi in simpsec.default_pool():
        assert m.truth_set(phi) == n.truth_set(phi)


def test_fixture_derivations_check():
    docs = simpsec.fixture_derivations()
    assert len(docs) >= 12
    for doc in docs:
        result = simpsec.check_derivation_json(doc)
        assert result["ok"], result


def test_broken_derivation_is_rejected():
    doc = json.loads(simpsec.fixture_derivations()[0])
    doc["steps"][0]["formula"] = "~(" + doc["steps"][0]["formula"] + ")"
    result = simpsec.check_derivation_json(json.dumps(doc))
    assert not result["ok"]
    assert result["index"] == 1


def test_share_expand_agrees():
    m = simpsec.Model.load_file(fixture("aux3.json"))
    report = simpsec.share_expand(m, pool=["p", "S{a} p", "K{b} r"])
    assert report["disagreements"] == []
    share = simpsec.Model.load_json(report["share_model"])
    assert len(share.facets()) == report["facets"]


def test_bounded_search():
    hit = simpsec.check_validity_bounded("S{a} p -> S{a} S{a} p", atoms=["p"])
    assert not hit["valid"]
    counter = simpsec.Model.load_json(hit["countermodel"])
    assert not counter.satisfies(hit["facet"], "S{a} p -> S{a} S{a} p")

    sound = simpsec.check_validity_bounded("S{a} p -> K{a} p")
    assert sound["valid"]


def test_random_model_is_reproducible():
    a = simpsec.random_model(seed=7)
    b = simpsec.random_model(seed=7)
    assert a.to_json() == b.to_json()
    assert a.sn_violations() == []
