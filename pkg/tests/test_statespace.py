import json

import jsonschema
import pytest

from lgmodel.polycore import make_model
from lgmodel.statespace import (assemble, degeneracy_report, hodge_text, render,
                                sector_contribution)
from lgmodel.symmetry import relevant_elements

NAMES = ["x1", "x2", "x3", "X1", "X2", "X3"]

SCHEMA = {
    "type": "object",
    "required": ["model", "group", "policy", "hodge", "relevant_elements", "sectors"],
    "properties": {
        "hodge": {"type": "array", "items": {"type": "array", "items": {"type": "integer", "minimum": 0}}},
        "relevant_elements": {"type": "integer"},
        "sectors": {"type": "array", "items": {
            "type": "object",
            "required": ["gamma", "n_gamma", "r_gamma", "age", "kind", "entries"],
            "properties": {
                "gamma": {"type": "array", "items": {"type": "string"}},
                "kind": {"enum": ["jacobi", "projective"]},
                "entries": {"type": "array", "items": {
                    "type": "object", "required": ["p", "q", "label"],
                    "properties": {"p": {"type": "integer"}, "q": {"type": "integer"},
                                   "label": {"type": "string"}}}},
            }}},
    },
}


def diamond(pairs, D=3):
    h = [[0] * (D + 1) for _ in range(D + 1)]
    for (p, q), v in pairs.items():
        h[p][q] = h[q][p] = v
    return h


EXPECTED = {
    "cubics": diamond({(3, 0): 1, (2, 1): 73, (0, 0): 1, (1, 1): 1, (2, 2): 1, (3, 3): 1}),
    "cubics-mirror": diamond({(3, 0): 1, (2, 1): 1, (0, 0): 1, (1, 1): 73, (2, 2): 73, (3, 3): 1}),
    "quintic": diamond({(3, 0): 1, (2, 1): 101, (0, 0): 1, (1, 1): 1, (2, 2): 1, (3, 3): 1}),
    "quintic-mirror": diamond({(3, 0): 1, (2, 1): 1, (0, 0): 1, (1, 1): 101, (2, 2): 101, (3, 3): 1}),
}


@pytest.mark.parametrize("name", list(EXPECTED))
def test_diamonds(spaces, name):
    h = spaces[name].hodge()
    assert h == EXPECTED[name]
    D = len(h) - 1
    assert all(h[p][q] == h[q][p] == h[D - p][D - q] for p in range(D + 1) for q in range(D + 1))


def test_mirror_diamonds_are_rotated(spaces):
    for a, b in [("cubics", "cubics-mirror"), ("quintic", "quintic-mirror")]:
        ha, hb = spaces[a].hodge(), spaces[b].hodge()
        D = len(ha) - 1
        assert all(ha[p][q] == hb[D - p][q] for p in range(D + 1) for q in range(D + 1))


def test_projective_placement(spaces):
    S = spaces["cubics-mirror"]
    for s in S.contributing:
        if s.kind != "projective":
            continue
        fd = s.fd
        assert len(s.entries) == fd.r_gamma - fd.n_gamma
        for k, e in enumerate(s.entries):
            assert e.p == e.q == fd.age - S.model.r + fd.n_gamma + k


def test_dual_agrees_with_direct_except_degenerate_identity(spaces):
    for name in ("cubics-mirror", "quintic", "quintic-mirror", "cubics"):
        S = spaces[name]
        for fd in relevant_elements(S.group):
            if fd.is_projective:
                continue
            if name == "cubics" and fd.element.is_identity:
                continue
            a = sector_contribution(fd, S.group, "dual")
            b = sector_contribution(fd, S.group, "direct")
            assert a.slice_dims == b.slice_dims, (name, fd.element.label())


def test_degeneracy_report(models):
    rep = degeneracy_report(models["cubics"])
    assert rep == [{"gamma": "id", "direct_dims": [1, 73, 85, 81], "dual_dims": [1, 73, 73, 1]}]
    assert degeneracy_report(models["quintic"]) == []


def test_direct_policy_on_smooth_member():
    m = make_model("cubics-smooth", NAMES, [1] * 6, ["x1^3 + x2^3 + x3^3 - 2*X1*X2*X3",
                                                 "X1^3 + X2^3 + X3^3 - 2*x1*x2*x3"])
    assert degeneracy_report(m) == []
    assert assemble(m, policy="direct").hodge() == EXPECTED["cubics"]


@pytest.mark.parametrize("name", list(EXPECTED))
def test_json_schema_and_consistency(spaces, name):
    S = spaces[name]
    data = json.loads(render(S, "json"))
    jsonschema.validate(data, SCHEMA)
    counts = {}
    for sec in data["sectors"]:
        for e in sec["entries"]:
            counts[(e["p"], e["q"])] = counts.get((e["p"], e["q"]), 0) + 1
    h = data["hodge"]
    assert all(h[p][q] == counts.get((p, q), 0) for p in range(len(h)) for q in range(len(h)))
    assert data["relevant_elements"] == len(S.sectors)


def test_text_rendering(spaces):
    text = render(spaces["cubics"], "text")
    assert hodge_text(spaces["cubics"].hodge()) in text
    rows = [line.split() for line in hodge_text(spaces["cubics"].hodge()).splitlines()]
    assert rows == [["1"], ["0", "0"], ["0", "1", "0"], ["1", "73", "73", "1"],
                    ["0", "1", "0"], ["0", "0"], ["1"]]


def test_latex_rendering(spaces):
    text = render(spaces["cubics-mirror"], "latex")
    assert text.count(r"\begin{tabular}") == 2
    assert "$73$" in text and r"\frac1{9}(2,2,5,6,3,6;3,0)" in text


def test_unknown_format(spaces):
    with pytest.raises(ValueError):
        render(spaces["cubics"], "xml")
