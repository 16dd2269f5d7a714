from collections import Counter
from fractions import Fraction

import pytest

from lgmodel import tables
from lgmodel.chiral import class_synonyms
from lgmodel.mirror import (NotBijective, RuleNotApplicable, StateLabel, WrongModel, _mono,
                            _row_label, build_mirror_map, diff_against_table, quintic_mirror_image,
                            cubics_rule, cubics_special, quintic_untwisted, target_text)
from lgmodel.symmetry import GroupElement, orbit_type, polynomial_automorphisms


def dt(*ninths):
    return StateLabel(GroupElement.from_phases([Fraction(v, 9) for v in ninths], 6), ("t", 0))


@pytest.fixture(scope="module")
def cubics_map(spaces):
    return build_mirror_map(spaces["cubics-mirror"], spaces["cubics"])


@pytest.mark.parametrize("ninths,image", [
    ((3, 6, 3, 1, 7, 1, 0, 6), "p1*x2*X2^2"),
    ((3, 3, 3, 3, 0, 6, 0, 0), "p1*X1*X3^2"),
    ((2, 2, 5, 6, 3, 6, 3, 0), "p2*x3*X1*X3"),
    ((3, 6, 3, 4, 1, 4, 0, 6), "p1*x2*X1*X3"),
    ((0, 3, 6, 3, 3, 3, 0, 0), "p2*x2*x3^2"),
])
def test_rule(ninths, image):
    assert cubics_rule(dt(*ninths)) == _mono(image)


def test_rule_refuses_other_sectors():
    with pytest.raises(RuleNotApplicable):
        cubics_rule(dt(6, 6, 6, 3, 3, 3, 0, 0))  # r - n = 2; a literal evaluation gives p1^2 p2


def test_special_cases():
    assert cubics_special(dt(6, 6, 6, 3, 3, 3, 0, 0)) == _mono("p1*x1*x2*x3")
    assert cubics_special(dt(3, 3, 3, 6, 6, 6, 0, 0)) == _mono("p2*X1*X2*X3")
    tdt = StateLabel(dt(3, 3, 3, 3, 3, 3, 0, 0).element, ("t", 1))
    assert cubics_special(tdt) == _mono("p1*x1^3")
    g = dt(0, 0, 0, 3, 3, 3, 0, 0).element
    assert cubics_special(StateLabel(g, _mono("x1^3"))) == _mono("p2*x1^3")
    g = dt(3, 3, 3, 0, 0, 0, 0, 0).element
    assert cubics_special(StateLabel(g, _mono("X2^3"))) == _mono("p1*X2^3")
    with pytest.raises(RuleNotApplicable):
        cubics_special(dt(6, 6, 6, 6, 6, 6, 0, 0))


def test_lt_map_is_bijective(cubics_map):
    assert len(cubics_map.pairs) == 73 and cubics_map.rank == 73 and cubics_map.bijective
    prov = Counter(p.provenance for p in cubics_map.pairs)
    assert prov == {"rule": 66, "special-case": 7}


def test_table_diff(cubics_map):
    diff = diff_against_table(cubics_map)
    status = Counter(d.status for d in diff)
    assert status == {"match": 65, "documented-typo": 8}
    assert not any(d.status == "documented-typo" and not d.row.note for d in diff)
    dup = next(d for d in diff if d.row.ninths == (3, 6, 3, 4, 1, 4, 0, 6))
    assert dup.computed == "p1*x2*X1*X3" and dup.status == "documented-typo"


def test_printed_table_is_not_bijective(spaces):
    overrides = {StateLabel(*_row_label(r)): _mono(r.target) for r in tables.MIRROR_ROWS}
    with pytest.raises(NotBijective) as info:
        build_mirror_map(spaces["cubics-mirror"], spaces["cubics"], overrides=overrides)
    assert len(info.value.dependent) == 16
    assert "dt|1/9(3,6,3,4,1,4;0,6)>" in info.value.dependent


def test_blocks_go_to_single_table_rows(cubics_map, spaces):
    """Each orbit-type block lands in exactly one row of the (2,1) basis table."""
    sl = cubics_map.target_slice
    model = spaces["cubics-mirror"].model
    perms = polynomial_automorphisms(model)
    row_of = {}
    for i, row in enumerate(tables.BASIS_21):
        for rep in row.representatives:
            for m in class_synonyms(_mono(rep), sl):
                row_of[m] = i
    blocks = {}
    for p in cubics_map.pairs:
        if p.provenance == "rule":
            key = orbit_type(p.source.element, model, perms)
            blocks.setdefault(key, set()).add(row_of[p.target.omega])
    used = []
    for key, rows in blocks.items():
        assert len(rows) == 1
        used += rows
    assert len(used) == len(set(used)) == 8
    sizes = sorted(tables.BASIS_21[i].count for i in used)
    assert sizes == [6, 6] + [9] * 6


def test_quintic_maps(spaces):
    Q, P = spaces["quintic-mirror"], spaces["quintic"]
    total = 0
    for k in range(4):
        M = build_mirror_map(Q, P, k)
        assert M.bijective
        total += len(M.pairs)
    assert total == 204
    untw = quintic_untwisted(Q)
    assert [p.target.element.label() for p in untw] == [f"1/5({a},{a},{a},{a},{a};0)" for a in (1, 2, 3, 4)]


def test_quintic_exponent_rule(models):
    g = GroupElement.from_phases([Fraction(v, 5) for v in (1, 1, 1, 3, 4, 0)], 5)
    img = quintic_mirror_image(StateLabel(g, ("t", 0)), models["quintic-mirror"])
    assert target_text(img.omega, models["quintic"]) == "p*x4^2*x5^3"
    with pytest.raises(WrongModel):
        quintic_mirror_image(StateLabel(g, ("t", 0)), models["cubics"])


def test_age2_images_are_degree_five_monomials(spaces):
    M = build_mirror_map(spaces["quintic-mirror"], spaces["quintic"], 1)
    images = {p.target.omega for p in M.pairs}
    expected = {e + (1,) for e in __import__("itertools").product(range(4), repeat=5) if sum(e) == 5}
    assert images == expected


def test_mismatched_models(spaces):
    with pytest.raises(WrongModel):
        build_mirror_map(spaces["cubics"], spaces["quintic"])


def test_json_export(cubics_map):
    data = cubics_map.to_json()
    assert data["rank"] == 73 and len(data["pairs"]) == 73
    row = data["pairs"][0]
    assert set(row) == {"source", "target_monomial", "provenance"}
    assert set(row["source"]) == {"gamma", "generator"}
