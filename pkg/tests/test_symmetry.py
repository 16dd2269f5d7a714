import warnings
from collections import Counter
from fractions import Fraction

import numpy as np
import pytest

from lgmodel.polycore import make_model
from lgmodel.suite import brute_force_symmetries, group_points
from lgmodel.symmetry import (GroupElement, GroupTooLarge, NotASymmetry, SymmetryGroup,
                              build_group, canonical_mod_torus, determinant_phase, element_J,
                              extend_to_p, fixed_data, group_by_type, maximal_group, orbit_type,
                              permute_element, polynomial_automorphisms, relevant_elements)


def quiet_model(*args, **kw):
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        return make_model(*args, **kw)


def test_element_J(models):
    J = element_J(models["cubics"])
    assert J.x_phases == (Fraction(1, 3),) * 6 and J.p_phases == (0, 0)
    assert J.order == 3 and determinant_phase(J) == 0
    Jq = element_J(models["quintic"])
    assert Jq.order == 5 and determinant_phase(Jq) == 0


def test_group_orders(models):
    assert maximal_group(models["cubics"]).order_mod_torus() == 81
    assert build_group(models["cubics-mirror"]).order_mod_torus() == 81
    assert maximal_group(models["quintic"]).order_mod_torus() == 625
    assert build_group(models["quintic-mirror"]).order_mod_torus() == 125
    # J lies in the torus when all weights are equal
    assert build_group(models["cubics"]).order_mod_torus() == 1


def test_lt_brute_force_with_numpy(models):
    """Independent enumeration of (Z/9)^6 symmetries of both cubics."""
    a = np.indices((9,) * 6).reshape(6, -1).T
    x, X = a[:, :3], a[:, 3:]
    cube_x, cube_X = (3 * x) % 9, (3 * X) % 9
    prod_x, prod_X = x.sum(1) % 9, X.sum(1) % 9
    ok = ((cube_x == prod_X[:, None]).all(1) & (cube_X == prod_x[:, None]).all(1))
    brute = {tuple(Fraction(int(v), 9) for v in row) for row in a[ok]}
    assert len(brute) == 729  # 81 cosets, 9 torus points each
    assert brute == brute_force_symmetries(models["cubics"], 9) == group_points(models["cubics"], 9)


def test_quintic_brute_force(models):
    pts = brute_force_symmetries(models["quintic"], 5)
    assert len(pts) == 5 ** 5
    assert pts == group_points(models["quintic"], 5)


def test_quadric_in_two_variables():
    m = quiet_model("q", ["x", "y"], [1, 1], ["x^2 + y^2"])
    assert maximal_group(m).order_mod_torus() == 2
    assert brute_force_symmetries(m, 4) == group_points(m, 4)


def test_weighted_pinning_adds_torus_root():
    m = quiet_model("w", ["x", "y"], [2, 3], ["x^3 + y^2"])
    G = maximal_group(m)
    assert brute_force_symmetries(m, 6) == group_points(m, 6)
    assert G.order_mod_torus() == 1


def test_extend_to_p_rejects_non_symmetry(models):
    with pytest.raises(NotASymmetry):
        extend_to_p([Fraction(1, 3), 0, 0, 0, 0, 0], models["cubics"])
    third = Fraction(1, 9)
    g = extend_to_p([Fraction(1, 9), Fraction(4, 9), Fraction(7, 9), third, third, third], models["cubics"])
    assert g.p_phases == (Fraction(2, 3), Fraction(2, 3))


def test_relevant_element_counts(spaces):
    assert len(spaces["cubics"].sectors) == 3
    assert len(spaces["cubics-mirror"].sectors) == 405
    assert len(spaces["cubics-mirror"].contributing) == 141
    assert len(spaces["quintic"].sectors) == 5
    assert len(spaces["quintic-mirror"].sectors) == 625


def test_quintic_mirror_twisted_ages(spaces):
    ages = Counter(fd.age for fd in (s.fd for s in spaces["quintic-mirror"].sectors)
                   if fd.r_gamma == 1 and fd.n_gamma == 0)
    assert [ages[a] for a in (1, 2, 3, 4)] == [1, 101, 101, 1]


@pytest.mark.parametrize("name", ["cubics", "cubics-mirror", "quintic", "quintic-mirror"])
def test_age_duality(spaces, name):
    S = spaces[name]
    total = S.model.n + S.model.r
    for fd in relevant_elements(S.group):
        g = fd.element
        assert g.age + g.inverse().age == total - (fd.n_gamma + fd.r_gamma)
        assert fixed_data(g.inverse()).n_gamma == fd.n_gamma


def test_canonical_representative_is_torus_invariant(models):
    m = models["cubics"]
    g = extend_to_p([Fraction(2, 9), Fraction(2, 9), Fraction(5, 9), Fraction(6, 9), Fraction(3, 9),
                     Fraction(6, 9)], m)
    for k in range(9):
        h = g.shifted(Fraction(k, 9), m.torus_weights)
        assert canonical_mod_torus(h, m.torus_weights) == canonical_mod_torus(g, m.torus_weights)


def test_orbit_types(spaces, models):
    S = spaces["cubics-mirror"]
    perms = polynomial_automorphisms(models["cubics"])
    assert len(perms) == 36
    proj = [s.element for s in S.contributing if s.kind == "projective"]
    sizes = Counter(len(v) for v in group_by_type(proj, S.model).values())
    assert sizes == {1: 4, 6: 4, 9: 12}
    for g in proj[:40]:
        for p in perms[::7]:
            assert orbit_type(permute_element(g, p), S.model, perms) == orbit_type(g, S.model, perms)


def test_determinant_condition_is_one_directional():
    m = quiet_model("quadrics", ["x", "y", "z", "u"], [1] * 4, ["x^2 + y^2 + z^2 + u^2"])
    assert not m.is_calabi_yau
    assert determinant_phase(element_J(m)) == 0


def test_group_order_cap(models, monkeypatch):
    monkeypatch.setenv("LG_MAX_GROUP_ORDER", "10")
    G = maximal_group(models["quintic"])
    with pytest.raises(GroupTooLarge):
        G.finite_elements()


def test_group_element_algebra():
    g = GroupElement((Fraction(1, 3), Fraction(2, 3)), (Fraction(1, 2),))
    assert (g * g.inverse()).is_identity
    assert (g ** g.order).is_identity and g.order == 6
    assert g.label() == "1/6(2,4;3)"
    assert GroupElement.identity(2, 1).label() == "id"


def test_generated_group_matches_selector(models):
    m = models["cubics"].with_group("GEN", [(Fraction(1, 3),) * 6])
    assert build_group(m).order_mod_torus() == 1
    G = SymmetryGroup(models["cubics"], tuple(build_group(models["cubics-mirror"]).generators))
    assert G.order_mod_torus() == 81
