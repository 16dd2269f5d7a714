import random
from fractions import Fraction

import pytest

from lgmodel.chiral import (class_synonyms, form_character, form_weight, monomial_characters,
                            sector_slice, slice_monomials, torus_degree)
from lgmodel.mirror import _mono, target_slice
from lgmodel.statespace import _superpotential
from lgmodel.symmetry import GroupElement, fixed_data

PRIMES = (1_000_003, 998_244_353, 2_147_483_647)


def element(ninths):
    return GroupElement.from_phases([Fraction(v, 9) for v in ninths], 6)


def test_untwisted_21_slice(spaces):
    sl = target_slice(spaces["cubics"], 1)
    assert len(sl.monomials) == 112
    assert len(sl.rows) == 40
    assert sl.ideal_rank == 39
    assert sl.dimension == 73


def test_quintic_21_slice(spaces):
    assert target_slice(spaces["quintic"], 1).dimension == 101
    assert target_slice(spaces["quintic-mirror"], 1).dimension == 1


def test_twisted_cubic_sectors(spaces):
    S = spaces["cubics-mirror"]
    G, W = S.group, _superpotential(S.model)
    for ninths, basis in [((0, 0, 0, 3, 3, 3, 0, 0), ["x1^3", "x2^3"]),
                          ((3, 3, 3, 0, 0, 0, 0, 0), ["X1^3", "X2^3"])]:
        fd = fixed_data(element(ninths))
        sl = sector_slice(W, fd, 0, G)
        assert sl.quotient_basis == [_mono(b) for b in basis]
        # the third cube is a combination of the other two
        nf = sl.normal_form(_mono(basis[0].replace("1", "3")))
        assert set(nf) == set(sl.quotient_basis)


def test_basis_monomials_are_their_own_normal_forms(spaces):
    sl = target_slice(spaces["cubics"], 1)
    for m in sl.quotient_basis:
        assert sl.normal_form(m) == {m: 1}


def test_class_synonyms(spaces):
    sl = target_slice(spaces["cubics"], 1)
    same = class_synonyms(_mono("p1*X1*X2*X3"), sl)
    for s in ["p2*x1*x2*x3", "p2*X1^3", "p2*X3^3", "p1*x1^3", "p1*x2^3"]:
        assert _mono(s) in same
    assert _mono("p1*x1*x2*x3") not in same


def test_slices_are_homogeneous(spaces):
    for name, S in spaces.items():
        G = S.group
        for sec in S.sectors:
            for sl in sec.slices.values():
                tw = -form_weight(sec.fd, S.model)
                chars = {monomial_characters(m, G) for m in sl.monomials}
                assert len(chars) <= 1, name
                assert all(torus_degree(m, S.model) == tw for m in sl.monomials)
                for row in sl.rows:
                    assert {monomial_characters(sl.monomials[c], G) for c in row} <= chars


def test_slice_character_target(spaces):
    S = spaces["cubics-mirror"]
    fd = fixed_data(element((0, 0, 0, 3, 3, 3, 0, 0)))
    gens = [g for g in S.group.generators if not g.is_identity]
    for m in slice_monomials(fd, 0, S.group):
        for g, c in zip(gens, monomial_characters(m, S.group)):
            assert (c + form_character(fd, g)) % 1 == 0


@pytest.mark.parametrize("name", ["cubics", "cubics-mirror", "quintic", "quintic-mirror"])
def test_modular_rank_oracle(spaces, name):
    rng = random.Random(5)
    for sec in spaces[name].sectors:
        for sl in sec.slices.values():
            for p in PRIMES:
                assert sl.dimension_mod_p(p, shuffle=rng) == sl.dimension


def test_degenerate_top_slice_is_visible():
    from lgmodel.modelfile import builtin_model
    from lgmodel.statespace import assemble
    S = assemble(builtin_model("cubics"))
    sec = S.identity_sector()
    W = _superpotential(S.model)
    assert sector_slice(W, sec.fd, 2, S.group).dimension == 85
