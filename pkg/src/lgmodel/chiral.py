"""Graded slices of chiral algebras and their Jacobi quotients.

For a sector ``gamma`` the chiral algebra is the Jacobi ring of the
superpotential restricted to the fixed coordinates, tensored with the volume
form on those coordinates.  A slice fixes the p-degree ``k`` and keeps only
group-invariant elements: the torus forces a weighted-degree condition, and
each finite generator forces a character condition.  Every slice is finite,
so its quotient by the Jacobian ideal is plain linear algebra.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterator, Sequence

from .arith import SparseEchelon, common_denominator, phase
from .polycore import Monomial, ModelData, Poly, grevlex_key, partial
from .symmetry import FixedData, GroupElement, SymmetryGroup, monomial_phase


def restricted_potential(Wbar: Poly, fd: FixedData) -> Poly:
    """Set every coordinate moved by ``fd.element`` to zero."""
    return Wbar.substitute_zero(fd.fixed_coordinates)


def form_weight(fd: FixedData, model: ModelData) -> int:
    """Torus weight of the volume form on the fixed coordinates."""
    tw = model.torus_weights
    return sum(tw[c] for c in fd.fixed_coordinates)


def form_character(fd: FixedData, g: GroupElement) -> Fraction:
    ph = g.phases
    return phase(sum((ph[c] for c in fd.fixed_coordinates), Fraction(0)))


def torus_degree(m: Sequence[int], model: ModelData) -> int:
    return sum(e * w for e, w in zip(m, model.torus_weights))


def _weighted_exponents(weights: Sequence[int], total: int) -> Iterator[tuple[int, ...]]:
    if not weights:
        if total == 0:
            yield ()
        return
    if total < 0:
        return
    w, rest = weights[0], weights[1:]
    for e in range(total // w + 1):
        for tail in _weighted_exponents(rest, total - e * w):
            yield (e,) + tail


def _monomials(fd: FixedData, model: ModelData, k: int, torus_target: int) -> Iterator[Monomial]:
    """Monomials on the fixed coordinates of p-degree ``k`` and given torus degree."""
    n, r = model.n, model.r
    xw = [model.weights[i] for i in fd.fixed_x]
    for pe in _weighted_exponents([1] * len(fd.fixed_p), k):
        pdeg = sum(e * model.degrees[i] for e, i in zip(pe, fd.fixed_p))
        for xe in _weighted_exponents(xw, torus_target + pdeg):
            m = [0] * (n + r)
            for e, i in zip(xe, fd.fixed_x):
                m[i] = e
            for e, i in zip(pe, fd.fixed_p):
                m[n + i] = e
            yield tuple(m)


def _generators(G: SymmetryGroup) -> list[GroupElement]:
    return [g for g in G.generators if not g.is_identity]


def slice_monomials(fd: FixedData, k: int, G: SymmetryGroup) -> list[Monomial]:
    """Invariant monomials of p-degree ``k`` for the sector ``fd``, sorted ascending."""
    model = G.model
    gens = _generators(G)
    targets = [phase(-form_character(fd, g)) for g in gens]
    out = []
    for m in _monomials(fd, model, k, -form_weight(fd, model)):
        if all(monomial_phase(m, g.phases) == t for g, t in zip(gens, targets)):
            out.append(m)
    out.sort(key=grevlex_key)
    return out


@dataclass
class SectorSlice:
    """One p-degree slice of an invariant chiral algebra and its Jacobi quotient."""

    fd: FixedData
    k: int
    potential: Poly
    monomials: list[Monomial]
    rows: list[dict[int, Fraction]]
    echelon: SparseEchelon = field(repr=False)

    @property
    def sector_element(self) -> GroupElement:
        return self.fd.element

    @cached_property
    def column(self) -> dict[Monomial, int]:
        return {m: i for i, m in enumerate(self.monomials)}

    @property
    def ideal_rank(self) -> int:
        return self.echelon.rank

    @property
    def dimension(self) -> int:
        return len(self.monomials) - self.ideal_rank

    @cached_property
    def quotient_basis(self) -> list[Monomial]:
        """Least monomials (in the fixed total order) spanning the quotient."""
        return [m for i, m in enumerate(self.monomials) if i not in self.echelon.pivots]

    def vector(self, poly: Poly | Monomial) -> dict[int, Fraction]:
        if not isinstance(poly, Poly):
            return {self.column[tuple(poly)]: Fraction(1)}
        out = {}
        for m, c in poly.terms.items():
            if m not in self.column:
                raise KeyError(f"monomial {m} is not in this slice")
            out[self.column[m]] = c
        return out

    def normal_form(self, poly: Poly | Monomial) -> dict[Monomial, Fraction]:
        """Coordinates of the class of ``poly`` in terms of :attr:`quotient_basis`."""
        nf = self.echelon.normal_form(self.vector(poly))
        return {self.monomials[c]: v for c, v in sorted(nf.items())}

    def coordinates(self, poly: Poly | Monomial) -> list[Fraction]:
        nf = self.normal_form(poly)
        return [nf.get(m, Fraction(0)) for m in self.quotient_basis]

    @cached_property
    def _normal_forms(self) -> list[dict[Monomial, Fraction]]:
        return [self.normal_form(m) for m in self.monomials]

    def dimension_mod_p(self, p: int, shuffle: random.Random | None = None) -> int:
        """Quotient dimension with coefficients reduced modulo the prime ``p``."""
        ech = SparseEchelon(modulus=p)
        rows = list(self.rows)
        if shuffle is not None:
            shuffle.shuffle(rows)
        for row in rows:
            ech.add({c: v.numerator * pow(v.denominator, -1, p) for c, v in row.items()})
        return len(self.monomials) - ech.rank


def _integral(row: dict[int, Fraction]) -> dict[int, int]:
    d = common_denominator(row.values())
    return {c: int(v * d) for c, v in row.items()}


def ideal_rows(V: Poly, monomials: Sequence[Monomial], fd: FixedData, k: int,
               G: SymmetryGroup) -> list[dict[int, Fraction]]:
    """Spanning vectors ``m' * dV/dz`` of the Jacobian ideal inside the slice.

    ``z`` runs over the fixed coordinates and ``m'`` over monomials (on the
    fixed coordinates) whose product with ``dV/dz`` lands in the slice.
    """
    model = G.model
    n = model.n
    column = {m: i for i, m in enumerate(monomials)}
    gens = _generators(G)
    targets = [phase(-form_character(fd, g)) for g in gens]
    target_torus = -form_weight(fd, model)
    rows = []
    for z in fd.fixed_coordinates:
        dz = partial(V, z)
        if not dz:
            continue
        lead = next(iter(dz.terms))
        pdeg = sum(lead[n:])
        if pdeg > k:
            continue
        need = [phase(t - monomial_phase(lead, g.phases)) for g, t in zip(gens, targets)]
        for cof in _monomials(fd, model, k - pdeg, target_torus - torus_degree(lead, model)):
            if any(monomial_phase(cof, g.phases) != t for g, t in zip(gens, need)):
                continue
            row = {}
            for m, c in dz.terms.items():
                mm = tuple(a + b for a, b in zip(m, cof))
                row[column[mm]] = c
            rows.append(row)
    return rows


def jacobi_quotient_slice(V: Poly, monomials: Sequence[Monomial], fd: FixedData, k: int,
                          G: SymmetryGroup) -> SectorSlice:
    monomials = sorted(monomials, key=grevlex_key)
    rows = ideal_rows(V, monomials, fd, k, G)
    ech = SparseEchelon()
    for row in rows:
        ech.add(_integral(row))
    return SectorSlice(fd, k, V, list(monomials), rows, ech)


def sector_slice(Wbar: Poly, fd: FixedData, k: int, G: SymmetryGroup) -> SectorSlice:
    V = restricted_potential(Wbar, fd)
    return jacobi_quotient_slice(V, slice_monomials(fd, k, G), fd, k, G)


def class_synonyms(m: Monomial, sl: SectorSlice) -> list[Monomial]:
    """Slice monomials whose class is a nonzero multiple of the class of ``m``."""
    target = sl.normal_form(m)
    if not target:
        return [mm for mm, nf in zip(sl.monomials, sl._normal_forms) if not nf]
    key = next(iter(target))
    out = []
    for mm, nf in zip(sl.monomials, sl._normal_forms):
        if nf.keys() != target.keys():
            continue
        ratio = nf[key] / target[key]
        if all(nf[c] == ratio * target[c] for c in target):
            out.append(mm)
    return out


def monomial_characters(m: Monomial, G: SymmetryGroup) -> tuple[Fraction, ...]:
    return tuple(monomial_phase(m, g.phases) for g in _generators(G))
