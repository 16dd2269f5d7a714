"""Explicit mirror maps between state spaces.

Two families are covered.  For the Fermat quintic the twisted sectors on one
side go to monomials in the untwisted sector on the other by the classical
exponent rule, and the untwisted sector goes back to the diagonal elements.
For the pair of cubics in P^5 the (1,1) part of the transposed-group state
space goes to the (2,1) part of the untwisted sector: a floor-of-thirds rule
covers every generator whose sector has ``r_gamma - n_gamma = 1``, and a
short lookup covers the seven remaining ones.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Literal

from .arith import rank_nullspace
from .chiral import SectorSlice, class_synonyms, sector_slice
from .polycore import Monomial, ModelData, format_monomial, parse_polynomial
from .statespace import StateSpace, _superpotential
from .symmetry import FixedData, GroupElement, fixed_data
from . import tables

Provenance = Literal["rule", "special-case", "table-override"]


class MirrorError(ValueError):
    pass


class WrongModel(MirrorError):
    """The model is not one the requested map is defined for."""


class RuleNotApplicable(MirrorError):
    """The exponent rule does not produce a generator of the right bidegree."""


class NotBijective(MirrorError):
    def __init__(self, message: str, dependent: list[str]):
        super().__init__(message)
        self.dependent = dependent


@dataclass(frozen=True)
class StateLabel:
    """``omega|gamma>``: a monomial, or ``("t", k)`` for ``t^k dt``."""

    element: GroupElement
    omega: tuple

    @property
    def is_projective(self) -> bool:
        return self.omega[:1] == ("t",)

    def text(self, names) -> str:
        if self.is_projective:
            k = self.omega[1]
            om = "dt" if k == 0 else ("t*dt" if k == 1 else f"t^{k}*dt")
        else:
            om = format_monomial(self.omega, names)
        return f"{om}|{self.element.label()}>"


@dataclass(frozen=True)
class MirrorPair:
    source: StateLabel
    target: StateLabel
    provenance: Provenance


@dataclass
class MirrorAssignment:
    source: StateSpace
    target: StateSpace
    degree: int
    pairs: list[MirrorPair]
    target_slice: SectorSlice
    rank: int

    @property
    def bijective(self) -> bool:
        return self.rank == len(self.pairs) == self.target_slice.dimension

    def image(self, source: StateLabel) -> StateLabel:
        for pair in self.pairs:
            if pair.source == source:
                return pair.target
        raise KeyError(source)

    def rows(self) -> list[dict]:
        sn = self.source.model.all_names
        return [{"source": {"gamma": p.source.element.label(), "generator": p.source.text(sn)},
                 "target_monomial": target_text(p.target.omega, self.target.model),
                 "provenance": p.provenance} for p in self.pairs]

    def to_json(self) -> dict:
        return {"source_model": self.source.model.name, "target_model": self.target.model.name,
                "degree": self.degree, "rank": self.rank, "pairs": self.rows()}


def target_text(m: Monomial, model: ModelData) -> str:
    """Monomial with the p-variables written first."""
    n = model.n
    order = list(range(n, n + model.r)) + list(range(n))
    names = [model.all_names[i] for i in order]
    return format_monomial(tuple(m[i] for i in order), names)


# ---------------------------------------------------------------------------
# Model recognition
# ---------------------------------------------------------------------------

def _supports(model: ModelData) -> list[set[Monomial]]:
    return [set(P.terms) for P in model.polynomials]


def _unit(n: int, i: int, e: int) -> tuple[int, ...]:
    return tuple(e if j == i else 0 for j in range(n))


def is_fermat_quintic(model: ModelData) -> bool:
    if model.n != 5 or model.r != 1 or set(model.weights) != {1}:
        return False
    return _supports(model)[0] == {_unit(5, i, 5) for i in range(5)}


def is_two_cubics(model: ModelData) -> bool:
    """Two cubics of the shape ``sum x_i^3 - c X1 X2 X3``, ``sum X_i^3 - c' x1 x2 x3``."""
    if model.n != 6 or model.r != 2 or set(model.weights) != {1}:
        return False
    cubes = lambda off: {_unit(6, off + i, 3) for i in range(3)}
    prod = lambda off: tuple(1 if off <= j < off + 3 else 0 for j in range(6))
    return _supports(model) == [cubes(0) | {prod(3)}, cubes(3) | {prod(0)}]


# ---------------------------------------------------------------------------
# Quintic
# ---------------------------------------------------------------------------

def _fifths(g: GroupElement) -> list[int]:
    out = []
    for a in g.phases:
        if (5 * a).denominator != 1:
            raise RuleNotApplicable(f"{g.label()} is not a fifth-root element")
        out.append(int(5 * a))
    return out


def quintic_mirror_image(label: StateLabel, source: ModelData) -> StateLabel:
    """Image of a generator under the quintic mirror map.

    A twisted generator ``1|(a1..a5;0)/5>`` goes to
    ``p^(age-1) * prod x_i^(a_i - 1)|id>``; an untwisted generator
    ``(p x1..x5)^(a-1)|id>`` goes to ``1|(a,a,a,a,a;0)/5>``.
    """
    if not is_fermat_quintic(source):
        raise WrongModel(f"{source.name!r} is not the Fermat quintic")
    g = label.element
    n = source.n
    if label.is_projective:
        if label.omega != ("t", 0) or g.p_phases[0] != 0 or any(a == 0 for a in g.x_phases):
            raise RuleNotApplicable(f"{label.text(source.all_names)} is not a twisted generator")
        a = _fifths(g)[:n]
        age = sum(a) // 5
        return StateLabel(GroupElement.identity(n, 1), tuple(e - 1 for e in a) + (age - 1,))
    if not g.is_identity:
        raise RuleNotApplicable("only the untwisted Jacobi sector has a preimage rule")
    e = label.omega
    if len(set(e)) != 1:
        raise RuleNotApplicable(f"{format_monomial(e, source.all_names)} is not a power of p*x1*...*x5")
    a = e[0] + 1
    return StateLabel(GroupElement((Fraction(a, 5),) * n, (Fraction(0),)), ("t", 0))


# ---------------------------------------------------------------------------
# Pair of cubics
# ---------------------------------------------------------------------------

def _ninths(g: GroupElement) -> tuple[int, ...]:
    out = []
    for a in g.phases:
        if (9 * a).denominator != 1:
            raise RuleNotApplicable(f"{g.label()} is not a ninth-root element")
        out.append(int(9 * a))
    return tuple(out)


def cubics_rule(label: StateLabel, fd: FixedData | None = None) -> Monomial:
    """Floor-of-thirds rule for a ``dt`` generator with ``r_gamma - n_gamma = 1``.

    With phases ``(b1,b2,b3,c1,c2,c3; a1,a2)/9`` the image is
    ``p1^mb p2^mc prod x_i^(b_i//3 - mb) X_i^(c_i//3 - mc)`` where ``mb``
    and ``mc`` are the minima of ``b_i//3`` and ``c_i//3``.
    """
    fd = fd or fixed_data(label.element)
    if label.omega != ("t", 0) or fd.r_gamma - fd.n_gamma != 1:
        raise RuleNotApplicable("the rule needs a dt generator with r_gamma - n_gamma = 1")
    ph = _ninths(label.element)
    b = [v // 3 for v in ph[:3]]
    c = [v // 3 for v in ph[3:6]]
    mb, mc = min(b), min(c)
    m = tuple(v - mb for v in b) + tuple(v - mc for v in c) + (mb, mc)
    if mb + mc != 1 or sum(m[:6]) != 3:
        raise RuleNotApplicable(f"rule output for {label.element.label()} has the wrong bidegree")
    return m


_NAMES = ("x1", "x2", "x3", "X1", "X2", "X3", "p1", "p2")


def _mono(text: str) -> Monomial:
    (m,) = parse_polynomial(text, _NAMES).terms
    return m


def _special_table() -> dict[tuple, str]:
    out = {
        ((3,) * 6 + (0, 0), ("t", 1)): "p1*x1^3",
        ((6, 6, 6, 3, 3, 3, 0, 0), ("t", 0)): "p1*x1*x2*x3",
        ((3, 3, 3, 6, 6, 6, 0, 0), ("t", 0)): "p2*X1*X2*X3",
    }
    for i in (1, 2, 3):
        out[((0, 0, 0, 3, 3, 3, 0, 0), _mono(f"x{i}^3"))] = f"p2*x{i}^3"
        out[((3, 3, 3, 0, 0, 0, 0, 0), _mono(f"X{i}^3"))] = f"p1*X{i}^3"
    return out


CUBICS_SPECIAL = _special_table()


def cubics_special(label: StateLabel) -> Monomial:
    """Images of the (1,1) generators the rule does not cover."""
    key = (_ninths(label.element), label.omega)
    try:
        return _mono(CUBICS_SPECIAL[key])
    except KeyError:
        raise RuleNotApplicable(f"no special case for {label.element.label()}") from None


def cubics_assign(label: StateLabel, fd: FixedData) -> tuple[Monomial, Provenance]:
    if label.is_projective and label.omega == ("t", 0) and fd.r_gamma - fd.n_gamma == 1:
        return cubics_rule(label, fd), "rule"
    return cubics_special(label), "special-case"


# ---------------------------------------------------------------------------
# Assembling and checking a map
# ---------------------------------------------------------------------------

def target_slice(target: StateSpace, k: int) -> SectorSlice:
    """The p-degree ``k`` slice of the untwisted sector of ``target``."""
    sec = target.identity_sector()
    if k in sec.slices:
        return sec.slices[k]
    return sector_slice(_superpotential(target.model), sec.fd, k, target.group)


def _assigner(source: ModelData, target: ModelData) -> Callable:
    if is_two_cubics(source) and is_two_cubics(target):
        return cubics_assign
    if is_fermat_quintic(source) and is_fermat_quintic(target):
        def assign(label, fd):
            return quintic_mirror_image(label, source).omega, "rule"
        return assign
    raise WrongModel(f"no mirror map known from {source.name!r} to {target.name!r}")


def build_mirror_map(source: StateSpace, target: StateSpace, degree: int = 1,
                     overrides: dict[StateLabel, Monomial] | None = None) -> MirrorAssignment:
    """Map the ``(degree, degree)`` part of ``source`` into the untwisted
    sector of ``target`` (p-degree ``degree``) and check bijectivity exactly.

    Raises :class:`NotBijective` with the generators involved in a linear
    dependency when the images are not a basis.
    """
    assign = _assigner(source.model, target.model)
    sl = target_slice(target, degree)
    ident = GroupElement.identity(target.model.n, target.model.r)
    pairs = []
    for sec in source.sectors:
        for e in sec.entries:
            if (e.p, e.q) != (degree, degree):
                continue
            lab = StateLabel(sec.element, e.omega)
            if overrides and lab in overrides:
                mono, prov = overrides[lab], "table-override"
            else:
                mono, prov = assign(lab, sec.fd)
            pairs.append(MirrorPair(lab, StateLabel(ident, tuple(mono)), prov))
    M = []
    for pair in pairs:
        try:
            M.append(sl.coordinates(pair.target.omega))
        except KeyError:
            raise InvalidImage(pair, source.model) from None
    rank, left_null = (rank_nullspace(_transpose(M, sl.dimension)) if M else (0, []))
    result = MirrorAssignment(source, target, degree, pairs, sl, rank)
    if not result.bijective:
        names = source.model.all_names
        involved = sorted({i for v in left_null for i, c in enumerate(v) if c})
        dependent = [pairs[i].source.text(names) for i in involved]
        raise NotBijective(f"{len(pairs)} images span a space of dimension {rank}, "
                           f"target has dimension {sl.dimension}", dependent)
    return result


class InvalidImage(MirrorError):
    def __init__(self, pair: MirrorPair, model: ModelData):
        super().__init__(f"image of {pair.source.text(model.all_names)} is not an invariant "
                         f"monomial of the target slice")
        self.pair = pair


def _transpose(M: list[list[Fraction]], cols: int) -> list[list[Fraction]]:
    return [[row[j] for row in M] for j in range(cols)]


def quintic_untwisted(source: StateSpace) -> list[MirrorPair]:
    """Images of the four untwisted generators of ``source``."""
    sec = source.identity_sector()
    out = []
    for k in range(source.D + 1):
        for m in target_slice(source, k).quotient_basis:
            lab = StateLabel(sec.element, m)
            out.append(MirrorPair(lab, quintic_mirror_image(lab, source.model), "rule"))
    return out


# ---------------------------------------------------------------------------
# Comparison with the published table
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RowDiff:
    row: tables.Row
    computed: str | None
    status: Literal["match", "documented-typo", "unexpected"]
    detail: str = ""


def _row_label(row: tables.Row) -> tuple:
    phases = tuple(Fraction(v, 9) for v in row.ninths)
    g = GroupElement.from_phases(phases, 6)
    if row.omega == "dt":
        return g, ("t", 0)
    if row.omega == "t*dt":
        return g, ("t", 1)
    return g, _mono(row.omega)


def diff_against_table(assignment: MirrorAssignment, rows=None) -> list[RowDiff]:
    """Compare each published row with the computed assignment.

    A row matches when the printed image is the computed monomial, or a
    nonzero multiple of it in the Jacobi quotient.
    """
    rows = tables.MIRROR_ROWS if rows is None else rows
    sl = assignment.target_slice
    by_source = {(p.source.element, p.source.omega): p for p in assignment.pairs}
    if assignment.source.group.order_mod_torus() <= assignment.target.group.order_mod_torus():
        raise WrongModel("the reference table starts from the twisted sectors of the larger "
                         "orbifold; pass that model as the source")
    out = []
    for row in rows:
        pair = by_source.get(_row_label(row))
        if pair is None:
            status = "documented-typo" if row.note else "unexpected"
            out.append(RowDiff(row, None, status, "source generator not found"))
            continue
        computed = pair.target.omega
        text = target_text(computed, assignment.target.model)
        printed = _mono(row.target)
        if printed == computed:
            out.append(RowDiff(row, text, "match", "identical"))
        elif printed in sl.column and printed in class_synonyms(computed, sl):
            out.append(RowDiff(row, text, "match", "same class"))
        else:
            status = "documented-typo" if row.note else "unexpected"
            out.append(RowDiff(row, text, status, row.note))
    return out
