"""Diagonal symmetry groups and their elements with nonempty fixed locus.

Every group considered contains the torus ``Gamma_0`` acting with weights
``w`` on ``x`` and ``-d`` on ``p``.  A :class:`SymmetryGroup` stores a finite
set of generators ``F``; the group itself is ``Gamma_0 * <F>``.  The torus is
never enumerated: wherever it matters it is handled by solving for the torus
parameter directly.
"""
from __future__ import annotations

import itertools
import math
import os
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .arith import lcm, phase, smith_normal_form, solve_congruences
from .polycore import ModelData, Poly

DEFAULT_MAX_ORDER = 1_000_000


class NotASymmetry(ValueError):
    pass


class GroupTooLarge(RuntimeError):
    pass


def max_group_order() -> int:
    return int(os.environ.get("LG_MAX_GROUP_ORDER", DEFAULT_MAX_ORDER))


@dataclass(frozen=True, order=True)
class GroupElement:
    """Phases in ``[0, 1)`` on the ``n`` x-coordinates and ``r`` p-coordinates."""

    x_phases: tuple[Fraction, ...]
    p_phases: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "x_phases", tuple(phase(a) for a in self.x_phases))
        object.__setattr__(self, "p_phases", tuple(phase(a) for a in self.p_phases))

    @property
    def phases(self) -> tuple[Fraction, ...]:
        return self.x_phases + self.p_phases

    @classmethod
    def from_phases(cls, phases: Sequence, n: int) -> "GroupElement":
        return cls(tuple(phases[:n]), tuple(phases[n:]))

    @classmethod
    def identity(cls, n: int, r: int) -> "GroupElement":
        return cls((Fraction(0),) * n, (Fraction(0),) * r)

    def __mul__(self, other: "GroupElement") -> "GroupElement":
        return GroupElement(tuple(a + b for a, b in zip(self.x_phases, other.x_phases)),
                            tuple(a + b for a, b in zip(self.p_phases, other.p_phases)))

    def inverse(self) -> "GroupElement":
        return GroupElement(tuple(-a for a in self.x_phases), tuple(-a for a in self.p_phases))

    def __pow__(self, k: int) -> "GroupElement":
        return GroupElement(tuple(a * k for a in self.x_phases), tuple(a * k for a in self.p_phases))

    @property
    def order(self) -> int:
        return lcm(a.denominator for a in self.phases)

    @property
    def is_identity(self) -> bool:
        return not any(self.phases)

    @property
    def age(self) -> Fraction:
        return sum(self.phases, Fraction(0))

    def shifted(self, t: Fraction, torus_weights: Sequence[int]) -> "GroupElement":
        """Compose with the torus element of parameter ``t``."""
        ph = [a + t * w for a, w in zip(self.phases, torus_weights)]
        return GroupElement.from_phases(ph, len(self.x_phases))

    def label(self) -> str:
        """``1/9(2,2,5,6,3,6;3,0)`` style; ``id`` for the identity."""
        if self.is_identity:
            return "id"
        d = self.order
        xs = ",".join(str(int(a * d)) for a in self.x_phases)
        ps = ",".join(str(int(a * d)) for a in self.p_phases)
        return f"1/{d}({xs};{ps})"

    def __str__(self):
        return self.label()


def monomial_phase(m: Sequence[int], phases: Sequence[Fraction]) -> Fraction:
    return phase(sum((e * a for e, a in zip(m, phases)), Fraction(0)))


def polynomial_phases(model: ModelData, x_phases: Sequence) -> list[Fraction]:
    """Common phase ``b_i`` of the monomials of each ``W_i``.

    Raises :class:`NotASymmetry` if the monomials of some ``W_i`` disagree.
    """
    out = []
    for i, P in enumerate(model.polynomials):
        ph = {monomial_phase(m, x_phases) for m in P.terms}
        if len(ph) != 1:
            raise NotASymmetry(f"W_{i + 1} is not preserved up to scalar (phases {sorted(ph)})")
        out.append(ph.pop())
    return out


def extend_to_p(x_phases: Sequence, model: ModelData) -> GroupElement:
    """Extend an x-symmetry so that every ``p_i W_i`` is invariant."""
    x_phases = tuple(Fraction(a) for a in x_phases)
    if len(x_phases) != model.n:
        raise ValueError(f"expected {model.n} phases, got {len(x_phases)}")
    b = polynomial_phases(model, x_phases)
    return GroupElement(x_phases, tuple(-bi for bi in b))


def check_element(g: GroupElement, model: ModelData) -> None:
    """Verify that ``g`` is an extended symmetry of the model."""
    e = extend_to_p(g.x_phases, model)
    if e.p_phases != g.p_phases:
        raise NotASymmetry(f"p-phases {g.p_phases} do not cancel the polynomial phases")


def element_J(model: ModelData) -> GroupElement:
    d = math.gcd(*model.degrees)
    return extend_to_p([Fraction(w, d) for w in model.weights], model)


def determinant_phase(g: GroupElement) -> Fraction:
    """Determinant of the extended action, as a phase."""
    return phase(g.age)


def canonical_mod_torus(g: GroupElement, torus_weights: Sequence[int]) -> GroupElement:
    """Canonical representative of the coset ``g * Gamma_0``.

    Uses the x-coordinate of smallest weight: the torus parameter is chosen to
    kill that phase, and among the (weight-many) choices the smallest element
    is returned.
    """
    n = len(g.x_phases)
    j = min(range(n), key=lambda i: (torus_weights[i], i))
    w = torus_weights[j]
    cands = [g.shifted((k - g.x_phases[j]) / w, torus_weights) for k in range(w)]
    return min(cands)


# ---------------------------------------------------------------------------
# Groups
# ---------------------------------------------------------------------------

@dataclass
class SymmetryGroup:
    """``Gamma_0 * <generators>`` for a given model."""

    model: ModelData
    generators: tuple[GroupElement, ...]
    name: str = ""
    contains_torus: bool = True
    _elements: list[GroupElement] | None = field(default=None, repr=False)

    @property
    def modulus(self) -> int:
        return lcm(g.order for g in self.generators) if self.generators else 1

    def finite_elements(self) -> list[GroupElement]:
        """Enumerate the finite group generated by the generators."""
        if self._elements is None:
            cap = max_group_order()
            n, r = self.model.n, self.model.r
            ident = GroupElement.identity(n, r)
            seen = {ident}
            frontier = [ident]
            gens = [g for g in self.generators if not g.is_identity]
            while frontier:
                nxt = []
                for h in frontier:
                    for g in gens:
                        k = h * g
                        if k not in seen:
                            seen.add(k)
                            nxt.append(k)
                            if len(seen) > cap:
                                raise GroupTooLarge(f"group exceeds order cap {cap}")
                frontier = nxt
            self._elements = sorted(seen)
        return self._elements

    def quotient_elements(self) -> list[GroupElement]:
        """Canonical representatives of ``Gamma / Gamma_0``."""
        tw = self.model.torus_weights
        return sorted({canonical_mod_torus(g, tw) for g in self.finite_elements()})

    def order_mod_torus(self) -> int:
        return len(self.quotient_elements())

    def contains(self, g: GroupElement) -> bool:
        tw = self.model.torus_weights
        target = canonical_mod_torus(g, tw)
        return target in set(self.quotient_elements())


def _constraint_matrix(model: ModelData) -> list[list[int]]:
    """Rows ``e - e'`` for pairs of monomials of the same ``W_i``."""
    rows = []
    for P in model.polynomials:
        monos = list(P.terms)
        for e in monos[1:]:
            rows.append([a - b for a, b in zip(e, monos[0])])
    return rows


def maximal_group(model: ModelData) -> SymmetryGroup:
    """``Gamma_max``: all diagonal x-symmetries preserving each ``W_i`` up to scalar.

    The x-coordinate of smallest weight is pinned to phase 0 (this meets every
    torus coset), leaving a finite congruence system solved through the Smith
    normal form.
    """
    n = model.n
    rows = _constraint_matrix(model)
    j = min(range(n), key=lambda i: (model.weights[i], i))
    keep = [i for i in range(n) if i != j]
    sub = [[row[i] for i in keep] for row in rows]
    if not sub or not keep:
        invariants = []
    else:
        _, S, _ = smith_normal_form(sub)
        invariants = [S[i][i] for i in range(min(len(sub), len(keep)))]
    if len(invariants) < len(keep) or any(s == 0 for s in invariants):
        raise ValueError("symmetry group has positive-dimensional quotient by the torus; "
                         "weights are not unique")
    m = max(invariants) if invariants else 1
    sol = solve_congruences(sub, [0] * len(sub), m) if sub else None
    gens = []
    for v in (sol.generators if sol else ()):
        x = [Fraction(0)] * n
        for i, a in zip(keep, v):
            x[i] = Fraction(a, m)
        g = extend_to_p(x, model)
        if not g.is_identity:
            gens.append(g)
    # pinning one phase to 0 misses torus points with lambda^w_j = 1;
    # add the torus element of order w_j so the generated group is complete
    wj = model.weights[j]
    if wj > 1:
        gens.append(GroupElement.identity(n, model.r).shifted(Fraction(1, wj), model.torus_weights))
    return SymmetryGroup(model, tuple(gens), name="MAX")


def sl_subgroup(G: SymmetryGroup) -> SymmetryGroup:
    """``Gamma_0 * (elements of determinant 1)``.

    On a Calabi-Yau model the torus has determinant 1, so the condition is
    checked on the finite representatives.  Otherwise every coset contains a
    determinant-1 element and the group is unchanged.
    """
    model = G.model
    if not model.is_calabi_yau:
        return SymmetryGroup(model, G.generators, name=f"SL({G.name})")
    elems = [g for g in G.finite_elements() if determinant_phase(g) == 0]
    gens = _small_generating_set(elems)
    H = SymmetryGroup(model, tuple(gens), name=f"SL({G.name})" if G.name != "MAX" else "SL")
    H._elements = sorted(elems)
    return H


def _small_generating_set(elems: Iterable[GroupElement]) -> list[GroupElement]:
    """Greedy generating set of a finite abelian group given as a list."""
    elems = sorted(elems, key=lambda g: (-g.order, g))
    if not elems:
        return []
    n = len(elems[0].x_phases)
    r = len(elems[0].p_phases)
    span = {GroupElement.identity(n, r)}
    gens = []
    for g in elems:
        if g in span:
            continue
        gens.append(g)
        new = set(span)
        frontier = list(span)
        while frontier:
            nxt = []
            for h in frontier:
                k = h * g
                if k not in new:
                    new.add(k)
                    nxt.append(k)
            frontier = nxt
        span = new
    return gens


def j_group(model: ModelData) -> SymmetryGroup:
    return SymmetryGroup(model, (element_J(model),), name="J")


def generated_group(model: ModelData, rows: Sequence[Sequence]) -> SymmetryGroup:
    gens = []
    for row in rows:
        row = tuple(Fraction(a) for a in row)
        if len(row) == model.n:
            g = extend_to_p(row, model)
        elif len(row) == model.n + model.r:
            g = GroupElement.from_phases(row, model.n)
            check_element(g, model)
        else:
            raise ValueError(f"generator row has {len(row)} entries; expected {model.n} or {model.n + model.r}")
        gens.append(g)
    return SymmetryGroup(model, tuple(gens), name="GEN")


def build_group(model: ModelData) -> SymmetryGroup:
    """The group named by the model's selector."""
    if model.group == "J":
        return j_group(model)
    if model.group == "MAX":
        return maximal_group(model)
    if model.group == "SL":
        return sl_subgroup(maximal_group(model))
    return generated_group(model, model.generators)


# ---------------------------------------------------------------------------
# Elements with fixed points
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class FixedData:
    element: GroupElement
    fixed_x: tuple[int, ...]
    fixed_p: tuple[int, ...]

    @property
    def n_gamma(self) -> int:
        return len(self.fixed_x)

    @property
    def r_gamma(self) -> int:
        return len(self.fixed_p)

    @property
    def age(self) -> Fraction:
        return self.element.age

    @property
    def fixed_coordinates(self) -> tuple[int, ...]:
        """Indices into the flat ``(x, p)`` variable list."""
        n = len(self.element.x_phases)
        return self.fixed_x + tuple(n + i for i in self.fixed_p)

    @property
    def is_projective(self) -> bool:
        return self.r_gamma >= self.n_gamma


def fixed_data(g: GroupElement) -> FixedData:
    fx = tuple(i for i, a in enumerate(g.x_phases) if a == 0)
    fp = tuple(i for i, a in enumerate(g.p_phases) if a == 0)
    return FixedData(g, fx, fp)


def relevant_elements(G: SymmetryGroup) -> list[FixedData]:
    """All elements of ``Gamma_0 * G`` fixing at least one coordinate.

    For each finite element ``f`` and each coordinate, the torus parameters
    ``t`` that fix that coordinate are the solutions of ``f_c + t * w_c = 0``
    in ``Q/Z``; there are ``|w_c|`` of them.
    """
    tw = G.model.torus_weights
    found = set()
    for f in G.finite_elements():
        ph = f.phases
        for c, w in enumerate(tw):
            aw = abs(w)
            for k in range(aw):
                t = (k - ph[c]) / w
                g = f.shifted(t, tw)
                if g.phases[c] != 0:  # pragma: no cover - arithmetic guard
                    raise AssertionError("torus solve failed")
                found.add(g)
    return [fixed_data(g) for g in sorted(found, key=lambda g: (g.age, g))]


# ---------------------------------------------------------------------------
# Orbit types
# ---------------------------------------------------------------------------

def polynomial_automorphisms(model: ModelData) -> list[tuple[int, ...]]:
    """Permutations of the x-variables mapping every ``W_i`` to itself.

    ``perm[i]`` is the image of variable ``i``.  Candidates are restricted to
    variables with the same weight and the same occurrence profile.
    """
    n = model.n

    def profile(i):
        prof = []
        for k, P in enumerate(model.polynomials):
            prof.append(tuple(sorted((m[i], c) for m, c in P.terms.items())))
        return (model.weights[i], tuple(prof))

    classes: dict = {}
    for i in range(n):
        classes.setdefault(profile(i), []).append(i)
    blocks = list(classes.values())
    out = []
    for choice in itertools.product(*(itertools.permutations(b) for b in blocks)):
        perm = [0] * n
        for block, image in zip(blocks, choice):
            for a, b in zip(block, image):
                perm[a] = b
        if all(_permute_poly(P, perm) == P for P in model.polynomials):
            out.append(tuple(perm))
    return out


def _permute_poly(P: Poly, perm: Sequence[int]) -> Poly:
    terms = {}
    for m, c in P.terms.items():
        mm = [0] * len(m)
        for i, e in enumerate(m):
            mm[perm[i]] = e
        terms[tuple(mm)] = c
    return Poly(P.nvars, terms)


def permute_element(g: GroupElement, perm: Sequence[int]) -> GroupElement:
    x = [Fraction(0)] * len(g.x_phases)
    for i, a in enumerate(g.x_phases):
        x[perm[i]] = a
    return GroupElement(tuple(x), g.p_phases)


def orbit_type(g: GroupElement, model: ModelData, perms: Sequence[Sequence[int]] | None = None) -> GroupElement:
    """Canonical (smallest) image of ``g`` under the polynomial automorphisms."""
    if perms is None:
        perms = polynomial_automorphisms(model)
    return min(permute_element(g, p) for p in perms)


def group_by_type(elements: Iterable[GroupElement], model: ModelData) -> dict[GroupElement, list[GroupElement]]:
    perms = polynomial_automorphisms(model)
    out: dict[GroupElement, list[GroupElement]] = {}
    for g in elements:
        out.setdefault(orbit_type(g, model, perms), []).append(g)
    return out
