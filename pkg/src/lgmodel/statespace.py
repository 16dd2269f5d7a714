"""Bigraded state spaces: per-sector contributions and the Hodge diamond."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Literal

from .chiral import SectorSlice, sector_slice
from .polycore import ModelData, build_superpotential, format_monomial
from .symmetry import FixedData, GroupElement, SymmetryGroup, build_group, relevant_elements

Policy = Literal["dual", "direct"]


class InvariantViolation(RuntimeError):
    """An internal consistency check failed (wrong age, group, or placement)."""


@dataclass(frozen=True)
class Entry:
    p: int
    q: int
    label: str
    omega: object  # a monomial tuple (Jacobi) or ("t", k) (projective)
    k: int
    dual: bool = False


@dataclass
class SectorContribution:
    fd: FixedData
    kind: Literal["jacobi", "projective"]
    entries: list[Entry]
    slices: dict[int, SectorSlice] = field(default_factory=dict, repr=False)
    slice_dims: dict[int, int] = field(default_factory=dict)

    @property
    def element(self) -> GroupElement:
        return self.fd.element


def _integral(x: Fraction, what: str) -> int:
    if x.denominator != 1:
        raise InvariantViolation(f"non-integral {what}: {x}")
    return int(x)


def projective_entries(fd: FixedData, model: ModelData) -> list[Entry]:
    """Generators ``t^k dt``, k < r_gamma - n_gamma, on the diagonal."""
    base = fd.age - model.r + fd.n_gamma
    out = []
    for k in range(fd.r_gamma - fd.n_gamma):
        pq = _integral(base + k, "projective bidegree")
        omega = "dt" if k == 0 else ("t*dt" if k == 1 else f"t^{k}*dt")
        out.append(Entry(pq, pq, f"{omega}|{fd.element.label()}>", ("t", k), k))
    return out


def jacobi_label(m, fd: FixedData, model: ModelData) -> str:
    return f"{format_monomial(m, model.all_names)}|{fd.element.label()}>"


def sector_contribution(fd: FixedData, G: SymmetryGroup, policy: Policy = "dual") -> SectorContribution:
    """Contribution of one group element to the state space.

    With ``policy="dual"`` only p-degrees ``k <= D_gamma // 2`` are computed;
    the upper half is filled in from the chiral-ring pairing
    ``dim Q_k = dim Q_{D_gamma - k}``, which holds for non-degenerate models.
    """
    model = G.model
    if fd.is_projective:
        return SectorContribution(fd, "projective", projective_entries(fd, model))
    Wbar = _superpotential(model)
    Dg = fd.n_gamma - fd.r_gamma - 1
    shift = fd.age - model.r + fd.r_gamma
    direct = range(Dg + 1) if policy == "direct" else range(Dg // 2 + 1)
    slices = {k: sector_slice(Wbar, fd, k, G) for k in direct}
    entries, dims = [], {}
    for k in range(Dg + 1):
        p = _integral(Dg - k + shift, "Jacobi bidegree")
        q = _integral(k + shift, "Jacobi bidegree")
        if k in slices:
            sl = slices[k]
            dims[k] = sl.dimension
            entries += [Entry(p, q, jacobi_label(m, fd, model), m, k) for m in sl.quotient_basis]
        else:
            partner = slices[Dg - k]
            dims[k] = partner.dimension
            entries += [Entry(p, q, "dual(" + jacobi_label(m, fd, model) + ")", m, k, dual=True)
                        for m in partner.quotient_basis]
    return SectorContribution(fd, "jacobi", entries, slices, dims)


@lru_cache(maxsize=None)
def _superpotential(model: ModelData):
    return build_superpotential(model)


@dataclass
class StateSpace:
    model: ModelData
    group: SymmetryGroup
    sectors: list[SectorContribution]
    policy: Policy = "dual"

    @property
    def D(self) -> int:
        return self.model.D

    @property
    def contributing(self) -> list[SectorContribution]:
        return [s for s in self.sectors if s.entries]

    @property
    def table(self) -> dict[tuple[int, int], list[Entry]]:
        out: dict[tuple[int, int], list[Entry]] = {}
        for s in self.sectors:
            for e in s.entries:
                out.setdefault((e.p, e.q), []).append(e)
        return out

    def dimension(self, p: int, q: int) -> int:
        return len(self.table.get((p, q), []))

    def hodge(self) -> list[list[int]]:
        """``h[p][q]`` for ``0 <= p, q <= D``."""
        D = self.D
        h = [[0] * (D + 1) for _ in range(D + 1)]
        for (p, q), es in self.table.items():
            if not (0 <= p <= D and 0 <= q <= D):
                raise InvariantViolation(f"generator placed at ({p},{q}) outside 0..{D}")
            h[p][q] = len(es)
        return h

    def total_dimension(self) -> int:
        return sum(len(s.entries) for s in self.sectors)

    def sector(self, g: GroupElement) -> SectorContribution:
        for s in self.sectors:
            if s.element == g:
                return s
        raise KeyError(g.label())

    def identity_sector(self) -> SectorContribution:
        return self.sector(GroupElement.identity(self.model.n, self.model.r))

    def to_json(self) -> dict:
        return {
            "model": self.model.name,
            "group": self.group.name,
            "policy": self.policy,
            "hodge": self.hodge(),
            "relevant_elements": len(self.sectors),
            "sectors": [
                {
                    "gamma": [str(a) for a in s.element.phases],
                    "n_gamma": s.fd.n_gamma,
                    "r_gamma": s.fd.r_gamma,
                    "age": str(s.fd.age),
                    "kind": s.kind,
                    "entries": [{"p": e.p, "q": e.q, "label": e.label} for e in s.entries],
                }
                for s in self.contributing
            ],
        }


def assemble(model: ModelData, G: SymmetryGroup | None = None, policy: Policy = "dual") -> StateSpace:
    """Direct sum of all sector contributions, in a deterministic order."""
    if G is None:
        return _assemble_cached(model, policy)
    sectors = [sector_contribution(fd, G, policy) for fd in relevant_elements(G)]
    S = StateSpace(model, G, sectors, policy)
    S.hodge()  # placement check
    return S


@lru_cache(maxsize=None)
def _assemble_cached(model: ModelData, policy: Policy) -> StateSpace:
    return assemble(model, build_group(model), policy)


def contributing_sectors(model: ModelData, G: SymmetryGroup | None = None) -> list[SectorContribution]:
    return assemble(model, G).contributing


def degeneracy_report(model: ModelData, G: SymmetryGroup | None = None) -> list[dict]:
    """Jacobi sectors whose direct slice dimensions break the pairing symmetry.

    A non-empty report means the model violates the non-degeneracy
    assumption; the default state space then reflects the smooth deformation.
    """
    G = G or build_group(model)
    out = []
    for fd in relevant_elements(G):
        if fd.is_projective:
            continue
        s = sector_contribution(fd, G, "direct")
        Dg = fd.n_gamma - fd.r_gamma - 1
        dims = [s.slice_dims[k] for k in range(Dg + 1)]
        if dims != dims[::-1]:
            out.append({"gamma": fd.element.label(), "direct_dims": dims,
                        "dual_dims": [dims[min(k, Dg - k)] for k in range(Dg + 1)]})
    return out


def hodge_text(h: list[list[int]]) -> str:
    """Diamond layout: ``h^{D,D}`` on top, ``h^{0,0}`` at the bottom."""
    D = len(h) - 1
    if D < 0:
        return ""
    rows = []
    for s in range(2 * D, -1, -1):
        vals = [h[p][s - p] for p in range(min(s, D), max(0, s - D) - 1, -1)]
        rows.append(vals)
    cell = max(len(str(v)) for row in h for v in row) + 3
    width = cell * (D + 1)
    lines = []
    for vals in rows:
        text = "".join(str(v).center(cell) for v in vals)
        lines.append(text.center(width).rstrip())
    return "\n".join(lines)


def hodge_latex(h: list[list[int]]) -> str:
    D = len(h) - 1
    cols = 2 * D + 1
    lines = [r"\begin{tabular}{" + "c" * cols + "}"]
    for s in range(2 * D, -1, -1):
        cells = [""] * cols
        ps = list(range(min(s, D), max(0, s - D) - 1, -1))
        for p in ps:
            q = s - p
            cells[D - p + q] = f"${h[p][q]}$"
        lines.append(" & ".join(cells) + r" \\")
    lines.append(r"\end{tabular}")
    return "\n".join(lines)


def render(S: StateSpace, fmt: str = "text") -> str:
    if fmt == "json":
        return json.dumps(S.to_json(), indent=2)
    if fmt == "latex":
        out = [hodge_latex(S.hodge()), "", r"\begin{tabular}{ cccc }", r"\toprule",
               r"$r_\gamma$ & $n_\gamma$ & element & $a_\gamma$ \\", r"\midrule"]
        for s in S.contributing:
            g = s.element.label()
            g = "$" + g.replace("1/", r"\frac1{").replace("(", "}(", 1) + "$" if g != "id" else "id"
            out.append(f"{s.fd.r_gamma} & {s.fd.n_gamma} & {g} & {s.fd.age} \\\\")
        out += [r"\bottomrule", r"\end{tabular}"]
        return "\n".join(out)
    if fmt != "text":
        raise ValueError(f"unknown format {fmt!r}")
    lines = [f"model {S.model.name}, group {S.group.name}: "
             f"{len(S.sectors)} elements fix a coordinate, {len(S.contributing)} contribute", "",
             hodge_text(S.hodge()), ""]
    for s in S.contributing:
        fd = s.fd
        dims = ", ".join(f"({p},{q}):{n}" for (p, q), n in sorted(_count(s).items()))
        lines.append(f"{fd.element.label():>28}  n={fd.n_gamma} r={fd.r_gamma} age={fd.age} "
                     f"{s.kind:<10} {dims}")
    return "\n".join(lines)


def _count(s: SectorContribution) -> dict[tuple[int, int], int]:
    out: dict[tuple[int, int], int] = {}
    for e in s.entries:
        out[(e.p, e.q)] = out.get((e.p, e.q), 0) + 1
    return out
