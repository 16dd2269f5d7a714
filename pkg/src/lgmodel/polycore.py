"""Polynomials with exact rational coefficients, a small parser, and model data.

A monomial is a flat tuple of exponents over a fixed variable list.  For a
model with ``n`` x-variables and ``r`` auxiliary variables the list is
``x_1..x_n, p_1..p_r``; :func:`split` separates the two blocks.
"""
from __future__ import annotations

import re
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Sequence

Monomial = tuple[int, ...]


class ParseError(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset


class UnknownVariable(ParseError):
    pass


class NegativeExponent(ParseError):
    pass


class NotQuasiHomogeneous(ValueError):
    def __init__(self, message: str, terms: list):
        super().__init__(message)
        self.terms = terms


class InvalidModel(ValueError):
    pass


def split(m: Monomial, n: int) -> tuple[Monomial, Monomial]:
    return m[:n], m[n:]


def mono_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def grevlex_key(m: Monomial) -> tuple:
    """Total order used throughout: total degree, then later variables heavier."""
    return (sum(m), m[::-1])


class Poly:
    """Sparse polynomial ``{monomial: Fraction}`` in a fixed number of variables."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[Monomial, object] | Iterable = ()):
        self.nvars = nvars
        acc: dict[Monomial, Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for mono, coeff in items:
            mono = tuple(mono)
            if len(mono) != nvars:
                raise ValueError(f"monomial {mono} has wrong length for {nvars} variables")
            if any(e < 0 for e in mono):
                raise ValueError(f"negative exponent in {mono}")
            acc[mono] = acc.get(mono, Fraction(0)) + Fraction(coeff)
        self.terms = {m: c for m, c in sorted(acc.items(), key=lambda t: grevlex_key(t[0]), reverse=True) if c}

    @classmethod
    def constant(cls, nvars: int, c) -> "Poly":
        return cls(nvars, {(0,) * nvars: c})

    def __eq__(self, other):
        return isinstance(other, Poly) and self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, tuple(self.terms.items())))

    def __repr__(self):
        return f"Poly({self.nvars}, {self.terms!r})"

    def __len__(self):
        return len(self.terms)

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other: "Poly") -> "Poly":
        acc = dict(self.terms)
        for m, c in other.terms.items():
            acc[m] = acc.get(m, 0) + c
        return Poly(self.nvars, acc)

    def __neg__(self) -> "Poly":
        return Poly(self.nvars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            return Poly(self.nvars, {m: c * other for m, c in self.terms.items()})
        acc: dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                acc[m] = acc.get(m, 0) + c1 * c2
        return Poly(self.nvars, acc)

    __rmul__ = __mul__

    def times_monomial(self, m: Monomial) -> "Poly":
        return Poly(self.nvars, {mono_mul(k, m): c for k, c in self.terms.items()})

    def evaluate(self, point: Sequence) -> Fraction:
        total = Fraction(0)
        for m, c in self.terms.items():
            v = c
            for x, e in zip(point, m):
                if e:
                    v *= Fraction(x) ** e
            total += v
        return total

    def substitute_zero(self, keep: Iterable[int]) -> "Poly":
        """Set every variable outside ``keep`` to zero."""
        keep = set(keep)
        return Poly(self.nvars, {m: c for m, c in self.terms.items()
                                 if all(e == 0 or i in keep for i, e in enumerate(m))})

    def variables(self) -> set[int]:
        return {i for m in self.terms for i, e in enumerate(m) if e}


def partial(poly: Poly, var: int) -> Poly:
    """Formal partial derivative with respect to variable index ``var``."""
    out = {}
    for m, c in poly.terms.items():
        e = m[var]
        if e:
            out[m[:var] + (e - 1,) + m[var + 1:]] = c * e
    return Poly(poly.nvars, out)


# ---------------------------------------------------------------------------
# Parsing and printing
# ---------------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<int>\d+)|(?P<name>[A-Za-z][A-Za-z0-9]*)|(?P<op>[-+*/^]))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    out = []
    pos = 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos >= len(text):
            break
        mt = _TOKEN.match(text, pos)
        if not mt:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        kind = mt.lastgroup
        out.append((kind, mt.group(kind), mt.start(kind)))
        pos = mt.end()
    out.append(("end", "", len(text)))
    return out


def parse_polynomial(text: str, names: Mapping[str, int] | Sequence[str], nvars: int | None = None) -> Poly:
    """Parse ``text`` into a :class:`Poly`.

    Grammar (whitespace ignored)::

        expr   := ['-'] term (('+'|'-') term)*
        term   := coeff ['*'] factor ('*'? factor)* | coeff | factor ('*'? factor)*
        factor := name ('^' uint)?
        coeff  := int | int '/' uint
    """
    if not isinstance(names, Mapping):
        names = {s: i for i, s in enumerate(names)}
    if nvars is None:
        nvars = max(names.values(), default=-1) + 1
    toks = _tokenize(text)
    pos = 0

    def peek():
        return toks[pos]

    def take():
        nonlocal pos
        tok = toks[pos]
        pos += 1
        return tok

    def expect_uint(what):
        kind, val, off = take()
        if kind == "op" and val == "-" and what == "exponent":
            raise NegativeExponent("negative exponent", off)
        if kind != "int":
            raise ParseError(f"expected {what}", off)
        return int(val)

    def factor(exps):
        kind, val, off = take()
        if val not in names:
            raise UnknownVariable(f"unknown variable {val!r}", off)
        e = 1
        if peek()[0] == "op" and peek()[1] == "^":
            take()
            e = expect_uint("exponent")
        exps[names[val]] += e

    def term(sign):
        coeff = Fraction(sign)
        exps = [0] * nvars
        have_coeff = False
        if peek()[0] == "int":
            num = int(take()[1])
            den = 1
            if peek()[0] == "op" and peek()[1] == "/":
                take()
                den = expect_uint("denominator")
                if den == 0:
                    raise ParseError("zero denominator", toks[pos - 1][2])
            coeff *= Fraction(num, den)
            have_coeff = True
            if peek()[0] == "op" and peek()[1] == "*":
                take()
                if peek()[0] != "name":
                    raise ParseError("expected variable after '*'", peek()[2])
        if peek()[0] != "name":
            if have_coeff:
                return tuple(exps), coeff
            raise ParseError("expected term", peek()[2])
        factor(exps)
        while True:
            kind, val, off = peek()
            if kind == "op" and val == "*":
                take()
                if peek()[0] != "name":
                    raise ParseError("expected variable after '*'", peek()[2])
                factor(exps)
            elif kind == "name":
                factor(exps)
            else:
                break
        return tuple(exps), coeff

    acc: list[tuple[Monomial, Fraction]] = []
    sign = 1
    if peek()[0] == "op" and peek()[1] == "-":
        take()
        sign = -1
    acc.append(term(sign))
    while True:
        kind, val, off = peek()
        if kind == "end":
            break
        if kind == "op" and val in "+-":
            take()
            acc.append(term(1 if val == "+" else -1))
        else:
            raise ParseError(f"unexpected token {val!r}", off)
    return Poly(nvars, acc)


def format_monomial(m: Monomial, names: Sequence[str], sep: str = "*") -> str:
    parts = []
    for name, e in zip(names, m):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return sep.join(parts) if parts else "1"


def format_poly(poly: Poly, names: Sequence[str]) -> str:
    """Canonical text form; ``parse_polynomial`` reads it back unchanged."""
    if not poly.terms:
        return "0"
    out = []
    for i, (m, c) in enumerate(poly.terms.items()):
        neg = c < 0
        a = abs(c)
        body = format_monomial(m, names)
        if body == "1":
            text = str(a)
        elif a == 1:
            text = body
        else:
            text = f"{a}*{body}"
        if i == 0:
            out.append(("-" if neg else "") + text)
        else:
            out.append(("- " if neg else "+ ") + text)
    return " ".join(out)


# ---------------------------------------------------------------------------
# Quasi-homogeneity and models
# ---------------------------------------------------------------------------

def weighted_degree(m: Sequence[int], weights: Sequence[int]) -> int:
    return sum(e * w for e, w in zip(m, weights))


def quasi_degree(poly: Poly, weights: Sequence[int]) -> int:
    if not poly.terms:
        raise ValueError("zero polynomial has no degree")
    degs = {m: weighted_degree(m, weights) for m in poly.terms}
    d = degs[next(iter(poly.terms))]
    bad = [m for m, e in degs.items() if e != d]
    if bad:
        raise NotQuasiHomogeneous(f"terms {bad} do not have weighted degree {d}", bad)
    return d


GROUP_SELECTORS = ("J", "SL", "MAX", "GEN")


@dataclass(frozen=True)
class ModelData:
    """A set of quasi-homogeneous polynomials together with a group selector.

    ``polynomials`` live in the ``n`` x-variables only.  ``generators`` holds
    explicit phase rows (length ``n`` or ``n + r``) when ``group == "GEN"``.
    Smoothness of the complete intersection is *not* checked.
    """

    name: str
    variable_names: tuple[str, ...]
    weights: tuple[int, ...]
    polynomials: tuple[Poly, ...]
    degrees: tuple[int, ...] = ()
    group: str = "J"
    generators: tuple[tuple[Fraction, ...], ...] = ()
    p_names: tuple[str, ...] = field(default=())

    def __post_init__(self):
        n = len(self.variable_names)
        if len(set(self.variable_names)) != n:
            raise InvalidModel("duplicate variable names")
        if len(self.weights) != n:
            raise InvalidModel(f"{len(self.weights)} weights given for {n} variables")
        if any(w <= 0 for w in self.weights):
            raise InvalidModel("weights must be positive")
        if not self.polynomials:
            raise InvalidModel("a model needs at least one polynomial")
        for P in self.polynomials:
            if P.nvars != n:
                raise InvalidModel("polynomial lives in the wrong number of variables")
            if not P:
                raise InvalidModel("zero polynomial")
        if self.group not in GROUP_SELECTORS:
            raise InvalidModel(f"unknown group selector {self.group!r}")
        if self.group == "GEN" and not self.generators:
            raise InvalidModel("group GEN needs at least one generator row")
        degs = []
        for P in self.polynomials:
            try:
                degs.append(quasi_degree(P, self.weights))
            except NotQuasiHomogeneous as exc:
                raise InvalidModel(str(exc)) from exc
        if self.degrees and tuple(self.degrees) != tuple(degs):
            raise InvalidModel(f"declared degrees {self.degrees} differ from inferred {tuple(degs)}")
        object.__setattr__(self, "degrees", tuple(degs))
        r = len(self.polynomials)
        if not self.p_names:
            pn = tuple(f"p{i + 1}" for i in range(r)) if r > 1 else ("p",)
            object.__setattr__(self, "p_names", pn)
        if set(self.p_names) & set(self.variable_names):
            raise InvalidModel("auxiliary variable names clash with x-variables")
        if sum(self.weights) != sum(self.degrees):
            warnings.warn(f"model {self.name!r} is not Calabi-Yau: sum of weights "
                          f"{sum(self.weights)} != sum of degrees {sum(self.degrees)}", stacklevel=2)

    @property
    def n(self) -> int:
        return len(self.variable_names)

    @property
    def r(self) -> int:
        return len(self.polynomials)

    @property
    def all_names(self) -> tuple[str, ...]:
        return self.variable_names + self.p_names

    @property
    def torus_weights(self) -> tuple[int, ...]:
        """Weights of the torus action on ``(x, p)``: ``w`` then ``-d``."""
        return self.weights + tuple(-d for d in self.degrees)

    @property
    def is_calabi_yau(self) -> bool:
        return sum(self.weights) == sum(self.degrees)

    @property
    def D(self) -> int:
        return self.n - self.r - 1

    def with_group(self, group: str, generators=()) -> "ModelData":
        return ModelData(self.name, self.variable_names, self.weights, self.polynomials,
                         self.degrees, group, tuple(generators), self.p_names)


def make_model(name: str, variables: Sequence[str], weights: Sequence[int], polys: Sequence[str],
               group: str = "J", generators=(), degrees: Sequence[int] = ()) -> ModelData:
    names = {v: i for i, v in enumerate(variables)}
    parsed = tuple(parse_polynomial(t, names, len(variables)) for t in polys)
    return ModelData(name, tuple(variables), tuple(weights), parsed, tuple(degrees), group, tuple(generators))


def build_superpotential(model: ModelData) -> Poly:
    """``p_1 W_1 + ... + p_r W_r`` as a polynomial in the ``n + r`` variables."""
    if model.r == 0:
        raise InvalidModel("superpotential needs at least one polynomial")
    n, r = model.n, model.r
    terms = {}
    for i, P in enumerate(model.polynomials):
        for m, c in P.terms.items():
            mm = m + tuple(int(j == i) for j in range(r))
            terms[mm] = terms.get(mm, 0) + c
    return Poly(n + r, terms)


def lift(poly: Poly, extra: int) -> Poly:
    """View a polynomial in ``k`` variables as one in ``k + extra``."""
    return Poly(poly.nvars + extra, {m + (0,) * extra: c for m, c in poly.terms.items()})


def check_nondegenerate(model: ModelData, warn: Callable[[str], None] | None = None) -> None:
    """Smoothness outside the origin needs elimination theory; only warn."""
    msg = f"non-degeneracy of {model.name!r} is assumed, not verified"
    (warn or (lambda s: warnings.warn(s, stacklevel=2)))(msg)
