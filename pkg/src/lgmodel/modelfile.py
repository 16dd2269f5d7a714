"""Plain-text model files and the models shipped with the package.

A model file is a list of ``key value`` lines::

    name    cubics
    vars    x1 x2 x3 X1 X2 X3
    weights 1 1 1 1 1 1
    degrees 3 3               # optional, checked against the polynomials
    poly W1 = x1^3 + x2^3 + x3^3 - 3*X1*X2*X3
    poly W2 = X1^3 + X2^3 + X3^3 - 3*x1*x2*x3
    group   GEN               # J, SL, MAX, or GEN
    gen     0 1/3 2/3 0 1/3 2/3 auto

``gen`` rows (only with ``group GEN``) give ``n`` phases followed by the
word ``auto`` (or nothing) to have the p-phases inferred, or all ``n + r``
phases explicitly.  ``#`` starts a comment.
"""
from __future__ import annotations

from fractions import Fraction
from importlib import resources
from pathlib import Path

from .polycore import InvalidModel, ModelData, ParseError, parse_polynomial

KEYS = ("name", "vars", "weights", "degrees", "poly", "group", "gen")
BUILTIN = {
    "cubics": "cubics.lg",
    "cubics-mirror": "cubics_mirror.lg",
    "quintic": "quintic.lg",
    "quintic-mirror": "quintic_mirror.lg",
}


class ModelFileError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line else message)


def _ints(values: list[str], what: str, line: int) -> tuple[int, ...]:
    try:
        return tuple(int(v) for v in values)
    except ValueError:
        raise ModelFileError(f"{what} must be integers", line) from None


def parse_model(text: str, source: str = "<model>") -> ModelData:
    fields: dict[str, tuple[int, object]] = {}
    polys: list[tuple[int, str, str]] = []
    gens: list[tuple[int, list[str]]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, _, rest = line.partition(" ")
        rest = rest.strip()
        if key not in KEYS:
            raise ModelFileError(f"unknown key {key!r}", lineno)
        if key == "poly":
            label, eq, expr = rest.partition("=")
            if not eq or not label.strip():
                raise ModelFileError("expected 'poly <id> = <expression>'", lineno)
            polys.append((lineno, label.strip(), expr.strip()))
        elif key == "gen":
            gens.append((lineno, rest.split()))
        else:
            if key in fields:
                raise ModelFileError(f"duplicate key {key!r}", lineno)
            fields[key] = (lineno, rest)
    for key in ("vars", "weights"):
        if key not in fields:
            raise ModelFileError(f"missing '{key}' line")
    if not polys:
        raise ModelFileError("no 'poly' lines")

    names = fields["vars"][1].split()
    weights = _ints(fields["weights"][1].split(), "weights", fields["weights"][0])
    degrees = ()
    if "degrees" in fields:
        degrees = _ints(fields["degrees"][1].split(), "degrees", fields["degrees"][0])
    parsed = []
    for lineno, label, expr in polys:
        try:
            parsed.append(parse_polynomial(expr, names))
        except ParseError as exc:
            raise ModelFileError(f"polynomial {label}: {exc}", lineno) from exc
    group = fields.get("group", (0, "J"))[1].upper()
    if gens and group != "GEN":
        raise ModelFileError("'gen' rows need 'group GEN'", gens[0][0])
    rows = []
    for lineno, parts in gens:
        if parts and parts[-1] == "auto":
            parts = parts[:-1]
            if len(parts) != len(names):
                raise ModelFileError(f"'gen ... auto' needs {len(names)} phases", lineno)
        try:
            rows.append(tuple(Fraction(p) for p in parts))
        except (ValueError, ZeroDivisionError):
            raise ModelFileError("generator phases must be rationals", lineno) from None
    name = fields.get("name", (0, Path(source).stem))[1]
    try:
        return ModelData(name, tuple(names), weights, tuple(parsed), degrees, group, tuple(rows))
    except InvalidModel as exc:
        raise ModelFileError(str(exc)) from exc


def load_model(path: str | Path) -> ModelData:
    path = Path(path)
    return parse_model(path.read_text(), str(path))


def builtin_text(name: str) -> str:
    try:
        fname = BUILTIN[name]
    except KeyError:
        raise ModelFileError(f"no built-in model {name!r}; choose from {', '.join(BUILTIN)}") from None
    return resources.files(__package__).joinpath("models", fname).read_text()


def builtin_model(name: str) -> ModelData:
    return parse_model(builtin_text(name), name)


def resolve_model(source: str) -> ModelData:
    """A path to a model file, or the name of a built-in model."""
    if source in BUILTIN and not Path(source).exists():
        return builtin_model(source)
    return load_model(source)
