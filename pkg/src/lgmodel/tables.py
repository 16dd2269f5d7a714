"""Reference data for the two-cubics model, transcribed as printed.

Rows are kept exactly as published, misprints included; ``note`` marks the
rows where the printed value is known to be wrong and says why.  Phases are
integers over 9, written as ``(b1, b2, b3, c1, c2, c3)`` on the x- and
X-coordinates and ``(a1, a2)`` on ``p1, p2``.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations


# -- basis of the (2,1) part of the untwisted sector -------------------------

@dataclass(frozen=True)
class BasisRow:
    pattern: str
    representatives: tuple[str, ...]
    synonyms: tuple[tuple[str, ...], ...]  # per representative, other ways to write it

    @property
    def count(self) -> int:
        return len(self.representatives)


def _row(pattern, pairs):
    reps, syns = zip(*pairs)
    return BasisRow(pattern, tuple(reps), tuple(syns))


def _third(i, j):
    return 6 - i - j


def _basis_rows() -> list[BasisRow]:
    I = (1, 2, 3)
    pairs = [(i, j) for i in I for j in I if i < j]
    out = [
        _row("p1X1X2X3", [("p1*X1*X2*X3", ("p2*x1*x2*x3",) + tuple(f"p2*X{i}^3" for i in I)
                           + tuple(f"p1*x{i}^3" for i in I))]),
        _row("p1x1x2x3", [("p1*x1*x2*x3", ())]),
        _row("p2X1X2X3", [("p2*X1*X2*X3", ())]),
        _row("p1X1^3", [("p1*X1^3", ())]),
        _row("p1X2^3", [("p1*X2^3", ())]),
        _row("p2x1^3", [("p2*x1^3", ())]),
        _row("p2x2^3", [("p2*x2^3", ())]),
        _row("p1x_ix_jX_k", [(f"p1*x{i}*x{j}*X{k}", ()) for i, j in pairs for k in I]),
        _row("p2x_iX_jX_k", [(f"p2*x{k}*X{i}*X{j}", ()) for i, j in pairs for k in I]),
        _row("p1X_iX_jx_k", [(f"p1*x{k}*X{i}*X{j}", (f"p2*x{k}*X{_third(i, j)}^2",))
                             for i, j in pairs for k in I]),
        _row("p1x_i^2X_j", [(f"p1*x{i}^2*X{j}", (f"p2*x{a}*x{b}*X{j}",))
                            for i in I for j in I for a, b in [sorted(set(I) - {i})]]),
        _row("p1X_i^2x_j", [(f"p1*x{j}*X{i}^2", ()) for i in I for j in I]),
        _row("p2x_i^2X_j", [(f"p2*x{i}^2*X{j}", ()) for i in I for j in I]),
        _row("p1x_i^2x_j", [(f"p1*x{i}^2*x{j}", (f"p2*x{j}^2*x{_third(i, j)}",))
                            for i, j in permutations(I, 2)]),
        _row("p1X_i^2X_j", [(f"p1*X{i}^2*X{j}", (f"p2*X{i}*X{_third(i, j)}^2",))
                            for i, j in permutations(I, 2)]),
    ]
    return out


BASIS_21 = _basis_rows()


# -- elements of the transposed group -----------------------------------------

@dataclass(frozen=True)
class ElementRow:
    r_gamma: int
    n_gamma: int
    ninths: tuple[int, ...]  # eight entries: six x/X phases, then p1, p2
    age: int
    count: int = 1


# Elements with r_gamma < n_gamma, as printed: the last row repeats the one
# before it, where (6,6,6,0,0,0) is meant.
JACOBI_ELEMENTS = [
    ElementRow(2, 6, (0, 0, 0, 0, 0, 0, 0, 0), 0),
    ElementRow(2, 3, (0, 0, 0, 3, 3, 3, 0, 0), 1),
    ElementRow(2, 3, (3, 3, 3, 0, 0, 0, 0, 0), 1),
    ElementRow(2, 3, (0, 0, 0, 6, 6, 6, 0, 0), 2),
    ElementRow(2, 3, (0, 0, 0, 6, 6, 6, 0, 0), 2),
]

# Elements with r_gamma >= n_gamma, one representative per type.
PROJECTIVE_ELEMENTS = [
    ElementRow(2, 0, (3, 3, 3, 3, 3, 3, 0, 0), 2, 1),
    ElementRow(2, 0, (6, 6, 6, 3, 3, 3, 0, 0), 3, 1),
    ElementRow(2, 0, (3, 3, 3, 6, 6, 6, 0, 0), 3, 1),
    ElementRow(2, 0, (6, 6, 6, 6, 6, 6, 0, 0), 4, 1),
    ElementRow(2, 1, (3, 3, 3, 3, 0, 6, 0, 0), 2, 6),
    ElementRow(2, 1, (3, 0, 6, 3, 3, 3, 0, 0), 2, 6),
    ElementRow(2, 1, (6, 6, 6, 3, 0, 6, 0, 0), 3, 6),
    ElementRow(2, 1, (3, 0, 6, 6, 6, 6, 0, 0), 3, 6),
    ElementRow(1, 0, (2, 2, 5, 6, 3, 6, 3, 0), 3, 9),
    ElementRow(1, 0, (6, 3, 6, 2, 2, 5, 0, 3), 3, 9),
    ElementRow(1, 0, (3, 6, 3, 1, 7, 1, 0, 6), 3, 9),
    ElementRow(1, 0, (1, 7, 1, 3, 6, 3, 6, 0), 3, 9),
    ElementRow(1, 0, (3, 6, 3, 4, 4, 1, 0, 6), 3, 9),
    ElementRow(1, 0, (4, 4, 1, 3, 6, 3, 6, 0), 3, 9),
    ElementRow(1, 0, (6, 6, 3, 8, 2, 8, 0, 3), 4, 9),
    ElementRow(1, 0, (8, 2, 8, 6, 6, 3, 3, 0), 4, 9),
    ElementRow(1, 0, (6, 6, 3, 5, 5, 8, 0, 3), 4, 9),
    ElementRow(1, 0, (5, 5, 8, 6, 6, 3, 3, 0), 4, 9),
    ElementRow(1, 0, (7, 4, 7, 3, 3, 6, 6, 0), 4, 9),
    ElementRow(1, 0, (3, 3, 6, 7, 4, 7, 0, 6), 4, 9),
]


# -- the mirror map on the (1,1) part -------------------------------------------

@dataclass(frozen=True)
class Row:
    """``omega|element> -> target|id>``; ``omega`` is ``dt``, ``t*dt`` or a monomial."""

    omega: str
    xphases: tuple[int, ...]
    pphases: tuple[int, ...]
    target: str
    note: str = ""

    @property
    def ninths(self) -> tuple[int, ...]:
        return self.xphases + self.pphases


CASE_MISPRINT = ("x-variables printed as X-variables; as printed, this block would "
                 "repeat the classes of the (3,3,3,*,*,*) block")
DUPLICATE_441 = "repeats the output of the (3,6,3,4,4,1;0,6) row; the rule gives p1*x2*X1*X3"
DUPLICATE_336 = "repeats the output of the (4,4,1,3,3,6;6,0) row; the rule gives p2*x2*x3*X3"

MIRROR_ROWS = [
    Row('t*dt', (3, 3, 3, 3, 3, 3), (0, 0), 'p1*x1^3'),
    Row('dt', (3, 3, 3, 6, 6, 6), (0, 0), 'p2*X1*X2*X3'),
    Row('dt', (6, 6, 6, 3, 3, 3), (0, 0), 'p1*x1*x2*x3'),
    Row('x1^3', (0, 0, 0, 3, 3, 3), (0, 0), 'p2*x1^3'),
    Row('x2^3', (0, 0, 0, 3, 3, 3), (0, 0), 'p2*x2^3'),
    Row('X1^3', (3, 3, 3, 0, 0, 0), (0, 0), 'p1*X1^3'),
    Row('X2^3', (3, 3, 3, 0, 0, 0), (0, 0), 'p1*X2^3'),
    Row('dt', (3, 3, 3, 3, 0, 6), (0, 0), 'p1*X1*X3^2'),
    Row('dt', (3, 3, 3, 0, 3, 6), (0, 0), 'p1*X2*X3^2'),
    Row('dt', (3, 3, 3, 0, 6, 3), (0, 0), 'p1*X2^2*X3'),
    Row('dt', (3, 3, 3, 6, 0, 3), (0, 0), 'p1*X1^2*X3'),
    Row('dt', (3, 3, 3, 6, 3, 0), (0, 0), 'p1*X1^2*X2'),
    Row('dt', (3, 3, 3, 3, 6, 0), (0, 0), 'p1*X1*X2^2'),
    Row('dt', (0, 3, 6, 3, 3, 3), (0, 0), 'p2*X2*X3^2',
        CASE_MISPRINT),
    Row('dt', (3, 0, 6, 3, 3, 3), (0, 0), 'p2*X1*X3^2',
        CASE_MISPRINT),
    Row('dt', (6, 0, 3, 3, 3, 3), (0, 0), 'p2*X1^2*X3',
        CASE_MISPRINT),
    Row('dt', (0, 6, 3, 3, 3, 3), (0, 0), 'p2*X2^2*X3',
        CASE_MISPRINT),
    Row('dt', (3, 6, 0, 3, 3, 3), (0, 0), 'p2*X1*X2^2',
        CASE_MISPRINT),
    Row('dt', (6, 3, 0, 3, 3, 3), (0, 0), 'p2*X1^2*X2',
        CASE_MISPRINT),
    Row('dt', (2, 2, 5, 6, 3, 6), (3, 0), 'p2*x3*X1*X3'),
    Row('dt', (2, 2, 5, 3, 6, 6), (3, 0), 'p2*x3*X2*X3'),
    Row('dt', (2, 2, 5, 6, 6, 3), (3, 0), 'p2*x3*X1*X2'),
    Row('dt', (2, 5, 2, 6, 3, 6), (3, 0), 'p2*x2*X1*X3'),
    Row('dt', (2, 5, 2, 3, 6, 6), (3, 0), 'p2*x2*X2*X3'),
    Row('dt', (5, 2, 2, 6, 3, 6), (3, 0), 'p2*x1*X1*X3'),
    Row('dt', (5, 2, 2, 3, 6, 6), (3, 0), 'p2*x1*X2*X3'),
    Row('dt', (2, 5, 2, 6, 6, 3), (3, 0), 'p2*x2*X1*X2'),
    Row('dt', (5, 2, 2, 6, 6, 3), (3, 0), 'p2*x1*X1*X2'),
    Row('dt', (6, 3, 6, 2, 2, 5), (0, 3), 'p1*x1*x3*X3'),
    Row('dt', (3, 6, 6, 2, 2, 5), (0, 3), 'p1*x2*x3*X3'),
    Row('dt', (6, 3, 6, 2, 5, 2), (0, 3), 'p1*x1*x3*X2'),
    Row('dt', (6, 3, 6, 5, 2, 2), (0, 3), 'p1*x1*x3*X1'),
    Row('dt', (3, 6, 6, 2, 5, 2), (0, 3), 'p1*x2*x3*X2'),
    Row('dt', (3, 6, 6, 5, 2, 2), (0, 3), 'p1*x2*x3*X1'),
    Row('dt', (6, 6, 3, 2, 2, 5), (0, 3), 'p1*x1*x2*X3'),
    Row('dt', (6, 6, 3, 2, 5, 2), (0, 3), 'p1*x1*x2*X2'),
    Row('dt', (6, 6, 3, 5, 2, 2), (0, 3), 'p1*x1*x2*X1'),
    Row('dt', (3, 6, 3, 1, 7, 1), (0, 6), 'p1*x2*X2^2'),
    Row('dt', (3, 6, 3, 7, 1, 1), (0, 6), 'p1*x2*X1^2'),
    Row('dt', (6, 3, 3, 1, 7, 1), (0, 6), 'p1*x1*X2^2'),
    Row('dt', (6, 3, 3, 7, 1, 1), (0, 6), 'p1*x1*X1^2'),
    Row('dt', (3, 3, 6, 1, 1, 7), (0, 6), 'p1*x3*X3^2'),
    Row('dt', (3, 6, 3, 1, 1, 7), (0, 6), 'p1*x2*X3^2'),
    Row('dt', (6, 3, 3, 1, 1, 7), (0, 6), 'p1*x1*X3^2'),
    Row('dt', (3, 3, 6, 1, 7, 1), (0, 6), 'p1*x3*X2^2'),
    Row('dt', (3, 3, 6, 7, 1, 1), (0, 6), 'p1*x3*X1^2'),
    Row('dt', (3, 6, 3, 4, 4, 1), (0, 6), 'p1*x2*X1*X2'),
    Row('dt', (6, 3, 3, 4, 4, 1), (0, 6), 'p1*x1*X1*X2'),
    Row('dt', (3, 3, 6, 4, 1, 4), (0, 6), 'p1*x3*X1*X3'),
    Row('dt', (3, 3, 6, 1, 4, 4), (0, 6), 'p1*x3*X2*X3'),
    Row('dt', (3, 6, 3, 4, 1, 4), (0, 6), 'p1*x2*X1*X2',
        DUPLICATE_441),
    Row('dt', (3, 6, 3, 1, 4, 4), (0, 6), 'p1*x2*X2*X3'),
    Row('dt', (6, 3, 3, 4, 1, 4), (0, 6), 'p1*x1*X1*X3'),
    Row('dt', (6, 3, 3, 1, 4, 4), (0, 6), 'p1*x1*X2*X3'),
    Row('dt', (3, 3, 6, 4, 4, 1), (0, 6), 'p1*x3*X1*X2'),
    Row('dt', (1, 1, 7, 3, 3, 6), (6, 0), 'p2*x3^2*X3'),
    Row('dt', (1, 7, 1, 3, 6, 3), (6, 0), 'p2*x2^2*X2'),
    Row('dt', (1, 7, 1, 6, 3, 3), (6, 0), 'p2*x2^2*X1'),
    Row('dt', (7, 1, 1, 3, 6, 3), (6, 0), 'p2*x1^2*X2'),
    Row('dt', (7, 1, 1, 6, 3, 3), (6, 0), 'p2*x1^2*X1'),
    Row('dt', (1, 1, 7, 3, 6, 3), (6, 0), 'p2*x3^2*X2'),
    Row('dt', (1, 1, 7, 6, 3, 3), (6, 0), 'p2*x3^2*X1'),
    Row('dt', (1, 7, 1, 3, 3, 6), (6, 0), 'p2*x2^2*X3'),
    Row('dt', (7, 1, 1, 3, 3, 6), (6, 0), 'p2*x1^2*X3'),
    Row('dt', (4, 4, 1, 3, 6, 3), (6, 0), 'p2*x1*x2*X2'),
    Row('dt', (4, 4, 1, 6, 3, 3), (6, 0), 'p2*x1*x2*X1'),
    Row('dt', (4, 1, 4, 3, 3, 6), (6, 0), 'p2*x1*x3*X3'),
    Row('dt', (1, 4, 4, 3, 3, 6), (6, 0), 'p2*x2*x1*X3',
        DUPLICATE_336),
    Row('dt', (4, 4, 1, 3, 3, 6), (6, 0), 'p2*x1*x2*X3'),
    Row('dt', (4, 1, 4, 3, 6, 3), (6, 0), 'p2*x1*x3*X2'),
    Row('dt', (4, 1, 4, 6, 3, 3), (6, 0), 'p2*x1*x3*X1'),
    Row('dt', (1, 4, 4, 3, 6, 3), (6, 0), 'p2*x2*x3*X2'),
    Row('dt', (1, 4, 4, 6, 3, 3), (6, 0), 'p2*x2*x3*X1'),
]
