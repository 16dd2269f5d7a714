"""Exact integer and rational linear algebra.

Rationals are :class:`fractions.Fraction`; matrices are plain lists of rows.
Everything here is exact: there is no floating point anywhere in the package.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Iterable, Sequence

IntMatrix = list[list[int]]
RatMatrix = list[list[Fraction]]


class NoSolution(ValueError):
    """Raised when a congruence system is inconsistent."""


def phase(x) -> Fraction:
    """Reduce a rational into [0, 1)."""
    x = Fraction(x)
    return x - math.floor(x)


def lcm(values: Iterable[int]) -> int:
    return reduce(lambda a, b: a * b // math.gcd(a, b), values, 1)


def common_denominator(values: Iterable[Fraction]) -> int:
    return lcm(Fraction(v).denominator for v in values)


def identity(n: int) -> IntMatrix:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def matmul(A: Sequence[Sequence], B: Sequence[Sequence]) -> list[list]:
    if not A or not B:
        return [[] for _ in A]
    cols = len(B[0])
    return [[sum(a * B[k][j] for k, a in enumerate(row)) for j in range(cols)] for row in A]


def determinant(A: Sequence[Sequence[int]]) -> int:
    """Integer determinant via Bareiss elimination."""
    n = len(A)
    if n == 0:
        return 1
    a = [list(map(int, row)) for row in A]
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


# ---------------------------------------------------------------------------
# Smith normal form
# ---------------------------------------------------------------------------

def smith_normal_form(A: Sequence[Sequence[int]]) -> tuple[IntMatrix, IntMatrix, IntMatrix]:
    """Return ``(U, S, V)`` with ``U @ A @ V == S``.

    ``U`` and ``V`` are unimodular and ``S`` is diagonal with non-negative
    entries, each dividing the next.
    """
    m = len(A)
    n = len(A[0]) if m else 0
    S = [list(map(int, row)) for row in A]
    U = identity(m)
    V = identity(n)

    def swap_rows(i, j):
        S[i], S[j] = S[j], S[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in S:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):  # row_dst -= q * row_src
        S[dst] = [a - q * b for a, b in zip(S[dst], S[src])]
        U[dst] = [a - q * b for a, b in zip(U[dst], U[src])]

    def add_col(dst, src, q):  # col_dst -= q * col_src
        for row in S:
            row[dst] -= q * row[src]
        for row in V:
            row[dst] -= q * row[src]

    for t in range(min(m, n)):
        entries = [(abs(S[i][j]), i, j) for i in range(t, m) for j in range(t, n) if S[i][j]]
        if not entries:
            break
        _, i, j = min(entries)
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            dirty = False
            for i in range(t + 1, m):
                if S[i][t]:
                    add_row(i, t, S[i][t] // S[t][t])
                    if S[i][t]:
                        swap_rows(t, i)
                        dirty = True
            for j in range(t + 1, n):
                if S[t][j]:
                    add_col(j, t, S[t][j] // S[t][t])
                    if S[t][j]:
                        swap_cols(t, j)
                        dirty = True
            if dirty:
                continue
            bad = next(((i, j) for i in range(t + 1, m) for j in range(t + 1, n)
                        if S[i][j] % S[t][t]), None)
            if bad is None:
                break
            add_row(t, bad[0], -1)
        if S[t][t] < 0:
            S[t] = [-a for a in S[t]]
            U[t] = [-a for a in U[t]]
    return U, S, V


@dataclass(frozen=True)
class CongruenceSolution:
    """Solutions of ``A x = b (mod m)``: ``particular + span(generators)``.

    ``orders[i]`` is the additive order of ``generators[i]``; the solution set
    has exactly ``prod(orders)`` elements and :meth:`enumerate` lists them
    without repetition.
    """

    modulus: int
    particular: tuple[int, ...]
    generators: tuple[tuple[int, ...], ...]
    orders: tuple[int, ...]
    _transform: tuple[tuple[int, ...], ...]
    _base: tuple[int, ...]
    _steps: tuple[int, ...]

    @property
    def size(self) -> int:
        return math.prod(self.orders)

    def enumerate(self) -> list[tuple[int, ...]]:
        m = self.modulus
        out = []
        ranges = [range(k) for k in self.orders]
        from itertools import product

        for coeffs in product(*ranges):
            y = [b + c * s for b, c, s in zip(self._base, coeffs, self._steps)]
            out.append(tuple(sum(v * yy for v, yy in zip(row, y)) % m for row in self._transform))
        return out


def solve_congruences(A: Sequence[Sequence[int]], b: Sequence[int], m: int) -> CongruenceSolution:
    """Solve ``A x = b (mod m)`` for integer vectors ``x`` modulo ``m``."""
    if m < 1:
        raise ValueError("modulus must be positive")
    rows = len(A)
    cols = len(A[0]) if rows else 0
    if len(b) != rows:
        raise ValueError("right-hand side has wrong length")
    U, S, V = smith_normal_form(A)
    c = [sum(u * bb for u, bb in zip(row, b)) for row in U]
    base, steps, orders = [], [], []
    for i in range(cols):
        s = S[i][i] if i < rows else 0
        g = math.gcd(s, m)
        ci = c[i] if i < rows else 0
        if ci % g:
            raise NoSolution(f"no solution: row {i} needs {s}*y = {ci} mod {m}")
        mg = m // g
        y0 = 0 if mg == 1 else (ci // g) * pow(s // g, -1, mg) % mg
        base.append(y0)
        steps.append(mg)
        orders.append(g)
    for i in range(cols, rows):
        if c[i] % m:
            raise NoSolution(f"no solution: inconsistent row {i}")
    particular = tuple(sum(v * y for v, y in zip(row, base)) % m for row in V)
    gens = []
    for j in range(cols):
        gens.append(tuple(V[r][j] * steps[j] % m for r in range(cols)))
    return CongruenceSolution(
        modulus=m,
        particular=particular,
        generators=tuple(gens),
        orders=tuple(orders),
        _transform=tuple(tuple(row) for row in V),
        _base=tuple(base),
        _steps=tuple(steps),
    )


# ---------------------------------------------------------------------------
# Rank and nullspace
# ---------------------------------------------------------------------------

def _integer_rows(M: Sequence[Sequence]) -> IntMatrix:
    out = []
    for row in M:
        row = [Fraction(x) for x in row]
        d = common_denominator(row)
        out.append([int(x * d) for x in row])
    return out


def bareiss_echelon(M: Sequence[Sequence]) -> tuple[IntMatrix, list[int]]:
    """Fraction-free row echelon form of a rational matrix.

    Returns the integer echelon matrix (rows scaled, so only the row space is
    meaningful) and the list of pivot columns.
    """
    a = _integer_rows(M)
    rows = len(a)
    cols = len(a[0]) if rows else 0
    prev, r, pivots = 1, 0, []
    for c in range(cols):
        if r == rows:
            break
        p = next((i for i in range(r, rows) if a[i][c]), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        piv = a[r][c]
        for i in range(r + 1, rows):
            f = a[i][c]
            row_i, row_r = a[i], a[r]
            for j in range(c + 1, cols):
                row_i[j] = (piv * row_i[j] - f * row_r[j]) // prev
            row_i[c] = 0
        # rows above the pivot row keep their scale; only the pivot rows
        # below are divided by prev, which is exact in Bareiss' scheme.
        prev = piv
        pivots.append(c)
        r += 1
    return a[:r], pivots


def rank_nullspace(M: Sequence[Sequence]) -> tuple[int, list[list[Fraction]]]:
    """Exact rank and a nullspace basis of a rational matrix."""
    cols = len(M[0]) if M else 0
    echelon, pivots = bareiss_echelon(M)
    rank = len(pivots)
    # reduced row echelon form over Q, starting from the integer echelon form
    R = [[Fraction(x) for x in row] for row in echelon]
    for k in range(rank - 1, -1, -1):
        c = pivots[k]
        pk = R[k][c]
        R[k] = [x / pk for x in R[k]]
        for i in range(k):
            f = R[i][c]
            if f:
                R[i] = [x - f * y for x, y in zip(R[i], R[k])]
    free = [c for c in range(cols) if c not in set(pivots)]
    basis = []
    for fcol in free:
        v = [Fraction(0)] * cols
        v[fcol] = Fraction(1)
        for k, c in enumerate(pivots):
            v[c] = -R[k][fcol]
        basis.append(v)
    return rank, basis


def rank(M: Sequence[Sequence]) -> int:
    return len(bareiss_echelon(M)[1])


def rank_mod_p(M: Sequence[Sequence], p: int) -> int:
    """Rank of a rational matrix with entries reduced modulo the prime ``p``.

    Raises ``ZeroDivisionError`` if some denominator is divisible by ``p``.
    """
    a = []
    for row in M:
        out = []
        for x in row:
            x = Fraction(x)
            out.append(x.numerator * pow(x.denominator, -1, p) % p)
        a.append(out)
    rows = len(a)
    cols = len(a[0]) if rows else 0
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if a[i][c]), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = pow(a[r][c], -1, p)
        for i in range(r + 1, rows):
            f = a[i][c] * inv % p
            if f:
                a[i] = [(x - f * y) % p for x, y in zip(a[i], a[r])]
        r += 1
        if r == rows:
            break
    return r


# ---------------------------------------------------------------------------
# Sparse leading-term echelon
# ---------------------------------------------------------------------------

class SparseEchelon:
    """Incremental echelon basis of sparse vectors, keyed by leading column.

    A vector is a ``{column: coefficient}`` dict; its leading column is the
    largest key. With ``modulus=None`` rows are kept as primitive integer
    vectors (fraction-free, content removed after every reduction step);
    otherwise arithmetic is modulo the given prime.

    The non-leading columns of the final basis are exactly the columns that a
    greedy "lowest column not yet in the span" selection would pick.
    """

    def __init__(self, modulus: int | None = None):
        self.modulus = modulus
        self.pivots: dict[int, dict[int, int]] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def _normalize(self, row: dict[int, int]) -> dict[int, int]:
        if self.modulus is not None:
            p = self.modulus
            lead = max(row)
            inv = pow(row[lead], -1, p)
            return {c: v * inv % p for c, v in row.items()}
        g = 0
        for v in row.values():
            g = math.gcd(g, v)
        lead = max(row)
        if row[lead] < 0:
            g = -g
        return {c: v // g for c, v in row.items()}

    def reduce(self, row: dict) -> dict:
        """Reduce ``row`` until its leading column is not a pivot column."""
        p = self.modulus
        if p is not None:
            row = {c: int(v) % p for c, v in row.items() if int(v) % p}
        else:
            row = {c: int(v) for c, v in row.items() if v}
        while row:
            lead = max(row)
            piv = self.pivots.get(lead)
            if piv is None:
                return row
            a = row[lead]
            if p is None:
                b = piv[lead]
                g = math.gcd(a, b)
                fa, fb = b // g, a // g
                new = {c: v * fa for c, v in row.items()}
                for c, v in piv.items():
                    w = new.get(c, 0) - fb * v
                    if w:
                        new[c] = w
                    else:
                        new.pop(c, None)
                row = self._normalize(new) if new else new
            else:
                for c, v in piv.items():
                    w = (row.get(c, 0) - a * v) % p
                    if w:
                        row[c] = w
                    else:
                        row.pop(c, None)
        return row

    def add(self, row: dict) -> bool:
        """Insert a vector; return True if it increased the rank."""
        row = self.reduce(row)
        if not row:
            return False
        row = self._normalize(row)
        self.pivots[max(row)] = row
        return True

    def normal_form(self, vec: dict) -> dict[int, Fraction]:
        """Fully reduce ``vec``: no column of the result is a pivot column.

        Only meaningful for the exact (``modulus=None``) variant.
        """
        out = {c: Fraction(v) for c, v in vec.items() if v}
        pending = sorted((c for c in out if c in self.pivots), reverse=True)
        while pending:
            c = pending.pop(0)
            coef = out.pop(c, None)
            if not coef:
                continue
            piv = self.pivots[c]
            f = coef / piv[c]
            for k, v in piv.items():
                if k == c:
                    continue
                w = out.get(k, 0) - f * v
                if w:
                    out[k] = w
                else:
                    out.pop(k, None)
            pending = sorted((k for k in out if k in self.pivots), reverse=True)
        return out
