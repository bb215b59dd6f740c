"""A small exact linear-programming solver (two-phase simplex, Bland's rule).

Each tableau row is stored as a list of Python integers with one positive
row denominator, so pivots are pure integer arithmetic followed by a gcd
reduction.  The problems solved here are small and dense.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
UNBOUNDED = "unbounded"

_DEGENERATE_LIMIT = 50


@dataclass
class LPResult:
    status: str
    x: list[Fraction] | None = None
    value: Fraction | None = None
    # on infeasibility: multipliers y with y.A >= 0 on every column and y.b < 0
    farkas: list[Fraction] | None = None


def _reduce(row: list[int], den: int) -> tuple[list[int], int]:
    g = gcd(den, *row)
    if g > 1:
        return [v // g for v in row], den // g
    return row, den


def _ints(values: Sequence) -> tuple[list[int], int]:
    """Scale a rational row to integers; returns (integers, denominator)."""
    if all(type(v) is int for v in values):
        return list(values), 1
    fr = [Fraction(v) for v in values]
    den = lcm(*(f.denominator for f in fr)) if fr else 1
    return [int(f * den) for f in fr], den


class _Tableau:
    """Rows ``(N, d)`` stand for ``N / d``; the last entry of ``N`` is the rhs.

    ``obj`` holds the reduced costs in the same representation, its last
    entry being minus the current objective value.
    """

    def __init__(self, rows: list[list[int]], dens: list[int], basis: list[int]):
        self.rows = rows
        self.dens = dens
        self.basis = basis
        self.obj: list[int] = []
        self.obj_den = 1

    def set_objective(self, values: Sequence[Fraction]) -> None:
        self.obj, self.obj_den = _ints(values)

    def pivot(self, r: int, c: int) -> None:
        Nr = self.rows[r]
        if Nr[c] < 0:
            Nr = [-v for v in Nr]
        Nr, _ = _reduce(Nr, Nr[c])
        p = Nr[c]
        self.rows[r], self.dens[r] = Nr, p
        for i, Ni in enumerate(self.rows):
            if i == r:
                continue
            f = Ni[c]
            if f:
                new = [a * p - f * b for a, b in zip(Ni, Nr)]
                self.rows[i], self.dens[i] = _reduce(new, self.dens[i] * p)
        f = self.obj[c] if self.obj else 0
        if f:
            new = [a * p - f * b for a, b in zip(self.obj, Nr)]
            self.obj, self.obj_den = _reduce(new, self.obj_den * p)
        self.basis[r] = c

    def run(self, allowed: int) -> str:
        """Maximise, letting only the first ``allowed`` columns enter.

        Dantzig's largest-coefficient rule, switching to Bland's rule for
        good after a run of degenerate pivots so that cycling cannot occur.
        """
        bland = False
        degenerate = 0
        while True:
            obj = self.obj
            if bland:
                enter = next((j for j in range(allowed) if obj[j] > 0), None)
            else:
                enter, top = None, 0
                for j in range(allowed):
                    if obj[j] > top:
                        enter, top = j, obj[j]
            if enter is None:
                return OPTIMAL
            best = None
            for i, row in enumerate(self.rows):
                a = row[enter]
                if a <= 0:
                    continue
                if best is None:
                    best = i
                    continue
                # compare rhs / a across rows; row denominators cancel
                brow = self.rows[best]
                lhs, rhs = row[-1] * brow[enter], brow[-1] * a
                if lhs < rhs or (lhs == rhs and self.basis[i] < self.basis[best]):
                    best = i
            if best is None:
                return UNBOUNDED
            if self.rows[best][-1] == 0:
                degenerate += 1
                if degenerate > _DEGENERATE_LIMIT:
                    bland = True
            else:
                degenerate = 0
            self.pivot(best, enter)

    def value(self, i: int) -> Fraction:
        return Fraction(self.rows[i][-1], self.dens[i])


def maximize(
    c: Sequence,
    A_ub: Sequence[Sequence] = (),
    b_ub: Sequence = (),
    A_eq: Sequence[Sequence] = (),
    b_eq: Sequence = (),
) -> LPResult:
    """Maximise ``c.x`` subject to ``A_ub x <= b_ub``, ``A_eq x = b_eq``, ``x >= 0``."""
    nvar = len(c)
    n_ub = len(A_ub)
    m = n_ub + len(A_eq)
    n_struct = nvar + n_ub  # structural + slack columns
    ncol = n_struct + m  # plus one artificial per row
    rows: list[list[int]] = []
    dens: list[int] = []
    flipped: list[bool] = []
    for i in range(m):
        if i < n_ub:
            coeffs, b = A_ub[i], b_ub[i]
        else:
            coeffs, b = A_eq[i - n_ub], b_eq[i - n_ub]
        if len(coeffs) != nvar:
            raise ValueError("constraint width does not match objective")
        vals, den = _ints(list(coeffs) + [b])
        row = vals[:nvar] + [0] * (ncol - nvar) + [vals[-1]]
        if i < n_ub:
            row[nvar + i] = den
        flip = row[-1] < 0
        if flip:
            row = [-v for v in row]
        row[n_struct + i] = den
        flipped.append(flip)
        r, d = _reduce(row, den)
        rows.append(r)
        dens.append(d)
    tab = _Tableau(rows, dens, [n_struct + i for i in range(m)])

    # phase 1: maximise -(sum of artificials), starting from the artificial basis
    if all(d == 1 for d in dens):
        obj = [sum(col) for col in zip(*rows)]
        for k in range(n_struct, ncol):
            obj[k] = 0
        tab.obj, tab.obj_den = obj, 1
    else:
        objf = [Fraction(0)] * (ncol + 1)
        for row, den in zip(rows, dens):
            for k in range(n_struct):
                if row[k]:
                    objf[k] += Fraction(row[k], den)
            objf[-1] += Fraction(row[-1], den)
        tab.set_objective(objf)
    tab.run(n_struct)
    if tab.obj[-1] != 0:
        # phase-1 simplex multipliers, mapped back to the original row signs
        y = [-1 - Fraction(tab.obj[n_struct + i], tab.obj_den) for i in range(m)]
        y = [-v if f else v for v, f in zip(y, flipped)]
        return LPResult(INFEASIBLE, farkas=y)

    # drive remaining artificials out of the basis; drop redundant rows
    tab.obj = []
    r = 0
    while r < len(tab.rows):
        if tab.basis[r] >= n_struct:
            col = next((k for k in range(n_struct) if tab.rows[r][k] != 0), None)
            if col is None:
                del tab.rows[r], tab.dens[r], tab.basis[r]
                continue
            tab.pivot(r, col)
        r += 1

    # phase 2: reduced costs of c with respect to the current basis
    if not any(c):
        x = [Fraction(0)] * nvar
        for i, bvar in enumerate(tab.basis):
            if bvar < nvar:
                x[bvar] = tab.value(i)
        return LPResult(OPTIMAL, x, Fraction(0))
    cf = [Fraction(v) for v in c] + [Fraction(0)] * (ncol - nvar)
    objf = cf + [Fraction(0)]
    for i, bvar in enumerate(tab.basis):
        f = cf[bvar]
        if f:
            den = tab.dens[i]
            for k, v in enumerate(tab.rows[i]):
                if v:
                    objf[k] -= f * Fraction(v, den)
    for k in range(n_struct, ncol):
        objf[k] = Fraction(0)
    tab.set_objective(objf)
    if tab.run(n_struct) == UNBOUNDED:
        return LPResult(UNBOUNDED)
    x = [Fraction(0)] * nvar
    for i, bvar in enumerate(tab.basis):
        if bvar < nvar:
            x[bvar] = tab.value(i)
    value = sum((Fraction(ci) * xi for ci, xi in zip(c, x)), Fraction(0))
    return LPResult(OPTIMAL, x, value)
