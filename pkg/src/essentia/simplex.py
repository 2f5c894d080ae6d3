"""Exact rational simplex for hitting-set covering LPs.

The LP to solve is  min sum(x_u)  s.t.  sum(x_u for u in S) >= 1 per pooled
constraint set S, 0 <= x <= 1, optionally x_pin = 0.  Because the constraint
matrix is 0/1, any optimal solution automatically satisfies x <= 1 (capping a
variable at 1 keeps every covering constraint satisfied while lowering the
objective), so it suffices to solve the unboxed covering LP.  We work on its
dual, the packing LP  max sum(y_S)  s.t.  sum(y_S for S containing u) <= 1
per vertex u, y >= 0, whose origin is feasible: no artificial variables or
phase-one are ever needed, and adding a cut to the covering LP is just a new
column here, so the current basis warm-starts every re-solve.

All arithmetic is over `fractions.Fraction` and pivoting follows Bland's
rule, so the optimum is exact and cycling is impossible.  The optimal
covering solution is read off the objective row: x_u equals the negated
reduced cost of vertex u's slack column.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Optional

from .errors import PinInfeasibleError
from .graphs import ONE, ZERO, VertexWeights


class PackingSimplex:
    """Growable exact-arithmetic simplex over the packing dual.

    Vertex rows are created lazily when a constraint first mentions a vertex,
    and constraint columns are appended in insertion order; Bland's entering
    rule uses that fixed column order.  The pinned vertex never receives a
    row, which realises the x_pin = 0 restriction of the covering LP.
    """

    def __init__(self, pinned: Optional[int] = None):
        self.pinned = pinned
        self.rows: list[int] = []  # vertex of each tableau row
        self.slack_col: dict[int, int] = {}
        self.tab: list[list[Fraction]] = []
        self.rhs: list[Fraction] = []
        self.obj: list[Fraction] = []  # reduced costs, one per column
        self.basis: list[int] = []  # basic column of each row
        self.value = ZERO
        self.ncols = 0
        self.pool: list[tuple[int, ...]] = []

    def _new_row(self, u: int) -> None:
        # A fresh vertex appears in no pooled constraint, so its new slack
        # stays basic and the inverse-basis block extends by an identity
        # row/column: existing rows get a zero entry, the new row is a unit.
        for row in self.tab:
            row.append(ZERO)
        self.obj.append(ZERO)
        col = self.ncols
        self.ncols += 1
        self.slack_col[u] = col
        new_row = [ZERO] * self.ncols
        new_row[col] = ONE
        self.tab.append(new_row)
        self.rhs.append(ONE)
        self.basis.append(col)
        self.rows.append(u)

    def add_constraint(self, vertices: Iterable[int]) -> None:
        """Add the covering constraint sum(x_u for u in vertices) >= 1."""
        members = sorted(set(vertices) - {self.pinned})
        if not members:
            raise PinInfeasibleError(
                "constraint consists of the pinned vertex alone"
            )
        for u in members:
            if u not in self.slack_col:
                self._new_row(u)
        cols = [self.slack_col[u] for u in members]
        # New packing column in current-basis coordinates: B^-1 a equals the
        # sum of the members' slack columns, since a is their 0/1 indicator.
        transformed = [sum(row[c] for c in cols) for row in self.tab]
        reduced = ONE + sum(self.obj[c] for c in cols)
        for row, entry in zip(self.tab, transformed):
            row.append(entry)
        self.obj.append(reduced)
        self.ncols += 1
        self.pool.append(tuple(members))

    def _pivot(self, i: int, j: int) -> None:
        piv = self.tab[i][j]
        if piv != 1:
            inv = 1 / piv
            self.tab[i] = [a * inv for a in self.tab[i]]
            self.rhs[i] *= inv
        prow, prhs = self.tab[i], self.rhs[i]
        for k, row in enumerate(self.tab):
            if k == i:
                continue
            f = row[j]
            if f:
                self.tab[k] = [a - f * b for a, b in zip(row, prow)]
                self.rhs[k] -= f * prhs
        f = self.obj[j]
        self.obj = [a - f * b for a, b in zip(self.obj, prow)]
        self.value += f * prhs
        self.basis[i] = j

    def optimize(self) -> None:
        """Pivot to optimality (Bland's rule: lowest eligible index)."""
        while True:
            enter = None
            for j, r in enumerate(self.obj):
                if r > 0:
                    enter = j
                    break
            if enter is None:
                return
            leave = None
            best: Optional[tuple[Fraction, int]] = None
            for i, row in enumerate(self.tab):
                a = row[enter]
                if a > 0:
                    key = (self.rhs[i] / a, self.basis[i])
                    if best is None or key < best:
                        best = key
                        leave = i
            if leave is None:
                # each packing column has a +1 row at optimum-relevant bases;
                # the LP is bounded, so this cannot happen
                raise AssertionError("packing LP reported unbounded")
            self._pivot(leave, enter)

    def covering_solution(self, n: int) -> VertexWeights:
        """Optimal covering LP solution over n vertices (duals of the packing)."""
        x = [ZERO] * n
        for u, c in self.slack_col.items():
            x[u] = -self.obj[c]
        return tuple(x)

    def objective(self) -> Fraction:
        return self.value
