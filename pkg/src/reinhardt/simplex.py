"""Exact two-phase simplex with Bland's rule and checked certificates.

Solves  max <c, x>  s.t.  A x <= b  with x free, A and c over the scalar
field and b symbolic (:class:`LogLin`), so log-thresholds never get rounded.
Free variables are split x = u - v; slacks close the rows; artificials only
appear in phase I on rows whose right-hand side starts negative.

Certificates are extracted from the final tableau and re-verified with exact
arithmetic before they are returned:

* ``optimal``    — primal point, objective value, dual multipliers with
                   lambda >= 0 and lambda @ A == c;
* ``unbounded``  — improving ray d with A d <= 0 and <c, d> > 0;
* ``infeasible`` — Farkas multipliers lambda >= 0 with lambda @ A == 0 and
                   lambda @ b < 0.

Problems here are tiny (a handful of rows), so the dense tableau with
freshly recomputed reduced costs per pivot is the simplest correct choice.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .errors import BoundaryIndeterminate, ReinhardtError
from .loglin import LogLin, as_loglin
from .scalars import Scalar, sign_of

_MAX_PIVOTS = 50_000  # Bland's rule terminates; this guards against bugs only

OPTIMAL = "optimal"
UNBOUNDED = "unbounded"
INFEASIBLE = "infeasible"


@dataclass(frozen=True)
class LPCertificate:
    status: str
    primal_point: Optional[tuple[LogLin, ...]] = None
    objective: Optional[LogLin] = None
    dual: Optional[tuple[Scalar, ...]] = None
    ray: Optional[tuple[Scalar, ...]] = None
    farkas: Optional[tuple[Scalar, ...]] = None
    attained: Optional[bool] = None


class _Tableau:
    def __init__(self, a_rows, b_vals, n: int):
        self.n = n
        self.m = len(a_rows)
        self.slack0 = 2 * self.n
        self.ncols = 2 * self.n + self.m
        self.mat: list[list[Scalar]] = []
        self.rhs: list[LogLin] = []
        self.basis: list[int] = []
        self.art_cols: list[int] = []
        for i, (row, b) in enumerate(zip(a_rows, b_vals)):
            flip = b.sign() < 0
            g = -1 if flip else 1
            full = [g * x for x in row] + [-g * x for x in row] + \
                   [Fraction(g if j == i else 0) for j in range(self.m)]
            self.mat.append(full)
            self.rhs.append(-b if flip else b)
            self.basis.append(self.slack0 + i)
        # artificials for flipped rows (their slack sits at -1, unusable as basis)
        for i in range(self.m):
            if self.mat[i][self.slack0 + i] < 0:
                col = self.ncols
                for k in range(self.m):
                    self.mat[k].append(Fraction(1 if k == i else 0))
                self.ncols += 1
                self.art_cols.append(col)
                self.basis[i] = col

    def reduced_costs(self, cost: list[Scalar]) -> list[Scalar]:
        red = []
        for j in range(self.ncols):
            acc: Scalar = Fraction(0)
            for i in range(self.m):
                cb = cost[self.basis[i]]
                if sign_of(cb) != 0 and sign_of(self.mat[i][j]) != 0:
                    acc = acc + cb * self.mat[i][j]
            red.append(acc - cost[j])
        return red

    def objective_value(self, cost: list[Scalar]) -> LogLin:
        val = LogLin.zero()
        for i in range(self.m):
            cb = cost[self.basis[i]]
            if sign_of(cb) != 0:
                val = val + self.rhs[i] * cb
        return val

    def pivot(self, row: int, col: int) -> None:
        piv = self.mat[row][col]
        inv = Fraction(1) / piv if isinstance(piv, (int, Fraction)) else 1 / piv
        self.mat[row] = [x * inv for x in self.mat[row]]
        self.rhs[row] = self.rhs[row] * inv
        for i in range(self.m):
            if i != row and sign_of(self.mat[i][col]) != 0:
                f = self.mat[i][col]
                self.mat[i] = [x - f * y for x, y in zip(self.mat[i], self.mat[row])]
                self.rhs[i] = self.rhs[i] - self.rhs[row] * f
        self.basis[row] = col

    def run(self, cost: list[Scalar], frozen_cols: set[int]) -> Optional[int]:
        """Bland pivoting to optimality; returns an entering column on unboundedness."""
        for _ in range(_MAX_PIVOTS):
            red = self.reduced_costs(cost)
            enter = next((j for j in range(self.ncols)
                          if j not in frozen_cols and sign_of(red[j]) < 0), None)
            if enter is None:
                return None
            leave, best = None, None
            for i in range(self.m):
                if sign_of(self.mat[i][enter]) > 0:
                    ratio = self.rhs[i] / self.mat[i][enter]
                    if best is None:
                        leave, best = i, ratio
                    else:
                        s = (ratio - best).sign()
                        if s < 0 or (s == 0 and self.basis[i] < self.basis[leave]):
                            leave, best = i, ratio
            if leave is None:
                return enter
            self.pivot(leave, enter)
        raise ReinhardtError("simplex failed to terminate (internal error)")


def solve_lp(a_rows: Sequence[Sequence[Scalar]], b_vals: Sequence, objective: Sequence[Scalar],
             ) -> LPCertificate:
    """Maximize <objective, x> over {x : a_rows @ x <= b_vals}, exactly."""
    a_rows = [list(r) for r in a_rows]
    b_vals = [as_loglin(b) for b in b_vals]
    n = len(objective)
    if any(len(r) != n for r in a_rows):
        raise ValueError("constraint rows and objective have mismatched lengths")
    objective = [Fraction(c) if isinstance(c, int) else c for c in objective]

    t = _Tableau(a_rows, b_vals, n)

    if t.art_cols:
        cost1 = [Fraction(0)] * t.ncols
        for col in t.art_cols:
            cost1[col] = Fraction(-1)
        if t.run(cost1, frozen_cols=set()) is not None:
            raise ReinhardtError("phase I unbounded (internal error)")
        value = t.objective_value(cost1)
        if value.sign() < 0:
            red = t.reduced_costs(cost1)
            lam = tuple(red[t.slack0 + i] for i in range(t.m))
            _check_farkas(a_rows, b_vals, lam)
            return LPCertificate(status=INFEASIBLE, farkas=lam)
        _drive_out_artificials(t)

    cost2 = [Fraction(0)] * t.ncols
    for j in range(t.n):
        cost2[j] = objective[j]
        cost2[t.n + j] = -objective[j]
    frozen = set(t.art_cols)
    enter = t.run(cost2, frozen_cols=frozen)
    if enter is not None:
        ray = _extract_ray(t, enter)
        _check_ray(a_rows, objective, ray)
        return LPCertificate(status=UNBOUNDED, ray=ray)

    point = _extract_point(t)
    value = t.objective_value(cost2)
    red = t.reduced_costs(cost2)
    lam = tuple(red[t.slack0 + i] for i in range(t.m))
    _check_dual(a_rows, objective, lam)
    return LPCertificate(status=OPTIMAL, primal_point=point, objective=value, dual=lam)


def _drive_out_artificials(t: _Tableau) -> None:
    art = set(t.art_cols)
    drop_rows = []
    for i in range(t.m):
        if t.basis[i] in art:
            col = next((j for j in range(t.slack0 + t.m)
                        if sign_of(t.mat[i][j]) != 0), None)
            if col is None:
                drop_rows.append(i)  # redundant zero row
            else:
                t.pivot(i, col)
    for i in reversed(drop_rows):
        del t.mat[i], t.rhs[i], t.basis[i]
        t.m -= 1


def _extract_point(t: _Tableau) -> tuple[LogLin, ...]:
    vals = {col: t.rhs[i] for i, col in enumerate(t.basis)}
    zero = LogLin.zero()
    return tuple(vals.get(j, zero) - vals.get(t.n + j, zero) for j in range(t.n))


def _extract_ray(t: _Tableau, enter: int) -> tuple[Scalar, ...]:
    delta: dict[int, Scalar] = {enter: Fraction(1)}
    for i, col in enumerate(t.basis):
        delta[col] = -t.mat[i][enter]
    return tuple(delta.get(j, Fraction(0)) - delta.get(t.n + j, Fraction(0))
                 for j in range(t.n))


def _dot(u, v):
    acc: Scalar = Fraction(0)
    for a, b in zip(u, v):
        acc = acc + a * b
    return acc


def _check_ray(a_rows, objective, ray) -> None:
    if any(sign_of(_dot(row, ray)) > 0 for row in a_rows):
        raise ReinhardtError("unbounded-ray certificate failed verification")
    if sign_of(_dot(objective, ray)) <= 0:
        raise ReinhardtError("unbounded ray does not improve the objective")


def _check_farkas(a_rows, b_vals, lam) -> None:
    if any(sign_of(li) < 0 for li in lam):
        raise ReinhardtError("Farkas multipliers must be non-negative")
    n = len(a_rows[0]) if a_rows else 0
    for j in range(n):
        if sign_of(_dot(lam, [row[j] for row in a_rows])) != 0:
            raise ReinhardtError("Farkas combination does not annihilate the rows")
    combo = LogLin.zero()
    for li, b in zip(lam, b_vals):
        combo = combo + b * li
    try:
        if combo.sign() >= 0:
            raise ReinhardtError("Farkas combination is not negative")
    except BoundaryIndeterminate:
        pass  # multipliers themselves are exact; the value check is best-effort


def _check_dual(a_rows, objective, lam) -> None:
    if any(sign_of(li) < 0 for li in lam):
        raise ReinhardtError("dual multipliers must be non-negative")
    for j, cj in enumerate(objective):
        if sign_of(_dot(lam, [row[j] for row in a_rows]) - cj) != 0:
            raise ReinhardtError("dual multipliers do not reproduce the objective")
