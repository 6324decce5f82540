"""Exact simplex against hand solutions and a float LP oracle (scipy highs)."""

import random
from fractions import Fraction

import numpy as np
import pytest
from scipy.optimize import linprog

from reinhardt.loglin import LogLin
from reinhardt.simplex import INFEASIBLE, OPTIMAL, UNBOUNDED, solve_lp


def frac(x):
    return Fraction(x)


def test_sup_x1_over_hartogs_log_domain():
    a = [[frac(1), frac(-1)], [frac(0), frac(1)]]
    b = [LogLin.log_of(Fraction(1)), LogLin.log_of(Fraction(1))]
    cert = solve_lp(a, b, [frac(1), frac(0)])
    assert cert.status == OPTIMAL
    assert cert.objective.is_zero()


def test_unbounded_with_ray():
    cert = solve_lp([[frac(1), frac(0)]], [LogLin.log_of(Fraction(1))],
                    [frac(0), frac(1)])
    assert cert.status == UNBOUNDED
    assert cert.ray[0] == 0 and cert.ray[1] > 0


def test_sup_combined_objective():
    a = [[frac(1), frac(-1)], [frac(0), frac(1)]]
    b = [LogLin.log_of(Fraction(1)), LogLin.log_of(Fraction(1))]
    cert = solve_lp(a, b, [frac(2), frac(-1)])
    assert cert.status == OPTIMAL and cert.objective.is_zero()


def test_infeasible_farkas():
    # x <= -1 and -x <= 0 cannot both hold
    cert = solve_lp([[frac(1)], [frac(-1)]], [LogLin.of(Fraction(-1)), LogLin.zero()],
                    [frac(1)])
    assert cert.status == INFEASIBLE
    lam = cert.farkas
    assert all(li >= 0 for li in lam) and any(li > 0 for li in lam)
    assert lam[0] * 1 + lam[1] * (-1) == 0
    assert lam[0] * Fraction(-1) + lam[1] * 0 < 0


def test_no_constraints():
    cert = solve_lp([], [], [frac(0), frac(0)])
    assert cert.status == OPTIMAL and cert.objective.is_zero()
    cert = solve_lp([], [], [frac(1), frac(0)])
    assert cert.status == UNBOUNDED


def test_symbolic_objective_value():
    # sup x subject to x <= log(1/2): optimum is log(1/2), symbolically
    cert = solve_lp([[frac(1)]], [LogLin.log_of(Fraction(1, 2))], [frac(1)])
    assert cert.status == OPTIMAL
    assert cert.objective.terms == ((Fraction(1, 2), Fraction(1)),)
    assert cert.objective.sign() == -1


def test_dual_matches_objective_symbolically():
    a = [[frac(1), frac(-1)], [frac(0), frac(1)]]
    b = [LogLin.log_of(Fraction(1, 2)), LogLin.log_of(Fraction(3))]
    cert = solve_lp(a, b, [frac(1), frac(0)])
    assert cert.status == OPTIMAL
    recomb = LogLin.zero()
    for li, bi in zip(cert.dual, b):
        recomb = recomb + bi * li
    assert (recomb - cert.objective).is_zero()


@pytest.mark.parametrize("seed", range(40))
def test_random_lps_against_scipy(seed):
    rng = random.Random(1000 + seed)
    m, n = rng.randint(1, 5), rng.randint(1, 4)
    a = [[Fraction(rng.randint(-4, 4)) for _ in range(n)] for _ in range(m)]
    b = [Fraction(rng.randint(-3, 6), rng.randint(1, 3)) for _ in range(m)]
    c = [Fraction(rng.randint(-3, 3)) for _ in range(n)]
    cert = solve_lp(a, [LogLin.of(x) for x in b], c)

    res = linprog(c=[-float(x) for x in c],
                  A_ub=np.array([[float(x) for x in row] for row in a]),
                  b_ub=np.array([float(x) for x in b]),
                  bounds=[(None, None)] * n, method="highs")
    if cert.status == OPTIMAL:
        assert res.status == 0
        assert float(cert.objective) == pytest.approx(-res.fun, abs=1e-7)
        # primal feasibility of the returned vertex, exactly
        for row, bi in zip(a, b):
            lhs = sum((x * r for x, r in zip(cert.primal_point, row)), LogLin.zero())
            assert (LogLin.of(bi) - lhs).sign() >= 0
    elif cert.status == UNBOUNDED:
        assert res.status == 3
    else:
        assert res.status == 2
