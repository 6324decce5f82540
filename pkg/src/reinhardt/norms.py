"""Monomial norms: sup norms via LP, exact L^p integrals on simplicial frames.

The exact L^p integral of |z^nu|^p over a domain cut out by exactly n
independent constraints has the closed form

    (2 pi)^n * prod_j c_j^{t_j} / (|det A| * prod_j t_j),   t = coords of
    p*nu + 2*1 in the basis of the constraint normals,

finite exactly when every t_j > 0.  Values are carried symbolically
(rational coefficient, power of pi, leftover threshold powers) and only
interval-evaluated for display.  Non-simplicial exact values are out of
scope; finiteness stays exact everywhere and values go through Monte Carlo.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cmp_to_key
from typing import Optional, Sequence

from . import linalg
from .cones import (lineality_space, lp_optimize, recession_improving_direction,
                    recession_meets_halfspace)
from .domain import DomainSpec, ExponentVector, log_polyhedron
from .errors import SpecError
from .loglin import LogLin
from .precision import interval_str, iv, scalar_interval, working_precision
from .scalars import Scalar, format_scalar, is_rational, scalar_cmp, sign_of


@dataclass(frozen=True)
class SimplicialFrame:
    """Exactly n independent constraints |z^alpha_j| < c_j with invertible A."""

    normals: tuple[ExponentVector, ...]
    thresholds: tuple[Scalar, ...]
    b_matrix: tuple[tuple[Scalar, ...], ...]  # inverse of the normal matrix
    det_abs: Scalar

    @staticmethod
    def from_rows(normals: Sequence[ExponentVector], thresholds: Sequence[Scalar]
                  ) -> "SimplicialFrame":
        n = len(normals)
        if any(len(a) != n for a in normals):
            raise SpecError("a simplicial frame needs exactly n constraints in dimension n")
        rows = [list(a.components) for a in normals]
        det = linalg.determinant(rows)
        if sign_of(det) == 0:
            raise SpecError("frame normals are linearly dependent")
        inv = linalg.invert(rows)
        return SimplicialFrame(
            normals=tuple(normals),
            thresholds=tuple(thresholds),
            b_matrix=tuple(tuple(r) for r in inv),
            det_abs=det if sign_of(det) > 0 else -det,
        )

    @staticmethod
    def from_spec(spec: DomainSpec, rows: Optional[Sequence[int]] = None) -> "SimplicialFrame":
        """Choose n constraints (0-based indices); defaults to all of them."""
        if rows is None:
            rows = range(len(spec.constraints))
        chosen = [spec.constraints[i] for i in rows]
        if len(chosen) != spec.n:
            raise SpecError(f"need exactly {spec.n} constraints for a frame, got {len(chosen)}")
        return SimplicialFrame.from_rows([c.alpha for c in chosen], [c.c for c in chosen])

    @property
    def n(self) -> int:
        return len(self.normals)

    def basis_coords(self, x: Sequence[Scalar]) -> tuple[Scalar, ...]:
        """Coordinates t with x = sum_j t_j * alpha_j (row-vector times B)."""
        return tuple(linalg.dot(x, [row[j] for row in self.b_matrix]) for j in range(self.n))

    def rescaled_to_unit(self) -> tuple["SimplicialFrame", tuple[LogLin, ...]]:
        """Frame with thresholds 1 plus the log-coordinates of the rescaling."""
        ones = tuple(Fraction(1) for _ in range(self.n))
        unit = SimplicialFrame(self.normals, ones, self.b_matrix, self.det_abs)
        shift = tuple(
            sum((LogLin.log_of(c, self.b_matrix[j][ell]) for ell, c in enumerate(self.thresholds)
                 if scalar_cmp(c, 1) != 0), LogLin.zero())
            for j in range(self.n))
        return unit, shift

    def polyhedron(self):
        from .domain import LogPolyhedron
        return LogPolyhedron(n=self.n, normals=self.normals, offsets=self.thresholds)


@dataclass(frozen=True)
class NormResult:
    """Exact symbolic value, MC estimate, or a divergence witness."""

    kind: str  # "exact" | "estimate" | "infinite" | "zero-space"
    coefficient: Optional[Scalar] = None
    pi_power: int = 0
    factors: tuple[tuple[Scalar, Scalar], ...] = ()
    estimate: Optional[float] = None
    stderr: Optional[float] = None
    samples: Optional[int] = None
    seed: Optional[int] = None
    ray: Optional[tuple[Scalar, ...]] = None

    def interval(self, bits: int = 64) -> tuple[str, str]:
        if self.kind != "exact":
            raise ValueError(f"no exact interval for kind={self.kind}")
        with working_precision(bits):
            val = scalar_interval(self.coefficient) * iv.pi ** self.pi_power
            for base, exp in self.factors:
                val *= iv.exp(scalar_interval(exp) * iv.log(scalar_interval(base)))
            return interval_str(val)

    def __float__(self) -> float:
        if self.kind == "estimate":
            return self.estimate
        if self.kind == "exact":
            lo, hi = self.interval()
            return (float(lo) + float(hi)) / 2
        raise ValueError(f"no numeric value for kind={self.kind}")

    def symbolic(self) -> str:
        if self.kind != "exact":
            raise ValueError(f"no symbolic form for kind={self.kind}")
        coeff = self.coefficient
        parts = []
        if self.pi_power:
            pi_txt = "pi" if self.pi_power == 1 else f"pi^{self.pi_power}"
            if is_rational(coeff):
                f = Fraction(coeff)
                num = pi_txt if f.numerator == 1 else (
                    f"-{pi_txt}" if f.numerator == -1 else f"{f.numerator}*{pi_txt}")
                parts.append(num if f.denominator == 1 else f"{num}/{f.denominator}")
            else:
                parts.append(f"({format_scalar(coeff)})*{pi_txt}")
        else:
            parts.append(format_scalar(coeff))
        for base, exp in self.factors:
            parts.append(f"({format_scalar(base)})^({format_scalar(exp)})")
        return "*".join(parts)


def make_exact_norm(coefficient: Scalar, pi_power: int,
                    factors: Sequence[tuple[Scalar, Scalar]]) -> NormResult:
    """Fold integer-exponent factors into the coefficient, sort the rest."""
    coeff = coefficient
    kept = []
    for base, exp in factors:
        if scalar_cmp(base, 1) == 0 or sign_of(exp) == 0:
            continue
        if is_rational(exp) and Fraction(exp).denominator == 1:
            e = int(Fraction(exp))
            coeff = coeff * (Fraction(base) ** e if is_rational(base) else base ** e)
        else:
            kept.append((base, exp))
    kept.sort(key=cmp_to_key(lambda s, t: scalar_cmp(s[0], t[0])))
    return NormResult(kind="exact", coefficient=coeff, pi_power=pi_power,
                      factors=tuple(kept))


def sup_norm_monomial(spec: DomainSpec, nu: ExponentVector) -> NormResult:
    """sup over the domain of |z^nu| = exp(sup <nu, x> over log G)."""
    poly = log_polyhedron(spec)
    ray = recession_improving_direction(poly, list(nu.components))
    if ray is not None:
        return NormResult(kind="infinite", ray=tuple(ray))
    cert = lp_optimize(list(nu.components), poly)
    assert cert.status == "optimal"
    if sign_of(cert.objective.const) != 0:
        raise AssertionError("sup of a pure monomial objective must be offset-only")
    return make_exact_norm(Fraction(1), 0, cert.objective.terms)


def lp_norm_finite(spec: DomainSpec, nu: ExponentVector, p) -> bool:
    """Is the integral of |z^nu|^p finite?  Exact recession-cone decision."""
    p = Fraction(p)
    if p < 1:
        raise ValueError("p must be a rational >= 1")
    w = [p * Fraction(c) + 2 for c in nu.as_ints()]
    return recession_meets_halfspace(log_polyhedron(spec), w) is None


def lp_norm_exact_simplicial(frame: SimplicialFrame, nu: ExponentVector, p) -> NormResult:
    """Closed-form integral of |z^nu|^p over the frame's domain."""
    p = Fraction(p)
    if p < 1:
        raise ValueError("p must be a rational >= 1")
    n = frame.n
    w = [p * Fraction(c) + 2 for c in nu.as_ints()]
    coords = frame.basis_coords(w)
    for j, t in enumerate(coords):
        if sign_of(t) <= 0:
            ray = tuple(-frame.b_matrix[ell][j] for ell in range(n))
            return NormResult(kind="infinite", ray=ray)
    denom: Scalar = frame.det_abs
    for t in coords:
        denom = denom * t
    coeff = Fraction(2) ** n / denom if is_rational(denom) else (Fraction(2) ** n) / denom
    return make_exact_norm(coeff, n, list(zip(frame.thresholds, coords)))


def domain_volume_exact(frame: SimplicialFrame) -> NormResult:
    zero = ExponentVector(tuple(Fraction(0) for _ in range(frame.n)))
    return lp_norm_exact_simplicial(frame, zero, 1)


def find_integrable_monomial(spec: DomainSpec, max_radius: int = 40
                             ) -> Optional[tuple[ExponentVector, Fraction]]:
    """Search for (nu, p) with a finite L^p integral; None when the lineality
    space is nonzero (no monomial is p-integrable then)."""
    poly = log_polyhedron(spec)
    if lineality_space(poly).dim > 0:
        return None
    from itertools import product
    for radius in range(max_radius + 1):
        shell = [nu for nu in product(range(-radius, radius + 1), repeat=spec.n)
                 if max((abs(x) for x in nu), default=0) == radius]
        for nu in sorted(shell):
            vec = ExponentVector(tuple(Fraction(x) for x in nu))
            for p in (Fraction(1), Fraction(2)):
                if lp_norm_finite(spec, vec, p):
                    return vec, p
    raise SpecError(f"no integrable monomial found in the box [-{max_radius},{max_radius}]^n")
