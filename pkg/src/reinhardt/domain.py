"""Reinhardt domains cut out by finitely many radial monomial constraints.

A domain is the interior of an intersection of sets ``{|z^alpha| < c}``.
Membership is a statement about the moduli vector only; at coordinate axes
the rule is: a constraint with a negative exponent on a vanishing coordinate
is violated, a positive exponent on a vanishing coordinate makes the
constraint value 0 and hence satisfied.  The constraint list is kept
verbatim — a log-redundant constraint can still change axis membership, so
no redundancy elimination ever happens.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Optional, Sequence

from .errors import EmptyDomainError, SpecError
from .loglin import LogLin
from .scalars import (Scalar, is_rational, is_square_free, parse_scalar_literal,
                      scalar_to_json, sign_of)


@dataclass(frozen=True)
class ExponentVector:
    """Exponents of a radial monomial |z1|^a1 ... |zn|^an (exact scalars)."""

    components: tuple[Scalar, ...]

    def __len__(self):
        return len(self.components)

    def __iter__(self):
        return iter(self.components)

    def __getitem__(self, i):
        return self.components[i]

    @property
    def is_integer(self) -> bool:
        return all(isinstance(c, int) or (is_rational(c) and Fraction(c).denominator == 1)
                   for c in self.components)

    def as_ints(self) -> tuple[int, ...]:
        if not self.is_integer:
            raise ValueError(f"not an integer exponent vector: {self}")
        return tuple(int(Fraction(c)) for c in self.components)

    def is_zero(self) -> bool:
        return all(sign_of(c) == 0 for c in self.components)


def exponents(*components) -> ExponentVector:
    return ExponentVector(tuple(Fraction(c) if isinstance(c, int) else c for c in components))


@dataclass(frozen=True)
class MonomialConstraint:
    """|z^alpha| < c with c > 0 and alpha nonzero."""

    alpha: ExponentVector
    c: Scalar

    def __post_init__(self):
        if self.alpha.is_zero():
            raise SpecError("constraint exponent vector must be nonzero")
        if sign_of(self.c) <= 0:
            raise SpecError("constraint threshold must be > 0")


@dataclass(frozen=True)
class RadialPoint:
    """Vector of moduli (|z1|, ..., |zn|); rotation symmetry makes these enough."""

    radii: tuple[Scalar, ...]

    def __post_init__(self):
        if any(sign_of(r) < 0 for r in self.radii):
            raise ValueError("radii must be non-negative")

    def __len__(self):
        return len(self.radii)


def radial(*radii) -> RadialPoint:
    return RadialPoint(tuple(Fraction(r) if isinstance(r, (int, float)) else r for r in radii))


@dataclass(frozen=True)
class LogPolyhedron:
    """The system <alpha, x> < log(c) over R^n, one half-space per constraint.

    Offsets stay as the exact thresholds c; log(c) only ever materialises as
    a directed-rounding interval inside LogLin comparisons.
    """

    n: int
    normals: tuple[ExponentVector, ...]
    offsets: tuple[Scalar, ...]

    def half_space_slack(self, x: Sequence[LogLin]) -> list[LogLin]:
        """log(c_i) - <alpha_i, x> for each constraint (positive inside)."""
        out = []
        for alpha, c in zip(self.normals, self.offsets):
            acc = LogLin.log_of(c)
            for a, xi in zip(alpha, x):
                if sign_of(a) != 0:
                    acc = acc - xi * a
            out.append(acc)
        return out


@dataclass(frozen=True)
class DomainSpec:
    """Validated constraint-system description of a Reinhardt domain."""

    n: int
    constraints: tuple[MonomialConstraint, ...]
    quadratic_d: Optional[int] = None
    raw_text: Optional[str] = field(default=None, compare=False)

    def __post_init__(self):
        if self.n < 1:
            raise SpecError("ambient dimension n must be >= 1")
        for con in self.constraints:
            if len(con.alpha) != self.n:
                raise SpecError(f"constraint has {len(con.alpha)} exponents, expected {self.n}")
        if self.quadratic_d is not None and not is_square_free(self.quadratic_d):
            raise SpecError(f"quadratic_d={self.quadratic_d} must be a square-free integer >= 2")

    def to_json_dict(self) -> dict:
        doc: dict = {"n": self.n}
        if self.quadratic_d is not None:
            doc["quadratic_d"] = self.quadratic_d
        doc["constraints"] = [
            {"alpha": [scalar_to_json(a) for a in con.alpha], "c": scalar_to_json(con.c)}
            for con in self.constraints]
        return doc


@lru_cache(maxsize=None)
def log_polyhedron(spec: DomainSpec) -> LogPolyhedron:
    return LogPolyhedron(
        n=spec.n,
        normals=tuple(con.alpha for con in spec.constraints),
        offsets=tuple(con.c for con in spec.constraints),
    )


def parse_spec(text: str) -> DomainSpec:
    """Parse and validate a UTF-8 JSON spec document (see README for grammar)."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecError(f"spec is not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise SpecError("spec document must be a JSON object")
    extra = set(doc) - {"n", "quadratic_d", "constraints"}
    if extra:
        raise SpecError(f"unknown top-level fields: {sorted(extra)}")
    if not isinstance(doc.get("n"), int) or doc["n"] < 1:
        raise SpecError("field 'n' must be an integer >= 1")
    n = doc["n"]
    quad_d = doc.get("quadratic_d")
    if quad_d is not None and (not isinstance(quad_d, int) or not is_square_free(quad_d)):
        raise SpecError("quadratic_d must be a square-free integer >= 2")
    raw_constraints = doc.get("constraints", [])
    if not isinstance(raw_constraints, list):
        raise SpecError("'constraints' must be an array")
    constraints = []
    for idx, item in enumerate(raw_constraints):
        if not isinstance(item, dict):
            raise SpecError(f"constraint {idx} must be an object")
        extra = set(item) - {"alpha", "c"}
        if extra:
            raise SpecError(f"constraint {idx}: unknown fields {sorted(extra)}")
        alpha_raw = item.get("alpha")
        if not isinstance(alpha_raw, list) or len(alpha_raw) != n:
            raise SpecError(f"constraint {idx}: 'alpha' must be an array of {n} scalars")
        alpha = ExponentVector(tuple(parse_scalar_literal(a, quad_d) for a in alpha_raw))
        c = parse_scalar_literal(item.get("c"), quad_d)
        if sign_of(c) <= 0:
            raise SpecError(f"constraint {idx}: threshold c must be > 0")
        constraints.append(MonomialConstraint(alpha, c))
    spec = DomainSpec(n=n, constraints=tuple(constraints), quadratic_d=quad_d, raw_text=text)
    # reject empty open domains at load time
    from .cones import interior_point
    if interior_point(log_polyhedron(spec)) is None:
        raise EmptyDomainError("the constraint system has an empty log-polyhedron")
    return spec


def load_spec(path: str) -> DomainSpec:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_spec(fh.read())


def contains(spec: DomainSpec, p: RadialPoint) -> bool:
    """Exact membership of a moduli vector, including the axis rules.

    Raises BoundaryIndeterminate only when an irrational-exponent comparison
    is still unresolved at the precision-ladder cap.
    """
    if len(p) != spec.n:
        raise ValueError(f"point has {len(p)} radii, expected {spec.n}")
    for con in spec.constraints:
        involved = [(a, r) for a, r in zip(con.alpha, p.radii) if sign_of(a) != 0]
        if any(sign_of(r) == 0 and sign_of(a) < 0 for a, r in involved):
            return False  # negative power of a vanishing coordinate
        if any(sign_of(r) == 0 for a, r in involved):
            continue  # value 0 < c: positive powers only touch the zero radius
        slack = LogLin.log_of(con.c)
        for a, r in involved:
            slack = slack - LogLin.log_of(r, a)
        if slack.sign() <= 0:
            return False
    return True


def is_bounded(spec: DomainSpec) -> bool:
    """True iff every coordinate modulus is bounded above on the domain."""
    from .cones import sup_direction_bounded
    poly = log_polyhedron(spec)
    unit = [Fraction(0)] * spec.n
    for j in range(spec.n):
        e_j = list(unit)
        e_j[j] = Fraction(1)
        if not sup_direction_bounded(poly, e_j):
            return False
    return True


def has_finite_volume(spec: DomainSpec) -> bool:
    """True iff <2*1, d> < 0 on every nonzero recession direction of log G."""
    from .cones import recession_meets_halfspace
    poly = log_polyhedron(spec)
    return recession_meets_halfspace(poly, [Fraction(2)] * spec.n) is None
