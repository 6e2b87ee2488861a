"""Mahler measure, normalized measure, comparison constants, and bound formulas.

The measure of an element is evaluated from its exact minimal polynomial and
exact conjugates, at escalating mpmath precision until the value is stable to
the context's relative tolerance.  Roots of unity are recognized exactly
(cyclotomic minimal polynomial), so the unit-circle boundary never has to be
decided numerically.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil, isqrt

import mpmath

from .exactfield import FieldElement, conjugates, minimal_polynomial
from .fields import REAL, BiquadraticField, CyclicQuarticField

Field = BiquadraticField | CyclicQuarticField


class PrecisionError(ArithmeticError):
    """Raised when escalation hits the precision cap without stabilizing."""


@dataclass(frozen=True)
class PrecisionContext:
    bits: int = 128
    escalation: int = 2
    max_bits: int = 2048
    rel_tol: float = 1e-12


DEFAULT_CONTEXT = PrecisionContext()


def _distinct_conjugates(u: FieldElement) -> list[FieldElement]:
    out, seen = [], set()
    for c in conjugates(u):
        if c.coords not in seen:
            seen.add(c.coords)
            out.append(c)
    return out


def mahler_measure(u: FieldElement, ctx: PrecisionContext = DEFAULT_CONTEXT) -> float:
    """M(u): |leading coefficient| times the product of root moduli >= 1."""
    if u.is_zero():
        raise ValueError("the zero element has no Mahler measure")
    poly = minimal_polynomial(u)
    if poly.is_cyclotomic:
        return 1.0
    roots = _distinct_conjugates(u)
    lead = abs(poly.leading)
    prev = None
    bits = ctx.bits
    while bits <= ctx.max_bits:
        with mpmath.workprec(bits):
            margin = mpmath.mpf(2) ** (8 - bits)
            m = mpmath.mpf(lead)
            ambiguous = False
            for r in roots:
                mod = abs(r.embed(bits))
                if abs(mod - 1) < margin:
                    ambiguous = True
                    break
                if mod > 1:
                    m *= mod
            if not ambiguous:
                if prev is not None and abs(m - prev) <= ctx.rel_tol * m:
                    return float(m)
                prev = m
        bits *= ctx.escalation
    raise PrecisionError(f"Mahler measure did not stabilize below {ctx.max_bits} bits")


def m_prime(u: FieldElement, ctx: PrecisionContext = DEFAULT_CONTEXT) -> float:
    """M'(u) = M(u) / |leading coefficient of the minimal polynomial|."""
    if u.is_zero():
        raise ValueError("the zero element has no normalized measure")
    return mahler_measure(u, ctx) / abs(minimal_polynomial(u).leading)


def c_k(f: Field) -> float:
    """The comparison constant (2/pi)^(r2) * sqrt(disc), r2 complex places."""
    r2 = 0 if f.signature == REAL else 2
    return (2.0 / float(mpmath.pi)) ** r2 * float(mpmath.sqrt(f.disc))


def torsion_nontrivial(f: Field) -> bool:
    """True iff the field contains roots of unity other than +-1."""
    if f.kind == "biquadratic":
        return -1 in f.radicands or -3 in f.radicands
    return (f.A, f.B, f.C, f.D) == (-1, 2, 1, 5)


@dataclass(frozen=True)
class BoundTerm:
    name: str
    value: float
    constant: float | None = None
    exponent: Fraction | None = None


@dataclass(frozen=True)
class BoundSet:
    lower: float
    upper: float
    lower_terms: tuple[BoundTerm, ...] = field(default=())
    upper_terms: tuple[BoundTerm, ...] = field(default=())


def _power_term(name: str, const: float, expo: Fraction, disc: int) -> BoundTerm:
    return BoundTerm(name, const * float(disc) ** float(expo), const, expo)


def theoretical_bounds(f: Field) -> BoundSet:
    """Tightest applicable lower bound and the applicable upper bound for M(O_K)."""
    d = f.disc
    lower: list[BoundTerm] = []
    upper: list[BoundTerm] = []
    if f.signature == REAL:
        lower.append(_power_term("real-general", 2.0 ** (-4 / 3), Fraction(1, 6), d))
        upper.append(_power_term("real-general", 1.0, Fraction(1, 2), d))
        if f.kind == "biquadratic":
            lower.append(BoundTerm("liouville-largest-radicand", f.n / 48.0))
            if f.l == 1:
                lower.append(_power_term("coprime-pair", 1 / (96 * 2**0.5), Fraction(1, 4), d))
        else:
            lower.append(BoundTerm("liouville-cyclic", f.A * float(mpmath.sqrt(f.D)) / 48.0))
    else:
        lower.append(_power_term("imaginary-general", 2.0 ** (-12 / 5), Fraction(1, 5), d))
        if torsion_nontrivial(f):
            upper.append(_power_term("torsion-comparison", (2.0 / float(mpmath.pi)) ** 2, Fraction(1, 2), d))
        else:
            upper.append(_power_term("imaginary-general", 1.0, Fraction(1), d))
        if f.kind == "biquadratic":
            lower.append(BoundTerm("liouville-ln", f.l * f.n / 256.0))
            lower.append(_power_term("imaginary-quarter", 1 / (512 * 2**0.5), Fraction(1, 4), d))
            if f.l > f.n:
                lower.append(BoundTerm("liouville-l-squared", f.l * f.l / 2304.0))
            if f.m == 1:
                lower.append(_power_term("negative-pair", 1 / 2048, Fraction(1, 2), d))
        else:
            lower.append(_power_term("imaginary-cyclic-third", 1 / 128, Fraction(1, 3), d))
            lower.append(BoundTerm("liouville-cyclic-sq", f.A * f.A * f.D / 2304.0))
            lower.append(BoundTerm(
                "imaginary-cyclic-third-a",
                abs(f.A) ** (4 / 3) * float(d) ** (1 / 3) / 14630.0,
            ))
    return BoundSet(
        lower=max(t.value for t in lower),
        upper=min(t.value for t in upper),
        lower_terms=tuple(lower),
        upper_terms=tuple(upper),
    )


@dataclass(frozen=True)
class QuadraticSurd:
    """The real quadratic irrational (p + sqrt(d)) / q."""

    p: int
    d: int
    q: int

    def __post_init__(self) -> None:
        if self.q == 0 or self.d <= 0 or isqrt(self.d) ** 2 == self.d:
            raise ValueError("surd must be a real quadratic irrational")

    def min_poly(self) -> tuple[int, int, int]:
        """Content-1 integer (a2, a1, a0) with a2 x^2 + a1 x + a0 = 0, a2 > 0."""
        from math import gcd

        a2, a1, a0 = self.q * self.q, -2 * self.p * self.q, self.p * self.p - self.d
        g = gcd(gcd(abs(a2), abs(a1)), abs(a0))
        return a2 // g, a1 // g, a0 // g

    def value(self) -> float:
        return (self.p + self.d**0.5) / self.q

    def conjugate_value(self) -> float:
        return (self.p - self.d**0.5) / self.q


@dataclass(frozen=True)
class LiouvilleBound:
    surd: QuadraticSurd
    mu: float
    mu_rational: Fraction


def liouville_mu(surd: QuadraticSurd) -> LiouvilleBound:
    """Effective Liouville constant mu with |p/q - alpha| >= mu / q^2.

    mu = 1 / (a2 * (1 + |alpha| + |alpha'|)) for the content-1 minimal
    polynomial a2 x^2 + a1 x + a0.  `mu_rational` is a certified rational
    lower bound for mu (denominator rounded up).
    """
    a2, _, _ = surd.min_poly()
    s = abs(surd.value()) + abs(surd.conjugate_value())
    mu = 1.0 / (a2 * (1.0 + s))
    denom = ceil(a2 * (1.0 + s) * (1 + 1e-12)) + 1
    return LiouvilleBound(surd, mu, Fraction(1, denom))
