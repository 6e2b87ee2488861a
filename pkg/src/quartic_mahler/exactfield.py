"""Exact arithmetic for elements of Galois quartic fields.

An element is a rational coordinate vector over the ambient basis
(1, v1, v2, v3): for a biquadratic field the vi are the three subfield
radicals, for a cyclic field they are (sqrt(D), rho, sigma) with
rho = sqrt(A(D + B sqrt(D))), sigma = sqrt(A(D - B sqrt(D))).  Products,
conjugates, minimal polynomials, and the integrality/primitivity predicates
are all computed with Fraction arithmetic; floating point appears only in
the optional embeddings (mpmath, at a caller-chosen precision).

The multiplication table for the cyclic basis is exact:
    sqrt(D)*rho = B*rho + C*sigma,   sqrt(D)*sigma = C*rho - B*sigma,
    rho*sigma   = A*C*sqrt(D),       rho^2/sigma^2 = A*D +/- A*B*sqrt(D),
with rho*sigma = A*C*sqrt(D) holding on principal branches (sign checked
numerically at construction).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd, lcm

import mpmath

from .fields import REAL, BiquadraticField, CyclicQuarticField

Field = BiquadraticField | CyclicQuarticField

# content-1 cyclotomic polynomials of degree <= 4, descending coefficients
CYCLOTOMIC_COEFFS = {
    (1, -1): 1,
    (1, 1): 2,
    (1, 1, 1): 3,
    (1, 0, 1): 4,
    (1, -1, 1): 6,
    (1, 1, 1, 1, 1): 5,
    (1, 0, 0, 0, 1): 8,
    (1, -1, 1, -1, 1): 10,
    (1, 0, -1, 0, 1): 12,
}


class AmbientBasis:
    """Multiplication table and numeric embeddings for a field's basis."""

    def __init__(self, field: Field) -> None:
        self.field = field
        self.kind = field.kind
        self.signature = field.signature
        self._emb_cache: dict[int, tuple] = {}
        if self.kind == "cyclic":
            # rho*sigma = epsilon * A*C*sqrt(D); principal branches give +1
            self.rho_sigma_sign = 1
            v = self.embeddings(64)
            expect = field.A * field.C * v[1]
            if abs(v[2] * v[3] - expect) > 2.0 ** (-40) * (1 + abs(expect)):
                raise AssertionError("rho*sigma sign convention violated")
        else:
            v = self.embeddings(64)
            lstar = field.multipliers[0]
            if abs(v[1] * v[2] - lstar * v[3]) > 2.0 ** (-40) * (1 + abs(lstar * v[3])):
                raise AssertionError("radical product sign convention violated")

    def __eq__(self, other: object) -> bool:
        return isinstance(other, AmbientBasis) and self.field == other.field

    def __hash__(self) -> int:
        return hash(self.field)

    def embeddings(self, prec: int) -> tuple:
        """Values of (1, v1, v2, v3) at `prec` bits (mpf/mpc)."""
        cached = self._emb_cache.get(prec)
        if cached is not None:
            return cached
        with mpmath.workprec(prec + 16):
            if self.kind == "biquadratic":
                vals = [mpmath.mpf(1)]
                for r in self.field.radicands:
                    root = mpmath.sqrt(abs(r))
                    vals.append(mpmath.mpc(0, root) if r < 0 else root)
            else:
                f = self.field
                w = mpmath.sqrt(f.D)
                rp = abs(f.A) * (f.D + f.B * w)
                rm = abs(f.A) * (f.D - f.B * w)
                if f.A > 0:
                    vals = [mpmath.mpf(1), w, mpmath.sqrt(rp), mpmath.sqrt(rm)]
                else:
                    vals = [
                        mpmath.mpf(1), w,
                        mpmath.mpc(0, mpmath.sqrt(rp)),
                        mpmath.mpc(0, mpmath.sqrt(rm)),
                    ]
            out = tuple(vals)
        self._emb_cache[prec] = out
        return out


_BASIS_CACHE: dict[Field, AmbientBasis] = {}


def basis_for(field: Field) -> AmbientBasis:
    basis = _BASIS_CACHE.get(field)
    if basis is None:
        basis = _BASIS_CACHE[field] = AmbientBasis(field)
    return basis


@dataclass(frozen=True)
class FieldElement:
    """Exact element: coords over the ambient basis (rational, typically /4)."""

    basis: AmbientBasis
    coords: tuple[Fraction, Fraction, Fraction, Fraction]

    @classmethod
    def from_coords(cls, basis: AmbientBasis, coords) -> FieldElement:
        return cls(basis, tuple(Fraction(c) for c in coords))

    @classmethod
    def from_quarters(cls, basis: AmbientBasis, quarters) -> FieldElement:
        return cls(basis, tuple(Fraction(int(q), 4) for q in quarters))

    @property
    def quarters(self) -> tuple[int, int, int, int]:
        out = []
        for c in self.coords:
            q = c * 4
            if q.denominator != 1:
                raise ValueError(f"element is outside the denominator-4 lattice: {self.coords}")
            out.append(int(q))
        return tuple(out)

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coords)

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coords[1:])

    def __add__(self, other: FieldElement) -> FieldElement:
        _check_same_basis(self, other)
        return FieldElement(self.basis, tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: FieldElement) -> FieldElement:
        _check_same_basis(self, other)
        return FieldElement(self.basis, tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> FieldElement:
        return FieldElement(self.basis, tuple(-a for a in self.coords))

    def __mul__(self, other: FieldElement) -> FieldElement:
        return mul(self, other)

    def embed(self, prec: int = 64):
        v = self.basis.embeddings(prec)
        with mpmath.workprec(prec):
            acc = mpmath.mpf(0)
            for c, vi in zip(self.coords, v):
                acc += mpmath.mpf(c.numerator) / c.denominator * vi
        return acc

    def __str__(self) -> str:
        return f"({', '.join(str(c) for c in self.coords)})"


@dataclass(frozen=True)
class IntegerPolynomial:
    """Content-1 integer polynomial, descending coefficients, positive leading."""

    coeffs: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[0]

    @property
    def is_monic(self) -> bool:
        return self.coeffs[0] == 1

    @property
    def is_cyclotomic(self) -> bool:
        return self.coeffs in CYCLOTOMIC_COEFFS

    def __call__(self, x):
        acc = 0
        for c in self.coeffs:
            acc = acc * x + c
        return acc

    def __str__(self) -> str:
        return " + ".join(
            f"{c}*x^{self.degree - i}" for i, c in enumerate(self.coeffs) if c
        )


def _check_same_basis(u: FieldElement, v: FieldElement) -> None:
    if u.basis is not v.basis and u.basis != v.basis:
        raise ValueError("elements live in different ambient bases")


def mul(u: FieldElement, v: FieldElement) -> FieldElement:
    """Exact product in the shared ambient basis."""
    _check_same_basis(u, v)
    a0, a1, a2, a3 = u.coords
    b0, b1, b2, b3 = v.coords
    if u.basis.kind == "biquadratic":
        f = u.basis.field
        r1, r2, r3 = f.radicands
        ls, ms, ns = f.multipliers
        c0 = a0 * b0 + a1 * b1 * r1 + a2 * b2 * r2 + a3 * b3 * r3
        c1 = a0 * b1 + a1 * b0 + ns * (a2 * b3 + a3 * b2)
        c2 = a0 * b2 + a2 * b0 + ms * (a1 * b3 + a3 * b1)
        c3 = a0 * b3 + a3 * b0 + ls * (a1 * b2 + a2 * b1)
    else:
        f = u.basis.field
        A, B, C, D = f.A, f.B, f.C, f.D
        s12 = a1 * b2 + a2 * b1
        s13 = a1 * b3 + a3 * b1
        s23 = a2 * b3 + a3 * b2
        c0 = a0 * b0 + a1 * b1 * D + (a2 * b2 + a3 * b3) * A * D
        c1 = a0 * b1 + a1 * b0 + (a2 * b2 - a3 * b3) * A * B + s23 * A * C
        c2 = a0 * b2 + a2 * b0 + B * s12 + C * s13
        c3 = a0 * b3 + a3 * b0 + C * s12 - B * s13
    return FieldElement(u.basis, (c0, c1, c2, c3))


def conjugates(u: FieldElement) -> tuple[FieldElement, FieldElement, FieldElement, FieldElement]:
    """The four Galois conjugates, in a fixed signature-dependent order.

    Biquadratic: the identity and the three sign-flip involutions (for
    imaginary fields alpha_2 is the complex conjugate of alpha_1).  Cyclic:
    powers of the order-4 map sending sqrt(D) to -sqrt(D) and rho to sigma.
    """
    x0, x1, x2, x3 = u.coords
    if u.basis.kind == "cyclic":
        tuples = [
            (x0, x1, x2, x3),
            (x0, -x1, -x3, x2),
            (x0, x1, -x2, -x3),
            (x0, -x1, x3, -x2),
        ]
    elif u.basis.signature == REAL:
        tuples = [
            (x0, x1, x2, x3),
            (x0, -x1, x2, -x3),
            (x0, x1, -x2, -x3),
            (x0, -x1, -x2, x3),
        ]
    else:
        tuples = [
            (x0, x1, x2, x3),
            (x0, -x1, -x2, x3),
            (x0, -x1, x2, -x3),
            (x0, x1, -x2, -x3),
        ]
    return tuple(FieldElement(u.basis, t) for t in tuples)


def is_primitive(u: FieldElement) -> bool:
    """True iff u generates the quartic field (four distinct conjugates)."""
    seen = {c.coords for c in conjugates(u)}
    return len(seen) == 4


def is_integral(u: FieldElement) -> bool:
    """True iff u lies in the ring of integers (congruence case of the field)."""
    try:
        x = u.quarters
    except ValueError:
        return False
    if u.basis.kind == "biquadratic":
        return _biquad_integral(u.basis.field.case, x)
    return _cyclic_integral(u.basis.field.case, x)


def _same_parity(x) -> bool:
    p = x[0] % 2
    return all(xi % 2 == p for xi in x)


def _all_even(x) -> bool:
    return all(xi % 2 == 0 for xi in x)


def _biquad_integral(case: str, x) -> bool:
    x0, x1, x2, x3 = x
    if case == "11+":
        return _same_parity(x) and (x0 - x1 + x2 - x3) % 4 == 0
    if case == "11-":
        return _same_parity(x) and (x0 - x1 - x2 - x3) % 4 == 0
    if case == "12":
        return _all_even(x) and (x0 - x1) % 4 == 0 and (x2 - x3) % 4 == 0
    if case == "23":
        return _all_even(x) and x0 % 4 == 0 and x2 % 4 == 0 and (x1 - x3) % 4 == 0
    if case == "33":
        return _all_even(x) and (x0 - x3) % 4 == 0 and (x1 - x2) % 4 == 0
    raise ValueError(f"unknown congruence case {case!r}")


def _cyclic_integral(case: int, x) -> bool:
    x1, x2, x3, x4 = x
    if case == 1:
        return all(xi % 4 == 0 for xi in x)
    if case == 2:
        return _all_even(x) and (x1 - x2) % 4 == 0 and x3 % 4 == 0 and x4 % 4 == 0
    if case == 3:
        return _all_even(x) and (x1 - x2) % 4 == 0 and (x3 - x4) % 4 == 0
    if case == 4:
        return _same_parity(x) and (x1 - x2 - x3 + x4) % 4 == 0
    if case == 5:
        return _same_parity(x) and (x1 - x2 - x3 - x4) % 4 == 0
    raise ValueError(f"unknown congruence case {case!r}")


def _as_rational(u: FieldElement) -> Fraction:
    if not u.is_rational():
        raise AssertionError("expected a rational symmetric function, got " + str(u))
    return u.coords[0]


def _clear_to_integer(frac_coeffs: list[Fraction]) -> IntegerPolynomial:
    den = reduce(lcm, (c.denominator for c in frac_coeffs), 1)
    ints = [int(c * den) for c in frac_coeffs]
    g = reduce(gcd, ints)
    ints = [c // g for c in ints]
    if ints[0] < 0:
        ints = [-c for c in ints]
    return IntegerPolynomial(tuple(ints))


def minimal_polynomial(u: FieldElement) -> IntegerPolynomial:
    """Content-1 integer minimal polynomial, via symmetric functions of conjugates."""
    conj = conjugates(u)
    distinct: list[FieldElement] = []
    seen: set = set()
    for c in conj:
        if c.coords not in seen:
            seen.add(c.coords)
            distinct.append(c)
    if len(distinct) == 1:
        q = u.coords[0]
        return _clear_to_integer([Fraction(1), -q])
    if len(distinct) == 2:
        a, b = distinct
        s = _as_rational(a + b)
        p = _as_rational(mul(a, b))
        return _clear_to_integer([Fraction(1), -s, p])
    assert len(distinct) == 4
    a1, a2, a3, a4 = conj
    e1 = _as_rational(a1 + a2 + a3 + a4)
    p12, p13, p14 = mul(a1, a2), mul(a1, a3), mul(a1, a4)
    p23, p24, p34 = mul(a2, a3), mul(a2, a4), mul(a3, a4)
    e2 = _as_rational(p12 + p13 + p14 + p23 + p24 + p34)
    e3 = _as_rational(mul(p12, a3) + mul(p12, a4) + mul(p13, a4) + mul(p23, a4))
    e4 = _as_rational(mul(p12, p34))
    return _clear_to_integer([Fraction(1), -e1, e2, -e3, e4])


# group orbit of an element under conjugation and negation, as coordinate maps
def orbit_quarters(kind: str, x: tuple[int, int, int, int]) -> list[tuple[int, int, int, int]]:
    x0, x1, x2, x3 = x
    if kind == "cyclic":
        base = [
            (x0, x1, x2, x3),
            (x0, -x1, -x3, x2),
            (x0, x1, -x2, -x3),
            (x0, -x1, x3, -x2),
        ]
    else:
        base = [
            (x0, x1, x2, x3),
            (x0, -x1, x2, -x3),
            (x0, x1, -x2, -x3),
            (x0, -x1, -x2, x3),
        ]
    return base + [tuple(-v for v in t) for t in base]


def canonical_quarters(kind: str, x: tuple[int, int, int, int]) -> tuple[int, int, int, int]:
    """Deterministic orbit representative: lexicographically largest variant."""
    return max(orbit_quarters(kind, x))
