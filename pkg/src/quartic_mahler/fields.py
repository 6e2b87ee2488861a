"""Galois quartic number fields: canonical forms, discriminants, enumeration.

Biquadratic fields are Q(sqrt(ml), sqrt(nl)) for pairwise coprime square-free
l, m, n; cyclic quartic fields are Q(sqrt(A(D + B*sqrt(D)))) with A odd
square-free, D = B^2 + C^2 square-free, B, C > 0, gcd(A, D) = 1.  The
discriminant is c*(lmn)^2 resp. c*A^2*D^3 with c determined by congruence
cases, and those same cases fix the shape of the ring of integers inside the
denominator-4 coordinate lattice.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import gcd, isqrt

from ._integers import is_squarefree, squarefree_part, two_squares

REAL = "real"
IMAGINARY = "imaginary"

# ordered (r1 mod 4, r2 mod 4) classes the congruence tables are stated for
_VALID_PAIR_CLASSES = {(1, 1), (1, 2), (2, 3), (3, 3)}

_BIQUAD_C = {"11+": 1, "11-": 1, "12": 16, "33": 16, "23": 64}


@dataclass(frozen=True)
class BiquadraticField:
    """Canonical record for Q(sqrt(r1), sqrt(r2)) with Klein four-group."""

    l: int
    m: int
    n: int
    signature: str
    radicands: tuple[int, int, int]   # ordered: basis is (1, sqrt r1, sqrt r2, sqrt r3)
    multipliers: tuple[int, int, int]  # signed (l*, m*, n*): v1*v2 = l*·v3 etc.
    case: str                          # "11+", "11-", "12", "23", "33"
    c: int
    disc: int

    @property
    def kind(self) -> str:
        return "biquadratic"

    @property
    def key(self) -> tuple:
        return ("biquadratic",) + tuple(sorted(self.radicands))

    def __str__(self) -> str:
        r1, r2, _ = self.radicands
        return f"Q(sqrt({r1}), sqrt({r2}))"


@dataclass(frozen=True)
class CyclicQuarticField:
    """Canonical record for Q(sqrt(A(D + B*sqrt(D)))) with cyclic Galois group."""

    A: int
    B: int
    C: int
    D: int
    signature: str
    case: int  # 1..5, the integral-basis case
    c: int
    disc: int

    @property
    def kind(self) -> str:
        return "cyclic"

    @property
    def key(self) -> tuple:
        return ("cyclic", self.A, self.B, self.C, self.D)

    def __str__(self) -> str:
        return f"Q(sqrt({self.A}*({self.D}+{self.B}*sqrt({self.D}))))"


def _signed_multiplier(r1: int, r2: int, r3: int) -> int:
    """Integer l* with sqrt(r1)*sqrt(r2) = l* * sqrt(r3) on principal branches."""
    q, rem = divmod(r1 * r2, r3)
    assert rem == 0 and q > 0
    root = isqrt(q)
    assert root * root == q
    # i*sqrt(a) * i*sqrt(b) = -sqrt(ab); a mixed or positive pair stays positive
    return -root if (r1 < 0 and r2 < 0) else root


def canonicalize_biquadratic(d1: int, d2: int) -> BiquadraticField:
    """Canonical field record for Q(sqrt(d1), sqrt(d2)).

    All four representations of the same field collapse to one record: the
    ordered basis pair (r1, r2) is the lexicographically smallest pair of
    subfield radicands whose classes mod 4 appear in the congruence tables.
    """
    for d in (d1, d2):
        if d in (0, 1) or not is_squarefree(d):
            raise ValueError(f"radicand {d} is not square-free (or is 0/1)")
    if d1 == d2:
        raise ValueError("equal radicands give a quadratic field")
    d3 = squarefree_part(d1 * d2)
    if d3 == 1:
        raise ValueError("d1*d2 is a square: the field is quadratic")
    rads = sorted({d1, d2, d3})
    assert len(rads) == 3
    negatives = [r for r in rads if r < 0]
    if len(negatives) not in (0, 2):
        raise AssertionError("radicand signs inconsistent")
    signature = REAL if not negatives else IMAGINARY

    pairs = [
        (a, b)
        for a, b in product(rads, rads)
        if a != b and (a % 4, b % 4) in _VALID_PAIR_CLASSES
    ]
    assert pairs, f"no congruence-case pair for radicands {rads}"
    r1, r2 = min(pairs)
    r3 = next(r for r in rads if r not in (r1, r2))

    lstar = _signed_multiplier(r1, r2, r3)
    mstar = r1 // lstar
    nstar = r2 // lstar
    assert mstar * lstar == r1 and nstar * lstar == r2

    pair_class = (r1 % 4, r2 % 4)
    if pair_class == (1, 1):
        case = "11+" if lstar % 4 == 1 else "11-"
    else:
        case = f"{pair_class[0]}{pair_class[1]}"
    c = _BIQUAD_C[case]
    lmn = abs(lstar * mstar * nstar)
    disc = c * lmn * lmn

    if signature == REAL:
        l, m, n = sorted((abs(lstar), abs(mstar), abs(nstar)))
    else:
        pos = negatives[0] * negatives[1] // ([r for r in rads if r > 0][0])
        l = isqrt(pos)
        assert l * l == pos
        m, n = sorted(abs(r) // l for r in negatives)
    return BiquadraticField(
        l=l, m=m, n=n, signature=signature,
        radicands=(r1, r2, r3), multipliers=(lstar, mstar, nstar),
        case=case, c=c, disc=disc,
    )


def classify_cyclic(A: int, B: int, C: int, D: int) -> CyclicQuarticField:
    """Field record for Q(sqrt(A(D + B*sqrt(D)))), validating all conditions.

    An even A is first reduced via Q(sqrt((A/2)(D + C*sqrt(D)))), which swaps
    the roles of B and C.
    """
    if A % 2 == 0:
        if A % 4 == 0:
            raise ValueError("A divisible by 4: not a valid cyclic quartic tuple")
        A, B, C = A // 2, C, B
    if A == 0 or not is_squarefree(A):
        raise ValueError(f"A={A} must be odd and square-free")
    if B <= 0 or C <= 0:
        raise ValueError("B and C must be positive")
    if D != B * B + C * C:
        raise ValueError(f"D={D} is not B^2 + C^2")
    if not is_squarefree(D):
        raise ValueError(f"D={D} is not square-free")
    if gcd(A, D) != 1:
        raise ValueError(f"gcd(A, D) = {gcd(A, D)} != 1")

    if D % 2 == 0:
        c, case = 256, 1
    elif B % 2 == 1:
        c, case = 64, 2
    elif (A + B) % 4 == 3:
        c, case = 16, 3
    elif (A - C) % 4 == 0:
        c, case = 1, 4
    else:
        assert (A + C) % 4 == 0
        c, case = 1, 5

    return CyclicQuarticField(
        A=A, B=B, C=C, D=D,
        signature=REAL if A > 0 else IMAGINARY,
        case=case, c=c, disc=c * A * A * D**3,
    )


def _squarefree_upto(limit: int) -> list[int]:
    return [k for k in range(1, limit + 1) if is_squarefree(k)]


def enumerate_cyclic(max_disc: int, signature: str) -> list[CyclicQuarticField]:
    """Every cyclic quartic field of the signature with disc <= max_disc, sorted.

    The smallest cyclic quartic discriminant is 125; smaller bounds give an
    empty list.
    """
    if max_disc < 125:
        return []
    sign = 1 if signature == REAL else -1
    out = []
    d_cap = int(round(max_disc ** (1 / 3))) + 1
    for D in range(2, d_cap + 1):
        if D**3 > max_disc or not is_squarefree(D):
            continue
        a_cap = isqrt(max_disc // D**3)
        for B, C in two_squares(D):
            for a in range(1, a_cap + 1, 2):
                if not is_squarefree(a) or gcd(a, D) != 1:
                    continue
                field = classify_cyclic(sign * a, B, C, D)
                if field.disc <= max_disc:
                    out.append(field)
    out.sort(key=lambda f: (f.disc, f.key))
    return out


def enumerate_biquadratic(max_disc: int, signature: str) -> list[BiquadraticField]:
    """Every biquadratic field of the signature with disc <= max_disc, sorted."""
    if max_disc < 1:
        raise ValueError("max_disc must be positive")
    cap = isqrt(max_disc)  # lmn <= sqrt(max_disc) since disc >= (lmn)^2
    sf = _squarefree_upto(cap)
    seen = {}
    if signature == REAL:
        for li in sf:
            for mi in sf:
                if mi <= li or li * mi > cap or gcd(li, mi) != 1:
                    continue
                for ni in sf:
                    if ni <= mi or li * mi * ni > cap:
                        continue
                    if gcd(ni, li) != 1 or gcd(ni, mi) != 1:
                        continue
                    field = canonicalize_biquadratic(mi * li, ni * li)
                    if field.disc <= max_disc:
                        seen[field.key] = field
    else:
        for li in sf:
            for mi in sf:
                if li * mi > cap or gcd(li, mi) != 1:
                    continue
                for ni in sf:
                    if ni < mi or (ni == mi == 1) or li * mi * ni > cap:
                        continue
                    if gcd(ni, li) != 1 or (ni == mi) or gcd(ni, mi) != 1:
                        continue
                    field = canonicalize_biquadratic(-mi * li, -ni * li)
                    if field.disc <= max_disc:
                        seen[field.key] = field
    return sorted(seen.values(), key=lambda f: (f.disc, f.key))
