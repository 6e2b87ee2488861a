"""Small-measure integral generators for biquadratic fields with extra roots of unity.

Fields containing sqrt(-1) or sqrt(-3) admit explicit integral generators
whose Mahler measure stays below the comparison constant c_K.  The templates
depend on k mod 4 and on whether 3 divides k; a finite list of small k needs
bespoke elements, which are reproduced here together with the two published
tables of their measures.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd, isqrt

from .exactfield import FieldElement, basis_for, is_integral, is_primitive
from .fields import BiquadraticField, canonicalize_biquadratic
from .measure import DEFAULT_CONTEXT, PrecisionContext, c_k, mahler_measure
from ._integers import is_squarefree


@dataclass(frozen=True)
class TorsionCase:
    root: int           # -1 or -3
    gcd3: int           # gcd(3, k); 1 for the root -1 branches
    k_mod4: int
    eps_choices: tuple[int, ...]
    threshold: int      # smallest k with the template guaranteed below c_K


@dataclass(frozen=True)
class TorsionGenerator:
    case: TorsionCase
    k: int
    field: BiquadraticField
    element: FieldElement
    eps: int
    bespoke: bool


# bespoke elements: (rational quarter-term, {radicand: quarter-coefficient})
_BESPOKE: dict[tuple[int, int], tuple[int, dict[int, int]]] = {
    (-1, 2): (0, {-2: 2, -1: 4, 2: 2}),     # (sqrt(-2) + 2 sqrt(-1) + sqrt(2)) / 2
    (-1, 3): (2, {-1: 2, 3: 2, -3: 2}),     # (1 + sqrt(-1) + sqrt(3) + sqrt(-3)) / 2
    (-3, 19): (2, {-3: 4, -19: 2}),
    (-3, 23): (2, {-3: 4, -23: 2}),
    (-3, 55): (0, {-3: 6, -55: 2}),
    (-3, 59): (2, {-3: 8, -59: 2}),
    (-3, 67): (2, {-3: 8, -67: 2}),
    (-3, 71): (2, {-3: 8, -71: 2}),
    (-3, 6): (0, {2: 2, -6: 2}),            # (sqrt(2) + sqrt(-6)) / 2
    (-3, 15): (0, {-3: 2, 5: 2}),
    (-3, 21): (4, {-3: 4, 7: 2, -21: 2}),
    (-3, 39): (4, {-3: 2, 13: 2}),
    (-3, 51): (8, {-3: 2, 17: 2}),
    (-3, 87): (8, {-3: 2, 29: 2}),
    # the k = 2 template degenerates (floor sqrt(2/3) = 0 gives a quadratic
    # element); (sqrt(-2) + sqrt(6)) / 2 is integral, primitive, M = 4 < c_K
    (-3, 2): (0, {-2: 2, 6: 2}),
}

# rows of the two published tables, in print order
TABLE_COPRIME_KS = (19, 23, 55, 59, 67, 71)
TABLE_DIVISIBLE_KS = (6, 15, 21, 39, 51, 87)

# published (M(alpha_1), c_K) to two decimals, by k
TABLE_EXPECTED = {
    19: (15.55, 23.10), 23: (17.31, 27.96), 55: (49.00, 66.87),
    59: (53.61, 71.74), 67: (57.35, 81.46), 71: (59.19, 86.33),
    6: (4.00, 9.73), 15: (4.00, 6.08), 21: (21.58, 34.04),
    39: (12.00, 15.81), 51: (17.25, 20.67), 87: (28.00, 35.26),
}


def _case_for(k: int, root: int) -> TorsionCase:
    if root == -1:
        thresholds = {1: 4, 2: 4, 3: 1}
        return TorsionCase(-1, 1, k % 4, (0, 1), thresholds[k % 4])
    g = gcd(3, k)
    if g == 1:
        thresholds = {3: 72, 2: 1, 1: 1}
        eps = (0, 2) if k % 4 == 3 else (0,)
    else:
        thresholds = {3: 91, 2: 23, 1: 23}
        eps = (0, 2) if k % 4 == 3 else (0,)
    return TorsionCase(-3, g, k % 4, eps, thresholds[k % 4])


def _element(field: BiquadraticField, rational: int, coeffs: dict[int, int]) -> FieldElement:
    quarters = [rational, 0, 0, 0]
    index = {r: i for i, r in enumerate(field.radicands, start=1)}
    for rad, coeff in coeffs.items():
        quarters[index[rad]] = coeff
    return FieldElement.from_quarters(basis_for(field), quarters)


def torsion_generator(k: int, root: int, gcd3: int | None = None) -> TorsionGenerator:
    """The explicit small-measure integral generator of Q(sqrt(root), sqrt(-k)).

    k must be square-free and at least 2 (and not 3 for root -3, where the
    field would be quadratic); for root -3 an optionally declared gcd(3, k)
    branch is validated against k.
    """
    if root not in (-1, -3):
        raise ValueError("root must be -1 or -3")
    if k < 2 or not is_squarefree(k):
        raise ValueError(f"k={k} must be square-free and at least 2")
    if root == -3 and k == 3:
        raise ValueError("k=3 with root -3 is a quadratic field")
    case = _case_for(k, root)
    if gcd3 is not None and root == -3 and gcd3 != case.gcd3:
        raise ValueError(f"declared gcd3={gcd3} but gcd(3, {k}) = {case.gcd3}")

    field = canonicalize_biquadratic(root, -k)
    bespoke = _BESPOKE.get((root, k))
    if bespoke is not None:
        rational, coeffs = bespoke
        eps = 0
    elif root == -1:
        f = isqrt(k)
        if k % 4 == 1:
            eps = (f + 1) % 2
            rational, coeffs = 0, {-1: 2 * (f + eps), -k: 2}
        elif k % 4 == 2:
            eps = f % 2
            w = f + eps
            rational, coeffs = 2 * w, {-1: 2 * w, -k: 2, k: 2}
        else:
            # integrality forces the sqrt(-1) coefficient even here (its
            # congruence partner is the absent sqrt(k) coordinate)
            eps = f % 2
            rational, coeffs = 2, {-1: 2 * (f + eps), -k: 2}
    else:
        f = isqrt(k // 3)
        if case.gcd3 == 1:
            if k % 4 == 3:
                eps = 0 if (2 * f) % 4 == 2 else 2
                rational, coeffs = 0, {-3: 2 * f + eps, -k: 2}
            else:
                # nearest integer to sqrt(k/3), not the floor: the rounded
                # coefficient keeps the small conjugate pair inside the unit
                # circle, which the floor does not always do
                eps = 1 if 4 * k > 3 * (2 * f + 1) ** 2 else 0
                rational, coeffs = 0, {-3: 4 * (f + eps), -k: 4}
        else:
            third = k // 3
            if k % 4 == 3:
                eps = 0 if (2 * f) % 4 == 0 else 2
                rational, coeffs = 2 * f + eps, {-3: 2, third: 2}
            else:
                eps = 0
                rational, coeffs = 2 * (2 * f + 1), {-3: 2, third: 4}
    element = _element(field, rational, coeffs)
    if not is_integral(element):
        raise AssertionError(f"torsion template not integral at k={k}, root={root}")
    if not is_primitive(element):
        raise AssertionError(f"torsion template not primitive at k={k}, root={root}")
    return TorsionGenerator(case=case, k=k, field=field, element=element,
                            eps=eps, bespoke=bespoke is not None)


@dataclass(frozen=True)
class TableRow:
    branch: str
    k: int
    element: FieldElement
    m_value: float
    comparison: float


def reproduce_tables(ctx: PrecisionContext = DEFAULT_CONTEXT) -> list[TableRow]:
    """Recompute every row of the two exceptional-k tables."""
    rows = []
    for k in TABLE_COPRIME_KS:
        g = torsion_generator(k, -3)
        rows.append(TableRow("gcd(3,k)=1", k, g.element,
                             mahler_measure(g.element, ctx), c_k(g.field)))
    for k in TABLE_DIVISIBLE_KS:
        g = torsion_generator(k, -3)
        rows.append(TableRow("3|k", k, g.element,
                             mahler_measure(g.element, ctx), c_k(g.field)))
    return rows


def table_text(rows: list[TableRow]) -> str:
    lines = [f"{'branch':<12} {'k':>3} {'M(a1)':>8} {'c_K':>8}"]
    for r in rows:
        lines.append(f"{r.branch:<12} {r.k:>3} {r.m_value:>8.2f} {r.comparison:>8.2f}")
    return "\n".join(lines)
