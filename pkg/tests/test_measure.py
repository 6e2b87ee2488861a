from fractions import Fraction

import pytest

from quartic_mahler.exactfield import FieldElement, basis_for, conjugates, minimal_polynomial
from quartic_mahler.fields import (
    IMAGINARY,
    REAL,
    canonicalize_biquadratic,
    classify_cyclic,
    enumerate_biquadratic,
    enumerate_cyclic,
)
from quartic_mahler.measure import (
    PrecisionContext,
    QuadraticSurd,
    c_k,
    liouville_mu,
    m_prime,
    mahler_measure,
    theoretical_bounds,
    torsion_nontrivial,
)

from conftest import element, element_by_radicand

Q23 = canonicalize_biquadratic(2, 3)


def test_mahler_sqrt2_plus_sqrt3():
    u = element(Q23, (0, 4, 4, 0))
    assert mahler_measure(u) == pytest.approx(5 + 2 * 6**0.5, rel=1e-12)


def test_mahler_one_and_zero():
    assert mahler_measure(element(Q23, (4, 0, 0, 0))) == 1.0
    with pytest.raises(ValueError):
        mahler_measure(element(Q23, (0, 0, 0, 0)))


def test_mahler_zeta5_exact():
    z = element(classify_cyclic(-1, 2, 1, 5), (-1, 1, 1, 1))
    assert minimal_polynomial(z).coeffs == (1, 1, 1, 1, 1)
    assert mahler_measure(z) == 1.0


def test_worked_example_normalized_measure():
    f = canonicalize_biquadratic(-7, -14)
    alpha = element_by_radicand(f, 2, {-7: 2, -14: 2, 2: 2})
    beta = element_by_radicand(f, 0, {-7: 2, -14: 2})
    assert m_prime(alpha) == pytest.approx(11.66, abs=0.01)
    assert m_prime(beta) == pytest.approx(10.20, abs=0.01)
    assert minimal_polynomial(beta).coeffs == (16, 0, 168, 0, 49)


def test_m_prime_half_sqrt2():
    u = FieldElement.from_coords(basis_for(Q23), (0, Fraction(1, 2), 0, 0))
    assert mahler_measure(u) == pytest.approx(2.0, rel=1e-12)
    assert m_prime(u) == pytest.approx(1.0, rel=1e-12)


def test_measure_orbit_invariance(rng):
    fields = enumerate_biquadratic(4_000, REAL) + enumerate_cyclic(40_000, IMAGINARY)
    for field in rng.sample(fields, 6):
        u = element(field, [rng.randint(-5, 5) or 1 for _ in range(4)])
        m = mahler_measure(u)
        neg = FieldElement(u.basis, tuple(-c for c in u.coords))
        assert mahler_measure(neg) == pytest.approx(m, rel=1e-11)
        for c in conjugates(u):
            assert mahler_measure(c) == pytest.approx(m, rel=1e-11)


def test_measure_at_least_one_for_integral(rng):
    fields = enumerate_cyclic(50_000, REAL) + enumerate_biquadratic(5_000, IMAGINARY)
    for field in rng.sample(fields, 8):
        basis = basis_for(field)
        for _ in range(30):
            u = element(field, [4 * rng.randint(-2, 2) for _ in range(4)])
            if u.is_zero():
                continue
            m = mahler_measure(u)
            assert m >= 1.0 - 1e-12
            if m < 1.0 + 1e-9:
                assert minimal_polynomial(u).is_cyclotomic


def test_precision_escalation_consistent():
    u = element(Q23, (1, 3, 5, 7))
    low = mahler_measure(u, PrecisionContext(bits=48, max_bits=4096))
    high = mahler_measure(u, PrecisionContext(bits=512))
    assert low == pytest.approx(high, rel=1e-11)


# ---------------------------------------------------------------------------
# comparison constant and bounds


def test_c_k_values():
    assert c_k(classify_cyclic(-1, 2, 1, 5)) == pytest.approx(4.531, abs=5e-4)
    assert c_k(canonicalize_biquadratic(-3, -19)) == pytest.approx(23.10, abs=5e-3)
    f = canonicalize_biquadratic(2, 3)
    assert c_k(f) == pytest.approx(f.disc**0.5, rel=1e-12)


def test_torsion_detection():
    assert torsion_nontrivial(canonicalize_biquadratic(-1, -3))
    assert torsion_nontrivial(canonicalize_biquadratic(-1, 2))
    assert torsion_nontrivial(canonicalize_biquadratic(-3, -19))
    assert not torsion_nontrivial(canonicalize_biquadratic(-7, -14))
    assert torsion_nontrivial(classify_cyclic(-1, 2, 1, 5))
    assert not torsion_nontrivial(classify_cyclic(-1, 1, 1, 2))


def test_bounds_real_biquadratic():
    f = canonicalize_biquadratic(2, 3)
    b = theoretical_bounds(f)
    assert b.lower == pytest.approx(max(2 ** (-4 / 3) * 2304 ** (1 / 6), 3 / 48), rel=1e-12)
    assert b.upper == pytest.approx(2304**0.5, rel=1e-12)


def test_bounds_imaginary_cyclic_family():
    for k in (1, 3, 5):
        f = classify_cyclic(-k, 1, 1, 2)
        b = theoretical_bounds(f)
        assert b.lower >= 2 * k * k / 2304 - 1e-12
        assert b.upper == f.disc  # torsion-free imaginary: upper is the discriminant


def test_bounds_upper_sqrt2_family():
    for k in (3, 7, 11, 15):
        f = canonicalize_biquadratic(2, k)
        assert theoretical_bounds(f).upper == pytest.approx(f.disc**0.5, rel=1e-12)
        assert f.disc**0.5 <= 16 * k + 1e-9


def test_bounds_lower_le_upper_everywhere():
    fields = (enumerate_biquadratic(50_000, REAL) + enumerate_biquadratic(50_000, IMAGINARY)
              + enumerate_cyclic(200_000, REAL) + enumerate_cyclic(200_000, IMAGINARY))
    for f in fields:
        b = theoretical_bounds(f)
        assert b.lower <= b.upper + 1e-9, f


# ---------------------------------------------------------------------------
# Liouville constants


def _exact_abs_cmp(p, q, surd, threshold: Fraction) -> bool:
    """|p/q - (P + sqrt(d))/Q| >= threshold, decided in exact arithmetic."""
    # p/q - alpha = (u - q*sqrt(d)) / (q*Q) with u = p*Q - P*q
    u = p * surd.q - surd.p * q
    s = threshold * q * abs(surd.q)
    # |u - q sqrt(d)| >= s  <=>  u - s >= q sqrt(d) or q sqrt(d) >= u + s
    d = surd.d

    def ge_sqrt(a: Fraction, m: int) -> bool:
        # a >= m*sqrt(d) with m > 0
        if a < 0:
            return False
        return a * a >= m * m * d

    def le_sqrt(a: Fraction, m: int) -> bool:
        if a <= 0:
            return True
        return a * a <= m * m * d

    return ge_sqrt(u - s, q) or le_sqrt(u + s, q)


def test_liouville_examples():
    lb = liouville_mu(QuadraticSurd(0, 2, 1))
    assert lb.mu == pytest.approx(1 / (1 + 2 * 2**0.5), rel=1e-12)
    assert 0 < lb.mu_rational <= Fraction(1, 4)
    # sqrt(m/l) with (l, m) = (1, 2): mu = 1/(l + 2 sqrt(ml))
    (l, m) = (3, 7)
    surd = QuadraticSurd(0, l * m, l)  # sqrt(m/l) = sqrt(lm)/l
    got = liouville_mu(surd)
    assert got.mu == pytest.approx(1 / (l + 2 * (l * m) ** 0.5), rel=1e-12)
    assert got.mu >= 1 / (3 * (m * l) ** 0.5) - 1e-12
    # (sqrt(D) - B)/C is a root of C x^2 + 2 B x - C
    surd = QuadraticSurd(-1, 5, 2)
    assert surd.min_poly() == (1, 1, -1)
    assert liouville_mu(surd).mu >= 1 / (2 + 2 * 5**0.5) - 1e-12


def test_liouville_rejects_rational():
    with pytest.raises(ValueError):
        QuadraticSurd(1, 9, 2)
    with pytest.raises(ValueError):
        QuadraticSurd(1, 0, 2)


@pytest.mark.parametrize("surd", [
    QuadraticSurd(0, 2, 1),
    QuadraticSurd(-1, 5, 2),
    QuadraticSurd(0, 6, 1),
])
def test_liouville_certificate(surd, rng):
    lb = liouville_mu(surd)
    mu = lb.mu_rational
    for _ in range(10_000):
        q = rng.randint(1, 1000)
        p = rng.randint(-4 * q, 4 * q)
        assert _exact_abs_cmp(p, q, surd, mu * Fraction(1, q * q))
