import pytest

from quartic_mahler.exactfield import is_integral, is_primitive, minimal_polynomial
from quartic_mahler.fields import (
    IMAGINARY,
    REAL,
    canonicalize_biquadratic,
    classify_cyclic,
    enumerate_biquadratic,
    enumerate_cyclic,
)
from quartic_mahler.measure import theoretical_bounds
from quartic_mahler.search import (
    SearchBox,
    brute_force_min,
    min_mahler,
    minimize_over_fields,
    search_box,
)


def test_search_box_cyclic_example():
    f = classify_cyclic(1, 1, 2, 5)
    assert search_box(f, 100).bounds == (400, 178, 148, 240)


def test_search_box_biquadratic_example():
    f = canonicalize_biquadratic(2, 3)
    assert search_box(f, 10).bounds == (40, 28, 23, 16)


def test_search_box_limit_guard():
    with pytest.raises(ValueError):
        search_box(canonicalize_biquadratic(2, 3), 0.5)


def test_search_box_imaginary_cyclic_symmetric():
    # conjugation rotates the last two coordinates, so their bounds agree
    f = classify_cyclic(-1, 2, 1, 5)
    b = search_box(f, 10).bounds
    assert b[2] == b[3]


def test_cyclotomic_minima():
    assert min_mahler(classify_cyclic(-1, 2, 1, 5)).m_value == 1.0
    assert min_mahler(canonicalize_biquadratic(-1, -3)).m_value == 1.0
    assert min_mahler(canonicalize_biquadratic(-1, 2)).m_value == 1.0


def test_min_mahler_sqrt2_sqrt3_regression():
    # frozen from the brute-force oracle: M(O_K) = 2 + sqrt(3), attained by
    # (sqrt2 + sqrt6)/2
    r = min_mahler(canonicalize_biquadratic(2, 3))
    assert r.m_value == pytest.approx(2 + 3**0.5, rel=1e-12)
    assert r.quarters == (0, 2, 0, 2)
    assert r.phase1_bound == pytest.approx(2 + 3**0.5, rel=1e-9)


def test_min_mahler_result_invariants():
    for field in (classify_cyclic(1, 1, 2, 5), canonicalize_biquadratic(-7, -14)):
        r = min_mahler(field)
        el = r.element
        assert is_integral(el) and is_primitive(el)
        b = theoretical_bounds(field)
        assert b.lower <= r.m_value * (1 + 1e-9)
        assert r.m_value <= b.upper * (1 + 1e-9)
        assert r.m_value <= r.phase1_bound * (1 + 1e-9)
        assert r.scanned > 0


def test_engine_matches_oracle_small_fields():
    fields = (enumerate_cyclic(20_000, REAL) + enumerate_cyclic(3_000, IMAGINARY)
              + enumerate_biquadratic(3_000, REAL) + enumerate_biquadratic(3_000, IMAGINARY))
    assert len(fields) >= 25
    for field in fields:
        engine = min_mahler(field)
        oracle = brute_force_min(field, search_box(field, engine.phase1_bound))
        assert engine.m_value == pytest.approx(oracle.m_value, rel=1e-9), field
        assert engine.quarters == oracle.quarters, field


def test_box_monotonicity():
    field = canonicalize_biquadratic(2, 3)
    r = min_mahler(field)
    small = brute_force_min(field, search_box(field, r.phase1_bound))
    large = brute_force_min(field, search_box(field, 1.5 * r.phase1_bound))
    assert large.m_value <= small.m_value * (1 + 1e-12)
    assert large.quarters == small.quarters


def test_empty_box_raises():
    field = canonicalize_biquadratic(2, 3)
    with pytest.raises(ValueError):
        brute_force_min(field, SearchBox(limit=1.0, bounds=(0, 0, 0, 0)))


def test_phase1_bound_never_below_minimum():
    for field in enumerate_cyclic(30_000, REAL):
        r = min_mahler(field)
        assert r.phase1_bound >= r.m_value * (1 - 1e-9)


def test_minimize_over_fields_sorted_and_parallel_consistent():
    fields = enumerate_cyclic(20_000, REAL)
    seq = minimize_over_fields(fields, processes=1)
    par = minimize_over_fields(fields, processes=2)
    assert [r.field.key for r in seq] == [r.field.key for r in par]
    assert [r.quarters for r in seq] == [r.quarters for r in par]
    assert [r.m_value for r in seq] == [r.m_value for r in par]
    discs = [r.field.disc for r in seq]
    assert discs == sorted(discs)


def test_minimizer_minpoly_degree_four():
    for field in (classify_cyclic(3, 2, 1, 5), canonicalize_biquadratic(-2, -3)):
        r = min_mahler(field)
        assert minimal_polynomial(r.element).degree == 4
