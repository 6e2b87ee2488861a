import pytest

from quartic_mahler._integers import is_squarefree
from quartic_mahler.exactfield import is_integral, is_primitive
from quartic_mahler.measure import c_k, mahler_measure
from quartic_mahler.rootsofunity import (
    TABLE_COPRIME_KS,
    TABLE_DIVISIBLE_KS,
    TABLE_EXPECTED,
    reproduce_tables,
    table_text,
    torsion_generator,
)


def test_tables_reproduce_published_values():
    rows = reproduce_tables()
    assert len(rows) == 12
    assert [r.k for r in rows] == list(TABLE_COPRIME_KS + TABLE_DIVISIBLE_KS)
    for row in rows:
        want_m, want_c = TABLE_EXPECTED[row.k]
        assert round(row.m_value, 2) == pytest.approx(want_m, abs=5e-3), row.k
        assert round(row.comparison, 2) == pytest.approx(want_c, abs=5e-3), row.k


def test_table_text_renders():
    text = table_text(reproduce_tables())
    assert "49.00" in text and "66.87" in text and len(text.splitlines()) == 13


def test_generator_k19():
    g = torsion_generator(19, -3)
    assert g.bespoke
    assert mahler_measure(g.element) == pytest.approx(15.55, abs=5e-3)
    assert c_k(g.field) == pytest.approx(23.10, abs=5e-3)


def test_generator_k6():
    g = torsion_generator(6, -3)
    assert g.bespoke and g.case.gcd3 == 3
    assert mahler_measure(g.element) == pytest.approx(4.00, abs=5e-3)
    assert c_k(g.field) == pytest.approx(9.73, abs=5e-3)


def test_generator_k2_sqrtminus1():
    g = torsion_generator(2, -1)
    # (sqrt(-2) + 2 sqrt(-1) + sqrt(2))/2
    assert g.bespoke
    assert is_integral(g.element) and is_primitive(g.element)
    assert mahler_measure(g.element) <= c_k(g.field)


def test_templates_integral_primitive_sample():
    for k, root in ((5, -1), (6, -1), (7, -1), (10, -3), (19, -3), (29, -3),
                    (33, -3), (34, -1), (95, -3), (111, -3), (119, -3)):
        g = torsion_generator(k, root)
        assert is_integral(g.element), (k, root)
        assert is_primitive(g.element), (k, root)


def test_epsilon_rule_unique():
    # the stated parity/congruence condition pins epsilon
    g = torsion_generator(5, -1)
    assert g.eps in (0, 1)
    g2 = torsion_generator(19 + 4 * 30, -3)  # 139 = 3 mod 4, gcd 1, above threshold
    assert g2.eps in (0, 2)


def test_branch_validation():
    with pytest.raises(ValueError):
        torsion_generator(12, -1)        # not square-free
    with pytest.raises(ValueError):
        torsion_generator(3, -3)         # quadratic field
    with pytest.raises(ValueError):
        torsion_generator(7, -3, gcd3=3)  # wrong declared branch
    with pytest.raises(ValueError):
        torsion_generator(1, -1)
    torsion_generator(7, -3, gcd3=1)


def test_measure_below_comparison_sweep():
    # the section's claim at desk scale, past every stated threshold
    for k in range(2, 501):
        if not is_squarefree(k):
            continue
        for root in (-1, -3):
            if root == -3 and k == 3:
                continue
            g = torsion_generator(k, root)
            assert mahler_measure(g.element) <= c_k(g.field) * (1 + 1e-9), (k, root)
