from math import gcd

import pytest

from quartic_mahler._integers import is_squarefree, two_squares
from quartic_mahler.exactfield import minimal_polynomial
from quartic_mahler.fields import (
    IMAGINARY,
    REAL,
    canonicalize_biquadratic,
    classify_cyclic,
    enumerate_biquadratic,
    enumerate_cyclic,
)

from conftest import element


# ---------------------------------------------------------------------------
# canonical forms


def test_canonicalize_sqrt2_sqrt3():
    f = canonicalize_biquadratic(2, 3)
    assert (f.l, f.m, f.n) == (1, 2, 3)
    assert f.case == "23" and f.c == 64 and f.disc == 2304


def test_canonicalize_cyclotomic12():
    f = canonicalize_biquadratic(-1, -3)
    assert f.disc == 144 and f.signature == IMAGINARY
    # the field is the splitting field of x^4 - x^2 + 1
    zeta = element(f, (0, 0, 0, 0))
    index = {r: i for i, r in enumerate(f.radicands, start=1)}
    quarters = [0, 0, 0, 0]
    quarters[index[-1]] = 2
    quarters[index[3]] = 2
    zeta = element(f, quarters)  # (sqrt(-1) + sqrt(3)) / 2
    assert minimal_polynomial(zeta).coeffs == (1, 0, -1, 0, 1)


def test_canonicalize_representation_invariance():
    records = {canonicalize_biquadratic(*p).key for p in [(6, 10), (6, 15), (10, 15)]}
    assert len(records) == 1
    f = canonicalize_biquadratic(6, 10)
    assert canonicalize_biquadratic(*f.radicands[:2]).key == f.key


def test_canonicalize_idempotent_on_random_pairs(rng):
    sf = [d for d in range(-60, 61) if d not in (0, 1, -1) and is_squarefree(d)]
    done = 0
    while done < 60:
        d1, d2 = rng.choice(sf), rng.choice(sf)
        try:
            f = canonicalize_biquadratic(d1, d2)
        except ValueError:
            continue
        g = canonicalize_biquadratic(f.radicands[0], f.radicands[1])
        assert g == f
        done += 1


def test_canonicalize_errors():
    with pytest.raises(ValueError):
        canonicalize_biquadratic(4, 3)       # 4 not square-free
    with pytest.raises(ValueError):
        canonicalize_biquadratic(2, 2)       # quadratic
    with pytest.raises(ValueError):
        canonicalize_biquadratic(2, 8)       # 8 not square-free
    with pytest.raises(ValueError):
        canonicalize_biquadratic(1, 5)       # radicand 1
    with pytest.raises(ValueError):
        canonicalize_biquadratic(-2, -2)


def test_classify_cyclic_examples():
    f = classify_cyclic(1, 1, 2, 5)
    assert f.c == 64 and f.disc == 8000 and f.signature == REAL
    z = classify_cyclic(-1, 2, 1, 5)
    assert z.c == 1 and z.disc == 125 and z.case == 5
    for k in (1, 3, 5, 7):
        g = classify_cyclic(-k, 1, 1, 2)
        assert g.c == 256 and g.disc == 2048 * k * k


def test_classify_cyclic_even_reduction():
    # an even A reduces via (A/2, C, B, D)
    f = classify_cyclic(-2, 2, 1, 5)
    assert (f.A, f.B, f.C, f.D) == (-1, 1, 2, 5)
    with pytest.raises(ValueError):
        classify_cyclic(-4, 2, 1, 5)


def test_classify_cyclic_rejections():
    classify_cyclic(3, 1, 2, 5)          # valid tuple, no error
    with pytest.raises(ValueError):
        classify_cyclic(5, 1, 2, 5)      # gcd(A, D) != 1
    with pytest.raises(ValueError):
        classify_cyclic(1, 2, 2, 8)      # D not square-free
    with pytest.raises(ValueError):
        classify_cyclic(1, 1, 3, 9)      # D = 10 != 9
    with pytest.raises(ValueError):
        classify_cyclic(9, 1, 2, 5)      # A not square-free
    with pytest.raises(ValueError):
        classify_cyclic(1, 0, 2, 4)      # B must be positive


# ---------------------------------------------------------------------------
# enumeration


def test_enumerate_cyclic_smallest_imaginary():
    fields = enumerate_cyclic(125, IMAGINARY)
    assert [(f.A, f.B, f.C, f.D) for f in fields] == [(-1, 2, 1, 5)]
    assert enumerate_cyclic(124, IMAGINARY) == []


def test_enumerate_cyclic_real_regression():
    fields = enumerate_cyclic(100_000, REAL)
    assert len(fields) == 15
    assert fields[0].disc == 1125 and (fields[0].A, fields[0].B) == (3, 2)


def test_enumerate_cyclic_matches_brute_force():
    # independent scan straight from the definitions
    E = 50_000
    expected = set()
    for a in range(-250, 251):
        if a == 0 or a % 2 == 0 or not is_squarefree(a):
            continue
        for D in range(2, 40):
            if not is_squarefree(D) or gcd(abs(a), D) != 1:
                continue
            for B, C in two_squares(D):
                if D % 2 == 0:
                    c = 256
                elif B % 2 == 1:
                    c = 64
                elif (a + B) % 4 == 3:
                    c = 16
                else:
                    c = 1
                if c * a * a * D**3 <= E:
                    expected.add((a, B, C, D))
    for sig in (REAL, IMAGINARY):
        got = {(f.A, f.B, f.C, f.D) for f in enumerate_cyclic(E, sig)}
        want = {t for t in expected if (t[0] > 0) == (sig == REAL)}
        assert got == want


def test_enumerate_biquadratic_examples():
    real = enumerate_biquadratic(2304, REAL)
    assert any(f.key == ("biquadratic", 2, 3, 6) for f in real)
    assert enumerate_biquadratic(143, REAL) == []
    img = enumerate_biquadratic(144, IMAGINARY)
    assert any(f.disc == 144 for f in img)


def test_enumerate_biquadratic_matches_brute_force():
    E = 10_000
    for sig in (REAL, IMAGINARY):
        got = {f.key for f in enumerate_biquadratic(E, sig)}
        expected = set()
        lim = 100
        for d1 in range(-lim, lim + 1):
            for d2 in range(d1 + 1, lim + 1):
                if d1 in (0, 1) or d2 in (0, 1):
                    continue
                if not (is_squarefree(d1) and is_squarefree(d2)):
                    continue
                try:
                    f = canonicalize_biquadratic(d1, d2)
                except ValueError:
                    continue
                if f.disc <= E and f.signature == sig:
                    expected.add(f.key)
        assert got == expected


def test_enumeration_sorted_and_unique():
    for sig in (REAL, IMAGINARY):
        for fields in (enumerate_biquadratic(30_000, sig), enumerate_cyclic(80_000, sig)):
            discs = [f.disc for f in fields]
            assert discs == sorted(discs)
            assert len({f.key for f in fields}) == len(fields)
            assert all(f.disc > 0 for f in fields)


def test_cyclic_disc_sandwich():
    for f in enumerate_cyclic(200_000, REAL) + enumerate_cyclic(200_000, IMAGINARY):
        base = f.A * f.A * f.D**3
        assert base <= f.disc <= 256 * base
