import random

import pytest

from quartic_mahler.exactfield import FieldElement, basis_for


@pytest.fixture
def rng():
    return random.Random(20260811)


def element(field, quarters):
    return FieldElement.from_quarters(basis_for(field), quarters)


def element_by_radicand(field, rational, coeffs):
    """Biquadratic element from quarter coefficients keyed by radicand value."""
    quarters = [rational, 0, 0, 0]
    index = {r: i for i, r in enumerate(field.radicands, start=1)}
    for rad, coeff in coeffs.items():
        quarters[index[rad]] = coeff
    return element(field, quarters)
