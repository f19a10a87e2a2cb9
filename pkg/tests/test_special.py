import numpy as np
import pytest
from hypothesis import given, strategies as st
from scipy import special

from lunarlink.special import gammainc_lower, gammainc_upper

shapes = st.floats(0.05, 60.0)
args = st.floats(0.0, 400.0)


@given(shapes, args)
def test_lower_matches_scipy(a, x):
    assert gammainc_lower(a, x) == pytest.approx(special.gammainc(a, x), rel=1e-12, abs=1e-15)


@given(shapes, args)
def test_upper_matches_scipy(a, x):
    assert gammainc_upper(a, x) == pytest.approx(special.gammaincc(a, x), rel=1e-11, abs=1e-15)


@given(shapes, args)
def test_complement(a, x):
    assert gammainc_lower(a, x) + gammainc_upper(a, x) == pytest.approx(1.0, abs=1e-14)


def test_exponential_case():
    x = np.linspace(0, 20, 41)
    np.testing.assert_allclose(gammainc_lower(1.0, x), -np.expm1(-x), rtol=1e-13, atol=1e-16)


def test_shape_preserved_and_limits():
    out = gammainc_lower(2.5, np.zeros((2, 3)))
    assert out.shape == (2, 3) and np.all(out == 0)
    assert gammainc_lower(3.0, np.inf) == 1.0
    assert isinstance(gammainc_lower(3.0, 1.0), float)


def test_rejects_bad_input():
    with pytest.raises(ValueError):
        gammainc_lower(0.0, 1.0)
    with pytest.raises(ValueError):
        gammainc_lower(1.0, -1.0)
