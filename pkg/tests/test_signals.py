import cmath
import math

import numpy as np
import pytest

from bandlim import DomainError, make_linear_growth, make_sinc_combo, make_tone

OMEGA = 5 * math.pi / 6


def test_convention_gate():
    assert float(make_sinc_combo(OMEGA)(-1.71)) == pytest.approx(-1.8827743114725989937, rel=1e-12)
    assert float(make_linear_growth(OMEGA)(-1.71)) == pytest.approx(-1.0048884481864308604, rel=1e-12)


def test_sinc_combo_values():
    x = make_sinc_combo(OMEGA)
    # mpmath, 30 digits
    assert float(x(0.0)) == pytest.approx(0.088517230402516008696, rel=1e-14)
    t1 = 1 - 1 / (2 * OMEGA)
    second = -2 * math.sin(OMEGA * (t1 + 2) / math.sqrt(2) - 1) / (OMEGA * (t1 + 2) / math.sqrt(2) - 1)
    assert float(x(t1)) == pytest.approx(1 + second, rel=1e-14)
    assert x.growth_exponent == 0 and x.band_edge == OMEGA


def test_linear_growth_values():
    x = make_linear_growth(OMEGA)
    assert float(x(0.0)) == 0.0
    assert float(x(1.0)) == pytest.approx(math.sin(0.5) - 2 * math.sin(3 * OMEGA / math.sqrt(2) - 1), rel=1e-14)
    assert float(x(1.0)) == pytest.approx(2.4542656938307715251, rel=1e-14)
    assert x.growth_exponent == 1


def test_vectorized():
    x = make_sinc_combo(OMEGA)
    ts = np.linspace(-5, 5, 11)
    assert np.array_equal(x(ts), np.array([float(x(t)) for t in ts]))


def test_tone_examples():
    one = make_tone(0.0, 0)
    assert np.all(one(np.array([-3.3, 0.0, 7.1])) == 1)
    w0 = 0.7 * OMEGA
    assert make_tone(w0, 0)(0.0) == 1
    assert complex(make_tone(w0, 1)(2.5)) == pytest.approx(2.5 * cmath.exp(1j * w0 * 2.5), rel=1e-15)
    tn = make_tone(-w0, 2)
    assert tn.band_edge == w0 and tn.growth_exponent == 2


@pytest.mark.parametrize("omega", [0.0, -1.0, math.pi, 4.0])
def test_domain_errors(omega):
    with pytest.raises(DomainError):
        make_sinc_combo(omega)
    with pytest.raises(DomainError):
        make_linear_growth(omega)


def test_tone_domain_errors():
    with pytest.raises(DomainError):
        make_tone(math.pi, 0)
    with pytest.raises(DomainError):
        make_tone(0.5, -1)
    with pytest.raises(DomainError):
        make_tone(0.5, 1.5)
