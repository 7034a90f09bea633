import math

import numpy as np
import pytest

from bandlim import BandConfig, Method, d1_coefficient, kernel_window, locate, wsk_coefficient
from bandlim.kernels import classical_weights, d1_weights


def printed_d1(k, t, N):
    """Weight exactly as written: ``(t-m) sin(g (k-m)) / (pi (k-m) (k-t))``."""
    pos = locate(t, N)
    m, g = pos.m, pos.g
    if k == m:
        return 1 - g / math.pi
    return (t - m) * math.sin(g * (k - m)) / (math.pi * (k - m) * (k - t))


def sinc_form_d1(k, t, N):
    pos = locate(t, N)
    x = pos.g * (k - pos.m)
    return N * math.sin(x) / x / (k - t)


def test_wsk_values():
    assert wsk_coefficient(3, 3.0) == 1.0
    assert wsk_coefficient(0, 0.5) == pytest.approx(2 / math.pi, rel=1e-15)
    assert wsk_coefficient(5, 0.5) == pytest.approx(0.070735530263064593675, rel=1e-14)


def test_wsk_exact_delta_at_integers():
    assert [wsk_coefficient(k, 2.0) for k in range(-3, 6)] == [0.0] * 5 + [1.0] + [0.0] * 3


def test_d1_reference_point():
    assert d1_coefficient(-8, -1.71, 6) == pytest.approx(0.046104928457869639728, rel=1e-13)
    assert d1_coefficient(0, -1.71, 6) == pytest.approx(-0.13410735697383850837, rel=1e-13)


def test_d1_matches_printed_and_sinc_forms():
    rng = np.random.default_rng(3)
    for N in (2, 6, 12):
        for t in rng.uniform(-30, 30, 40):
            pos = locate(t, N)
            for k in range(math.floor(t) - 60, math.floor(t) + 61):
                v = d1_coefficient(k, t, N)
                assert v == pytest.approx(printed_d1(k, t, N), abs=1e-12)
                if k != pos.m:
                    assert v == pytest.approx(sinc_form_d1(k, t, N), abs=1e-12)


def test_d1_cardinality_exact():
    for l in range(-10, 11):
        for k in range(l - 15, l + 16):
            assert d1_coefficient(k, float(l), 6) == (1.0 if k == l else 0.0)


def test_d1_limits_near_integers():
    # right of an integer the weight of that sample tends to 1,
    # from the left it tends to N / (N + 1) because g jumps there
    N = 6
    assert d1_coefficient(4, 4 + 1e-12, N) == pytest.approx(1.0, abs=1e-9)
    assert d1_coefficient(4, 4 - 1e-12, N) == pytest.approx(N / (N + 1), abs=1e-9)


def test_d1_shift_covariance():
    rng = np.random.default_rng(4)
    for _ in range(500):
        # times on a 2**-20 grid so that t + j is exact in binary
        t = rng.integers(-2**24, 2**24) / 2**20
        j = int(rng.integers(-200, 200))
        k = int(rng.integers(-300, 300))
        assert abs(d1_coefficient(k, t + j, 6) - d1_coefficient(k - j, t, 6)) <= 1e-14


def test_d1_decay_bounded_classical_not():
    t = 0.37
    ks = np.arange(-5000, 5001)
    ks = ks[ks != 0]
    d1 = np.abs(d1_weights(ks, t, 6))
    cl = np.abs(classical_weights(ks, t))
    q2 = ks.astype(float) ** 2 * d1
    assert q2.max() < 10  # recorded bound N * max|k|/|k - t| ~ 6.x
    assert (np.abs(ks) * cl).max() < 1
    # k**2 |wsk| grows linearly in |k|
    big = np.abs(ks) > 4000
    assert (ks[big].astype(float) ** 2 * cl[big]).max() > 1000


@pytest.mark.parametrize("w0_frac", [0.0, 0.3, 0.7, 1.0])
def test_tone_identity(w0_frac):
    omega = 5 * math.pi / 6
    w0 = w0_frac * omega
    t = -1.71
    N = 6
    errs = []
    for L in (100, 1000, 10000):
        ks = np.arange(math.floor(t) - L, math.floor(t) + L + 1)
        S = np.sum(d1_weights(ks, t, N) * np.exp(1j * w0 * ks))
        errs.append(abs(S - np.exp(1j * w0 * t)))
        assert errs[-1] <= 4 * N / L
    if w0 == 0:
        assert errs[-1] < 1e-3  # partition of unity in the limit


def test_kernel_window_examples():
    cfg = BandConfig.resolve(5 * math.pi / 6)
    w = kernel_window("classical", 0.5, 1, cfg)
    assert w.center == 0 and w.ks.tolist() == [-1, 0, 1]
    assert w[0] == pytest.approx(2 / math.pi)
    assert w[1] == pytest.approx(2 / math.pi)
    assert w[-1] == pytest.approx(-2 / (3 * math.pi))

    w = kernel_window("d1", 6.0, 3, cfg)
    assert w.as_dict() == {3: 0.0, 4: 0.0, 5: 0.0, 6: 1.0, 7: 0.0, 8: 0.0, 9: 0.0}

    w = kernel_window(Method.D1, -1.71, 50, cfg)
    assert w.values.size == 101 and w.method is Method.D1


def test_kernel_window_cardinality_all_methods(ref_config):
    for method in Method:
        for t in (-3.0, 0.0, 11.0):
            vals = kernel_window(method, t, 20, ref_config).as_dict()
            assert vals[int(t)] == 1.0
            assert all(v == 0.0 for k, v in vals.items() if k != int(t))


def test_kernel_window_rejects():
    cfg = BandConfig.resolve(2.0)
    with pytest.raises(ValueError):
        kernel_window("lanczos", 0.5, 3, cfg)
    with pytest.raises(ValueError):
        kernel_window("d1", 0.5, 0, cfg)


def test_d1_backends_agree(backend):
    ks = np.arange(-700, 700)
    v = d1_weights(ks, -1.71, 6)
    ref = np.array([printed_d1(int(k), -1.71, 6) for k in ks])
    assert np.max(np.abs(v - ref)) < 1e-12
