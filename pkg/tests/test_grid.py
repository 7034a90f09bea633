import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from bandlim import BandConfig, DomainError, locate, min_smoothness, select_N


@pytest.mark.parametrize(
    "omega, expected",
    [(5 * math.pi / 6, 6), (math.pi / 2, 2), (0.95 * math.pi, 20), (2 * math.pi / 3, 4)],
)
def test_select_N(omega, expected):
    N = select_N(omega)
    assert N == expected
    # brute force: first even integer satisfying the strict bound
    brute = next(n for n in range(2, 1000, 2) if n > omega / (math.pi - omega) and math.pi * n / (n + 1) > omega)
    assert N == brute


@pytest.mark.parametrize("omega", [0.0, -1.0, math.pi, 4.0])
def test_select_N_domain(omega):
    with pytest.raises(DomainError):
        select_N(omega)


@given(st.floats(min_value=1e-6, max_value=math.pi - 1e-3))
def test_select_N_bound_holds(omega):
    N = select_N(omega)
    assert N % 2 == 0
    assert math.pi * N / (N + 1) > omega
    assert not (N > 2 and math.pi * (N - 2) / (N - 1) > omega)


def test_locate_reference_point():
    pos = locate(-1.71, 6)
    assert pos.m == -8
    assert pos.tau == pytest.approx(0.29, abs=1e-14)
    assert pos.g == pytest.approx(6 * math.pi / 6.29, rel=1e-15)
    assert pos.t_reduced == pytest.approx(6.29, abs=1e-14)


def test_locate_integers():
    pos = locate(6.0, 6)
    assert (pos.m, pos.tau, pos.g) == (0, 0.0, math.pi)
    for k in range(-20, 21):
        assert locate(k, 6).g == math.pi
        assert locate(k, 6).tau == 0.0


def test_locate_half():
    pos = locate(7.5, 6)
    assert (pos.m, pos.tau) == (1, 0.5)
    assert pos.g == pytest.approx(6 * math.pi / 6.5, rel=1e-15)
    assert (pos.t - pos.m) * pos.g == pytest.approx(6 * math.pi, rel=1e-15)


def test_locate_invariants_random():
    rng = np.random.default_rng(1)
    for N in (2, 6, 20):
        for t in rng.uniform(-1e3, 1e3, 1000):
            pos = locate(t, N)
            assert N + pos.m <= t < N + pos.m + 1
            assert 0.0 <= pos.tau < 1.0
            assert math.pi * N / (N + 1) < pos.g <= math.pi
            assert (t - pos.m) * pos.g == pytest.approx(math.pi * N, rel=1e-14)


def test_locate_periodic():
    rng = np.random.default_rng(2)
    ts = rng.uniform(-50, 50, 1000)
    js = rng.integers(-100, 100, 1000)
    for t, j in zip(ts, js):
        a, b = locate(t, 6), locate(t + j, 6)
        assert abs(a.g - b.g) < 1e-12
        assert abs(a.tau - b.tau) < 1e-12


def test_locate_rejects_odd_N():
    with pytest.raises(DomainError):
        locate(0.3, 5)


def test_band_config_resolve():
    cfg = BandConfig.resolve(5 * math.pi / 6, alpha=1.0)
    assert (cfg.d, cfg.N) == (2, 6)
    assert BandConfig.resolve(0.5, alpha=0.3).d == 1
    assert min_smoothness(1.5) == 3
    assert min_smoothness(0.49) == 1


@pytest.mark.parametrize(
    "kwargs",
    [
        dict(omega=5 * math.pi / 6, d=2, N=4),  # N too small
        dict(omega=5 * math.pi / 6, d=2, N=7),  # odd
        dict(omega=5 * math.pi / 6, alpha=1.0, d=1, N=6),  # d too small for alpha
        dict(omega=math.pi, N=6),
    ],
)
def test_band_config_invalid(kwargs):
    with pytest.raises(DomainError):
        BandConfig(**kwargs)
