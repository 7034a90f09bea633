import math
import sys

import pytest

from bandlim import BandConfig, _backend, _fallback

OMEGA = 5 * math.pi / 6
T_REF = -1.71


@pytest.fixture
def omega():
    return OMEGA


@pytest.fixture
def ref_config():
    # alpha = 1 resolves to d = 2, N = 6
    return BandConfig.resolve(OMEGA, alpha=1.0)


def _available_backends():
    out = [("python", _fallback)]
    try:
        from bandlim import _ckernels
    except ImportError:
        return out
    return out + [("compiled", _ckernels)]


@pytest.fixture(params=[name for name, _ in _available_backends()])
def backend(request, monkeypatch):
    """Run a test once per kernel backend."""
    mod = dict(_available_backends())[request.param]
    monkeypatch.setattr(_backend, "kernels", mod)
    return request.param


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[num])
