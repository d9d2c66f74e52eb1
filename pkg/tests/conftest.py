import mpmath
import pytest
from hypothesis import settings

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

mpmath.mp.dps = 40


def g_exact(x) -> float:
    """Thermal-state entropy in bits, evaluated at 40 digits."""
    x = mpmath.mpf(x)
    if x == 0:
        return 0.0
    return float((x + 1) * mpmath.log(x + 1, 2) - x * mpmath.log(x, 2))


@pytest.fixture
def g_oracle():
    return g_exact


ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[k]
        terminalreporter.write_line(f"criterion {k:2d}: {'PASS' if ok else 'FAIL'}  {detail}")
