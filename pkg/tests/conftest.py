import numpy as np
import pytest

from grassdist import SeededGenerator, orthonormal_basis


def e(i, n):
    v = np.zeros(n)
    v[i - 1] = 1.0
    return v


def span(*vectors):
    return orthonormal_basis(np.column_stack(vectors))


@pytest.fixture
def gen():
    return SeededGenerator(20240617)


@pytest.fixture
def rng():
    return np.random.default_rng(7)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for criterion in sorted(RESULTS):
        checks = RESULTS[criterion]
        failed = {label: detail for label, (ok, detail) in checks.items() if not ok}
        if failed:
            detail = "; ".join(f"{label}: {d}" for label, d in failed.items())
            passed = len(checks) - len(failed)
            line = f"[FAIL] criterion {criterion}: {passed}/{len(checks)} sub-checks pass; {detail}"
        elif len(checks) == 1:
            line = f"[PASS] criterion {criterion}: {next(iter(checks.values()))[1]}"
        else:
            line = f"[PASS] criterion {criterion}: {len(checks)}/{len(checks)} sub-checks pass"
        terminalreporter.write_line(line)
