import pytest

from tnorm_analogy import _pykernels

# 0.0 to 1.0 step 0.05 plus two near-boundary probes
GRID = [i / 20 for i in range(21)] + [1e-9, 1 - 1e-9]

KERNEL_BACKENDS = [_pykernels]
try:
    from tnorm_analogy import _ckernels
except ImportError:  # extension not built
    _ckernels = None
else:
    KERNEL_BACKENDS.append(_ckernels)


@pytest.fixture(params=KERNEL_BACKENDS, ids=lambda m: m.BACKEND)
def kernels(request):
    return request.param


_CRITERIA = {}


@pytest.fixture
def criterion(request):
    """Record a named acceptance criterion; the outcome is printed at the end."""

    def record(label):
        _CRITERIA[request.node.nodeid] = label

    return record


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    if rep.when == "call" and item.nodeid in _CRITERIA:
        label = _CRITERIA[item.nodeid]
        _CRITERIA[item.nodeid] = (label, "PASS" if rep.passed else "FAIL")


def pytest_terminal_summary(terminalreporter):
    done = [v for v in _CRITERIA.values() if isinstance(v, tuple)]
    if not done:
        return
    terminalreporter.section("acceptance criteria")
    for label, status in sorted(done):
        terminalreporter.write_line(f"{status}  {label}")
