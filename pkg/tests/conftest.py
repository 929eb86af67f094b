import pytest

from sbaf import fixtures, kernels

BACKENDS = ["cython", "python"]


@pytest.fixture(params=BACKENDS)
def backend(request):
    if request.param == "cython" and not kernels.compiled_available():
        pytest.skip("compiled kernels not built")
    with kernels.forced_python(request.param == "python"):
        yield request.param


@pytest.fixture(scope="session")
def fx():
    return {name: fixtures.load(name) for name in fixtures.SBAF_FIXTURES}


def fs(*families):
    """Normalise an iterable of id collections to a set of frozensets."""
    return {frozenset(e) for e in families}


def draw_subset(data, items):
    from hypothesis import strategies as st
    items = list(items)
    if not items:
        return frozenset()
    return frozenset(data.draw(st.sets(st.sampled_from(items))))


def pytest_terminal_summary(terminalreporter):
    import test_acceptance
    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for line in test_acceptance.RESULTS:
            terminalreporter.write_line(line)
