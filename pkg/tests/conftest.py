import pytest

from dihedral_monoid import MATRIX, new_presentation

SMALL = ((4, 3), (5, 4), (6, 5))


@pytest.fixture(params=MATRIX, ids=lambda nk: f"n{nk[0]}k{nk[1]}")
def pres(request):
    return new_presentation(*request.param)


@pytest.fixture(params=SMALL, ids=lambda nk: f"n{nk[0]}k{nk[1]}")
def small_pres(request):
    return new_presentation(*request.param)


@pytest.fixture
def p43():
    return new_presentation(4, 3)


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if RESULTS:
        terminalreporter.section("acceptance criteria")
        for num in sorted(RESULTS):
            terminalreporter.write_line(RESULTS[num])
