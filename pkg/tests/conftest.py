from fractions import Fraction

from hypothesis import strategies as st

from orthogf.exact import PolyX

small_rationals = st.fractions(min_value=-3, max_value=3, max_denominator=4)
nonzero_rationals = small_rationals.filter(lambda q: q != 0)


@st.composite
def polys(draw, max_degree=4):
    coeffs = draw(st.lists(small_rationals, max_size=max_degree + 1))
    return PolyX(tuple(coeffs))


def F(s):
    return Fraction(s)


_acceptance = {}


def pytest_runtest_logreport(report):
    if report.when == "call" and "test_acceptance.py" in report.nodeid:
        _acceptance[report.nodeid.split("::")[-1]] = report.outcome


def pytest_terminal_summary(terminalreporter):
    if not _acceptance:
        return
    terminalreporter.section("acceptance criteria")
    for name, outcome in _acceptance.items():
        mark = "PASS" if outcome == "passed" else "FAIL"
        terminalreporter.write_line(f"{mark}  {name}")
