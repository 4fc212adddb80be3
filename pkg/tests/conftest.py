from fractions import Fraction

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from spanline.exact_poly import Polynomial, VarUniverse

settings.register_profile(
    "spanline", max_examples=200, derandomize=True, deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("spanline")

SMALL = VarUniverse(2, 1, 1)

coefficients = st.builds(Fraction, st.integers(-5, 5), st.integers(1, 3))


def polynomials(universe=SMALL, max_exp=2, max_terms=4):
    mono = st.tuples(*[st.integers(0, max_exp)] * universe.nvars)
    return st.dictionaries(mono, coefficients, max_size=max_terms).map(lambda t: Polynomial(universe, t))


def monomials(universe=SMALL, max_exp=3):
    return st.tuples(*[st.integers(0, max_exp)] * universe.nvars)


ACCEPTANCE_LINES: dict = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for key in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[key])
