import pytest

from hilbincidence.staircase import STANDARD, parse_staircase

# Staircases of the worked example, H = (1,2,3,2,1), grading (1,-1).
NAMED = {
    "E_gen": "y^3,x*y^2,x^3*y,x^5",
    "a": "y^3,x^2*y,x^5",
    "b": "y^3,x*y^2,x^4",
    "c": "y^4,x*y^2,x^2*y,x^5",
    "d": "y^3,x^3",
    "e": "y^5,x*y^2,x^2*y,x^4",
    "f": "y^4,x^2*y,x^3",
    "g": "y^5,x*y^2,x^3",
    "h": "y^5,x*y^3,x^2*y,x^3",
}

LISTED_CANDIDATES = [
    ("a", "c"), ("a", "d"), ("a", "e"), ("a", "f"), ("a", "g"), ("a", "h"),
    ("b", "d"), ("b", "e"), ("b", "f"), ("b", "g"), ("b", "h"),
    ("c", "e"), ("c", "f"), ("c", "g"), ("c", "h"),
    ("d", "f"), ("d", "g"), ("d", "h"),
    ("e", "g"), ("e", "h"),
    ("f", "h"), ("g", "h"),
]

WITNESSES = [("T", "a", "e"), ("U", "b", "d"), ("V", "b", "f"), ("W", "c", "e"), ("Z", "d", "f")]


@pytest.fixture(scope="session")
def named():
    return {name: parse_staircase(gens) for name, gens in NAMED.items()}


@pytest.fixture(scope="session")
def std():
    return STANDARD


def pytest_terminal_summary(terminalreporter):
    import sys

    module = sys.modules.get("test_acceptance")
    lines = getattr(module, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in sorted(lines):
            terminalreporter.write_line(line)
