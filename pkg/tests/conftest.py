import math

from hypothesis import strategies as st

from eulerslopes.slopes import make_slope


@st.composite
def slopes(draw, max_p=60, max_q=60, allow_meridian=False, allow_longitude=True):
    p = draw(st.integers(0 if allow_longitude else 1, max_p))
    q = draw(st.integers(-max_q, max_q))
    if p == 0 and q == 0:
        q = 1
    if q == 0 and not allow_meridian:
        q = 1
    if p == 0 and not allow_longitude:
        p = 1
    return make_slope(p, q)


def coprime_pairs(max_p, max_q):
    for p in range(0, max_p + 1):
        for q in range(-max_q, max_q + 1):
            if math.gcd(p, q) == 1 and q != 0 and (p != 0 or q == 1):
                yield p, q


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
