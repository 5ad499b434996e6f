import hypothesis.strategies as st
from hypothesis import settings

from uturn.algebra import LaurentPolynomial

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")


def laurent(n, max_terms=4, lo=-3, hi=3):
    exps = st.tuples(*[st.integers(lo, hi)] * n)
    terms = st.dictionaries(exps, st.integers(-5, 5), max_size=max_terms)
    return terms.map(lambda d: LaurentPolynomial(d, n))


# acceptance lines, printed at the end of the run
ACCEPTANCE = {}


def record(k, ok, detail):
    line = f"criterion {k:>2}: {'PASS' if ok else 'FAIL'}  {detail}"
    ACCEPTANCE[k] = line
    print(line)
    return ok


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for k in sorted(ACCEPTANCE):
            terminalreporter.write_line(ACCEPTANCE[k])
