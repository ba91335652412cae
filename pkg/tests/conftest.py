from fractions import Fraction

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from fgalg.algebra import Element
from fgalg.parsing import parse_element
from fgalg.words import Word, parse_word

settings.register_profile("ci", deadline=None, derandomize=True, max_examples=60,
                          suppress_health_check=[HealthCheck.too_slow])
settings.load_profile("ci")


def W(text: str) -> Word:
    return parse_word(text)


def E(text: str) -> Element:
    return parse_element(text)


def words(rank: int = 2, max_len: int = 6):
    letters = st.sampled_from([s * (i + 1) for i in range(rank) for s in (1, -1)])
    return st.lists(letters, max_size=max_len).map(lambda ls: Word(ls))


coeffs = st.fractions(min_value=-5, max_value=5, max_denominator=4)


def elements(rank: int = 2, max_len: int = 3, max_terms: int = 4, nonzero: bool = False):
    terms = st.lists(st.tuples(words(rank, max_len), coeffs), min_size=1 if nonzero else 0, max_size=max_terms)

    def build(ts):
        acc: dict[Word, Fraction] = {}
        for w, c in ts:
            acc[w] = acc.get(w, 0) + c
        return Element(acc)

    s = terms.map(build)
    return s.filter(lambda u: not u.is_zero()) if nonzero else s


def pytest_terminal_summary(terminalreporter):
    import sys

    lines = []
    for name, mod in list(sys.modules.items()):
        if name.rsplit(".", 1)[-1] == "test_acceptance":
            lines = getattr(mod, "RESULTS", [])
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
