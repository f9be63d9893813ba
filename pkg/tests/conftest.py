from __future__ import annotations

from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from treehopf.algebra import Element
from treehopf.forest import enumerate_forests, enumerate_trees

settings.register_profile(
    "treehopf",
    deadline=None,
    derandomize=True,
    max_examples=60,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("treehopf")

TWO = ("a", "b")


def forests(max_weight: int = 4, decor=("*",), min_weight: int = 0):
    return st.integers(min_weight, max_weight).flatmap(
        lambda n: st.sampled_from(enumerate_forests(n, decor))
    )


def trees(max_weight: int = 4, decor=("*",)):
    return st.integers(1, max_weight).flatmap(lambda n: st.sampled_from(enumerate_trees(n, decor)))


def elements(max_weight: int = 3, decor=("*",), max_terms: int = 3):
    pairs = st.lists(
        st.tuples(forests(max_weight, decor), st.integers(-3, 3)), max_size=max_terms
    )
    return pairs.map(Element.from_pairs)


# Acceptance criteria record their outcome here; the summary hook prints one line each.
ACCEPTANCE: dict[int, tuple[bool, str]] = {}


def record_criterion(number: int, ok: bool, text: str) -> None:
    prev = ACCEPTANCE.get(number)
    if prev is not None:
        ok = ok and prev[0]
    ACCEPTANCE[number] = (ok, text)
    print(f"{'PASS' if ok else 'FAIL'} criterion {number}: {text}")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        ok, text = ACCEPTANCE[number]
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'} criterion {number}: {text}")
