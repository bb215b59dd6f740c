import sys

from fractions import Fraction

from hypothesis import strategies as st

from stid.matrix import Matrix
from stid.semiring import GHOST_TAG, REAL_TAG, ZERO, SupertropScalar, TropScalar
from stid.words import Word

mags = st.builds(Fraction, st.integers(-6, 6), st.integers(1, 3))

st_scalars = st.one_of(
    st.just(ZERO),
    st.builds(SupertropScalar, st.sampled_from([REAL_TAG, GHOST_TAG]), mags),
)
trop_scalars = st.one_of(st.just(TropScalar(None)), st.builds(TropScalar, mags))
words = st.text("ab", min_size=1, max_size=7).map(Word)


def st_matrices(n):
    return st.lists(st.lists(st_scalars, min_size=n, max_size=n), min_size=n, max_size=n).map(Matrix)


def trop_matrices(n):
    return st.lists(st.lists(trop_scalars, min_size=n, max_size=n), min_size=n, max_size=n).map(Matrix)


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in sorted(mod.RESULTS, key=lambda s: int(s.split()[2].rstrip(":"))):
        terminalreporter.write_line(line)
