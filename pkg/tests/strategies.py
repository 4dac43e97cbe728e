"""Hypothesis strategies shared by the property tests."""

from hypothesis import strategies as st

from facemonoid.faces import make_face
from facemonoid.gcm import special_subsets, validate_gcm
from facemonoid.monoid import canonical
from facemonoid.verify import TEST_MATRICES

GCMS = {name: validate_gcm(m) for name, m in TEST_MATRICES.items()}

gcm_names = st.sampled_from(sorted(GCMS))


def words(g, max_len=7):
    return st.lists(st.integers(1, g.n), max_size=max_len).map(lambda ls: g.word(*ls))


def subsets(g):
    return st.frozensets(st.integers(1, g.n), max_size=g.n)


def specials(g):
    return st.sampled_from(special_subsets(g))


def faces(g, max_len=6):
    return st.builds(lambda w, t: make_face(g, w, t), words(g, max_len), specials(g))


def elements(g, max_len=6):
    return st.builds(lambda u, t, v: canonical(g, u, t, v),
                     words(g, max_len), specials(g), words(g, max_len))


@st.composite
def gcm_and(draw, *makers):
    g = GCMS[draw(gcm_names)]
    return (g, *(draw(m(g)) for m in makers))
