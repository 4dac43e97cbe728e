import itertools

import pytest
from hypothesis import given

from facemonoid.coxeter import (
    Side,
    act_on_root,
    bruhat_leq,
    coset_decompose,
    double_coset_decompose,
    elements_up_to,
    five_factor_decompose,
    is_min_left,
    is_min_right,
    normalize,
    simple_root,
)
from facemonoid.errors import BadGenerator, MixedAmbient
from facemonoid.gcm import decompose_subset, orthogonal_complement

from strategies import GCMS, gcm_and, subsets, words


# --- independent oracles ----------------------------------------------------

def _reflection(g, i):
    """Matrix (rows) of s_i on the root lattice: s_i a_j = a_j - a_ij a_i."""
    n = g.n
    m = [[int(r == c) for c in range(n)] for r in range(n)]
    for j in range(n):
        m[i - 1][j] -= g.a(i, j + 1)
    return tuple(tuple(r) for r in m)


def _matmul(a, b):
    return tuple(tuple(sum(a[r][k] * b[k][c] for k in range(len(b))) for c in range(len(b[0])))
                 for r in range(len(a)))


def _matrix_of(g, letters):
    m = tuple(tuple(int(r == c) for c in range(g.n)) for r in range(g.n))
    for i in letters:
        m = _matmul(m, _reflection(g, i))
    return m


def _bfs_lengths(g, radius):
    ident = _matrix_of(g, ())
    dist, frontier = {ident: 0}, [ident]
    for d in range(1, radius + 1):
        nxt = []
        for m in frontier:
            for i in range(1, g.n + 1):
                m2 = _matmul(m, _reflection(g, i))
                if m2 not in dist:
                    dist[m2] = d
                    nxt.append(m2)
        frontier = nxt
    return dist


def _bruhat_subword(u, w):
    target = _matrix_of(u.gcm, u.letters)
    for mask in itertools.product((0, 1), repeat=len(w.letters)):
        sub = [x for x, keep in zip(w.letters, mask) if keep]
        if len(sub) == len(u.letters) and _matrix_of(u.gcm, sub) == target:
            return True
    return False


# --- worked examples --------------------------------------------------------

def test_normalize_examples(fin, aff):
    assert fin.word(1, 1).letters == ()
    assert fin.word(2, 1, 2).letters == (1, 2, 1)
    assert aff.word(1, 2, 1, 2).letters == (1, 2, 1, 2)
    with pytest.raises(BadGenerator):
        fin.word(3)


def test_mul_and_descents(aff, fin, hyp):
    w = aff.word(1, 2) * aff.word(1)
    assert w.letters == (1, 2, 1) and w.right_descents == {1}
    assert (aff.word(1) * aff.word(1)).is_identity
    assert aff.word().left_descents == frozenset()
    with pytest.raises(MixedAmbient):
        fin.word(1) * hyp.word(1)


def test_root_action(aff, hyp, fin):
    assert act_on_root(fin.word(1), simple_root(fin, 1)) == (-1, 0)
    assert act_on_root(aff.word(1), simple_root(aff, 2)) == (2, 1)
    assert act_on_root(hyp.word(3), simple_root(hyp, 1)) == (1, 0, 1)


def test_support_and_bruhat(fin, aff, hyp):
    assert aff.word().support == frozenset()
    assert fin.word(1, 2, 1).support == {1, 2}
    assert hyp.word(3, 1).support == {1, 3}
    assert bruhat_leq(aff.word(), aff.word(2, 1, 2))
    assert bruhat_leq(aff.word(1), aff.word(1, 2))
    assert not bruhat_leq(aff.word(2), aff.word(1))


def test_coset_examples(fin, hyp):
    assert coset_decompose(fin.word(1, 2), {2}, Side.RIGHT) == (fin.word(1), fin.word(2))
    assert coset_decompose(fin.word(1, 2), set()) == (fin.word(1, 2), fin.word())
    assert coset_decompose(fin.word(2, 1), {1, 2}) == (fin.word(), fin.word(2, 1))
    k = {1, 2}
    assert double_coset_decompose(hyp.word(3), k, k) == (hyp.word(), hyp.word(3), hyp.word())
    assert double_coset_decompose(hyp.word(1, 3), k, k) == (hyp.word(1), hyp.word(3), hyp.word())
    assert double_coset_decompose(hyp.word(2, 1), k, {3}) == (hyp.word(2, 1), hyp.word(), hyp.word())


def test_five_factor_examples(hyp):
    e = hyp.word()
    assert five_factor_decompose(hyp.word(3), {1, 2}, set()) == (e, e, hyp.word(3), e)
    assert five_factor_decompose(hyp.word(3, 1), {1, 2}, {3}) == (e, e, hyp.word(3, 1), e)
    assert five_factor_decompose(e, {1}, {2}) == (e, e, e, e)


# --- oracle comparisons -----------------------------------------------------

@pytest.mark.parametrize("name", sorted(GCMS))
def test_lengths_match_bfs(name):
    g = GCMS[name]
    radius = 6
    dist = _bfs_lengths(g, radius)
    ours = [w for layer in elements_up_to(g, radius) for w in layer]
    assert len(ours) == len(dist)
    for w in ours:
        assert dist[_matrix_of(g, w.letters)] == len(w)


@pytest.mark.parametrize("name", ["M_aff", "M_hyp", "M_dec", "M_fin"])
def test_bruhat_matches_subwords(name):
    g = GCMS[name]
    els = [w for layer in elements_up_to(g, 5) for w in layer]
    for u in els:
        for w in els:
            if len(u) <= len(w):
                assert bruhat_leq(u, w) == _bruhat_subword(u, w), (u, w)


@given(gcm_and(words))
def test_canonical_is_shortlex_least(data):
    g, w = data
    target = _matrix_of(g, w.letters)
    for cand in itertools.product(range(1, g.n + 1), repeat=len(w)):
        if cand >= w.letters:
            break
        assert _matrix_of(g, cand) != target


# --- properties -------------------------------------------------------------

@given(gcm_and(words, words, words))
def test_group_laws(data):
    g, u, v, w = data
    assert normalize(g, u.letters) == u
    assert (u * v) * w == u * (v * w)
    assert (u * u.inverse()).is_identity


@given(gcm_and(words))
def test_descents_and_length(data):
    g, w = data
    for i in range(1, g.n + 1):
        s = g.word(i)
        if i in w.right_descents:
            assert len(w * s) == len(w) - 1
        else:
            assert len(w * s) == len(w) + 1
        root = act_on_root(w, simple_root(g, i))
        assert all(x >= 0 for x in root) or all(x <= 0 for x in root)


@given(gcm_and(words, words))
def test_bruhat_support_monotone(data):
    g, u, w = data
    if bruhat_leq(u, w):
        assert u.support <= w.support


@given(gcm_and(words, subsets))
def test_coset_decompose_properties(data):
    g, w, j = data
    m, p = coset_decompose(w, j, Side.RIGHT)
    assert m * p == w and len(m) + len(p) == len(w)
    assert is_min_right(m, j) and p.support <= j
    assert coset_decompose(m, j, Side.RIGHT) == (m, g.word())
    m, p = coset_decompose(w, j, Side.LEFT)
    assert p * m == w and len(m) + len(p) == len(w)
    assert is_min_left(m, j) and p.support <= j


@given(gcm_and(words, subsets, subsets))
def test_double_coset_minimal(data):
    g, w, k, j = data
    a, x, b = double_coset_decompose(w, k, j)
    assert a * x * b == w
    assert a.support <= k and b.support <= j
    assert is_min_left(x, k) and is_min_right(x, j)


@given(gcm_and(words, subsets, subsets))
def test_five_factor_memberships(data):
    g, w, k, j = data
    a, x, c1, c2 = five_factor_decompose(w, k, j)
    j0, jinf = decompose_subset(g, j)
    perp = orthogonal_complement(g, jinf)
    assert a * x * c1 * c2 == w
    assert a.support <= k
    assert is_min_left(x, k) and is_min_right(x, jinf | perp)
    assert c1.support <= perp and is_min_right(c1, j0)
    assert c2.support <= j
    assert is_min_left(x * c1, k) and is_min_right(x * c1, j)
    assert is_min_left(x * c1 * c2, k)
