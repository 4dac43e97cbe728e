"""Exact arithmetic in the Weyl group of a generalized Cartan matrix.

Group elements are stored as canonical words: the ShortLex-least reduced
expression.  All descent tests go through the action on the root lattice,

    s_i(alpha_j) = alpha_j - a_ij * alpha_i,

with exact Python integers, so nothing here depends on the Weyl group being
finite.  An element ``w`` is determined by the integer matrix whose columns
are ``w(alpha_1), ..., w(alpha_n)``; ``i`` is a right descent of ``w`` iff the
``i``-th column is a negative root.
"""

from dataclasses import dataclass
from enum import Enum
from functools import cached_property, lru_cache

from .errors import BadGenerator, MixedAmbient


class Side(str, Enum):
    LEFT = "left"
    RIGHT = "right"


def _identity(n):
    return [[int(r == c) for r in range(n)] for c in range(n)]


def _times_reflection(g, cols, i):
    """``cols := cols * s_i`` on a list of columns (in place)."""
    ci = cols[i - 1]
    row = g.matrix[i - 1]
    for j in range(g.n):
        aij = row[j]
        if aij:
            cj = cols[j]
            cols[j] = [x - aij * y for x, y in zip(cj, ci)]
    # a_ii = 2 turned column i into -column i above


def _is_negative(col):
    # real roots have uniformly signed coordinates
    for x in col:
        if x:
            return x < 0
    return False


def _check_letters(g, letters):
    out = []
    for i in letters:
        if isinstance(i, bool) or int(i) != i or not 1 <= int(i) <= g.n:
            raise BadGenerator(f"generator {i!r} outside 1..{g.n}")
        out.append(int(i))
    return tuple(out)


@lru_cache(maxsize=200_000)
def _normalize(g, letters):
    cols = _identity(g.n)
    for i in reversed(letters):
        _times_reflection(g, cols, i)
    # cols now represents w^{-1}; peel off the smallest left descent each step
    out = []
    while True:
        for i in range(1, g.n + 1):
            if _is_negative(cols[i - 1]):
                break
        else:
            return tuple(out)
        out.append(i)
        _times_reflection(g, cols, i)


@dataclass(frozen=True)
class WeylWord:
    """Canonical reduced word of a Weyl group element.

    Build instances through :func:`normalize` (or ``gcm.word(...)``); the
    constructor trusts that ``letters`` is already canonical.
    """

    gcm: object
    letters: tuple

    def __len__(self):
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __bool__(self):
        return True

    @property
    def is_identity(self):
        return not self.letters

    @cached_property
    def matrix(self):
        """Columns ``w(alpha_j)`` as a tuple of tuples."""
        cols = _identity(self.gcm.n)
        for i in self.letters:
            _times_reflection(self.gcm, cols, i)
        return tuple(tuple(c) for c in cols)

    @cached_property
    def right_descents(self):
        return frozenset(j + 1 for j, c in enumerate(self.matrix) if _is_negative(c))

    @cached_property
    def left_descents(self):
        return self.inverse().right_descents

    @cached_property
    def support(self):
        return frozenset(self.letters)

    def inverse(self):
        return normalize(self.gcm, self.letters[::-1])

    def __mul__(self, other):
        return mul(self, other)

    def __repr__(self):
        return "W(" + ",".join(map(str, self.letters)) + ")"

    def to_json(self):
        return list(self.letters)


def normalize(g, letters):
    """Canonical ShortLex reduced word of the product of ``letters``."""
    return WeylWord(g, _normalize(g, _check_letters(g, tuple(letters))))


def _same(u, v):
    if u.gcm != v.gcm:
        raise MixedAmbient("words belong to different Cartan matrices")


def mul(u, v):
    _same(u, v)
    if not u.letters:
        return v
    if not v.letters:
        return u
    return WeylWord(u.gcm, _normalize(u.gcm, u.letters + v.letters))


def product(g, *words):
    letters = ()
    for w in words:
        if w.gcm != g:
            raise MixedAmbient("words belong to different Cartan matrices")
        letters += w.letters
    return WeylWord(g, _normalize(g, letters))


def length(w):
    return len(w.letters)


def left_descents(w):
    return w.left_descents


def right_descents(w):
    return w.right_descents


def support(w):
    """The set of generators occurring in (any) reduced word of ``w``."""
    return w.support


def inverse(w):
    return w.inverse()


def act_on_root(w, r):
    """Apply ``w`` to a vector in simple-root coordinates (rightmost letter first)."""
    g = w.gcm
    v = [int(x) for x in r]
    if len(v) != g.n:
        raise ValueError(f"root vector has length {len(v)}, expected {g.n}")
    for i in reversed(w.letters):
        row = g.matrix[i - 1]
        v[i - 1] -= sum(a * x for a, x in zip(row, v))
    return tuple(v)


def simple_root(g, i):
    return tuple(int(j == i) for j in range(1, g.n + 1))


def in_subgroup(w, j):
    """Membership in the standard parabolic subgroup ``W_j``."""
    return w.support <= frozenset(j)


def translate_simple_set(w, j):
    """Indices ``i`` with ``alpha_i = w(alpha_k)`` for some ``k`` in ``j``.

    This is the index set written ``w J`` (intersected with ``I``).
    """
    winv = w.inverse()
    targets = {simple_root(w.gcm, k) for k in j}
    return frozenset(
        i for i in range(1, w.gcm.n + 1) if tuple(winv.matrix[i - 1]) in targets
    )


def bruhat_leq(u, w):
    """Bruhat order via the lifting property along the canonical word of ``w``."""
    _same(u, w)
    return _bruhat(u.gcm, u.letters, w.letters)


@lru_cache(maxsize=200_000)
def _bruhat(g, u, w):
    if len(u) > len(w):
        return False
    if not u:
        return True
    if len(u) == len(w):
        return u == w
    s, rest = w[0], w[1:]
    uw = WeylWord(g, u)
    if s in uw.left_descents:
        return _bruhat(g, _normalize(g, (s,) + u), rest)
    return _bruhat(g, u, rest)


def coset_decompose(w, j, side=Side.RIGHT):
    """Split off the parabolic part of ``w``.

    ``RIGHT``: ``w = min * par`` with ``min`` in ``W^j``.
    ``LEFT``:  ``w = par * min`` with ``min`` in ``^jW``.
    Lengths add in both cases.
    """
    j = frozenset(j)
    g = w.gcm
    side = Side(side)
    cur, stripped = w, []
    while True:
        desc = (cur.right_descents if side is Side.RIGHT else cur.left_descents) & j
        if not desc:
            break
        s = min(desc)
        stripped.append(s)
        if side is Side.RIGHT:
            cur = WeylWord(g, _normalize(g, cur.letters + (s,)))
        else:
            cur = WeylWord(g, _normalize(g, (s,) + cur.letters))
    if side is Side.RIGHT:
        par = normalize(g, stripped[::-1])
    else:
        par = normalize(g, stripped)
    return cur, par


def double_coset_decompose(w, k, j):
    """``w = a * x * b`` with ``a`` in ``W_k``, ``b`` in ``W_j`` and ``x`` the
    minimal element of ``W_k w W_j``."""
    rest, a = coset_decompose(w, k, Side.LEFT)
    x, b = coset_decompose(rest, j, Side.RIGHT)
    return a, x, b


def split_commuting(w, first, second):
    """Factor ``w`` in ``W_{first} x W_{second}`` for orthogonal index sets.

    Letters from the two sets commute, so the factors are obtained by
    filtering the word.
    """
    first, second = frozenset(first), frozenset(second)
    if not w.support <= first | second:
        raise ValueError(f"{w} is not in W_{sorted(first | second)}")
    g = w.gcm
    return (
        normalize(g, [i for i in w.letters if i in first]),
        normalize(g, [i for i in w.letters if i not in first]),
    )


def five_factor_decompose(w, k, j):
    """``w = a * x * c1 * c2`` adapted to the finite/non-finite split of ``j``.

    ``a`` in ``W_k``; ``x`` in ``^kW^{L}`` with ``L = j_inf u j_inf^perp``;
    ``c1`` minimal in ``W_{j_inf^perp} / W_{j_fin}``; ``c2`` in ``W_j``.
    """
    from .gcm import decompose_subset, orthogonal_complement

    g = w.gcm
    k, j = frozenset(k), frozenset(j)
    j0, jinf = decompose_subset(g, j)
    jinf_perp = orthogonal_complement(g, jinf)
    big = jinf | jinf_perp
    rest, a = coset_decompose(w, k, Side.LEFT)
    x, c = coset_decompose(rest, big, Side.RIGHT)
    c_perp, c_inf = split_commuting(c, jinf_perp, jinf)
    c1, c2_fin = coset_decompose(c_perp, j0, Side.RIGHT)
    c2 = c2_fin * c_inf
    return a, x, c1, c2


def is_min_right(w, j):
    """``w`` in ``W^j`` (no right descents in ``j``)."""
    return not (w.right_descents & frozenset(j))


def is_min_left(w, j):
    return not (w.left_descents & frozenset(j))


def elements_up_to(g, max_len, within=None):
    """All elements of ``W`` (or of ``W_within``) of length <= ``max_len``,
    grouped by length."""
    gens = sorted(within) if within is not None else list(range(1, g.n + 1))
    layers = [[g.word()]]
    for _ in range(max_len):
        nxt = {}
        for w in layers[-1]:
            for i in gens:
                if i not in w.right_descents:
                    v = WeylWord(g, _normalize(g, w.letters + (i,)))
                    nxt[v.letters] = v
        if not nxt:
            break
        layers.append([nxt[key] for key in sorted(nxt)])
    return layers
