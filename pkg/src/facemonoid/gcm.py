"""Generalized Cartan matrices and the index-set calculus built on them.

Indices are 1-based everywhere: a rank ``n`` matrix has index set
``{1, ..., n}`` and subsets are ``frozenset`` objects of such integers.
"""

from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache, wraps
from itertools import combinations

from .errors import (
    AsymmetricZero,
    BadDiagonal,
    Decomposable,
    EmptySubset,
    NotSquare,
    PositiveOffDiagonal,
)


class TypeClass(str, Enum):
    FINITE = "Finite"
    AFFINE = "Affine"
    INDEFINITE = "Indefinite"


@dataclass(frozen=True)
class GCM:
    """A validated generalized Cartan matrix.

    Use :func:`validate_gcm` to build one from raw input; the constructor
    assumes the invariants already hold.
    """

    matrix: tuple
    n: int = field(init=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "n", len(self.matrix))

    def a(self, i, j):
        """Entry ``a_ij`` with 1-based indices."""
        return self.matrix[i - 1][j - 1]

    @property
    def I(self):
        return frozenset(range(1, self.n + 1))

    def word(self, *letters):
        from .coxeter import normalize

        if len(letters) == 1 and not isinstance(letters[0], int):
            letters = tuple(letters[0])
        return normalize(self, letters)

    @property
    def one(self):
        return self.word()

    def to_json(self):
        return {"matrix": [list(row) for row in self.matrix]}

    def __repr__(self):
        return f"GCM({[list(r) for r in self.matrix]})"


def validate_gcm(matrix):
    """Check the three GCM axioms and return a :class:`GCM`.

    >>> validate_gcm([[2, -2], [-2, 2]]).n
    2
    """
    rows = [list(r) for r in matrix]
    n = len(rows)
    for r, row in enumerate(rows, 1):
        if len(row) != n:
            raise NotSquare(f"row {r} has length {len(row)}, expected {n}")
    for i in range(n):
        for j in range(n):
            v = rows[i][j]
            if isinstance(v, bool) or int(v) != v:
                raise NotSquare(f"entry ({i + 1},{j + 1}) = {v!r} is not an integer")
            rows[i][j] = int(v)
    for i in range(n):
        if rows[i][i] != 2:
            raise BadDiagonal(f"a[{i + 1}][{i + 1}] = {rows[i][i]}, expected 2")
    for i in range(n):
        for j in range(n):
            if i != j and rows[i][j] > 0:
                raise PositiveOffDiagonal(f"a[{i + 1}][{j + 1}] = {rows[i][j]} > 0")
    for i in range(n):
        for j in range(i + 1, n):
            if (rows[i][j] == 0) != (rows[j][i] == 0):
                raise AsymmetricZero(
                    f"a[{i + 1}][{j + 1}] = {rows[i][j]} but a[{j + 1}][{i + 1}] = {rows[j][i]}"
                )
    return GCM(tuple(tuple(r) for r in rows))


def subset(*members):
    """Convenience constructor: ``subset(1, 2)`` or ``subset([1, 2])``."""
    if len(members) == 1 and not isinstance(members[0], int):
        members = members[0]
    return frozenset(int(m) for m in members)


def check_subset(g, s):
    s = frozenset(s)
    bad = [i for i in s if not 1 <= i <= g.n]
    if bad:
        raise ValueError(f"indices {sorted(bad)} outside 1..{g.n}")
    return s


def determinant(rows):
    """Exact integer determinant (Bareiss fraction-free elimination)."""
    m = [list(r) for r in rows]
    n = len(m)
    if n == 0:
        return 1
    sign, prev = 1, 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]



def _subset_cache(fn):
    """``lru_cache`` keyed on ``(g, frozenset(s))`` so callers may pass any iterable."""
    cached = lru_cache(maxsize=None)(fn)

    @wraps(fn)
    def wrapper(g, s):
        return cached(g, frozenset(s))

    wrapper.cache_clear = cached.cache_clear
    return wrapper


def principal_minor(g, s):
    idx = sorted(s)
    return determinant([[g.a(i, j) for j in idx] for i in idx])


def components(g, t):
    """Connected components of the Dynkin graph restricted to ``t``, sorted."""
    t = set(t)
    out = []
    while t:
        start = min(t)
        comp, stack = {start}, [start]
        while stack:
            i = stack.pop()
            for j in list(t):
                if j not in comp and g.a(i, j) != 0:
                    comp.add(j)
                    stack.append(j)
        t -= comp
        out.append(frozenset(comp))
    return sorted(out, key=min)


@_subset_cache
def classify(g, s):
    """Kac type of the indecomposable principal submatrix ``A_s``."""
    s = frozenset(s)
    if not s:
        raise EmptySubset("cannot classify the empty subset")
    check_subset(g, s)
    if len(components(g, s)) != 1:
        raise Decomposable(f"A_{sorted(s)} is not connected")
    proper_positive = all(
        principal_minor(g, sub) > 0
        for k in range(1, len(s))
        for sub in combinations(sorted(s), k)
    )
    det = principal_minor(g, s)
    if proper_positive and det > 0:
        return TypeClass.FINITE
    if proper_positive and det == 0:
        return TypeClass.AFFINE
    return TypeClass.INDEFINITE


@_subset_cache
def decompose_subset(g, t):
    """Split ``t`` into its finite-type part and its non-finite part."""
    t = frozenset(t)
    fin, inf = set(), set()
    for comp in components(g, t):
        (fin if classify(g, comp) is TypeClass.FINITE else inf).update(comp)
    return frozenset(fin), frozenset(inf)


def finite_part(g, t):
    return decompose_subset(g, frozenset(t))[0]


def infinite_part(g, t):
    return decompose_subset(g, frozenset(t))[1]


@_subset_cache
def orthogonal_complement(g, j):
    j = frozenset(j)
    return frozenset(i for i in range(1, g.n + 1) if all(g.a(i, k) == 0 for k in j))


def is_special(g, theta):
    theta = frozenset(theta)
    return infinite_part(g, theta) == theta


def subset_key(s):
    return (len(s), tuple(sorted(s)))


@lru_cache(maxsize=None)
def special_subsets(g):
    out = [
        frozenset(c)
        for k in range(g.n + 1)
        for c in combinations(range(1, g.n + 1), k)
        if is_special(g, c)
    ]
    return tuple(sorted(out, key=subset_key))


def all_subsets(g):
    return [frozenset(c) for k in range(g.n + 1) for c in combinations(range(1, g.n + 1), k)]
