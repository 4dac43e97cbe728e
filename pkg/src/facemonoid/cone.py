"""Independent geometric checks on the Tits cone, via pairing profiles.

A point ``lambda`` is represented by its profile ``(lambda(h_1), ...,
lambda(h_n))`` with exact ``Fraction`` entries.  The simple reflection
``s_i`` acts on profiles by

    v_j  ->  v_j - a_ji * v_i

(dual to the root-lattice rule used in :mod:`facemonoid.coxeter`).  Cone and
face membership are decided from profiles alone: ``lambda`` is in the Tits
cone iff the numbers game drives its profile into the dominant chamber, and
``w R(theta)`` is cut out of the cone by ``(w^-1 lambda)(h_i) = 0`` for
``i`` in ``theta``.  The game does not terminate outside the cone, so every
query carries a reflection budget and may answer :data:`UNKNOWN`.
"""

import random
from fractions import Fraction

from .coxeter import Side, coset_decompose, normalize
from .errors import CannotSample
from .faces import Face, FacetLabel, make_facet, stabilizer_set
from .gcm import finite_part, orthogonal_complement

DEFAULT_BUDGET = 10_000


class _Marker:
    def __init__(self, name):
        self.name = name

    def __repr__(self):
        return self.name

    def __reduce__(self):
        return self.name


APEX = _Marker("APEX")
UNKNOWN = _Marker("UNKNOWN")


def profile(values):
    return tuple(Fraction(v) for v in values)


def reflect_profile(g, v, i):
    vi = v[i - 1]
    if not vi:
        return tuple(v)
    return tuple(x - g.a(j, i) * vi for j, x in enumerate(v, 1))


def act_on_profile(w, p):
    """``w . p`` (rightmost letter of ``w`` acts first)."""
    if p is APEX:
        return APEX
    g = w.gcm
    v = tuple(p)
    for i in reversed(w.letters):
        v = reflect_profile(g, v, i)
    return v


def is_dominant(p):
    return all(x >= 0 for x in p)


def to_dominant(g, p, budget=DEFAULT_BUDGET):
    """Return ``(w, w.p)`` with ``w.p`` dominant and ``w`` of minimal length,
    or ``UNKNOWN`` if the budget runs out."""
    if p is APEX:
        return g.word(), APEX
    v = profile(p)
    fired = []
    while True:
        neg = [i for i, x in enumerate(v, 1) if x < 0]
        if not neg:
            break
        if len(fired) >= budget:
            return UNKNOWN
        i = neg[0]
        v = reflect_profile(g, v, i)
        fired.append(i)
    w = normalize(g, fired[::-1])
    zeros = frozenset(i for i, x in enumerate(v, 1) if x == 0)
    w, _ = coset_decompose(w, zeros, Side.LEFT)
    return w, v


def in_cone(g, p, budget=DEFAULT_BUDGET):
    res = to_dominant(g, p, budget)
    return UNKNOWN if res is UNKNOWN else True


def facet_of(g, p, budget=DEFAULT_BUDGET):
    """The open facet ``u F_J`` containing ``p`` as a canonical label."""
    if p is APEX:
        return FacetLabel(g.word(), g.I)
    res = to_dominant(g, p, budget)
    if res is UNKNOWN:
        return UNKNOWN
    w, dom = res
    zeros = frozenset(i for i, x in enumerate(dom, 1) if x == 0)
    return make_facet(g, w.inverse(), zeros)


def face_membership(p, f, budget=DEFAULT_BUDGET):
    if p is APEX:
        return True
    g = f.gcm
    if to_dominant(g, p, budget) is UNKNOWN:
        return UNKNOWN
    q = act_on_profile(f.rep.inverse(), p)
    return all(q[i - 1] == 0 for i in f.theta)


def ri_membership(p, f, budget=DEFAULT_BUDGET):
    """Is ``p`` in the relative interior of ``f``?"""
    g = f.gcm
    q = APEX if p is APEX else act_on_profile(f.rep.inverse(), p)
    lab = facet_of(g, q, budget)
    if lab is UNKNOWN:
        return UNKNOWN
    if not f.theta <= lab.jtype:
        return False
    perp = orthogonal_complement(g, f.theta)
    extra = lab.jtype - f.theta
    return (
        extra <= perp
        and finite_part(g, extra) == extra
        and lab.rep.support <= perp
    )


def _rand_value(rng, allow_zero):
    if allow_zero and rng.random() < 0.35:
        return Fraction(0)
    return Fraction(rng.randint(1, 5), rng.randint(1, 4))


def _rand_word(rng, g, gens, max_len):
    gens = sorted(gens)
    if not gens:
        return g.word()
    return normalize(g, [rng.choice(gens) for _ in range(rng.randint(0, max_len))])


def sample_points(g, seed, count, region="chamber", word_len=4):
    """Deterministic exact sample points.

    ``region`` is ``"chamber"`` (strictly dominant profiles), ``"anywhere"``
    (random Weyl translates of dominant profiles) or a :class:`Face`, in
    which case the points are ``rep * a * q`` with ``q`` in the closed facet
    of type ``theta`` and ``a`` in ``W_{theta^perp}``.
    """
    rng = random.Random(seed)
    out = []
    if count <= 0:
        return out
    if isinstance(region, Face):
        f = region
        perp = orthogonal_complement(g, f.theta)
        if f.theta == g.I and g.n == 0:
            raise CannotSample("rank zero")
        for _ in range(count):
            q = tuple(
                Fraction(0) if i in f.theta else _rand_value(rng, True)
                for i in range(1, g.n + 1)
            )
            a = _rand_word(rng, g, perp, 3)
            out.append(act_on_profile(f.rep * a, q))
        return out
    if region == "chamber":
        return [tuple(_rand_value(rng, False) for _ in range(g.n)) for _ in range(count)]
    if region == "anywhere":
        for _ in range(count):
            q = tuple(_rand_value(rng, True) for _ in range(g.n))
            out.append(act_on_profile(_rand_word(rng, g, g.I, word_len), q))
        return out
    raise ValueError(f"unknown region {region!r}")


def oracle_meet_report(f1, f2, samples=50, seed=0, budget=DEFAULT_BUDGET):
    """Sample-based check of a combinatorial meet.

    Points sampled in the computed meet must lie in both faces; points
    sampled in either face that lie in both must lie in the computed meet.
    """
    from .faces import face_meet

    g = f1.gcm
    meet = face_meet(f1, f2)
    rng = random.Random(seed)
    violations, unknowns, checked = [], 0, 0

    def test(p, want):
        nonlocal unknowns, checked
        got = {name: face_membership(p, f, budget) for name, f in want}
        if any(v is UNKNOWN for v in got.values()):
            unknowns += 1
            return None
        checked += 1
        return got

    for p in sample_points(g, rng.randrange(2**32), samples, meet):
        got = test(p, [("f1", f1), ("f2", f2)])
        if got is not None and not (got["f1"] and got["f2"]):
            violations.append({"point": [str(x) for x in p], "kind": "meet point outside a face"})
    for f in (f1, f2):
        for p in sample_points(g, rng.randrange(2**32), samples, f):
            got = test(p, [("f1", f1), ("f2", f2), ("meet", meet)])
            if got is not None and got["f1"] and got["f2"] and not got["meet"]:
                violations.append({"point": [str(x) for x in p], "kind": "common point outside meet"})
    return {"meet": meet, "checked": checked, "unknowns": unknowns, "violations": violations}


def oracle_meet_check(f1, f2, samples=50, seed=0, budget=DEFAULT_BUDGET):
    rep = oracle_meet_report(f1, f2, samples, seed, budget)
    return not rep["violations"] and not rep["unknowns"]


def facet_closure_membership(p, fac, budget=DEFAULT_BUDGET):
    """Is ``p`` in the closed facet ``rep * closure(F_J)``?"""
    if p is APEX:
        return True
    q = act_on_profile(fac.rep.inverse(), p)
    return all(q[i - 1] == 0 for i in fac.jtype) and is_dominant(q)


def sample_facet_closure(g, seed, count, fac):
    """Points of the closed facet ``rep * closure(F_J)``."""
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        q = tuple(
            Fraction(0) if i in fac.jtype else _rand_value(rng, True)
            for i in range(1, g.n + 1)
        )
        out.append(act_on_profile(fac.rep, q))
    return out


def stabilizer_elements(f, max_len, pointwise=True):
    """Elements ``rep * z * rep^-1`` with ``z`` in the (pointwise or setwise)
    stabilizer type of ``f`` and ``len(z) <= max_len``."""
    from .coxeter import elements_up_to

    g = f.gcm
    typ = f.theta if pointwise else stabilizer_set(g, f.theta)
    zs = [z for layer in elements_up_to(g, max_len, within=typ) for z in layer]
    return [f.rep * z * f.rep.inverse() for z in zs]
