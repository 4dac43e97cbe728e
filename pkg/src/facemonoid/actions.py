"""Actions of the face monoid on the Coxeter complex and on the Tits cone.

A coset ``tau W_J`` of the Coxeter complex is a :class:`ComplexElement`
``(rep, jtype)`` with ``rep`` minimal in its coset.  Three extensions of
the left-multiplication action of ``W`` are provided:

* ``BAD``   -- induced by the action on open facets of the Tits cone; not
  order preserving.
* ``GOOD1`` -- induced by intersecting closed facets with faces.
* ``GOOD2`` -- induced by the action on the facets of Looijenga's cone.

All three use the normal form ``x = s1 e(R(theta)) s2`` and a factorization
of ``s2 * tau`` relative to ``theta u theta^perp`` and ``J``.
"""

import random
from dataclasses import dataclass
from enum import Enum

from .coxeter import (
    Side,
    coset_decompose,
    double_coset_decompose,
    elements_up_to,
    five_factor_decompose,
    normalize,
    split_commuting,
    translate_simple_set,
)
from .cone import APEX, UNKNOWN, act_on_profile, face_membership, DEFAULT_BUDGET
from .errors import MixedAmbient, NotFiniteTypeJ, NotInCone, NotSpecial
from .faces import stabilizer_set
from .gcm import all_subsets, decompose_subset, is_special, orthogonal_complement, special_subsets
from .monoid import as_pair, enumerate_elements, idempotent, in_parabolic, mul


class ActionKind(str, Enum):
    BAD = "bad"
    GOOD1 = "good1"
    GOOD2 = "good2"


@dataclass(frozen=True)
class ComplexElement:
    rep: object  # WeylWord
    jtype: frozenset

    @property
    def gcm(self):
        return self.rep.gcm

    def __repr__(self):
        return f"{list(self.rep.letters)}W_{sorted(self.jtype)}"

    def to_json(self):
        return {"rep": list(self.rep.letters), "jtype": sorted(self.jtype)}


@dataclass(frozen=True)
class LooFacetLabel:
    base_theta: frozenset
    rep: object  # WeylWord in W_{base_theta^perp}
    jtype: frozenset

    def to_json(self):
        return {
            "base_theta": sorted(self.base_theta),
            "rep": list(self.rep.letters),
            "jtype": sorted(self.jtype),
        }


def make_coset(g, w, j):
    j = frozenset(j)
    if not hasattr(w, "letters"):
        w = normalize(g, w)
    rep, _ = coset_decompose(w, j, Side.RIGHT)
    return ComplexElement(rep, j)


def complex_leq(c1, c2):
    """``c1 <= c2`` in the Coxeter complex, i.e. ``c1`` contains ``c2``."""
    if c1.gcm != c2.gcm:
        raise MixedAmbient("cosets belong to different Cartan matrices")
    if not c2.jtype <= c1.jtype:
        return False
    return (c1.rep.inverse() * c2.rep).support <= c1.jtype


def _split_stabilizer(g, a, theta):
    """``a`` in ``W_{theta u theta^perp}`` as ``a1 * a2`` (perp part, theta part)."""
    perp = orthogonal_complement(g, theta)
    return split_commuting(a, perp, theta)


def _bad(g, x, c):
    rho = x.right * c.rep
    if x.theta <= c.jtype:
        _, mid, _ = double_coset_decompose(rho, orthogonal_complement(g, x.theta), c.jtype)
        if mid.is_identity:
            return make_coset(g, x.left * rho, c.jtype)
    return ComplexElement(g.word(), g.I)


def _good1(g, x, c):
    theta = x.theta
    rho = x.right * c.rep
    a, y, _ = double_coset_decompose(rho, stabilizer_set(g, theta), c.jtype)
    a1, _ = _split_stabilizer(g, a, theta)
    return make_coset(g, x.left * a1, theta | c.jtype | y.support)


def _good2(g, x, c):
    theta = x.theta
    rho = x.right * c.rep
    a, xx, c1, _ = five_factor_decompose(rho, stabilizer_set(g, theta), c.jtype)
    a1, _ = _split_stabilizer(g, a, theta)
    j0, jinf = decompose_subset(g, c.jtype)
    xi = theta | jinf | xx.support
    extra = orthogonal_complement(g, xi) & translate_simple_set(c1, j0)
    return make_coset(g, x.left * a1, xi | extra)


_ACTIONS = {ActionKind.BAD: _bad, ActionKind.GOOD1: _good1, ActionKind.GOOD2: _good2}


def act(kind, x, c):
    """Apply the face monoid element ``x`` to the coset ``c``."""
    g = x.gcm
    if c.gcm != g:
        raise MixedAmbient("element and coset belong to different Cartan matrices")
    if not x.theta:
        return make_coset(g, x.left * c.rep, c.jtype)
    return _ACTIONS[ActionKind(kind)](g, x, c)


def act_on_point(x, p, budget=DEFAULT_BUDGET):
    """``sigma e(R)`` sends ``p`` to ``sigma p`` if ``p`` is in ``R``, else to the apex."""
    if p is APEX:
        return APEX
    sigma, face = as_pair(x)
    inside = face_membership(p, face, budget)
    if inside is UNKNOWN:
        raise NotInCone(f"could not certify {[str(v) for v in p]} in the Tits cone")
    return act_on_profile(sigma, p) if inside else APEX


def looijenga_project(g, theta, tau, j):
    """Facet of ``p_{R(theta)}((X^v)°)`` containing the image of ``tau F_j^v``."""
    theta, j = frozenset(theta), frozenset(j)
    if not is_special(g, theta):
        raise NotSpecial(f"{sorted(theta)} is not special")
    if decompose_subset(g, j)[0] != j:
        raise NotFiniteTypeJ(f"{sorted(j)} has components of non-finite type")
    if not hasattr(tau, "letters"):
        tau = normalize(g, tau)
    perp = orthogonal_complement(g, theta)
    a, y, _ = double_coset_decompose(tau, perp, j)
    jtype = perp & translate_simple_set(y, j)
    rep, _ = coset_decompose(a, jtype, Side.RIGHT)
    return LooFacetLabel(theta, rep, jtype)


# --- checkers -------------------------------------------------------------


def stabilizer_check(g, kind, j, max_len):
    """Compare the stabilizer of ``W_j`` with the parabolic submonoid of type ``j``
    on all elements with normal-form length at most ``max_len``."""
    j = frozenset(j)
    base = ComplexElement(g.word(), j)
    missing, extra, n = [], [], 0
    for x in enumerate_elements(g, max_len):
        n += 1
        fixes = act(kind, x, base) == base
        member = in_parabolic(x, j)
        if member and not fixes:
            missing.append(x.to_json())
        elif fixes and not member:
            extra.append(x.to_json())
    return {
        "kind": ActionKind(kind).value,
        "j": sorted(j),
        "elements": n,
        "parabolic_not_fixing": missing,
        "fixing_not_parabolic": extra,
        "ok": not missing and not extra,
    }


def random_word(rng, g, max_len):
    return normalize(g, [rng.randint(1, g.n) for _ in range(rng.randint(0, max_len))])


def random_element(rng, g, max_len=6):
    from .monoid import canonical

    theta = rng.choice(special_subsets(g))
    return canonical(g, random_word(rng, g, max_len), theta, random_word(rng, g, max_len))


def random_coset(rng, g, max_len=6):
    j = frozenset(i for i in range(1, g.n + 1) if rng.random() < 0.4)
    return make_coset(g, random_word(rng, g, max_len), j)


def order_preservation_check(g, kind, samples, seed, max_len=6):
    """Sample comparable pairs ``z W_J <= z W_K`` (``K`` inside ``J``) and random
    elements; report every pair whose images are not comparable."""
    rng = random.Random(seed)
    specials = special_subsets(g)
    violations = []
    for case in range(samples):
        x = random_element(rng, g, max_len)
        z = random_word(rng, g, max_len)
        big = frozenset(i for i in range(1, g.n + 1) if rng.random() < 0.5)
        # bias toward the interesting pairs around special sets
        if rng.random() < 0.3:
            big = big | rng.choice(specials)
        small = frozenset(i for i in big if rng.random() < 0.5)
        c1, c2 = make_coset(g, z, big), make_coset(g, z, small)
        assert complex_leq(c1, c2)
        i1, i2 = act(kind, x, c1), act(kind, x, c2)
        if not complex_leq(i1, i2):
            violations.append({
                "case": case,
                "element": x.to_json(),
                "pair": [c1.to_json(), c2.to_json()],
                "images": [i1.to_json(), i2.to_json()],
            })
    return {"kind": ActionKind(kind).value, "samples": samples, "violations": violations}


def ab12_criterion_check(g, kind, max_len):
    """Is ``e(R(theta)) . sigma W_J`` a standard parabolic coset for all special
    ``theta``, all ``J`` and all double-coset-minimal ``sigma`` up to ``max_len``?"""
    words = [w for layer in elements_up_to(g, max_len) for w in layer]
    for theta in special_subsets(g):
        e = idempotent(g, theta)
        stab = stabilizer_set(g, theta)
        for j in all_subsets(g):
            for s in words:
                if s.left_descents & stab or s.right_descents & j:
                    continue
                if not act(kind, e, ComplexElement(s, j)).rep.is_identity:
                    return False
    return True


def acneu_check(g, kind, max_len):
    """Check ``e(R(J_inf)) . W_J = W_J`` for every ``J`` and that it agrees with
    ``Stab(W_J)`` containing the parabolic submonoid (bounded enumeration)."""
    elements = enumerate_elements(g, max_len)
    cond_ii, cond_iii = True, True
    for j in all_subsets(g):
        base = ComplexElement(g.word(), j)
        jinf = decompose_subset(g, j)[1]
        if act(kind, idempotent(g, jinf), base) != base:
            cond_ii = False
        for x in elements:
            if in_parabolic(x, j) and act(kind, x, base) != base:
                cond_iii = False
                break
    return cond_ii and cond_ii == cond_iii


def action_law_check(g, kind, cases, seed, max_len=6):
    rng = random.Random(seed)
    failures = []
    for case in range(cases):
        x, y = random_element(rng, g, max_len), random_element(rng, g, max_len)
        c = random_coset(rng, g, max_len)
        lhs = act(kind, x, act(kind, y, c))
        rhs = act(kind, mul(x, y), c)
        if lhs != rhs:
            failures.append({
                "case": case, "x": x.to_json(), "y": y.to_json(), "coset": c.to_json(),
                "lhs": lhs.to_json(), "rhs": rhs.to_json(),
            })
    return {"kind": ActionKind(kind).value, "cases": cases, "failures": failures}
