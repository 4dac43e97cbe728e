"""Faces of the Tits cone and closed facets, handled purely combinatorially.

A face is stored as ``rep * R(theta)``: ``theta`` is its (special) type and
``rep`` the minimal representative of ``rep * W_{theta u theta^perp}``.  The
whole cone ``X`` is ``Face(frozenset(), ())``.  A closed facet ``tau * F_J``
is stored as ``FacetLabel(rep, jtype)`` with ``rep`` minimal mod ``W_J``.
"""

from dataclasses import dataclass

from .coxeter import (
    Side,
    coset_decompose,
    double_coset_decompose,
    in_subgroup,
    normalize,
    translate_simple_set,
)
from .errors import MixedAmbient, NotInSubgroup, NotSpecial
from .gcm import infinite_part, is_special, orthogonal_complement


def stabilizer_set(g, theta):
    """``theta u theta^perp``: the type of the setwise stabilizer of ``R(theta)``."""
    theta = frozenset(theta)
    return theta | orthogonal_complement(g, theta)


@dataclass(frozen=True)
class Face:
    theta: frozenset
    rep: object  # WeylWord

    @property
    def gcm(self):
        return self.rep.gcm

    def __repr__(self):
        return f"Face({sorted(self.theta)}, {list(self.rep.letters)})"

    def to_json(self):
        return {"theta": sorted(self.theta), "rep": list(self.rep.letters)}


@dataclass(frozen=True)
class FacetLabel:
    rep: object  # WeylWord
    jtype: frozenset

    @property
    def gcm(self):
        return self.rep.gcm

    def __repr__(self):
        return f"FacetLabel({list(self.rep.letters)}, {sorted(self.jtype)})"

    def to_json(self):
        return {"rep": list(self.rep.letters), "jtype": sorted(self.jtype)}


def make_face(g, w, theta):
    theta = frozenset(theta)
    if not is_special(g, theta):
        raise NotSpecial(f"{sorted(theta)} is not special")
    if not hasattr(w, "letters"):
        w = normalize(g, w)
    rep, _ = coset_decompose(w, stabilizer_set(g, theta), Side.RIGHT)
    return Face(theta, rep)


def whole_cone(g):
    return Face(frozenset(), g.word())


def special_face(g, theta):
    """``R(theta)`` itself."""
    return make_face(g, g.word(), theta)


def make_facet(g, w, j):
    j = frozenset(j)
    if not hasattr(w, "letters"):
        w = normalize(g, w)
    rep, _ = coset_decompose(w, j, Side.RIGHT)
    return FacetLabel(rep, j)


def translate(w, f):
    """``w * f`` for a face or facet label."""
    if isinstance(f, FacetLabel):
        return make_facet(w.gcm, w * f.rep, f.jtype)
    return make_face(w.gcm, w * f.rep, f.theta)


def _check(*objs):
    g = objs[0].gcm
    for o in objs[1:]:
        if o.gcm != g:
            raise MixedAmbient("objects belong to different Cartan matrices")
    return g


def face_contains(f1, f2):
    """True iff ``f2`` is a subset of ``f1``."""
    g = _check(f1, f2)
    if not f1.theta <= f2.theta:
        return False
    rel = f1.rep.inverse() * f2.rep
    _, x, _ = double_coset_decompose(rel, orthogonal_complement(g, f1.theta), f2.theta)
    return x.is_identity


def _relative_position(f1, f2):
    g = f1.gcm
    rel = f1.rep.inverse() * f2.rep
    return double_coset_decompose(rel, stabilizer_set(g, f1.theta), stabilizer_set(g, f2.theta))


def face_meet(f1, f2):
    """Intersection of two faces."""
    g = _check(f1, f2)
    a, tau, _ = _relative_position(f1, f2)
    theta = f1.theta | f2.theta | tau.support
    # the union is special whenever tau is a minimal double coset representative
    assert is_special(g, theta), (f1, f2, tau)
    return make_face(g, f1.rep * a, theta)


def face_join(f1, f2):
    """Smallest face containing both arguments."""
    g = _check(f1, f2)
    a, tau, _ = _relative_position(f1, f2)
    common = f1.theta & translate_simple_set(tau, f2.theta)
    return make_face(g, f1.rep * a, infinite_part(g, common))


def face_meet_facet(f, fac):
    """The closed facet ``f`` intersected with the closed facet ``fac``."""
    g = _check(f, fac)
    rel = f.rep.inverse() * fac.rep
    a, y, _ = double_coset_decompose(rel, stabilizer_set(g, f.theta), fac.jtype)
    return make_facet(g, f.rep * a, f.theta | fac.jtype | y.support)


def stabilizer_types(f):
    """Conjugation data of the pointwise and setwise stabilizers of ``f``.

    For ``f = w R(theta)`` these are ``w W_theta w^-1`` and
    ``w W_{theta u theta^perp} w^-1``, returned as ``(w, type)`` pairs.
    """
    g = f.gcm
    return (f.rep, f.theta), (f.rep, stabilizer_set(g, f.theta))


def sublattice_embed(g, j, subface):
    """Reinterpret a face of the Tits cone of ``A_j`` as a face of ``X``."""
    j = frozenset(j)
    w, theta = subface
    if not hasattr(w, "letters"):
        w = normalize(g, w)
    if not in_subgroup(w, j):
        raise NotInSubgroup(f"{w} uses letters outside {sorted(j)}")
    theta = frozenset(theta)
    if not theta <= j:
        raise NotInSubgroup(f"type {sorted(theta)} is not inside {sorted(j)}")
    return make_face(g, w, theta)


def image_test(f, j):
    """Does ``f`` lie in the image of the embedding for ``A_j``?"""
    g = f.gcm
    return face_contains(f, special_face(g, infinite_part(g, frozenset(j))))


def faces_up_to(g, max_len):
    """All faces whose canonical representative has length <= ``max_len``."""
    from .coxeter import elements_up_to
    from .gcm import special_subsets

    words = [w for layer in elements_up_to(g, max_len) for w in layer]
    out = []
    for theta in special_subsets(g):
        stab = stabilizer_set(g, theta)
        out.extend(Face(theta, w) for w in words if not (w.right_descents & stab))
    return out
