"""The face monoid of the Weyl group.

Elements are kept in normal form I: ``left * e(R(theta)) * right`` with
``left`` minimal in ``left W_theta`` and ``right`` minimal in
``W_{theta u theta^perp} right``.  Equality of elements is equality of these
three fields.  Units have ``theta`` empty, so ``right`` is the identity and
the group element sits in ``left``.

Multiplication goes through the semidirect-product description: an element
is also a pair ``(sigma, R)`` meaning ``sigma * e(R)``, and

    (sigma, R) * (tau, S) = (sigma tau, tau^-1 R  meet  S).
"""

from dataclasses import dataclass

from .coxeter import Side, coset_decompose, elements_up_to, in_subgroup, normalize
from .errors import MixedAmbient, NotSpecial
from .faces import face_meet, image_test, make_face, stabilizer_set
from .gcm import is_special, special_subsets, subset_key


@dataclass(frozen=True)
class FaceMonoidElement:
    left: object  # WeylWord
    theta: frozenset
    right: object  # WeylWord

    @property
    def gcm(self):
        return self.left.gcm

    @property
    def is_unit(self):
        return not self.theta

    def __mul__(self, other):
        return mul(self, other)

    def __repr__(self):
        parts = []
        if self.left.letters:
            parts.append(".".join(f"s{i}" for i in self.left.letters))
        if self.theta:
            parts.append("e[" + ",".join(map(str, sorted(self.theta))) + "]")
        if self.right.letters:
            parts.append(".".join(f"s{i}" for i in self.right.letters))
        return "<" + (".".join(parts) or "1") + ">"

    def to_json(self):
        return {
            "left": list(self.left.letters),
            "theta": sorted(self.theta),
            "right": list(self.right.letters),
        }


def _word(g, w):
    return w if hasattr(w, "letters") else normalize(g, w)


def canonical(g, u, theta, v):
    """Normal form I of ``u * e(R(theta)) * v``."""
    theta = frozenset(theta)
    if not is_special(g, theta):
        raise NotSpecial(f"{sorted(theta)} is not special")
    u, v = _word(g, u), _word(g, v)
    v_min, b = coset_decompose(v, stabilizer_set(g, theta), Side.LEFT)
    # b normalizes R(theta), so it moves across the idempotent
    u_min, _ = coset_decompose(u * b, theta, Side.RIGHT)
    return FaceMonoidElement(u_min, theta, v_min)


def make_element(g, w1, f, w2):
    """Canonical form of ``w1 * e(f) * w2`` for a face ``f``."""
    w1, w2 = _word(g, w1), _word(g, w2)
    rho = f.rep
    return canonical(g, w1 * rho, f.theta, rho.inverse() * w2)


def unit(g, w=()):
    return canonical(g, _word(g, w), frozenset(), g.word())


def idempotent(g, theta):
    """``e(R(theta))``."""
    return canonical(g, g.word(), theta, g.word())


def idempotent_of(f):
    return make_element(f.gcm, f.gcm.word(), f, f.gcm.word())


def as_pair(x):
    """``x = sigma * e(R)`` with ``R`` the face determined by ``x``."""
    g = x.gcm
    return x.left * x.right, make_face(g, x.right.inverse(), x.theta)


def from_pair(sigma, face):
    g = face.gcm
    return canonical(g, sigma * face.rep, face.theta, face.rep.inverse())


def group_part(x):
    """The group element ``left * right`` (well defined modulo the pointwise
    stabilizer of the face of ``x``)."""
    return x.left * x.right


def face_of(x):
    return as_pair(x)[1]


def mul(x, y):
    g = x.gcm
    if y.gcm != g:
        raise MixedAmbient("elements belong to different Cartan matrices")
    if not y.theta and not x.theta:
        return unit(g, x.left * y.left)
    sigma, r = as_pair(x)
    tau, s = as_pair(y)
    moved = make_face(g, tau.inverse() * r.rep, r.theta)
    return from_pair(sigma * tau, face_meet(moved, s))


def inverse(x):
    g = x.gcm
    return canonical(g, x.right.inverse(), x.theta, x.left.inverse())


def normal_form(x, variant="I"):
    """``(w1, theta, w2)`` in normal form I (stored) or II."""
    if variant == "I":
        return x.left, x.theta, x.right
    if variant != "II":
        raise ValueError(f"unknown normal form {variant!r}")
    g = x.gcm
    u_min, b = coset_decompose(x.left, stabilizer_set(g, x.theta), Side.RIGHT)
    v_min, _ = coset_decompose(b * x.right, x.theta, Side.LEFT)
    return u_min, x.theta, v_min


def from_normal_form_ii(g, w1, theta, w2):
    return canonical(g, w1, theta, w2)


def is_idempotent(x):
    return mul(x, x) == x


def in_parabolic(x, j):
    """Membership in the standard parabolic submonoid of type ``j``.

    Writes ``x = sigma * e(R)`` and asks for ``sigma`` in ``W_j`` (possible
    exactly when both normal-form words lie in ``W_j``) and for ``R`` to
    contain ``R(j_inf)``.
    """
    j = frozenset(j)
    if not (in_subgroup(x.left, j) and in_subgroup(x.right, j)):
        return False
    return image_test(face_of(x), j)


def orbit_type(x):
    return x.theta


def element_key(x):
    return (subset_key(x.theta), len(x.left) + len(x.right), x.left.letters, x.right.letters)


def enumerate_elements(g, max_len):
    """All elements with ``len(left) + len(right) <= max_len``, sorted."""
    layers = elements_up_to(g, max_len)
    words = [w for layer in layers for w in layer]
    out = []
    for theta in special_subsets(g):
        stab = stabilizer_set(g, theta)
        lefts = [w for w in words if not (w.right_descents & theta)]
        rights = [w for w in words if not (w.left_descents & stab)]
        for u in lefts:
            for v in rights:
                if len(u) + len(v) <= max_len:
                    out.append(FaceMonoidElement(u, theta, v))
    return sorted(out, key=element_key)
