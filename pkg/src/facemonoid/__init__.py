"""Face monoid of a Kac-Moody Weyl group, its face lattice, and its actions
on the Coxeter complex.

Everything is exact: Weyl group elements are canonical reduced words checked
against the integer root action, points of the Tits cone are rational
pairing profiles.
"""

from .gcm import GCM, TypeClass, validate_gcm, classify, decompose_subset, orthogonal_complement, special_subsets
from .coxeter import WeylWord, Side, normalize, bruhat_leq, coset_decompose, double_coset_decompose, five_factor_decompose
from .faces import Face, FacetLabel, make_face, make_facet, face_meet, face_join, face_contains, face_meet_facet
from .monoid import FaceMonoidElement, make_element, mul, inverse, idempotent, normal_form, in_parabolic, enumerate_elements
from .actions import ActionKind, ComplexElement, LooFacetLabel, act, act_on_point, complex_leq, looijenga_project
from .cone import APEX, UNKNOWN, to_dominant, facet_of, face_membership, ri_membership, sample_points, oracle_meet_check
from .errors import FaceMonoidError

__version__ = "0.1.0"
