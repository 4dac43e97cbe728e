"""Three ways for the face monoid to act on the Coxeter complex.

Run with ``python demos/03_actions.py``.
"""

from fractions import Fraction

from facemonoid import validate_gcm
from facemonoid.actions import (
    ComplexElement,
    act,
    act_on_point,
    complex_leq,
    order_preservation_check,
)
from facemonoid.cone import facet_of
from facemonoid.monoid import idempotent, unit

g = validate_gcm([[2, -2, -1], [-2, 2, 0], [-1, 0, 2]])
e = idempotent(g, {1, 2})
chamber = ComplexElement(g.word(), frozenset())
s3_chamber = ComplexElement(g.word(3), frozenset())
panel = ComplexElement(g.word(), frozenset({1, 2}))

# Units act by left multiplication, whatever the kind.
print("s1 . W_{} :", act("good1", unit(g, g.word(1)), chamber))

# On e(R({1,2})) . s3 W_{} the two good actions disagree.
for kind in ("bad", "good1", "good2"):
    print(f"{kind:5s}: e(R(1,2)) . s3 W_() =", act(kind, e, s3_chamber))

# The bad action breaks the order: W_{1,2} <= W_{} but the images swap.
lo, hi = act("bad", e, panel), act("bad", e, chamber)
print("W_{1,2} <= W_{} :", complex_leq(panel, chamber))
print("images:", lo, hi, " still ordered?", complex_leq(lo, hi))

for kind in ("bad", "good1", "good2"):
    rep = order_preservation_check(g, kind, 500, seed=1)
    print(f"{kind:5s}: {len(rep['violations'])} order violations in 500 samples")

# The bad action is the shadow of the action on points of the cone.
p = (Fraction(0), Fraction(0), Fraction(1))  # a point on the facet F_{1,2}
q = act_on_point(e, p)
print("e(R(1,2)) sends", [str(v) for v in p], "to", q, "in facet", facet_of(g, q))
p = (Fraction(1), Fraction(2), Fraction(1))  # an interior point of the chamber
print("an interior point goes to", act_on_point(e, p))
