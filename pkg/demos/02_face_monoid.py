"""The face monoid: units, idempotents and normal forms.

Run with ``python demos/02_face_monoid.py``.
"""

from facemonoid import validate_gcm, enumerate_elements, inverse, mul, normal_form
from facemonoid.faces import make_face
from facemonoid.monoid import canonical, idempotent, idempotent_of, is_idempotent, unit

# In finite type nothing but the group survives.
fin = validate_gcm([[2, -1], [-1, 2]])
els = enumerate_elements(fin, 6)
print("A2:", len(els), "elements, all units:", all(x.is_unit for x in els))

# The decomposable affine + A1 matrix has one proper special subset.
dec = validate_gcm([[2, -2, 0], [-2, 2, 0], [0, 0, 2]])
e = idempotent(dec, {1, 2})
s3 = unit(dec, dec.word(3))
x = mul(s3, e)
print("s3 * e(R({1,2})) =", x)
# s3 is orthogonal to {1,2} so it can sit on either side
print("normal form I :", normal_form(x, "I"))
print("normal form II:", normal_form(x, "II"))
print("e(R({1,2})) * s3 == s3 * e(R({1,2})) ?", mul(e, s3) == x)

# Inverse monoid: x x' x = x and x x' is the idempotent of a face
xi = inverse(x)
print("x x' x == x ?", mul(mul(x, xi), x) == x)
print("x x' =", mul(x, xi), "idempotent:", is_idempotent(mul(x, xi)))

# In the hyperbolic case two idempotents multiply to the idempotent of
# the meet of their faces.
hyp = validate_gcm([[2, -2, -1], [-2, 2, 0], [-1, 0, 2]])
f = idempotent_of(make_face(hyp, hyp.word(3), {1, 2}))
print("e(R({1,2})) e(s3 R({1,2})) =", mul(idempotent(hyp, {1, 2}), f))

# not every element is idempotent
y = canonical(hyp, hyp.word(), {1, 2}, hyp.word(3))
print(y, "idempotent?", is_idempotent(y), " y*y =", mul(y, y))

for L in range(4):
    print(f"hyperbolic, length <= {L}:", len(enumerate_elements(hyp, L)), "elements")
