"""Weyl group words and the face lattice of the Tits cone.

Run with ``python demos/01_words_and_faces.py``.
"""

from facemonoid import validate_gcm, classify, special_subsets
from facemonoid.coxeter import act_on_root, bruhat_leq, simple_root
from facemonoid.faces import face_join, face_meet, make_face, special_face

# A rank-3 hyperbolic matrix. Nodes 1 and 2 form an affine A1^(1) block,
# node 3 hangs off node 1.
g = validate_gcm([[2, -2, -1], [-2, 2, 0], [-1, 0, 2]])
print("type of the whole matrix:", classify(g, {1, 2, 3}).value)
print("type of {1,2}:", classify(g, {1, 2}).value)

# Every element has one canonical (ShortLex-least) reduced word.
w = g.word(2, 1, 2, 1, 1, 3)
print("s2 s1 s2 s1 s1 s3 ->", w, "length", len(w))
print("right descents:", sorted(w.right_descents), " left descents:", sorted(w.left_descents))

# Roots are integer vectors; s3 sends alpha_1 to alpha_1 + alpha_3.
print("s3(alpha_1) =", act_on_root(g.word(3), simple_root(g, 1)))

# Bruhat order, via the subword property
print("s1 <= s1 s2 ?", bruhat_leq(g.word(1), g.word(1, 2)))
print("s2 <= s1 ?", bruhat_leq(g.word(2), g.word(1)))

# Faces are w R(theta) for special theta. Only three types occur here.
print("special subsets:", [sorted(t) for t in special_subsets(g)])

a = special_face(g, {1, 2})
b = make_face(g, g.word(3), {1, 2})  # s3 R({1,2})
print("a =", a, " b =", b)
print("a meet b =", face_meet(a, b))  # the minimal face R(I)
print("a join b =", face_join(a, b))  # the whole cone
