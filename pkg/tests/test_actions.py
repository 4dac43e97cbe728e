from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from facemonoid.actions import (
    ActionKind,
    LooFacetLabel,
    ab12_criterion_check,
    acneu_check,
    act,
    act_on_point,
    complex_leq,
    looijenga_project,
    make_coset,
    order_preservation_check,
    stabilizer_check,
)
from facemonoid.cone import APEX, act_on_profile, face_membership, facet_of, sample_points
from facemonoid.coxeter import elements_up_to
from facemonoid.errors import MixedAmbient, NotFiniteTypeJ, NotInCone, NotSpecial
from facemonoid.faces import face_meet_facet, make_facet, special_face
from facemonoid.gcm import all_subsets
from facemonoid.monoid import enumerate_elements, idempotent, idempotent_of, face_of, mul, unit
from facemonoid.verify import bad_counterexample

from strategies import GCMS, elements, gcm_and, subsets, words

KINDS = list(ActionKind)


def C(g, rep, j):
    return make_coset(g, g.word(*rep), j)


def test_complex_leq_examples(hyp, aff):
    assert complex_leq(C(hyp, (), {1}), C(hyp, (), ()))
    c = C(hyp, (2, 3), {1})
    assert complex_leq(c, c)
    assert not complex_leq(C(hyp, (), ()), C(hyp, (3,), ()))
    with pytest.raises(MixedAmbient):
        complex_leq(C(hyp, (), ()), C(aff, (), ()))


def test_act_examples(hyp):
    x = idempotent(hyp, {1, 2})
    c = C(hyp, (3,), ())
    assert act("bad", x, c).to_json() == {"rep": [], "jtype": [1, 2, 3]}
    assert act("good1", x, c).to_json() == {"rep": [], "jtype": [1, 2, 3]}
    assert act("good2", x, c).to_json() == {"rep": [], "jtype": [1, 2]}


def test_bad_counterexample(hyp):
    ce = bad_counterexample(hyp)
    assert ce["comparable_before"] and not ce["comparable_after"]
    assert ce["images"] == [{"rep": [], "jtype": [1, 2, 3]}, {"rep": [], "jtype": [1, 2]}]


def test_act_on_point_examples(aff, hyp):
    P = lambda *xs: tuple(Fraction(x) for x in xs)
    assert act_on_point(unit(aff), P(-1, 2)) == P(-1, 2)
    assert act_on_point(idempotent(aff, {1, 2}), P(1, 0)) is APEX
    assert act_on_point(unit(aff, aff.word(1)), P(-1, 2)) == P(1, 0)
    with pytest.raises(NotInCone):
        act_on_point(unit(aff), P(1, -2), budget=100)


def test_looijenga_examples(hyp, dec):
    lab = looijenga_project(hyp, {1, 2}, hyp.word(3), set())
    assert lab == LooFacetLabel(frozenset({1, 2}), hyp.word(), frozenset())
    lab = looijenga_project(dec, {1, 2}, dec.word(3), {3})
    assert lab == LooFacetLabel(frozenset({1, 2}), dec.word(), frozenset({3}))
    lab = looijenga_project(hyp, (), hyp.word(2, 3), {1})
    assert lab.rep == hyp.word(2, 3) and lab.jtype == {1}
    with pytest.raises(NotSpecial):
        looijenga_project(hyp, {3}, hyp.word(), ())
    with pytest.raises(NotFiniteTypeJ):
        looijenga_project(dec, (), dec.word(), {1, 2})


@pytest.mark.parametrize("kind", KINDS)
def test_checker_examples(hyp, kind):
    assert stabilizer_check(hyp, kind, {1, 2, 3}, 4)["ok"]
    assert stabilizer_check(hyp, kind, {1, 2}, 6)["ok"]
    assert ab12_criterion_check(hyp, kind, 6)
    assert acneu_check(hyp, kind, 4)
    assert acneu_check(GCMS["M_fin"], kind, 4)


def test_order_examples(hyp):
    assert not order_preservation_check(hyp, "good1", 300, 1)["violations"]
    assert not order_preservation_check(hyp, "good2", 300, 1)["violations"]
    assert order_preservation_check(hyp, "bad", 300, 1)["violations"]


# --- properties -------------------------------------------------------------

def cosets(g):
    return st.builds(lambda w, j: make_coset(g, w, j), words(g, 6), subsets(g))


@pytest.mark.parametrize("kind", KINDS)
@given(data=gcm_and(elements, elements, cosets))
def test_action_law(kind, data):
    g, x, y, c = data
    assert act(kind, x, act(kind, y, c)) == act(kind, mul(x, y), c)
    assert act(kind, unit(g), c) == c


@given(gcm_and(words, cosets))
def test_units_act_by_left_multiplication(data):
    g, w, c = data
    want = make_coset(g, w * c.rep, c.jtype)
    assert {act(k, unit(g, w), c) for k in KINDS} == {want}


@given(gcm_and(elements, words, subsets))
def test_good1_is_closed_facet_intersection(data):
    g, x, tau, j = data
    # s1 e(R(theta)) s2 applied to tau F_J is s1 (R(theta) meet s2 tau closure(F_J))
    fac = face_meet_facet(special_face(g, x.theta), make_facet(g, x.right * tau, j))
    want = make_coset(g, x.left * fac.rep, fac.jtype)
    assert act("good1", x, make_coset(g, tau, j)) == want


@given(gcm_and(elements, words, subsets), st.integers(0, 2**16))
def test_bad_matches_points(data, seed):
    g, x, tau, j = data
    c = make_coset(g, tau, j)
    img = act("bad", x, c)
    pts = sample_points(g, seed, 4, "chamber")
    for q in pts:
        q = tuple(Fraction(0) if i in j else v for i, v in enumerate(q, 1))
        p = act_on_profile(c.rep, q)
        lab = facet_of(g, act_on_point(x, p))
        assert (lab.rep, lab.jtype) == (img.rep, img.jtype)


@given(gcm_and(elements, elements), st.integers(0, 2**16))
def test_point_action_law(data, seed):
    g, x, y = data
    for p in sample_points(g, seed, 3, "anywhere"):
        assert act_on_point(x, act_on_point(y, p)) == act_on_point(mul(x, y), p)
        e = idempotent_of(face_of(x))
        assert (act_on_point(e, p) == p) == face_membership(p, face_of(x))


@pytest.mark.parametrize("name", ["M_aff", "M_hyp", "M_dec"])
@pytest.mark.parametrize("kind", KINDS)
def test_faithful_at_bound(name, kind):
    g = GCMS[name]
    els = enumerate_elements(g, 2)
    words_ = [w for layer in elements_up_to(g, 4) for w in layer]
    probes = [make_coset(g, w, j) for w in words_ for j in all_subsets(g)]
    sigs = {}
    for x in els:
        sig = tuple(act(kind, x, c) for c in probes)
        assert sig not in sigs, (x, sigs.get(sig))
        sigs[sig] = x


@given(gcm_and(words, subsets, subsets))
def test_good_actions_agree_on_units(data):
    g, w, j, _ = data
    c = make_coset(g, g.word(), j)
    assert act("good1", unit(g, w), c) == act("good2", unit(g, w), c)
