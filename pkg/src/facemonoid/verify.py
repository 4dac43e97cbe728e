"""Seeded verification suites.

Every suite returns ``{"suite": name, "cases": n, "failures": [...]}`` and is
deterministic given its seed.  The CLI ``verify`` command and the acceptance
tests both run these.
"""

import random

from .actions import (
    ActionKind,
    ComplexElement,
    ab12_criterion_check,
    acneu_check,
    act,
    action_law_check,
    complex_leq,
    order_preservation_check,
    random_element,
    random_word,
    stabilizer_check,
)
from .cone import (
    DEFAULT_BUDGET,
    act_on_profile,
    face_membership,
    oracle_meet_report,
    sample_points,
    stabilizer_elements,
)
from .coxeter import Side, coset_decompose, mul as wmul
from .faces import face_contains, face_join, face_meet, make_face, stabilizer_set, translate
from .gcm import (
    TypeClass,
    all_subsets,
    classify,
    special_subsets,
    subset_key,
    validate_gcm,
)
from .monoid import (
    enumerate_elements,
    idempotent,
    inverse,
    is_idempotent,
    mul,
    unit,
)

TEST_MATRICES = {
    "M_fin": [[2, -1], [-1, 2]],
    "M_aff": [[2, -2], [-2, 2]],
    "M_ind2": [[2, -5], [-1, 2]],
    "M_hyp": [[2, -2, -1], [-2, 2, 0], [-1, 0, 2]],
    "M_dec": [[2, -2, 0], [-2, 2, 0], [0, 0, 2]],
}


def test_gcms(names=None):
    names = names or list(TEST_MATRICES)
    return {name: validate_gcm(TEST_MATRICES[name]) for name in names}


def _report(suite, cases, failures, **extra):
    out = {"suite": suite, "cases": cases, "failures": failures}
    out.update(extra)
    return out


# --- classification -------------------------------------------------------


def brute_special_subsets(g):
    """Special subsets by classifying every subset and every component directly."""
    out = []
    for t in all_subsets(g):
        if not t:
            out.append(t)
            continue
        ok = True
        # every connected component of t must be of non-finite type
        remaining = set(t)
        while remaining:
            comp = {remaining.pop()}
            frontier = list(comp)
            while frontier:
                i = frontier.pop()
                for k in list(remaining):
                    if g.a(i, k):
                        remaining.discard(k)
                        comp.add(k)
                        frontier.append(k)
            if classify(g, frozenset(comp)) is TypeClass.FINITE:
                ok = False
        if ok:
            out.append(t)
    return sorted(out, key=subset_key)


def classification_suite(gcms):
    failures, cases = [], 0
    for name, g in gcms.items():
        cases += 1
        got, want = special_subsets(g), brute_special_subsets(g)
        if list(got) != want:
            failures.append({"gcm": name, "got": [sorted(s) for s in got],
                             "want": [sorted(s) for s in want]})
    return _report("classification", cases, failures)


# --- monoid ---------------------------------------------------------------


def monoid_suite(gcms, samples=1000, seed=0, max_len=6):
    failures, cases = [], 0
    for name, g in gcms.items():
        rng = random.Random(f"{seed}:{name}")
        one = unit(g)
        for case in range(samples):
            x, y, z = (random_element(rng, g, max_len) for _ in range(3))
            cases += 1
            checks = {
                "associativity": mul(mul(x, y), z) == mul(x, mul(y, z)),
                "unit": mul(one, x) == x == mul(x, one),
                "x x' x": mul(mul(x, inverse(x)), x) == x,
                "x' x x'": mul(mul(inverse(x), x), inverse(x)) == inverse(x),
                "x'' = x": inverse(inverse(x)) == x,
            }
            e, f = mul(x, inverse(x)), mul(inverse(y), y)
            checks["idempotents commute"] = (
                is_idempotent(e) and is_idempotent(f) and mul(e, f) == mul(f, e)
            )
            bad = [k for k, ok in checks.items() if not ok]
            if bad:
                failures.append({"gcm": name, "case": case, "laws": bad,
                                 "x": x.to_json(), "y": y.to_json(), "z": z.to_json()})
    return _report("monoid", cases, failures)


def classical_suite(max_len=6):
    g = validate_gcm(TEST_MATRICES["M_fin"])
    els = enumerate_elements(g, max_len)
    failures = []
    if len(els) != 6:
        failures.append({"reason": "count", "got": len(els)})
    if not all(x.is_unit for x in els):
        failures.append({"reason": "non-unit element"})
    cases = 0
    for x in els:
        for y in els:
            cases += 1
            if mul(x, y) != unit(g, wmul(x.left, y.left)):
                failures.append({"x": x.to_json(), "y": y.to_json()})
    return _report("classical", cases, failures, elements=len(els))


# --- lattice --------------------------------------------------------------


def random_face(rng, g, max_len=6):
    return make_face(g, random_word(rng, g, max_len), rng.choice(special_subsets(g)))


def lattice_suite(gcms, samples=500, seed=0):
    failures, cases = [], 0
    for name, g in gcms.items():
        rng = random.Random(f"{seed}:{name}")
        for case in range(samples):
            a, b, c = (random_face(rng, g) for _ in range(3))
            cases += 1
            m, j = face_meet, face_join
            checks = {
                "idempotent": m(a, a) == a and j(a, a) == a,
                "commutative": m(a, b) == m(b, a) and j(a, b) == j(b, a),
                "associative": m(m(a, b), c) == m(a, m(b, c)) and j(j(a, b), c) == j(a, j(b, c)),
                "absorption": m(a, j(a, b)) == a and j(a, m(a, b)) == a,
                "containment": (face_contains(a, b) == (m(a, b) == b) == (j(a, b) == a)),
                "bounds": face_contains(a, m(a, b)) and face_contains(j(a, b), a),
            }
            bad = [k for k, ok in checks.items() if not ok]
            if bad:
                failures.append({"gcm": name, "case": case, "laws": bad,
                                 "faces": [a.to_json(), b.to_json(), c.to_json()]})
    return _report("lattice", cases, failures)


def oracle_suite(gcms, pairs=200, samples=50, seed=0, budget=DEFAULT_BUDGET):
    failures, cases, unknowns = [], 0, 0
    for name, g in gcms.items():
        rng = random.Random(f"{seed}:{name}")
        for case in range(pairs):
            f1, f2 = random_face(rng, g), random_face(rng, g)
            rep = oracle_meet_report(f1, f2, samples, rng.randrange(2**32), budget)
            cases += 1
            unknowns += rep["unknowns"]
            if rep["violations"] or rep["unknowns"]:
                failures.append({"gcm": name, "case": case, "faces": [f1.to_json(), f2.to_json()],
                                 "unknowns": rep["unknowns"], "violations": rep["violations"][:3]})
    return _report("oracle", cases, failures, unknowns=unknowns)


# --- actions --------------------------------------------------------------


def actions_suite(gcms, samples=1000, seed=0, max_len=6):
    failures, cases = [], 0
    for name, g in gcms.items():
        for kind in ActionKind:
            law = action_law_check(g, kind, samples, f"{seed}:{name}:{kind.value}")
            cases += law["cases"]
            failures += [dict(f, gcm=name, check="action law", kind=kind.value)
                         for f in law["failures"]]
            for j in all_subsets(g):
                cases += 1
                rep = stabilizer_check(g, kind, j, max_len)
                if not rep["ok"]:
                    failures.append({"gcm": name, "check": "stabilizer", "kind": kind.value,
                                     "j": sorted(j),
                                     "parabolic_not_fixing": rep["parabolic_not_fixing"][:3],
                                     "fixing_not_parabolic": rep["fixing_not_parabolic"][:3]})
            cases += 2
            if not ab12_criterion_check(g, kind, max_len):
                failures.append({"gcm": name, "check": "ab12", "kind": kind.value})
            if not acneu_check(g, kind, max_len):
                failures.append({"gcm": name, "check": "acneu", "kind": kind.value})
    return _report("actions", cases, failures)


def bad_counterexample(g):
    """``e(R({1,2}))`` applied to ``W_{1,2} <= W_empty`` on the hyperbolic matrix."""
    x = idempotent(g, {1, 2})
    lo = ComplexElement(g.word(), frozenset({1, 2}))
    hi = ComplexElement(g.word(), frozenset())
    images = act(ActionKind.BAD, x, hi), act(ActionKind.BAD, x, lo)
    return {
        "pair": [hi.to_json(), lo.to_json()],
        "images": [i.to_json() for i in images],
        "comparable_before": complex_leq(lo, hi),
        "comparable_after": complex_leq(images[1], images[0]),
    }


def order_suite(gcms, samples=1000, seed=0):
    """Good actions must preserve order; the bad one must visibly fail on ``M_hyp``."""
    failures, cases, found = [], 0, {}
    for name, g in gcms.items():
        for kind in ActionKind:
            rep = order_preservation_check(g, kind, samples, f"{seed}:{name}:{kind.value}")
            cases += samples
            found[f"{name}:{kind.value}"] = len(rep["violations"])
            if kind is not ActionKind.BAD and rep["violations"]:
                failures.append({"gcm": name, "kind": kind.value,
                                 "violations": rep["violations"][:3]})
    if "M_hyp" in gcms:
        if found.get("M_hyp:bad", 0) < 1:
            failures.append({"gcm": "M_hyp", "kind": "bad", "reason": "no violation found"})
        ce = bad_counterexample(gcms["M_hyp"])
        cases += 1
        want = [{"rep": [], "jtype": [1, 2, 3]}, {"rep": [], "jtype": [1, 2]}]
        if not ce["comparable_before"] or ce["comparable_after"] or ce["images"] != want:
            failures.append({"gcm": "M_hyp", "reason": "counterexample mismatch", **ce})
    return _report("order", cases, failures, violations=found)


def good_witness_suite():
    g = validate_gcm(TEST_MATRICES["M_hyp"])
    x = idempotent(g, {1, 2})
    c = ComplexElement(g.word(3), frozenset())
    got = {k.value: act(k, x, c).to_json() for k in (ActionKind.GOOD1, ActionKind.GOOD2)}
    want = {"good1": {"rep": [], "jtype": [1, 2, 3]}, "good2": {"rep": [], "jtype": [1, 2]}}
    failures = [] if got == want else [{"got": got, "want": want}]
    return _report("good_witness", 1, failures)


# --- identities -----------------------------------------------------------


def middle_identity_suite(gcms, samples=500, seed=0, max_len=6):
    """``e(R(t1)) s e(R(t2)) = e(R(t1 u t2 u supp s)) s`` for minimal double
    coset representatives ``s``."""
    failures, cases = [], 0
    per = max(1, samples // len(gcms))
    for name, g in gcms.items():
        rng = random.Random(f"{seed}:{name}")
        specials = special_subsets(g)
        for case in range(per):
            t1, t2 = rng.choice(specials), rng.choice(specials)
            w = random_word(rng, g, max_len)
            rest, _ = coset_decompose(w, stabilizer_set(g, t1), Side.LEFT)
            s, _ = coset_decompose(rest, stabilizer_set(g, t2), Side.RIGHT)
            cases += 1
            su = unit(g, s)
            lhs = mul(idempotent(g, t1), mul(su, idempotent(g, t2)))
            rhs = mul(idempotent(g, t1 | t2 | s.support), su)
            if lhs != rhs:
                failures.append({"gcm": name, "case": case, "t1": sorted(t1), "t2": sorted(t2),
                                 "sigma": list(s.letters), "lhs": lhs.to_json(),
                                 "rhs": rhs.to_json()})
    return _report("middle_identity", cases, failures)


def stabilizer_geometry_suite(gcms, samples=100, seed=0, max_len=4, budget=DEFAULT_BUDGET):
    """Pointwise stabilizers fix sampled points; setwise stabilizers fix the face."""
    failures, cases = [], 0
    for name, g in gcms.items():
        rng = random.Random(f"{seed}:{name}")
        faces = [make_face(g, w, t) for t in special_subsets(g)
                 for w in (g.word(), random_word(rng, g, 3), random_word(rng, g, 5))]
        for f in faces:
            pointwise = stabilizer_elements(f, max_len, pointwise=True)
            setwise = stabilizer_elements(f, max_len, pointwise=False)
            for u in setwise:
                cases += 1
                if translate(u, f) != f:
                    failures.append({"gcm": name, "face": f.to_json(), "setwise": list(u.letters)})
            for p in sample_points(g, rng.randrange(2**32), samples, f):
                cases += 1
                if face_membership(p, f, budget) is not True:
                    failures.append({"gcm": name, "face": f.to_json(), "point": [str(v) for v in p],
                                     "reason": "sample outside face"})
                    continue
                for u in pointwise:
                    if act_on_profile(u, p) != p:
                        failures.append({"gcm": name, "face": f.to_json(),
                                         "point": [str(v) for v in p], "pointwise": list(u.letters)})
                        break
    return _report("stabilizer_geometry", cases, failures)


SUITES = {
    "classification": lambda a: classification_suite(test_gcms()),
    "monoid": lambda a: monoid_suite(test_gcms(), a.samples, a.seed, a.max_len),
    "classical": lambda a: classical_suite(a.max_len),
    "lattice": lambda a: lattice_suite(test_gcms(), a.samples, a.seed),
    "oracle": lambda a: oracle_suite(test_gcms(["M_aff", "M_hyp", "M_dec"]),
                                     a.samples, 50, a.seed, a.budget),
    "actions": lambda a: actions_suite(test_gcms(), a.samples, a.seed, a.max_len),
    "order": lambda a: order_suite(test_gcms(), a.samples, a.seed),
    "good_witness": lambda a: good_witness_suite(),
    "middle_identity": lambda a: middle_identity_suite(test_gcms(), a.samples, a.seed, a.max_len),
    "stabilizer_geometry": lambda a: stabilizer_geometry_suite(
        test_gcms(["M_aff", "M_dec", "M_hyp"]), a.samples, a.seed, 4, a.budget),
}
