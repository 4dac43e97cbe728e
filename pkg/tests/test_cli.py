import json

import pytest

from facemonoid.cli import main, parse_element_expr
from facemonoid.errors import NotSpecial, ParseError
from facemonoid.monoid import canonical, idempotent, unit


@pytest.fixture
def gcm_file(tmp_path):
    def write(matrix):
        path = tmp_path / "g.json"
        path.write_text(json.dumps({"matrix": matrix}))
        return str(path)
    return write


HYP = [[2, -2, -1], [-2, 2, 0], [-1, 0, 2]]
AFF = [[2, -2], [-2, 2]]
DEC = [[2, -2, 0], [-2, 2, 0], [0, 0, 2]]


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, json.loads(out) if out.strip() else None


def test_parse_examples(hyp, dec):
    assert parse_element_expr(hyp, "e[1,2]") == idempotent(hyp, {1, 2})
    assert parse_element_expr(dec, "s3.e[1,2]") == canonical(dec, dec.word(3), {1, 2}, dec.word())
    assert parse_element_expr(hyp, "s1.s1") == unit(hyp)
    assert parse_element_expr(hyp, "e[1,2].s3.s1") == canonical(hyp, hyp.word(), {1, 2}, hyp.word(3, 1))


@pytest.mark.parametrize("text, pos", [("e[1,2", 5), ("s1.x", 3), ("e[a]", 2), ("s1e[1]", 2)])
def test_parse_errors(hyp, text, pos):
    with pytest.raises(ParseError) as info:
        parse_element_expr(hyp, text)
    assert info.value.position == pos


def test_parse_not_special(hyp):
    with pytest.raises(NotSpecial):
        parse_element_expr(hyp, "e[3]")


def test_classify_special_act(capsys, gcm_file):
    assert run(capsys, "classify", "--gcm", gcm_file(AFF)) == (
        0, {"components": [{"indices": [1, 2], "type": "Affine"}]})
    hyp = gcm_file(HYP)
    assert run(capsys, "special", "--gcm", hyp) == (0, {"special": [[], [1, 2], [1, 2, 3]]})
    code, out = run(capsys, "--gcm", hyp, "act", "--kind", "good2", "--element", "e[1,2]",
                    "--coset", '{"rep":[3],"jtype":[]}')
    assert (code, out) == (0, {"rep": [], "jtype": [1, 2]})


def test_word_face_monoid(capsys, gcm_file):
    aff, hyp, dec = gcm_file(AFF), None, None
    assert run(capsys, "word", "--gcm", aff, "1,2", "1") == (0, {"word": [1, 2, 1]})
    hyp = gcm_file(HYP)
    code, out = run(capsys, "--gcm", hyp, "face", "meet", '{"theta":[1,2],"rep":[]}',
                    '{"theta":[1,2],"rep":[3]}')
    assert out == {"theta": [1, 2, 3], "rep": []}
    code, out = run(capsys, "--gcm", hyp, "face", "facet", '{"theta":[1,2],"rep":[]}',
                    '{"rep":[3],"jtype":[]}')
    assert out == {"rep": [], "jtype": [1, 2, 3]}
    dec = gcm_file(DEC)
    code, out = run(capsys, "--gcm", dec, "monoid", "nf", "s3.e[1,2]", "--variant", "II")
    assert out == {"left": [], "theta": [1, 2], "right": [3]}
    code, out = run(capsys, "--gcm", dec, "monoid", "mul", "e[1,2]", '{"left":[3],"theta":[],"right":[]}')
    assert out == {"left": [3], "theta": [1, 2], "right": []}


def test_roundtrip(capsys, gcm_file):
    hyp = gcm_file(HYP)
    code, out = run(capsys, "--gcm", hyp, "--max-len", "2", "enumerate")
    for el in out["elements"]:
        code, back = run(capsys, "--gcm", hyp, "monoid", "inv", json.dumps(el))
        code, again = run(capsys, "--gcm", hyp, "monoid", "inv", json.dumps(back))
        assert again == el


def test_error_codes(capsys, gcm_file, tmp_path):
    hyp = gcm_file(HYP)
    code, out = run(capsys, "--gcm", hyp, "monoid", "inv", "e[1,2")
    assert code == 3 and out == {"error": "ParseError", "detail": "expected ']'", "position": 5}
    code, out = run(capsys, "--gcm", hyp, "monoid", "inv", "e[3]")
    assert code == 3 and out["error"] == "NotSpecial"
    assert main(["special"]) == 2
    assert main(["special", "--gcm", str(tmp_path / "missing.json")]) == 4
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps({"matrix": [[2, -1], [0, 2]]}))
    code, out = run(capsys, "special", "--gcm", str(bad))
    assert code == 3 and out["error"] == "AsymmetricZero"
    with pytest.raises(SystemExit) as info:
        main(["act", "--gcm", hyp])
    assert info.value.code == 2


def test_verify_reproducible(capsys):
    code1, out1 = run(capsys, "verify", "--suite", "order", "--samples", "400", "--seed", "7")
    code2, out2 = run(capsys, "verify", "--suite", "order", "--samples", "400", "--seed", "7")
    assert code1 == code2 == 0 and out1 == out2
    assert out1["suite"] == "order" and out1["failures"] == []
