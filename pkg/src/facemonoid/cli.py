"""Command-line front end ``fm``.

All machine output is JSON on stdout (``--pretty`` indents it).  Errors raised
by the library are printed as ``{"error": name, "detail": ...}``.

Exit codes: 0 success, 1 a verification suite failed, 2 usage error,
3 computational error, 4 unreadable input file.
"""

import argparse
import json
import sys
import types

from . import verify as _verify
from .actions import ActionKind, act, make_coset
from .cone import DEFAULT_BUDGET
from .errors import FaceMonoidError, ParseError
from .faces import face_join, face_meet, face_meet_facet, make_face, make_facet, special_face
from .gcm import classify, components, special_subsets, validate_gcm
from .monoid import enumerate_elements, inverse, make_element, mul, normal_form

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_COMPUTE, EXIT_INPUT = 0, 1, 2, 3, 4


# --- element expressions --------------------------------------------------


class _Scanner:
    def __init__(self, text):
        self.text = text
        self.pos = 0

    def peek(self, s):
        return self.text.startswith(s, self.pos)

    def eat(self, s):
        if not self.peek(s):
            raise ParseError(f"expected {s!r}", self.pos)
        self.pos += len(s)

    def integer(self):
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise ParseError("expected an index", start)
        return int(self.text[start:self.pos])

    def done(self):
        return self.pos >= len(self.text)


def _parse_word(sc):
    sc.eat("s")
    letters = [sc.integer()]
    while sc.peek(".s"):
        sc.eat(".s")
        letters.append(sc.integer())
    return letters


def parse_element_expr(g, text):
    """Parse ``[word] [e[i,...]] [word]`` (parts joined by ``.``) into a
    canonical face monoid element.  ``1`` is the identity."""
    text = "".join(text.split())
    if text in ("", "1"):
        return make_element(g, g.word(), special_face(g, ()), g.word())
    sc = _Scanner(text)
    left, right, theta = [], [], None
    if sc.peek("s"):
        left = _parse_word(sc)
        if not sc.done():
            sc.eat(".")
    if sc.peek("e["):
        sc.eat("e[")
        theta = []
        if not sc.peek("]"):
            theta.append(sc.integer())
            while sc.peek(","):
                sc.eat(",")
                theta.append(sc.integer())
        sc.eat("]")
        if not sc.done():
            sc.eat(".")
            right = _parse_word(sc)
    if not sc.done():
        raise ParseError(f"unexpected {sc.text[sc.pos]!r}", sc.pos)
    for i in theta or ():
        if not 1 <= i <= g.n:
            raise ParseError(f"index {i} outside 1..{g.n}", None)
    face = special_face(g, theta or ())
    return make_element(g, g.word(*left), face, g.word(*right))


# --- JSON readers ---------------------------------------------------------


def _json_arg(text, what):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{what}: {exc.msg}", exc.pos) from None


def read_gcm(path):
    with open(path) as fh:
        data = json.load(fh)
    return validate_gcm(data["matrix"] if isinstance(data, dict) else data)


def read_face(g, text):
    d = _json_arg(text, "face")
    return make_face(g, g.word(*d.get("rep", [])), d.get("theta", []))


def read_facet(g, text):
    d = _json_arg(text, "facet")
    return make_facet(g, g.word(*d.get("rep", [])), d.get("jtype", []))


def read_coset(g, text):
    d = _json_arg(text, "coset")
    return make_coset(g, g.word(*d.get("rep", [])), d.get("jtype", []))


def read_element(g, text):
    """Accept either an element expression or element JSON."""
    text = text.strip()
    if text.startswith("{"):
        d = _json_arg(text, "element")
        return make_element(g, g.word(*d.get("left", [])),
                            special_face(g, d.get("theta", [])), g.word(*d.get("right", [])))
    return parse_element_expr(g, text)


# --- commands -------------------------------------------------------------


def cmd_classify(g, args):
    return {"components": [
        {"indices": sorted(c), "type": classify(g, c).value} for c in components(g, g.I)
    ]}


def cmd_special(g, args):
    return {"special": [sorted(s) for s in special_subsets(g)]}


def cmd_word(g, args):
    letters = []
    for chunk in args.letters:
        for x in chunk.split(","):
            if x.strip():
                if not x.strip().isdigit():
                    raise ParseError(f"not a generator index: {x!r}", None)
                letters.append(int(x))
    return {"word": list(g.word(*letters).letters)}


def cmd_face(g, args):
    f1 = read_face(g, args.first)
    if args.op == "facet":
        return face_meet_facet(f1, read_facet(g, args.second)).to_json()
    f2 = read_face(g, args.second)
    return (face_meet if args.op == "meet" else face_join)(f1, f2).to_json()


def cmd_monoid(g, args):
    x = read_element(g, args.element)
    if args.op == "mul":
        if args.other is None:
            raise ParseError("mul needs a second element", None)
        return mul(x, read_element(g, args.other)).to_json()
    if args.op == "inv":
        return inverse(x).to_json()
    w1, theta, w2 = normal_form(x, args.variant)
    return {"left": list(w1.letters), "theta": sorted(theta), "right": list(w2.letters)}


def cmd_act(g, args):
    x = read_element(g, args.element)
    return act(ActionKind(args.kind), x, read_coset(g, args.coset)).to_json()


def cmd_enumerate(g, args):
    return {"elements": [x.to_json() for x in enumerate_elements(g, args.max_len)]}


def cmd_verify(args):
    names = list(_verify.SUITES) if args.suite == "all" else [args.suite]
    opts = types.SimpleNamespace(
        seed=args.seed,
        max_len=6 if args.max_len is None else args.max_len,
        samples=args.samples,
        budget=args.budget,
    )
    reports = []
    for name in names:
        rep = _verify.SUITES[name](_defaults(name, opts))
        reports.append(rep)
    failed = sum(len(r["failures"]) for r in reports)
    if len(reports) == 1:
        return reports[0], failed
    cases = sum(r["cases"] for r in reports)
    return {"suite": "all", "cases": cases, "failures": [
        dict(f, suite=r["suite"]) for r in reports for f in r["failures"]
    ], "suites": {r["suite"]: {"cases": r["cases"], "failures": len(r["failures"])}
                  for r in reports}}, failed


# sample counts used by the acceptance criteria when --samples is not given
_SUITE_SAMPLES = {
    "monoid": 1000, "lattice": 500, "oracle": 200, "actions": 1000,
    "order": 1000, "middle_identity": 500, "stabilizer_geometry": 100,
}


def _defaults(name, opts):
    if opts.samples is not None:
        return opts
    return types.SimpleNamespace(**{**vars(opts), "samples": _SUITE_SAMPLES.get(name, 100)})


def _add_globals(p, suppress):
    def default(value):
        return argparse.SUPPRESS if suppress else value

    p.add_argument("--gcm", metavar="FILE", default=default(None),
                   help='JSON file {"matrix": [[...], ...]}')
    p.add_argument("--seed", type=int, default=default(0))
    p.add_argument("--max-len", type=int, default=default(None))
    p.add_argument("--samples", type=int, default=default(None))
    p.add_argument("--budget", type=int, default=default(DEFAULT_BUDGET))
    p.add_argument("--pretty", action="store_true", default=default(False))


def build_parser():
    p = argparse.ArgumentParser(prog="fm", description="Face monoid of a Kac-Moody Weyl group.")
    _add_globals(p, suppress=False)
    # global flags are accepted after the subcommand too
    common = argparse.ArgumentParser(add_help=False)
    _add_globals(common, suppress=True)
    sub = p.add_subparsers(dest="command", required=True)

    def cmd(name, **kw):
        return sub.add_parser(name, parents=[common], **kw)

    cmd("classify", help="Kac type of each component")
    cmd("special", help="list the special subsets")
    w = cmd("word", help="canonical reduced word")
    w.add_argument("letters", nargs="*", help="generators, e.g. 2 1 2 or 2,1,2")

    f = cmd("face", help="face lattice operations")
    f.add_argument("op", choices=["meet", "join", "facet"])
    f.add_argument("first", help='face JSON {"theta": [...], "rep": [...]}')
    f.add_argument("second", help='face JSON, or facet JSON {"rep": [...], "jtype": [...]}')

    m = cmd("monoid", help="monoid operations")
    m.add_argument("op", choices=["mul", "inv", "nf"])
    m.add_argument("element")
    m.add_argument("other", nargs="?")
    m.add_argument("--variant", choices=["I", "II"], default="I")

    a = cmd("act", help="act on a coset of the Coxeter complex")
    a.add_argument("--kind", choices=[k.value for k in ActionKind], required=True)
    a.add_argument("--element", required=True)
    a.add_argument("--coset", required=True, help='JSON {"rep": [...], "jtype": [...]}')

    cmd("enumerate", help="elements up to --max-len")

    v = cmd("verify", help="run verification suites")
    v.add_argument("--suite", choices=["all", *_verify.SUITES], default="all")
    return p


_COMMANDS = {
    "classify": cmd_classify,
    "special": cmd_special,
    "word": cmd_word,
    "face": cmd_face,
    "monoid": cmd_monoid,
    "act": cmd_act,
    "enumerate": cmd_enumerate,
}


def _emit(obj, pretty, stream=None):
    stream = stream or sys.stdout
    stream.write(json.dumps(obj, indent=2 if pretty else None) + "\n")


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        if args.command == "verify":
            report, failed = cmd_verify(args)
            _emit(report, args.pretty)
            return EXIT_FAILED if failed else EXIT_OK
        if args.gcm is None:
            _emit({"error": "Usage", "detail": "--gcm FILE is required"}, args.pretty, sys.stderr)
            return EXIT_USAGE
        if args.command == "enumerate" and args.max_len is None:
            args.max_len = 3
        try:
            g = read_gcm(args.gcm)
        except (OSError, ValueError, KeyError, TypeError) as exc:
            _emit({"error": "BadInput", "detail": str(exc)}, args.pretty, sys.stderr)
            return EXIT_INPUT
        _emit(_COMMANDS[args.command](g, args), args.pretty)
        return EXIT_OK
    except FaceMonoidError as exc:
        _emit(exc.to_json(), args.pretty)
        return EXIT_COMPUTE


if __name__ == "__main__":
    sys.exit(main())
