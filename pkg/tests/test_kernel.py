from __future__ import annotations

import re

import pytest

from termlogic.corpus import all_scripts
from termlogic.kernel import Line, Premise, Proof, SchemaApply, SubstEquals, check_proof, check_step, line_order
from termlogic.script import parse_script
from termlogic.systems import get_system
from termlogic.terms import Atom, parse_statement as P

BARBARA = """\
system LC
atoms s m p
P1: s&m = s
P2: m&p = m
C1: s&p = s
S3: s&(m&p) = s by eq P2 into P1 at 0.1 r2l
S3a: s&(m&p) = (s&m)&p by axiom LC2 {b:=s, c:=m, d:=p} -- split
S4: (s&m)&p = s by eq S3a into S3 at 0
S5: s&p = s by eq P1 into S4 at 0.0
"""


def _verdict(text):
    return check_proof(parse_script(text))


def test_reference_proof_checks():
    v = _verdict(BARBARA)
    assert v.ok and v.usage == frozenset({"LC2"})
    assert parse_script(BARBARA).step_count() == 3


@pytest.mark.parametrize(
    "old, new, reason",
    [
        ("at 0.1 r2l", "at 0.1", "not the source side"),
        ("at 0.0\n", "at 0.1\n", "not the source side"),
        ("{b:=s, c:=m, d:=p}", "{b:=s, c:=p, d:=m}", "does not match|mismatch"),
        ("{b:=s, c:=m, d:=p}", "{b:=s, c:=m}", "binding misses"),
        ("{b:=s, c:=m, d:=p}", "{b:=s, c:=m, d:=p, e:=s}", "unknown variables"),
        ("S4: (s&m)&p = s", "S4: (s&m)&p = m", "mismatch"),
        ("by eq P1 into S4", "by eq S5 into S4", "unknown or later"),
        ("S3a:", "S2:", "strictly increase"),
        ("eq P1 into S4 at 0.0", "eq P1 into S4 at 0.5", "bad position"),
        ("atoms s m p", "atoms s m", "leaves the signature"),
        ("C1: s&p = s", "C1: p&s = s", "never derived"),
    ],
)
def test_corrupted_reference_proof_is_rejected(old, new, reason):
    assert old in BARBARA
    v = _verdict(BARBARA.replace(old, new, 1))
    assert not v.ok
    assert re.search(reason, str(v.violation)), str(v.violation)


def test_equation_side_must_be_an_equation():
    text = BARBARA.replace("P2: m&p = m", "P2: m&p != m")
    v = _verdict(text)
    assert not v.ok and "not an equation" in str(v.violation)


def test_non_sequitur_fails_in_the_kernel():
    text = "system LC\natoms s m p\nP1: s&m = s\nC1: s&p = s\nS2: s&p = s by axiom LC1 {b:=s, c:=p}\n"
    v = _verdict(text)
    assert not v.ok and v.violation.line == "S2"


def test_unknown_schema_in_a_hand_built_proof():
    proof = Proof("LC", ("b",), (Line("S1", P("b = b"), SchemaApply.make("ML4", {"b": Atom("b")})),), ())
    v = check_proof(proof)
    assert not v.ok and "unknown schema" in v.violation.reason


def test_reverse_needs_a_bidirectional_schema():
    sysdef = get_system("LC")
    ctx = {"P1": P("b != 0")}
    why = SchemaApply.make("LC3", {"b": Atom("b"), "c": Atom("b")}, reverse=True, sources=("P1",))
    bad = check_step(ctx, sysdef, Line("S2", P("b&b != 0"), why))
    assert bad is not None and "not bidirectional" in bad.reason


def test_reverse_application():
    sysdef = get_system("LC")
    ctx = {"P1": P("c'&b' = c'")}
    why = SchemaApply.make("LC4", {"b": Atom("b"), "c": Atom("c")}, reverse=True, sources=("P1",))
    assert check_step(ctx, sysdef, Line("S2", P("b&c = b"), why)) is None


def test_source_count_is_checked():
    sysdef = get_system("ML")
    ctx = {"P1": P("b <= c")}
    why = SchemaApply.make("ML4", {"b": Atom("b"), "c": Atom("c"), "d": Atom("d")}, sources=("P1",))
    bad = check_step(ctx, sysdef, Line("S2", P("b <= d"), why))
    assert bad is not None and "needs 2 cited lines" in bad.reason


def test_premise_lines_are_free_but_steps_are_not():
    assert check_step({}, get_system("LC"), Line("P1", P("b = 0"), Premise())) is None
    why = SubstEquals("P1", "P1", (0,))
    assert check_step({}, get_system("LC"), Line("S1", P("b = 0"), why)) is not None


def test_unknown_uses_lemma_is_a_header_violation():
    proof = Proof("BL", ("b",), (), (), uses=("BL-none",))
    v = check_proof(proof)
    assert not v.ok and v.violation.rule == "header"


def test_line_order_parsing():
    assert line_order("S3a") == (3, "a")
    assert line_order("S3") < line_order("S3a") < line_order("S4")
    with pytest.raises(ValueError):
        line_order("X")


_STEP = re.compile(r"^S\d+[a-z]*:", re.M)


@pytest.mark.parametrize("entry", all_scripts(), ids=lambda e: e.id)
def test_deleting_any_step_breaks_the_proof(entry):
    lines = entry.text.splitlines(keepends=True)
    steps = [i for i, l in enumerate(lines) if _STEP.match(l)]
    assert steps
    for i in steps:
        tampered = "".join(lines[:i] + lines[i + 1:])
        v = check_proof(parse_script(tampered))
        assert not v.ok, f"{entry.id} still checks without line {lines[i].strip()}"
