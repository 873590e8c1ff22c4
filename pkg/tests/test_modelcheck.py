from __future__ import annotations

import importlib
import sys

import pytest
from hypothesis import given, settings
from hypothesis import strategies as hst

import oracle
from strategies import ATOMS, statements
from termlogic import _accel, _mcpure
from termlogic.modelcheck import (
    HARD_MAX_ATOMS,
    Program,
    backend_name,
    equivalent,
    lift,
    meta_and,
    meta_not,
    meta_or,
    satisfying_models,
    valid,
)
from termlogic.semantics import SignatureError, all_models, holds
from termlogic.terms import parse_statement as P

try:
    from termlogic import _mckernel
except ImportError:  # extension not built
    _mckernel = None

BACKENDS = [pytest.param(_mcpure, id="python")]
if _mckernel is not None:
    BACKENDS.append(pytest.param(_mckernel, id="cython"))


@settings(max_examples=150, deadline=None)
@given(hst.lists(statements, max_size=2), statements)
def test_validity_matches_brute_force(prems, concl):
    report = valid(prems, concl, signature=ATOMS)
    counter = oracle.entails(prems, concl, ATOMS)
    assert report.valid == (counter is None)
    if not report.valid:
        m = report.countermodel
        assert all(holds(p, m) for p in prems) and not holds(concl, m)


@pytest.mark.parametrize("backend", BACKENDS)
@settings(max_examples=60, deadline=None)
@given(statements, statements)
def test_backends_agree_with_direct_evaluation(backend, a, b):
    f = meta_or(meta_and(a, meta_not(b)), b)
    prog = Program(f, ATOMS)
    expected = [m.inhabited for m in all_models(ATOMS) if holds(a, m) and not holds(b, m) or holds(b, m)]
    assert prog.count(backend) == len(expected)
    assert prog.first(backend=backend) == (expected[0] if expected else -1)
    if expected:
        assert prog.first(expected[0] + 1, backend) == (expected[1] if len(expected) > 1 else -1)


def test_backend_selection_prefers_compiled():
    assert backend_name() in ("cython", "python")
    if _mckernel is not None:
        assert backend_name() == "cython"


def test_fallback_when_extension_is_missing(monkeypatch):
    monkeypatch.setitem(sys.modules, "termlogic._mckernel", None)
    try:
        fresh = importlib.reload(_accel)
        assert fresh.BACKEND == "python"
        assert fresh.first_model is _mcpure.first_model
    finally:
        monkeypatch.undo()
        importlib.reload(_accel)


def test_empty_connectives():
    assert Program(meta_and(), ("b",)).count() == 4
    assert Program(meta_or(), ("b",)).count() == 0


def test_equivalence_of_contrapositive_forms():
    assert equivalent(P("b <= c"), P("c' <= b'"))
    assert equivalent(P("b # c"), P("b&c != 0"))
    assert not equivalent(P("b <= c"), P("c <= b"))


def test_proper_inclusion_and_negations():
    assert valid([P("b < c")], P("b <= c")).valid
    assert valid([P("b < c")], P("b != c")).valid
    assert valid([P("b !< c"), P("b <= c")], P("b = c")).valid
    assert valid([P("b > c")], P("c < b")).valid
    assert valid([P("c !> b")], P("b !< c")).valid


def test_countermodel_is_the_lowest_index():
    r = valid([P("m <= s"), P("m <= p")], P("s # p"))
    assert not r.valid
    assert r.countermodel.inhabited == 0
    assert r.models_checked == 1


def test_satisfying_models_enumerates_in_order():
    ms = satisfying_models(P("b # b"), ("b",))
    assert [m.inhabited for m in ms] == [2, 3]


def test_atom_caps():
    big = P("b&c = d&e")
    assert valid([], P("b = b"), signature=("b", "c", "d", "e")).valid
    with pytest.raises(SignatureError):
        valid([], big, max_atoms=3)
    with pytest.raises(SignatureError):
        valid([], P("b = b"), max_atoms=HARD_MAX_ATOMS + 1)


def test_lift_rejects_junk():
    with pytest.raises(TypeError):
        lift("b = c")
