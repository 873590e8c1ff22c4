from __future__ import annotations

import pytest
from hypothesis import given

from strategies import exprs
from termlogic.corpus import lemma_requires_mismatches
from termlogic.modelcheck import valid
from termlogic.systems import (
    SYSTEM_NAMES,
    AxiomSchema,
    BindingError,
    SchemaKind,
    bl_theorems,
    fill,
    find_lemma,
    get_system,
    instantiate,
    match,
    schema,
)
from termlogic.terms import Atom, Var, parse_expr, parse_statement


def _ground(sch: AxiomSchema):
    return instantiate(sch, {v: Atom(v) for v in sch.variables})


def _all_schemas():
    seen = {}
    for name in SYSTEM_NAMES:
        for s in get_system(name).schemas:
            seen[(name, s.name)] = s
    for s in bl_theorems():
        seen[("BL", s.name)] = s
    return seen


@pytest.mark.parametrize("key", sorted(_all_schemas()), ids=lambda k: f"{k[0]}:{k[1]}")
def test_every_schema_is_sound(key):
    sch = _all_schemas()[key]
    prems, concl = _ground(sch)
    assert valid(prems, concl).valid
    if sch.bidirectional:
        assert valid([concl], prems[0]).valid


def test_system_inventories():
    assert get_system("LC").names == ("LC1", "LC2", "LC3", "LC4", "LC5", "LC6")
    assert get_system("ML").names == ("ML1", "ML2", "ML3", "ML4", "ML5", "ML6")
    assert len(get_system("BL").names) == 14
    assert get_system("LC+D").names[-2:] == ("D1", "D2")
    with pytest.raises(KeyError):
        get_system("XY")


def test_lemma_requires_match_their_scripts():
    assert lemma_requires_mismatches() == []
    assert find_lemma("BL-dom-meet").kind is SchemaKind.LEMMA
    assert find_lemma("nope") is None


def test_lemma_usage_expands():
    lc6 = get_system("LC").get("LC6")
    assert lc6.usage == frozenset({"LC1", "LC3"})
    assert get_system("LC").get("LC2").usage == frozenset({"LC2"})


def test_schema_construction_guards():
    with pytest.raises(ValueError):
        schema("X", ["b = c", "c = d"], "b = d", bidirectional=True)
    with pytest.raises(ValueError):
        schema("X", ["b = c"], "b = e")
    with pytest.raises(ValueError):
        schema("X", [], "b = b", kind=SchemaKind.LEMMA)


def test_instantiation_is_simultaneous():
    sch = get_system("LC").get("LC1")
    _, concl = instantiate(sch, {"b": parse_expr("c"), "c": parse_expr("b")})
    assert concl == parse_statement("c&b = b&c")
    with pytest.raises(BindingError):
        instantiate(sch, {"b": Atom("c")})


@given(exprs, exprs)
def test_match_inverts_fill(x, y):
    pattern = parse_expr("(b&c)'", variables=True)
    term = fill(pattern, {"b": x, "c": y})
    assert match(pattern, term) == {"b": x, "c": y}


def test_match_respects_repeated_variables():
    pattern = parse_expr("b&b", variables=True)
    assert match(pattern, parse_expr("c&c")) == {"b": Atom("c")}
    assert match(pattern, parse_expr("c&d")) is None
    assert match(Var("b"), Atom("c"), {"b": Atom("d")}) is None
