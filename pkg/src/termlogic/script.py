"""Reader and writer for the line-oriented proof script format.

    system LC
    atoms s m p
    P1: s&m = s
    P2: m&p = m
    C1: s&p = s
    S3: s&(m&p) = s by eq P2 into P1 at 0.1 r2l
    S3a: s&(m&p) = (s&m)&p by axiom LC2 {b:=s, c:=m, d:=p} -- split
    S4: (s&m)&p = s by eq S3a into S3 at 0
    S5: s&p = s by eq P1 into S4 at 0.0

``--`` starts a comment. A trailing ``-- split`` marks a helper line that
exists only because one written step needed two kernel rules.
"""

from __future__ import annotations

import re

from .kernel import Line, Premise, Proof, SchemaApply, SubstEquals
from .semantics import check_signature
from .systems import find_lemma, get_system
from .terms import ParseError, format_path, normalize, parse_expr, parse_path, parse_statement, render, render_statement


class ScriptError(ValueError):
    def __init__(self, message: str, line: int = 0, column: int = 0):
        self.line = line
        self.column = column
        where = f"line {line}" + (f", column {column}" if column else "") if line else ""
        super().__init__(f"{where}: {message}" if where else message)


_LINE = re.compile(r"^(?P<id>[PSC]\d+[a-z]*)\s*:\s*(?P<body>.*)$")
_BY = re.compile(r"\s+by\s+(?=(premise|axiom|eq)\b)")
_AXIOM = re.compile(
    r"^axiom\s+(?P<name>[A-Za-z][A-Za-z0-9+\-]*)\s*(?:\{(?P<binding>[^}]*)\})?"
    r"(?P<rev>\s+rev)?(?:\s+from\s+(?P<src>.+))?$"
)
_EQ = re.compile(r"^eq\s+(?P<eq>\w+)\s+into\s+(?P<target>\w+)\s+at\s+(?P<path>[\w.]+)(?P<r2l>\s+r2l)?$")


def _strip_comment(raw: str) -> tuple[str, str]:
    if "--" in raw:
        i = raw.index("--")
        return raw[:i].rstrip(), raw[i + 2:].strip()
    return raw.rstrip(), ""


def _statement(text: str, lineno: int, offset: int):
    try:
        return normalize(parse_statement(text))
    except ParseError as exc:
        raise ScriptError(str(exc).split(" at column")[0], lineno, offset + exc.column) from None


def _justification(text: str, lineno: int, offset: int):
    text = text.strip()
    if text == "premise":
        return Premise()
    m = _AXIOM.match(text)
    if m:
        binding = {}
        body = m.group("binding") or ""
        for part in filter(None, (p.strip() for p in body.split(","))):
            if ":=" not in part:
                raise ScriptError(f"binding entry {part!r} lacks ':='", lineno, offset)
            var, expr = (s.strip() for s in part.split(":=", 1))
            if var in binding:
                raise ScriptError(f"variable {var} bound twice", lineno, offset)
            try:
                binding[var] = parse_expr(expr)
            except ParseError as exc:
                raise ScriptError(f"in binding for {var}: {exc}", lineno, offset) from None
        src = m.group("src")
        sources = tuple(s.strip() for s in src.split(",")) if src else ()
        return SchemaApply.make(m.group("name"), binding, bool(m.group("rev")), sources)
    m = _EQ.match(text)
    if m:
        try:
            path = parse_path(m.group("path"))
        except ParseError as exc:
            raise ScriptError(str(exc), lineno, offset) from None
        return SubstEquals(m.group("eq"), m.group("target"), path, bool(m.group("r2l")))
    raise ScriptError(f"cannot read justification {text!r}", lineno, offset + 1)


def parse_script(text: str) -> Proof:
    system = None
    signature: tuple[str, ...] | None = None
    uses: list[str] = []
    title = ""
    lines: list[Line] = []
    conclusions = []
    cited: list[tuple[str, int]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        body, note = _strip_comment(raw)
        if not body.strip():
            if not lines and not title and note.startswith("title "):
                title = note[6:].strip()
            continue
        words = body.split()
        if words[0] == "system":
            if len(words) != 2:
                raise ScriptError("expected 'system <name>'", lineno, 1)
            system = words[1]
            continue
        if words[0] == "atoms":
            try:
                signature = check_signature(words[1:])
            except ValueError as exc:
                raise ScriptError(str(exc), lineno, 1) from None
            continue
        if words[0] == "uses":
            uses.extend(words[1:])
            continue
        m = _LINE.match(body.strip())
        if not m:
            raise ScriptError(f"unrecognised line {body.strip()!r}", lineno, 1)
        ident, rest = m.group("id"), m.group("body")
        offset = raw.index(rest) if rest else 0
        if ident.startswith("C"):
            if _BY.search(rest):
                raise ScriptError("conclusion lines take no justification", lineno, offset + 1)
            conclusions.append(_statement(rest, lineno, offset))
            continue
        parts = _BY.split(rest, maxsplit=1)
        stmt_text = parts[0]
        why = Premise() if len(parts) == 1 else _justification(parts[2], lineno, raw.index(parts[2]))
        if ident.startswith("P") and len(parts) == 1:
            why = Premise()
        elif ident.startswith("S") and isinstance(why, Premise):
            raise ScriptError(f"step {ident} needs a justification", lineno, offset + 1)
        if isinstance(why, SchemaApply):
            cited.append((why.schema, lineno))
        lines.append(Line(ident, _statement(stmt_text, lineno, offset), why, split=note.split()[:1] == ["split"]))
    if system is None:
        raise ScriptError("missing 'system' header")
    if signature is None:
        raise ScriptError("missing 'atoms' header")
    _check_names(system, uses, cited)
    return Proof(system, signature, tuple(lines), tuple(conclusions), tuple(uses), title)


def _check_names(system: str, uses: list[str], cited: list[tuple[str, int]]) -> None:
    try:
        known = set(get_system(system).names)
    except KeyError as exc:
        raise ScriptError(exc.args[0]) from None
    for name in uses:
        if find_lemma(name) is None:
            raise ScriptError(f"unknown lemma {name!r} in 'uses'")
        known.add(name)
    for name, lineno in cited:
        if name not in known:
            raise ScriptError(f"unknown axiom {name} in {system}", lineno)


def format_justification(why) -> str:
    if isinstance(why, Premise):
        return "premise"
    if isinstance(why, SchemaApply):
        out = f"axiom {why.schema}"
        if why.binding:
            out += " {" + ", ".join(f"{v}:={render(e)}" for v, e in why.binding) + "}"
        if why.reverse:
            out += " rev"
        if why.sources:
            out += " from " + ", ".join(why.sources)
        return out
    out = f"eq {why.equation} into {why.target} at {format_path(why.path)}"
    return out + (" r2l" if why.r2l else "")


def format_script(proof: Proof) -> str:
    out = []
    if proof.title:
        out.append(f"-- title {proof.title}")
    out.append(f"system {proof.system}")
    out.append("atoms " + " ".join(proof.signature))
    if proof.uses:
        out.append("uses " + " ".join(proof.uses))
    goals = [f"C{i}: {render_statement(c)}" for i, c in enumerate(proof.conclusions, 1)]
    for l in proof.lines:
        if l.is_premise:
            out.append(f"{l.id}: {render_statement(l.statement)}")
            continue
        # conclusions go right after the leading premises
        out.extend(goals)
        goals = []
        text = f"{l.id}: {render_statement(l.statement)} by {format_justification(l.why)}"
        out.append(text + (" -- split" if l.split else ""))
    out.extend(goals)
    return "\n".join(out) + "\n"
