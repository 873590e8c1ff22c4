"""Command-line entry point.

Exit status: 0 ok, 1 logical failure such as a kernel violation or a
countermodel, 2 usage or parse error.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import replace
from typing import Sequence, TextIO

from . import corpus
from .kernel import Line, Proof, SchemaApply, SubstEquals, check_proof
from .modelcheck import DEFAULT_MAX_ATOMS, meta_and, satisfying_models, statement_signature, valid
from .script import ScriptError, format_script, parse_script
from .search import NotFound, SearchConfig, axiom_usage_matrix, prove, render_matrix
from .semantics import SignatureError, all_models, check_signature
from .systems import SYSTEM_NAMES, get_system
from .terms import CategoricalForm, FormKind, ParseError, normalize, parse_statement, render_statement
from .translate import (
    TranslationError,
    render_formula,
    render_no_complement,
    render_table1,
    render_table2,
    no_complement_row,
    table1_row,
    table2_row,
    to_system,
)

OK, FAIL, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _statements(texts: Sequence[str]):
    return [normalize(parse_statement(t)) for t in texts]


def _atoms(text: str | None):
    return None if text is None else check_signature(text.replace(",", " ").split())


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None


def _premises_and_goal(args) -> tuple[list, object, tuple[str, ...] | None]:
    if args.syllogism:
        if args.statements:
            raise UsageError("give either --syllogism or statements, not both")
        if args.system not in ("LC", "ML"):
            raise UsageError("--syllogism needs --system LC or ML")
        try:
            defn = corpus.syllogism(args.syllogism)
        except KeyError as exc:
            raise UsageError(exc.args[0]) from None
        prems, concl = corpus.lowered(defn, args.system)
        prems = list(prems)
        if getattr(args, "without_existential", False) and defn.existential is not None:
            prems = prems[:2]
        return prems, concl, ("s", "m", "p")
    if not args.statements:
        raise UsageError("expected at least a goal statement")
    stmts = _statements(args.statements)
    return stmts[:-1], (stmts[-1],), None


def cmd_check(args, out: TextIO) -> int:
    proof = parse_script(_read(args.file))
    verdict = check_proof(proof) if args.system is None else _check_as(proof, args.system)
    name = proof.title or args.file
    if not verdict.ok:
        out.write(f"{name}: fail\n{verdict.violation}\noracle: not run\n")
        return FAIL
    usage = ", ".join(sorted(verdict.usage))
    oracle = corpus.oracle_verdict(proof)
    out.write(f"{name}: ok\nsteps: {proof.step_count()}\nusage: {{{usage}}}\noracle: {oracle}\n")
    return OK if oracle == "valid" else FAIL


def _check_as(proof: Proof, system: str):
    return check_proof(proof, get_system(system))


def cmd_prove(args, out: TextIO) -> int:
    prems, goals, sig = _premises_and_goal(args)
    config = SearchConfig(depth=args.depth, size_limit=args.size_limit)
    proofs = []
    for goal in goals:
        result = prove(prems, goal, args.system, config)
        if isinstance(result, NotFound):
            out.write(result.certificate.render())
            return FAIL
        proofs.append(result)
    out.write(format_script(_merge(proofs, goals, args.syllogism, sig)))
    return OK


def _merge(proofs: list[Proof], goals, title: str | None, signature=None) -> Proof:
    """Join per-goal proofs over the same premises into one script."""
    first = proofs[0]
    lines = list(first.lines)
    known = {l.statement: l.id for l in lines}
    n = max(int(l.id[1:].rstrip("abcdefghijklmnopqrstuvwxyz")) for l in lines)
    sig = list(signature or first.signature)
    for p in proofs[1:]:
        sig += [a for a in p.signature if a not in sig]
        rename = {}
        for l in p.lines:
            if l.statement in known:
                rename[l.id] = known[l.statement]
                continue
            n += 1
            new_id = f"S{n}"
            rename[l.id] = new_id
            why = l.why
            if isinstance(why, SchemaApply):
                why = replace(why, sources=tuple(rename[s] for s in why.sources))
            elif isinstance(why, SubstEquals):
                why = replace(why, equation=rename[why.equation], target=rename[why.target])
            lines.append(Line(new_id, l.statement, why, l.split))
            known[l.statement] = new_id
    name = corpus.syllogism(title).name if title else first.title
    return Proof(first.system, tuple(sig), tuple(lines), tuple(goals), (), name)


def cmd_validate(args, out: TextIO) -> int:
    prems, goals, sig = _premises_and_goal(args)
    sig = _atoms(args.atoms) or sig or statement_signature([*prems, *goals])
    status = OK
    for goal in goals:
        report = valid(prems, goal, signature=sig)
        if report.valid:
            out.write(f"{render_statement(goal)}: valid over all {report.models_checked} models on {' '.join(sig)}\n")
            continue
        status = FAIL
        m = report.countermodel
        out.write(f"{render_statement(goal)}: invalid\n")
        out.write("countermodel: all minterms empty\n" if m.inhabited == 0 else "countermodel:\n")
        out.write(m.render() + "\n")
    return status


_FORMS = {k.value.lower(): k for k in FormKind}


def cmd_translate(args, out: TextIO) -> int:
    kind = _FORMS.get(args.form.lower())
    if kind is None:
        raise UsageError(f"unknown form {args.form!r}; expected one of {', '.join(k.value for k in FormKind)}")
    terms = (_atoms(args.atoms) or ("b", "c"))
    target = args.target
    if target in ("LC", "ML"):
        form = CategoricalForm(kind, terms[0], None if kind is FormKind.STAR else terms[1])
        out.write(render_statement(to_system(form, target)) + "\n")
        return OK
    if target == "table1":
        out.write(render_table1([kind]) + "\n" if args.atoms is None else _cells(table1_row(_form(kind, terms))))
    elif target == "table2":
        out.write(render_table2([kind]) + "\n" if args.atoms is None
                  else "\n".join(render_formula(f) for f in table2_row(_form(kind, terms))) + "\n")
    elif target == "nocomp":
        out.write(render_no_complement([kind]) + "\n" if args.atoms is None
                  else _cells(no_complement_row(_form(kind, terms))))
    else:
        raise UsageError(f"unknown target {target!r}; expected LC, ML, table1, table2 or nocomp")
    return OK


def _form(kind: FormKind, terms) -> CategoricalForm:
    if len(terms) != 2:
        raise UsageError("table rows need exactly two --atoms")
    return CategoricalForm(kind, terms[0], terms[1])


def _cells(stmts) -> str:
    return "\n".join(render_statement(s) for s in stmts) + "\n"


def cmd_matrix(args, out: TextIO) -> int:
    if args.system not in ("LC", "ML"):
        raise UsageError("matrix needs --system LC or ML")
    rows = axiom_usage_matrix(corpus.matrix_rows(args.system), args.system)
    out.write(render_matrix(rows, args.system))
    return OK


def cmd_corpus(args, out: TextIO) -> int:
    report = corpus.check_all()
    out.write(report.render())
    return OK if report.ok else FAIL


def cmd_models(args, out: TextIO) -> int:
    sig = _atoms(args.atoms)
    stmts = _statements(args.statements)
    if sig is None:
        if not stmts:
            raise UsageError("models needs --atoms or at least one statement")
        sig = statement_signature(stmts)
    if stmts:
        models = satisfying_models(meta_and(*stmts), sig)
    else:
        if len(sig) > DEFAULT_MAX_ATOMS:
            raise SignatureError(f"signature of {len(sig)} atoms exceeds the cap of {DEFAULT_MAX_ATOMS}")
        models = list(all_models(sig))
    for m in models:
        out.write(f"model {m.inhabited}\n{m.render()}\n\n")
    out.write(f"{len(models)} model(s)\n")
    return OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="termlogic", description="Term logic proof checking, search and model checking.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="check a proof script ('-' reads standard input)")
    c.add_argument("file")
    c.add_argument("--system", choices=SYSTEM_NAMES, help="check against this system instead of the header")
    c.set_defaults(run=cmd_check)

    def goal_args(q, system_default=None):
        q.add_argument("statements", nargs="*", help="premises followed by the goal")
        q.add_argument("--system", choices=SYSTEM_NAMES, default=system_default, required=system_default is None)
        q.add_argument("--syllogism", help="take premises and conclusions from the catalog")

    q = sub.add_parser("prove", help="search for a proof and print it as a script")
    goal_args(q)
    q.add_argument("--depth", type=int, default=SearchConfig.depth)
    q.add_argument("--size-limit", type=int, default=SearchConfig.size_limit)
    q.set_defaults(run=cmd_prove)

    v = sub.add_parser("validate", help="semantic validity with a countermodel on failure")
    goal_args(v, system_default="ML")
    v.add_argument("--atoms", help="signature, e.g. 's m p'")
    v.add_argument("--without-existential", action="store_true", help="drop the catalog's existential premise")
    v.set_defaults(run=cmd_validate)

    t = sub.add_parser("translate", help="surface forms and representation tables")
    t.add_argument("form", help="A, E, I, O, Aum, Eum, Ium, Oum or Star")
    t.add_argument("target", help="LC, ML, table1, table2 or nocomp")
    t.add_argument("--atoms", help="terms to fill in instead of b and c")
    t.set_defaults(run=cmd_translate)

    m = sub.add_parser("matrix", help="syllogism by axiom usage matrix of the corpus")
    m.add_argument("--system", choices=("LC", "ML"), required=True)
    m.set_defaults(run=cmd_matrix)

    k = sub.add_parser("corpus", help="check every corpus script")
    k.set_defaults(run=cmd_corpus)

    d = sub.add_parser("models", help="dump the models of a signature, optionally filtered by statements")
    d.add_argument("statements", nargs="*")
    d.add_argument("--atoms")
    d.set_defaults(run=cmd_models)
    return p


def main(argv: Sequence[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if getattr(args, "depth", 1) < 1 or getattr(args, "size_limit", 1) < 1:
            raise UsageError("--depth and --size-limit must be positive")
        return args.run(args, out)
    except (UsageError, ParseError, ScriptError, SignatureError, TranslationError) as exc:
        err.write(f"termlogic {args.command}: {exc}\n")
        return USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
