"""Equational and relational term logic: proof kernel, search and model checking."""

from .corpus import CorpusEntry, CorpusReport, SyllogismDef, all_scripts, catalog, check_all
from .kernel import Line, Premise, Proof, SchemaApply, SubstEquals, Verdict, Violation, check_proof, check_step
from .modelcheck import (
    Holds,
    MetaAnd,
    MetaNot,
    MetaOr,
    backend_name,
    countermodel_search,
    equivalent,
    meta_and,
    meta_not,
    meta_or,
    satisfying_models,
    valid,
)
from .script import ScriptError, format_script, parse_script
from .search import (
    ExhaustionCertificate,
    GoalDerivable,
    NotFound,
    SearchConfig,
    axiom_usage_matrix,
    nonprovable_witness,
    prove,
)
from .semantics import Model, all_models, holds
from .systems import AxiomSchema, SystemDef, get_system
from .terms import (
    CategoricalForm,
    FormKind,
    ParseError,
    RelKind,
    normalize,
    parse_expr,
    parse_statement,
    render,
    render_statement,
)
from .translate import to_system

__version__ = "0.1.0"

__all__ = [
    "AxiomSchema",
    "CategoricalForm",
    "CorpusEntry",
    "CorpusReport",
    "ExhaustionCertificate",
    "FormKind",
    "GoalDerivable",
    "Holds",
    "Line",
    "MetaAnd",
    "MetaNot",
    "MetaOr",
    "Model",
    "NotFound",
    "ParseError",
    "Premise",
    "Proof",
    "RelKind",
    "SchemaApply",
    "ScriptError",
    "SearchConfig",
    "SubstEquals",
    "SyllogismDef",
    "SystemDef",
    "Verdict",
    "Violation",
    "all_models",
    "all_scripts",
    "axiom_usage_matrix",
    "backend_name",
    "catalog",
    "check_all",
    "check_proof",
    "check_step",
    "countermodel_search",
    "equivalent",
    "format_script",
    "get_system",
    "holds",
    "meta_and",
    "meta_not",
    "meta_or",
    "nonprovable_witness",
    "normalize",
    "parse_expr",
    "parse_statement",
    "prove",
    "render",
    "render_statement",
    "satisfying_models",
    "to_system",
    "valid",
]
