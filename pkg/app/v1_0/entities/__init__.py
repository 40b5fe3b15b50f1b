from .term import (
    App,
    Const,
    Lam,
    Pi,
    Sort,
    Term,
    TYPE,
    Var,
    abstract,
    arrow,
    bound,
    instantiate,
    lift,
    mk_app,
    mk_apps,
    mk_lam,
    mk_pi,
    occurs,
    unfold_apps,
)
from .declaration_DTO import Context, Declaration, Environment
from .flat_DTO import Assumption, EqHyp, FlatContext, FlatEntry, FlatGoal, LocalDef
from .proof_DTO import CCFailure, CCProof, CheckVerdict, EqProof, PrEdge, Reason
from .cc_state import CCState, CongruenceTable
from .problem_DTO import Goal, Problem, SubsingletonDecl
from .report_DTO import EXIT_CODES, RunReport, Status

__all__ = [
    "App",
    "Const",
    "Lam",
    "Pi",
    "Sort",
    "Term",
    "TYPE",
    "Var",
    "abstract",
    "arrow",
    "bound",
    "instantiate",
    "lift",
    "mk_app",
    "mk_apps",
    "mk_lam",
    "mk_pi",
    "occurs",
    "unfold_apps",
    "Context",
    "Declaration",
    "Environment",
    "Assumption",
    "EqHyp",
    "FlatContext",
    "FlatEntry",
    "FlatGoal",
    "LocalDef",
    "CCFailure",
    "CCProof",
    "CheckVerdict",
    "EqProof",
    "PrEdge",
    "Reason",
    "CCState",
    "CongruenceTable",
    "Goal",
    "Problem",
    "SubsingletonDecl",
    "EXIT_CODES",
    "RunReport",
    "Status",
]
