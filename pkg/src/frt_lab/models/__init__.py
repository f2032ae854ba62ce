from .report_models import CheckRecord, Irreducibility, Report, Verdict, to_jsonable
from .rmatrix_models import GammaElement, ParameterLaw, RFamily, RMatrix
from .frt_models import (
    CoactionMatrixSet,
    ComoduleSpec,
    GenSymbol,
    NCPolynomial,
    ParamSlate,
    Relation,
    RelationSet,
    StrikeMode,
    Word,
)
from .uq_models import EvalRep, UElement, ULetter, UWord
from .aff_models import CaseLabel, ClassificationResult, UxyComodule
from .slq_models import EvaluationComodule, GWeight

__all__ = [
    "CheckRecord", "Irreducibility", "Report", "Verdict", "to_jsonable",
    "GammaElement", "ParameterLaw", "RFamily", "RMatrix",
    "CoactionMatrixSet", "ComoduleSpec", "GenSymbol", "NCPolynomial", "ParamSlate",
    "Relation", "RelationSet", "StrikeMode", "Word",
    "EvalRep", "UElement", "ULetter", "UWord",
    "CaseLabel", "ClassificationResult", "UxyComodule",
    "EvaluationComodule", "GWeight",
]
