"""Exact symbolic engine for one-parameter deformations of *-algebras."""

__version__ = "0.1.0"

from .coeffring import (
    GaussianRational,
    Momentum,
    Scalar,
    epsilon,
    metric,
    minkowski_dot,
    momentum_substitute,
    momentum_symbol,
    scalar_conj,
    scalar_mul,
)
from .deformation import bracket, extract_c, symmetric_cocycle
from .models import (
    Fixture,
    LorentzMatrix,
    PoincareElement,
    build_dfr_model,
    build_example_algebra,
    casimirs,
    get_fixture,
    poincare_apply,
)
from .ncalg import Algebra, Element, Generator, RewriteRule, format_element
from .crossed import (
    CocycleData,
    CrossedElement,
    TauAction,
    assemble_c,
    crossed_involution,
    crossed_multiply,
)
from .bicomplex import Cochain, group_diff, hochschild_diff
from .dsl import AlgebraDocument, build_fixture, parse_document, print_document
from .reporting import CheckResult, Report, emit_report
from .suites import run_suite

__all__ = [
    "AlgebraDocument",
    "Algebra",
    "CheckResult",
    "Cochain",
    "CocycleData",
    "CrossedElement",
    "Element",
    "Fixture",
    "GaussianRational",
    "Generator",
    "LorentzMatrix",
    "Momentum",
    "PoincareElement",
    "Report",
    "RewriteRule",
    "Scalar",
    "TauAction",
    "assemble_c",
    "bracket",
    "build_fixture",
    "emit_report",
    "parse_document",
    "print_document",
    "run_suite",
    "build_dfr_model",
    "build_example_algebra",
    "casimirs",
    "crossed_involution",
    "crossed_multiply",
    "epsilon",
    "extract_c",
    "format_element",
    "get_fixture",
    "group_diff",
    "hochschild_diff",
    "metric",
    "minkowski_dot",
    "momentum_substitute",
    "momentum_symbol",
    "poincare_apply",
    "scalar_conj",
    "scalar_mul",
    "symmetric_cocycle",
    "__version__",
]
