"""Simulator and verification workbench for distributed local decision.

Run local verifiers on labeled graphs, quantify over certificates and ID
assignments under LD-, Sigma1- and Pi1-style class semantics, and replay
the indistinguishability arguments that separate those classes.
"""

from .engine import (
    CostMeter,
    RunReport,
    Verifier,
    lift,
    run,
    run_all,
    within_budget,
)
from .graph import (
    CertificateAssignment,
    Configuration,
    IdAssignment,
    Label,
    View,
    assign_ids,
    build_graph,
    build_path,
    consecutive_ids,
    extract_view,
    id_universe,
    view_bits,
    views_identical,
)
from .poly import PolyBound, compose, monotone_dominator, poly_eval
from .semantics import (
    INCONSISTENT,
    UNIFORM_ACCEPT,
    UNIFORM_REJECT,
    ClassSpec,
    QuantResult,
    certificate_count,
    check_class_membership,
    decide_ld,
    enumerate_certificates,
    pi1_classify,
    sigma1_decide,
)

__version__ = "0.1.0"

__all__ = [
    "CostMeter", "RunReport", "Verifier", "lift", "run", "run_all", "within_budget",
    "CertificateAssignment", "Configuration", "IdAssignment", "Label", "View", "assign_ids",
    "build_graph", "build_path", "consecutive_ids", "extract_view", "id_universe",
    "view_bits", "views_identical",
    "PolyBound", "compose", "monotone_dominator", "poly_eval",
    "INCONSISTENT", "UNIFORM_ACCEPT", "UNIFORM_REJECT", "ClassSpec", "QuantResult",
    "certificate_count", "check_class_membership", "decide_ld", "enumerate_certificates",
    "pi1_classify", "sigma1_decide",
]
