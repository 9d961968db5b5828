"""
Pydantic Models for sgcolor
"""
from .graph import (
    Sign,
    SignedGraph,
    Balanced,
    Unbalanced,
    BalanceCertificate,
)
from .pattern import (
    MatchMode,
    Pattern,
    Embedding,
    ForbSpec,
    ForbCheck,
    CotreeNode,
    CographResult,
)
from .coloring import (
    BalancedColoring,
    ProperColoring,
    ColorOrPath,
    ParityPartition,
)
from .construction import (
    Orientation,
    EnvelopeCandidate,
    XYZTriple,
    LazyIteration,
    LazyBuildResult,
)
from .report import (
    Verdict,
    Witness,
    ReportRow,
    Report,
    SGFile,
    InstanceResult,
)

__all__ = [
    # Graph Models
    "Sign",
    "SignedGraph",
    "Balanced",
    "Unbalanced",
    "BalanceCertificate",
    # Pattern Models
    "MatchMode",
    "Pattern",
    "Embedding",
    "ForbSpec",
    "ForbCheck",
    "CotreeNode",
    "CographResult",
    # Coloring Models
    "BalancedColoring",
    "ProperColoring",
    "ColorOrPath",
    "ParityPartition",
    # Construction Models
    "Orientation",
    "EnvelopeCandidate",
    "XYZTriple",
    "LazyIteration",
    "LazyBuildResult",
    # Report Models
    "Verdict",
    "Witness",
    "ReportRow",
    "Report",
    "SGFile",
    "InstanceResult",
]
