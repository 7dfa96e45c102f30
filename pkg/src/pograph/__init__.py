"""Prime-order element graphs of finite groups and their graph-class membership."""

from .classes import CheckOutcome, Verdict
from .graph import UGraph, build_gamma, complement, induced
from .grammar import GroupSpecError, parse
from .groups import Group, build
from .report import ClassificationReport, classify
from .witness import Witness, WitnessKind, validate_witness

__all__ = [
    "CheckOutcome",
    "ClassificationReport",
    "Group",
    "GroupSpecError",
    "UGraph",
    "Verdict",
    "Witness",
    "WitnessKind",
    "build",
    "build_gamma",
    "classify",
    "complement",
    "induced",
    "parse",
    "validate_witness",
]
__version__ = "0.1.0"
