"""Knot groups of branched twist spins and their finite-group representation counts.

Build the twist-spin presentation of a catalog or user-supplied knot, count
homomorphisms into the order-24 mod-3 matrix group or even dihedral groups
with the orbit generator pinned to the order-2 central element, compare with
the closed-form counts, and machine-check the underlying classification facts.
"""

from .catalog import CATALOG, KnotCatalogEntry, catalog_names, get_knot
from .closed_forms import (
    DistinguishWitness,
    dihedral_count,
    dihedral_hom_count,
    distinguish,
    sl2z3_count,
)
from .enumerator import (
    CountReport,
    EnumerationError,
    OracleGuardError,
    Representation,
    SearchConfig,
    count_reps,
    enumerate_backtracking,
    enumerate_oracle,
    evaluate_word,
)
from .groups import (
    CayleyTableGroup,
    DihedralGroup,
    FiniteGroup,
    GroupElement,
    GroupError,
    OrderClass,
    Sl2z3Group,
    group_from_descriptor,
)
from .presentations import (
    BtsPresentation,
    KnotFileError,
    PresentationError,
    WirtingerPresentation,
    Word,
    build_bts,
    compute_beta,
    crossing_relator,
    parse_knot_file,
    serialize_knot,
)
from .verifier import CheckResult, VerifyReport, run_suite

__version__ = "0.1.0"

__all__ = [
    "BtsPresentation",
    "CATALOG",
    "CayleyTableGroup",
    "CheckResult",
    "CountReport",
    "DihedralGroup",
    "DistinguishWitness",
    "EnumerationError",
    "FiniteGroup",
    "GroupElement",
    "GroupError",
    "KnotCatalogEntry",
    "KnotFileError",
    "OracleGuardError",
    "OrderClass",
    "PresentationError",
    "Representation",
    "SearchConfig",
    "Sl2z3Group",
    "VerifyReport",
    "WirtingerPresentation",
    "Word",
    "build_bts",
    "catalog_names",
    "compute_beta",
    "count_reps",
    "crossing_relator",
    "dihedral_count",
    "dihedral_hom_count",
    "distinguish",
    "enumerate_backtracking",
    "enumerate_oracle",
    "evaluate_word",
    "get_knot",
    "group_from_descriptor",
    "parse_knot_file",
    "serialize_knot",
    "sl2z3_count",
    "run_suite",
]
