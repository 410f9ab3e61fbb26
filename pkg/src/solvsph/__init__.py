"""Classification of connected solvable spherical subgroups of semisimple groups.

Typical use::

    from solvsph import build_root_system, enumerate_data, build_model, criterion

    rs = build_root_system("B2")
    for d in enumerate_data(rs):
        assert criterion(build_model(d))
"""
__version__ = "0.1.0"

from ._accel import BACKEND  # noqa: E402
from .data import (CombinatorialDatum, TorusData, ValidationReport, canonical_torus,  # noqa: E402
                   cond_D0, cond_D1, cond_D2, cond_E1, cond_E2, datum_from_json,
                   datum_to_json, make_datum, validate)
from .enumerate import (canonical_form, classify, elementary_transform,  # noqa: E402
                        enumerate_data, verify_transform)
from .lie import ChevalleyAlgebra, build_chevalley  # noqa: E402
from .linalg import Subspace, sum_subspaces  # noqa: E402
from .marked import (MarkedClosure, MarkedPair, build_closure,  # noqa: E402
                     derive_admissible_pairs, table1_pairs)
from .reconstruct import (SubgroupModel, build_model, extract_datum,  # noqa: E402
                          full_marked_set, is_regular, weight_classes)
from .rootsys import RootSystem, build_root_system  # noqa: E402
from .sphericity import criterion, oracle_open_orbit  # noqa: E402

__all__ = [
    "BACKEND", "ChevalleyAlgebra", "CombinatorialDatum", "MarkedClosure", "MarkedPair",
    "RootSystem", "Subspace", "SubgroupModel", "TorusData", "ValidationReport",
    "build_chevalley", "build_closure", "build_model", "build_root_system",
    "canonical_form", "canonical_torus", "classify", "cond_D0", "cond_D1", "cond_D2",
    "cond_E1", "cond_E2", "criterion", "datum_from_json", "datum_to_json",
    "derive_admissible_pairs", "elementary_transform", "enumerate_data", "extract_datum",
    "full_marked_set", "is_regular", "make_datum", "oracle_open_orbit", "sum_subspaces",
    "table1_pairs", "validate", "verify_transform", "weight_classes",
]
