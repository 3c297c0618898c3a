"""Particle bases of colored difference-two partition spaces.

The library enumerates the admissible monomial bases of the weight-graded
spaces spanned by commuting colored modes acting on a highest weight
vector, computes their graded characters exactly, straightens arbitrary
spanning monomials onto the basis, and verifies the whole structure
against an exact lattice vertex-operator realization.
"""

from .monomials import (
    Factor,
    Grading,
    Monomial,
    MonomialError,
    Setup,
    SetupError,
    by_sector,
    compare,
    enumerate_admissible,
    enumerate_pbw,
    grading,
    ic_bound,
    is_admissible,
    make_monomial,
    min_degree,
    parse_monomial,
)
from .oracle import RelationReport, SectorCache, VertexOracle
from .qseries import (
    CharacterTable,
    QSeries,
    enumerative_character,
    fermionic_character,
    full_character,
    pochhammer,
    series_from_json,
    series_to_json,
    table_from_json,
    table_to_json,
)
from .straightening import (
    InconsistencyError,
    LinComb,
    RelationInstance,
    SectorEliminator,
    Straightener,
    annihilates,
    relation_terms,
    straighten_by_elimination,
    straighten_by_rewriting,
)

__version__ = "0.1.0"

__all__ = [
    "CharacterTable",
    "Factor",
    "Grading",
    "InconsistencyError",
    "LinComb",
    "Monomial",
    "MonomialError",
    "QSeries",
    "RelationInstance",
    "RelationReport",
    "SectorCache",
    "SectorEliminator",
    "Setup",
    "SetupError",
    "Straightener",
    "VertexOracle",
    "annihilates",
    "by_sector",
    "compare",
    "enumerate_admissible",
    "enumerate_pbw",
    "enumerative_character",
    "fermionic_character",
    "full_character",
    "grading",
    "ic_bound",
    "is_admissible",
    "make_monomial",
    "min_degree",
    "parse_monomial",
    "pochhammer",
    "relation_terms",
    "series_from_json",
    "series_to_json",
    "straighten_by_elimination",
    "straighten_by_rewriting",
    "table_from_json",
    "table_to_json",
]
