"""Zagreb indices and an exhaustive census of the classes they define."""

from .canon import CanonicalForm, canonical_form, is_isomorphic
from .census import (
    CensusRow,
    InjectionReport,
    conjecture_report,
    run_census,
    sample_classes,
    verify_bounds,
    verify_identities,
    verify_injection,
    verify_lemma1,
    verify_lemma2,
)
from .classify import ClassLabel, classify, map_to_C, map_to_c
from .enumerate import brute_force_count, enumerate_graphs, enumerate_regular
from .graph import Graph, GraphError, add_edge, complement, degrees, delete_edge, from_edges, is_regular
from .graph6 import decode, encode
from .zagreb import (
    ZagrebValues,
    complement_zagreb,
    lemma2_margin,
    regular_minus_edge_values,
    regular_plus_edge_values,
    zagreb_values,
)

__all__ = [
    "CanonicalForm",
    "CensusRow",
    "ClassLabel",
    "Graph",
    "GraphError",
    "InjectionReport",
    "ZagrebValues",
    "add_edge",
    "brute_force_count",
    "canonical_form",
    "classify",
    "complement",
    "complement_zagreb",
    "conjecture_report",
    "decode",
    "degrees",
    "delete_edge",
    "encode",
    "enumerate_graphs",
    "enumerate_regular",
    "from_edges",
    "is_isomorphic",
    "is_regular",
    "lemma2_margin",
    "map_to_C",
    "map_to_c",
    "regular_minus_edge_values",
    "regular_plus_edge_values",
    "run_census",
    "sample_classes",
    "verify_bounds",
    "verify_identities",
    "verify_injection",
    "verify_lemma1",
    "verify_lemma2",
    "zagreb_values",
]
