"""Conjugacy and conjugacy stability of parabolic subgroups of Artin groups.

Library layout:

* :mod:`artinstab.graph` holds the Coxeter graph data model;
* :mod:`artinstab.classify` recognizes finite-type diagrams and classifies
  the whole group into hypothesis families;
* :mod:`artinstab.twist` implements set-level conjugation by Garside
  elements (twists and ribbons);
* :mod:`artinstab.orbit` decides conjugacy of standard parabolic subgroups;
* :mod:`artinstab.stability` decides conjugacy stability;
* :mod:`artinstab.oracle` is an independent integer root-system engine used
  to cross-check the twist formulas;
* :mod:`artinstab.cli` is the command-line entry point.
"""

from .classify import (
    GroupFamilyReport,
    IrreducibleType,
    TypedComponent,
    classify_group,
    is_spherical,
    is_twistable,
    recognize_component,
    spherical_decomposition,
    standard_graph,
)
from .graph import (
    INFINITY,
    CoxeterGraph,
    GraphError,
    VertexSet,
    adjacent,
    components,
    induced,
    parse_graph,
    serialize_graph,
    to_dot,
    to_json_dict,
)
from .oracle import (
    DihedralElement,
    UnsupportedTypeError,
    WeylElement,
    expand_delta,
    expand_subset,
    longest_element,
    positive_roots,
    simple_reflection,
    w0_conjugation_permutation,
)
from .orbit import OrbitTable, conjugator, orbit
from .stability import (
    ComponentTuple,
    StabilityReport,
    StabilityVerdict,
    SubsetSizeLimitError,
    Witness,
    check_d2k_exception,
    check_d4_exception,
    decide_stability,
    decide_with_applicability,
    initial_tuple,
    tuple_orbit,
    tuple_twist,
)
from .twist import (
    ConjugatorWord,
    DeltaActionUndefined,
    TwistFactor,
    apply_word,
    delta_automorphism,
    delta_conjugate_set,
    delta_conjugation_map,
    elementary_ribbon_target,
    elementary_twist,
)

__version__ = "0.1.0"

__all__ = [
    "CoxeterGraph",
    "ComponentTuple",
    "ConjugatorWord",
    "DeltaActionUndefined",
    "DihedralElement",
    "GraphError",
    "GroupFamilyReport",
    "INFINITY",
    "IrreducibleType",
    "OrbitTable",
    "StabilityReport",
    "StabilityVerdict",
    "SubsetSizeLimitError",
    "TwistFactor",
    "TypedComponent",
    "UnsupportedTypeError",
    "VertexSet",
    "WeylElement",
    "Witness",
    "adjacent",
    "apply_word",
    "check_d2k_exception",
    "check_d4_exception",
    "classify_group",
    "components",
    "conjugator",
    "decide_stability",
    "decide_with_applicability",
    "delta_automorphism",
    "delta_conjugate_set",
    "delta_conjugation_map",
    "elementary_ribbon_target",
    "elementary_twist",
    "expand_delta",
    "expand_subset",
    "induced",
    "initial_tuple",
    "is_spherical",
    "is_twistable",
    "longest_element",
    "orbit",
    "parse_graph",
    "positive_roots",
    "recognize_component",
    "serialize_graph",
    "simple_reflection",
    "spherical_decomposition",
    "standard_graph",
    "to_dot",
    "to_json_dict",
    "tuple_orbit",
    "tuple_twist",
    "w0_conjugation_permutation",
]
