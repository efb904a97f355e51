"""Acylindrical arboreality of graph products of cyclic groups.

Normal-form algebra for graph products, the separated-pair classification
with machine-checkable certificates, and bounded simulation of the action
on the Bass-Serre tree of the witnessing amalgam splitting.
"""

from .classify import (
    AHCriterion,
    Arboreality,
    SeparatedPair,
    SplittingSpec,
    SubgroupVerdict,
    Verdict,
    VirtuallyCyclic,
    ah_criterion,
    build_splitting,
    classify,
    full_subgroup_check,
    is_virtually_cyclic,
    separated_pairs,
)
from .errors import DegeneratePresentationError, InputError, ResourceCapError
from .graphs import (
    INFINITY,
    SimpleGraph,
    complement,
    diameter,
    edge_distance,
    induced_subgraph,
    is_irreducible,
    link,
    neighbourhood,
    to_dot,
)
from .tree import (
    act,
    audit_acylindricity,
    base_vertex,
    element_action,
    elliptic_generation_check,
    tree_ball,
    tree_distance,
)
from .words import Presentation, Syllable, format_word, parse_word

__all__ = [
    "AHCriterion",
    "Arboreality",
    "DegeneratePresentationError",
    "INFINITY",
    "InputError",
    "Presentation",
    "ResourceCapError",
    "SeparatedPair",
    "SimpleGraph",
    "SplittingSpec",
    "SubgroupVerdict",
    "Syllable",
    "Verdict",
    "VirtuallyCyclic",
    "act",
    "ah_criterion",
    "audit_acylindricity",
    "base_vertex",
    "build_splitting",
    "classify",
    "element_action",
    "elliptic_generation_check",
    "tree_ball",
    "tree_distance",
    "complement",
    "diameter",
    "edge_distance",
    "format_word",
    "full_subgroup_check",
    "induced_subgraph",
    "is_irreducible",
    "is_virtually_cyclic",
    "link",
    "neighbourhood",
    "parse_word",
    "separated_pairs",
    "to_dot",
]

__version__ = "0.1.0"
