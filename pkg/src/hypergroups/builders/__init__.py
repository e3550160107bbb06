"""Corpus builders: groups, ring constructions, file formats and enumeration."""

from .enumeration import enumerate_by_type, normalize_type, type_of
from .formats import (
    dump,
    load,
    parse,
    parse_group,
    parse_text,
    serialize,
    serialize_text,
)
from .groups import (
    CATALOG_GENERATORS,
    FiniteGroup,
    abelian_group,
    catalog,
    catalog_names,
    group_from_generators,
)
from .rings import (
    class_hypergroup,
    corpus,
    family_ring,
    fibonacci,
    group_ring,
    ising,
    near_group,
    rep_ring,
)

__all__ = [
    "enumerate_by_type",
    "normalize_type",
    "type_of",
    "dump",
    "load",
    "parse",
    "parse_group",
    "parse_text",
    "serialize",
    "serialize_text",
    "CATALOG_GENERATORS",
    "FiniteGroup",
    "abelian_group",
    "catalog",
    "catalog_names",
    "group_from_generators",
    "class_hypergroup",
    "corpus",
    "family_ring",
    "fibonacci",
    "group_ring",
    "ising",
    "near_group",
    "rep_ring",
]
