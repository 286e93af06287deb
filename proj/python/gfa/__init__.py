from ._gfa import (
    AdjacencyField,
    apply_relabeling,
    canonical_form,
    cyclic_shift,
    gate_table,
    group_order,
    is_isomorphic,
    make_field,
    parse,
    random_search_labels,
    serialize,
    ski_reduce,
)

__all__ = [
    "AdjacencyField",
    "apply_relabeling",
    "canonical_form",
    "cyclic_shift",
    "gate_table",
    "group_order",
    "is_isomorphic",
    "make_field",
    "parse",
    "random_search_labels",
    "serialize",
    "ski_reduce",
]
