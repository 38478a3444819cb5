from ._fincard import (
    Cardinal,
    FinMap,
    Span,
    CommutingSquare,
    Pushout,
    pushout,
    is_connected,
    is_acyclic,
    is_suitable_span,
    is_pushout,
    induced_spans,
    enumerate_maps,
    enumerate_spans,
    enumerate_span_classes,
    enumerate_squares,
)

from ._oracles import component_count, component_counts, has_cycle, is_acyclic_by_restriction

from ._checks import check_spans
