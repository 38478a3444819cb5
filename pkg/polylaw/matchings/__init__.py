from ._matchings import (
    Matching,
    delta1_elements,
    delta1_act,
    delta1_project,
    transpose,
)

from ._whiskered import (
    Side,
    WhiskeredRight,
    WhiskeredLeft,
    whiskered_square,
    whiskered_elements,
)

from ._checks import check_delta1
