from ._polymap import PolyMap, FamilyMatching, family_matching_span, is_suitable_matching
from ._polycategory import Polycategory
from ._table import HomTable, PolyTable, SIDES
from ._free import FreeTerm, FreePolycategory
from ._compose import (
    binary_compose,
    cut_provenance,
    peel,
    peel_orders,
    normal_order,
    normalize,
    polycompose,
    respects_interleaving,
    members_in_order,
    edge_count_ok,
)
from ._axioms import check_polycategory_axioms, AXIOMS
from ._roundtrip import (
    PolycompositeTable,
    instance_key,
    pad,
    roundtrip_instances,
    polycomposites_from_binary,
    binary_from_polycomposites,
    roundtrip_check,
)
from ._suite import check_polycompose, random_matching
