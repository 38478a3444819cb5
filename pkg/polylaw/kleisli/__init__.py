from ._formal import FormalComposite, Member, formal_moves, tensor_composites, two_layer, orbit

from ._coend import CoendClass, coend_quotient, coend_class, tensor_elements

from ._unit import UNIT_ELEMENT, unit_elements, unit_table, unit_transport, lifted_hom_elements

from ._monad import (
    multiplication_from_polytable,
    perturb_multiplication,
    layered_composites,
    check_monad,
)
