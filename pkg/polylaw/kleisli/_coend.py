import logging
from dataclasses import dataclass

from polylaw.config import MAX_ORBIT_SIZE
from polylaw.utilities import UnionFind
from polylaw.exceptions import BoundExceededError
from polylaw._messages import _bound_msg

from ._formal import orbit, formal_moves, tensor_composites

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CoendClass:
    """
    One element of a coend: a class of generators under the move relation.

    Parameters
    ----------
    representative
        The least member of the class under ``key``.

    size : int
        Number of members.

    members : frozenset
        All members of the class.
    """
    representative: object
    size: int
    members: frozenset

    def __contains__(self, element):
        return element in self.members


def _default_key(x):
    return x


def coend_quotient(generators, moves, key=None, limit=MAX_ORBIT_SIZE):
    """Quotient a finite set of generators by the equivalence generated by moves.

    Elements reached by a move that are not among the generators are added,
    so the classes are the connected components of the move graph.

    Parameters
    ----------
    generators : iterable
        Hashable elements.

    moves : callable
        ``element -> iterable of elements`` related to it by one move.

    key : callable, optional
        Sort key choosing the representative. Defaults to the natural order.

    limit : int
        Raise :class:`BoundExceededError` beyond this many elements.

    Returns
    -------
    list of CoendClass
        Sorted by representative.
    """
    key = _default_key if key is None else key
    generators = list(generators)
    uf = UnionFind(generators)
    pending = list(generators)
    while pending:
        x = pending.pop()
        for y in moves(x):
            if y not in uf:
                uf.add(y)
                pending.append(y)
                if len(uf) > limit:
                    raise BoundExceededError(_bound_msg("A coend quotient", len(uf), limit))
            uf.union(x, y)
    classes = []
    for group in uf.groups():
        classes.append(CoendClass(min(group, key=key), len(group), frozenset(group)))
    classes.sort(key=lambda c: key(c.representative))
    logger.debug("Quotient of %d elements has %d classes", len(uf), len(classes))
    return classes


def coend_class(element, moves, key=None, limit=MAX_ORBIT_SIZE):
    """ The class of one element, found by exploring its orbit. """
    key = _default_key if key is None else key
    members = orbit(element, moves, limit)
    return CoendClass(min(members, key=key), len(members), frozenset(members))


def tensor_elements(F, G, dom, cod, max_middle=None):
    """The elements of the tensor of ``F`` and ``G`` at ``(dom; cod)``.

    Formal composites with a suitable matching are enumerated and quotiented
    by the coend relation: exchanging a member while rewiring, and reordering
    either family.

    Returns
    -------
    list of CoendClass
        Sorted by representative.
    """
    return coend_quotient(tensor_composites(F, G, dom, cod, max_middle), formal_moves(F, G))
