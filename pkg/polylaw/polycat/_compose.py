import logging

from polylaw.utilities import arrangements
from polylaw.fincard import is_suitable_span
from polylaw.exceptions import CompositionError

from ._polymap import family_matching_span, is_suitable_matching

logger = logging.getLogger(__name__)


def binary_compose(P, g, f, cut):
    """Compose ``f`` into ``g`` in the polycategory ``P``.

    Parameters
    ----------
    P : Polycategory
        A :class:`PolyTable` or a :class:`FreePolycategory`.

    g, f
        Maps of ``P``; for a table, ids are accepted.

    cut : tuple of int
        ``(i, j)``: output ``i`` of ``f`` is joined to input ``j`` of ``g``.

    Returns
    -------
    A map of type ``(Lambda1, Gamma, Lambda2) -> (Delta1, Sigma, Delta2)``.
    """
    i, j = cut
    return P.compose(g, f, i, j)


def cut_provenance(upper, lower, i, j):
    """Boundary labels after composing along a cut.

    ``upper`` and ``lower`` are pairs ``(dom_labels, cod_labels)`` of the map
    receiving the cut at input ``j`` and of the map emitting it at output ``i``.
    Returns the labels of the composite in the order of the binary composition.
    """
    (u_dom, u_cod), (l_dom, l_cod) = upper, lower
    return (u_dom[:j - 1] + l_dom + u_dom[j:], l_cod[:i - 1] + u_cod + l_cod[i:])


def _labels(fm):
    members = [("f", a) for a in range(1, fm.j + 1)] + [("g", b) for b in range(1, fm.k + 1)]
    maps = {("f", a): f for a, f in enumerate(fm.fs, start=1)}
    maps.update({("g", b): g for b, g in enumerate(fm.gs, start=1)})
    return members, maps


def _edges(fm):
    return [((("f", a), p), (("g", b), q)) for (a, p), (b, q) in fm.pairing]


def _require_suitable(fm):
    if not is_suitable_matching(fm):
        raise CompositionError(f"Matching {fm.pairing} of {fm.j} with {fm.k} members is not suitable.")


def peel_orders(fm):
    """All admissible peel orders of a suitable matching.

    A peel order lists the members in the order they are absorbed: each one is
    a leaf of the tree that remains after absorbing the earlier ones into
    their neighbours. The last remaining member is omitted.

    Returns
    -------
    list of tuple
        Orders of member labels ``("f", a)`` and ``("g", b)``, in sorted order.
    """
    _require_suitable(fm)
    members, _ = _labels(fm)
    adjacency = {m: set() for m in members}
    for (x, _), (y, _) in _edges(fm):
        adjacency[x].add(y)
        adjacency[y].add(x)
    orders = []

    def extend(remaining, order):
        if len(remaining) <= 1:
            orders.append(tuple(order))
            return
        for m in sorted(remaining):
            if len(adjacency[m] & remaining) == 1:
                extend(remaining - {m}, order + [m])

    extend(frozenset(members), [])
    return sorted(orders)


def peel(P, fm, order=None):
    """Polycompose a suitable matching by absorbing leaves in the given order.

    Each step takes a member that is a leaf of the current tree, composes it
    with its unique neighbour along the matched cut, and replaces the pair by
    the composite.

    Parameters
    ----------
    P : Polycategory

    fm : FamilyMatching
        Members are maps of ``P``.

    order : sequence, optional
        A peel order as returned by :func:`peel_orders`. Defaults to always
        absorbing the least available leaf.

    Returns
    -------
    tuple
        ``(composite, dom_labels, cod_labels)`` where the labels give, for
        every boundary position, the member ``("f", a)`` or ``("g", b)`` and the
        port it comes from.
    """
    _require_suitable(fm)
    members, maps = _labels(fm)
    if len(members) == 1:
        m = members[0]
        f = maps[m]
        return f, tuple((m, q) for q in range(1, len(f.dom) + 1)), tuple((m, p) for p in range(1, len(f.cod) + 1))

    # node of each member, the composite held by each node and its boundary labels
    node = {m: m for m in members}
    current = {m: maps[m] for m in members}
    labels = {m: (tuple((m, q) for q in range(1, len(maps[m].dom) + 1)),
                  tuple((m, p) for p in range(1, len(maps[m].cod) + 1))) for m in members}
    pending = _edges(fm)

    def leaves():
        degree = {}
        for (x, _), (y, _) in pending:
            degree[node[x]] = degree.get(node[x], 0) + 1
            degree[node[y]] = degree.get(node[y], 0) + 1
        return sorted(n for n, d in degree.items() if d == 1)

    steps = list(order) if order is not None else None
    while pending:
        available = leaves()
        if steps is None:
            leaf = available[0]
        else:
            if not steps:
                raise CompositionError("Peel order ends before the tree is absorbed.")
            leaf = steps.pop(0)
            if leaf not in available:
                raise CompositionError(f"{leaf} is not a leaf at this step of the peel order.")
        edge = next(e for e in pending if leaf in (node[e[0][0]], node[e[1][0]]))
        out_port, in_port = edge
        lower, upper = node[out_port[0]], node[in_port[0]]
        i = labels[lower][1].index(out_port) + 1
        j = labels[upper][0].index(in_port) + 1
        composite = P.compose(current[upper], current[lower], i, j)
        merged = cut_provenance(labels[upper], labels[lower], i, j)
        survivor = upper if leaf == lower else lower
        for m in members:
            if node[m] in (leaf, survivor):
                node[m] = survivor
        current[survivor] = composite
        labels[survivor] = merged
        del current[leaf], labels[leaf]
        pending.remove(edge)
        logger.debug("Absorbed %s into %s along cut (%d, %d)", leaf, survivor, i, j)
    if steps:
        raise CompositionError(f"Peel order continues after the tree is absorbed: {steps}.")
    (survivor,) = current
    return current[survivor], labels[survivor][0], labels[survivor][1]


def _dom_rank(label):
    (side, index), port = label
    return (0 if side == "f" else 1, index, port)


def _cod_rank(label):
    (side, index), port = label
    return (0 if side == "g" else 1, index, port)


def normal_order(dom_labels, cod_labels):
    """The boundary order of a normalised polycomposite.

    Inputs of the ``fs`` come first, member by member, followed by the free
    inputs of the ``gs``; free outputs of the ``gs`` come first, followed by
    the free outputs of the ``fs``.
    """
    return tuple(sorted(dom_labels, key=_dom_rank)), tuple(sorted(cod_labels, key=_cod_rank))


def normalize(P, composite, dom_labels, cod_labels):
    """ Exchange a peeled composite into :func:`normal_order`. Returns ``(map, dom_labels, cod_labels)``. """
    dom_target, cod_target = normal_order(dom_labels, cod_labels)
    sigma = arrangements(dom_labels, dom_target)[0]
    tau = arrangements(cod_labels, cod_target)[0]
    return P.exchange(composite, sigma, tau), dom_target, cod_target


def polycompose(P, fm, order=None):
    """Polycompose the families of a suitable matching.

    The composite is computed by :func:`peel` and then exchanged into the
    boundary order of :func:`normal_order`, so the result does not depend on
    the peel order when ``P`` satisfies the polycategory axioms.

    Raises
    ------
    CompositionError
        If the matching is not suitable, or a binary composite is undefined.
    """
    composite, dom_labels, cod_labels = peel(P, fm, order)
    return normalize(P, composite, dom_labels, cod_labels)[0]


def _free_ports(fm):
    members, maps = _labels(fm)
    matched_out = {(("f", a), p) for (a, p), _ in fm.pairing}
    matched_in = {(("g", b), q) for _, (b, q) in fm.pairing}
    free_in = [(m, q) for m in members for q in range(1, len(maps[m].dom) + 1) if (m, q) not in matched_in]
    free_out = [(m, p) for m in members for p in range(1, len(maps[m].cod) + 1) if (m, p) not in matched_out]
    return members, free_in, free_out


def respects_interleaving(fm, dom_labels, cod_labels):
    """True if a peeled boundary is an interleaving of the members' free ports.

    The labels must list exactly the unmatched ports, and the ports of each
    member must appear in their original order. The order of the members
    among themselves is fixed only after :func:`normalize`; see
    :func:`members_in_order`.
    """
    members, free_in, free_out = _free_ports(fm)
    if sorted(dom_labels) != sorted(free_in) or sorted(cod_labels) != sorted(free_out):
        return False
    for labels in (dom_labels, cod_labels):
        for m in members:
            ports = [port for member, port in labels if member == m]
            if ports != sorted(ports):
                return False
    return True


def members_in_order(fm, dom_labels, cod_labels):
    """True if each family's ports appear member by member in a boundary.

    Restricted to the ``fs``, the domain lists the inputs of ``fs[0]``,
    ``fs[1]``, ... in turn, and restricted to the ``gs`` it lists the free
    inputs of ``gs[0]``, ``gs[1]``, ...; dually for the codomain. Normalised
    boundaries satisfy this, raw peel output in general does not.
    """
    _, free_in, free_out = _free_ports(fm)
    if sorted(dom_labels) != sorted(free_in) or sorted(cod_labels) != sorted(free_out):
        return False
    for labels, expected in ((dom_labels, free_in), (cod_labels, free_out)):
        for side in ("f", "g"):
            if [l for l in labels if l[0][0] == side] != [l for l in expected if l[0][0] == side]:
                return False
    return True


def edge_count_ok(fm):
    """ A suitable matching of ``j`` with ``k`` members has ``j + k - 1`` matched pairs. """
    return is_suitable_span(family_matching_span(fm)) and len(fm.pairing) == fm.j + fm.k - 1
