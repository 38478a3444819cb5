import itertools
import logging

from polylaw.config import MONAD_MAX_VERTICES
from polylaw.utilities import UnionFind, arrangements, invert_permutation
from polylaw.polycat import polycompose
from polylaw.exceptions import CompositionError, CompositeTypeError, DanglingReferenceError, UsageError
from polylaw.report import Report

from ._formal import Member, two_layer, formal_moves

logger = logging.getLogger(__name__)


def multiplication_from_polytable(P):
    """The monad multiplication induced by a polycategory.

    A formal composite is sent to the normalised polycomposite of its
    families, exchanged onto the outer boundary.

    Returns
    -------
    callable
        ``FormalComposite -> id``. Raises :class:`CompositionError` when a
        needed composite is undefined in ``P``.
    """
    cache = {}

    def multiply(x):
        if x not in cache:
            h = polycompose(P, x.family_matching(P, P))
            cache[x] = P.exchange(h, invert_permutation(x.sigma), x.upsilon).id
        return cache[x]

    return multiply


def perturb_multiplication(multiply, cls, value):
    """ ``multiply`` changed to return ``value`` on every member of the class ``cls``. """

    def perturbed(x):
        return value if x in cls.members else multiply(x)

    return perturbed


def _layer_tuples(maps, count, dom_total, cod_total, bound):
    dom_limit = bound if dom_total is None else dom_total
    cod_limit = bound if cod_total is None else cod_total

    def extend(chosen, d, c):
        if len(chosen) == count:
            if (dom_total is None or d == dom_total) and (cod_total is None or c == cod_total):
                yield tuple(chosen)
            return
        for f in maps:
            if d + len(f.dom) <= dom_limit and c + len(f.cod) <= cod_limit:
                yield from extend(chosen + [f], d + len(f.dom), c + len(f.cod))

    return list(extend([], 0, 0))


def _compositions(total, parts):
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def layered_composites(F, depth, max_vertices=MONAD_MAX_VERTICES, bound=None):
    """Stacks of ``depth`` families of maps joined into a tree.

    Every output of a layer except the last feeds an input of the next layer
    and every input of a layer except the first is fed; the inputs of the
    first layer and the outputs of the last form the boundary, of length at
    most ``bound``.

    Yields
    ------
    tuple
        ``(layers, wiring)``: each layer is a tuple of :class:`Member` with
        keys ``(layer, index)`` and port labels ``(layer, index, side, port)``;
        ``wiring`` sends every fed input label to the output label feeding it.
    """
    bound = F.bound if bound is None else bound
    maps = sorted(F.maps.values())
    for v in range(1, max_vertices + 1):
        for sizes in _compositions(v, depth):
            for edges in _compositions(v - 1, depth - 1):
                options = []
                for t, count in enumerate(sizes):
                    dom_total = edges[t - 1] if t > 0 else None
                    cod_total = edges[t] if t < depth - 1 else None
                    options.append(_layer_tuples(maps, count, dom_total, cod_total, bound))
                for families in itertools.product(*options):
                    layers = [tuple(Member(f, tuple((t, a, "in", q) for q in range(1, len(f.dom) + 1)),
                                           tuple((t, a, "out", p) for p in range(1, len(f.cod) + 1)), (t, a))
                                    for a, f in enumerate(family, start=1))
                              for t, family in enumerate(families)]
                    yield from _wirings(layers)


def _wirings(layers):
    per_cut = []
    for lower, upper in zip(layers, layers[1:]):
        outs = [(label, m.map.cod[label[3] - 1]) for m in lower for label in m.cod_labels]
        ins = [(label, m.map.dom[label[3] - 1]) for m in upper for label in m.dom_labels]
        options = []
        for perm in arrangements(tuple(x for _, x in outs), tuple(x for _, x in ins)):
            options.append({ins[i][0]: outs[s - 1][0] for i, s in enumerate(perm)})
        per_cut.append(options)
    for choice in itertools.product(*per_cut):
        wiring = {}
        for part in choice:
            wiring.update(part)
        uf = UnionFind(m.key for layer in layers for m in layer)
        for i, o in wiring.items():
            uf.union(i[:2], o[:2])
        if uf.num_sets == 1:
            yield layers, wiring


def _components(lower, upper, wiring):
    """ Connected pieces of two adjacent layers, ordered by their least member. """
    members = list(lower) + list(upper)
    uf = UnionFind(m.key for m in members)
    for i, o in wiring.items():
        if i[:2] in uf and o[:2] in uf:
            uf.union(i[:2], o[:2])
    pieces = []
    for group in uf.groups(sorted(m.key for m in members)):
        group = set(group)
        pieces.append(([m for m in lower if m.key in group], [m for m in upper if m.key in group]))
    return pieces


class _Product(object):
    """ The multiplication with typing recorded on every evaluation. """

    def __init__(self, F, multiply, typing):
        self.F = F
        self.multiply = multiply
        self.typing = typing

    def __call__(self, x):
        try:
            h = self.F[self.multiply(x)]
        except CompositeTypeError as error:
            self.typing.record(False, "a composite used by the product has the wrong type", composite=str(x),
                               entry=list(error.key), result=error.result)
            return None
        except (CompositionError, DanglingReferenceError):
            return None
        ok = self.typing.record(h.dom == x.dom and h.cod == x.cod, "product has the wrong type",
                                composite=str(x), product=h.id)
        return h if ok else None


def _collapse(product, lower, upper, wiring):
    """ Multiply each connected piece of two layers; returns the products as members, or None. """
    collapsed = []
    for low, up in _components(lower, upper, wiring):
        dom_order = tuple(label for m in low for label in m.dom_labels)
        cod_order = tuple(label for m in up for label in m.cod_labels)
        h = product(two_layer(low, up, wiring, dom_order, cod_order))
        if h is None:
            return None
        collapsed.append(Member(h, dom_order, cod_order, min(m.key for m in low + up)))
    return collapsed


def check_monad(F, unit, multiply, bound=None, max_vertices=MONAD_MAX_VERTICES):
    """Check that a unit and multiplication make ``F`` a monad.

    Parameters
    ----------
    F : HomTable
        The underlying cells.

    unit : dict
        ``object -> id`` of the unit element on that object.

    multiply : callable
        ``FormalComposite -> id`` of an element of ``F`` in the cell of the
        composite's boundary.

    bound : int, optional
        Boundary length bound. Defaults to the bound of ``F``.

    max_vertices : int
        Maximum number of members of the composites checked.

    Returns
    -------
    Report
        Checks ``multiplication-typing``, ``left-unit``, ``right-unit``,
        ``multiplication-invariance`` (constant on coend classes) and
        ``associativity`` (both bracketings of every three-layer composite).
        The reindexing used by each bracketing is listed under transports.
    """
    bound = F.bound if bound is None else bound
    missing = [x for x in F.objects if x not in unit]
    if missing:
        raise UsageError(f"{check_monad.__qualname__}: no unit on objects {missing}.")
    report = Report("monad", {"bound": bound, "maps": len(F), "max_vertices": max_vertices})
    typing = report.check("multiplication-typing", "the product of a composite lies in the cell of its boundary")
    product = _Product(F, multiply, typing)
    _check_units(F, unit, product, report)
    _check_invariance(F, product, report, bound, max_vertices)
    _check_associativity(F, product, report, bound, max_vertices)
    logger.info("Monad check over %d maps: %s", len(F), "passed" if report.passed else "failed")
    return report


def _check_units(F, unit, product, report):
    left = report.check("left-unit", "units below a map multiply to the map")
    right = report.check("right-unit", "units above a map multiply to the map")
    report.transport(law="unit", rule="the unit on input q feeds input q; the unit on output p reads output p")
    for f in sorted(F.maps.values()):
        member = Member(f, tuple(("f", "in", q) for q in range(1, len(f.dom) + 1)),
                        tuple(("f", "out", p) for p in range(1, len(f.cod) + 1)), ("f",))
        below = [Member(F[unit[x]], (("u", q, "in"),), (("u", q, "out"),), ("u", q)) for q, x in enumerate(f.dom, start=1)]
        wiring = {("f", "in", q): ("u", q, "out") for q in range(1, len(f.dom) + 1)}
        h = product(two_layer(below, [member], wiring, [m.dom_labels[0] for m in below], member.cod_labels))
        if h is None:
            left.skip()
        else:
            left.record(h == f, "left unit law fails", map=f.id, product=h.id)
        above = [Member(F[unit[x]], (("u", p, "in"),), (("u", p, "out"),), ("u", p)) for p, x in enumerate(f.cod, start=1)]
        wiring = {("u", p, "in"): ("f", "out", p) for p in range(1, len(f.cod) + 1)}
        h = product(two_layer([member], above, wiring, member.dom_labels, [m.cod_labels[0] for m in above]))
        if h is None:
            right.skip()
        else:
            right.record(h == f, "right unit law fails", map=f.id, product=h.id)


def _check_invariance(F, product, report, bound, max_vertices):
    invariance = report.check("multiplication-invariance", "the product is constant along the coend moves")
    moves = formal_moves(F, F)
    for (lower, upper), wiring in layered_composites(F, 2, max_vertices, bound):
        dom = [label for m in lower for label in m.dom_labels]
        cod = [label for m in upper for label in m.cod_labels]
        x = two_layer(lower, upper, wiring, dom, cod)
        h = product(x)
        if h is None:
            invariance.skip()
            continue
        for y in moves(x):
            k = product(y)
            if k is None:
                invariance.skip()
                continue
            invariance.record(h == k, "product changes along a move", composite=str(x), moved=str(y),
                              products=[h.id, k.id])


def _check_associativity(F, product, report, bound, max_vertices):
    assoc = report.check("associativity", "both bracketings of a three-layer composite have the same product")
    report.transport(law="associativity", bracketing="lower-first",
                     rule="outer domain: concatenated piece domains reordered onto the inputs of the first layer")
    report.transport(law="associativity", bracketing="upper-first",
                     rule="outer codomain: concatenated piece codomains reordered onto the outputs of the last layer")
    for (hs, fs, gs), wiring in layered_composites(F, 3, max_vertices, bound):
        dom = tuple(label for m in hs for label in m.dom_labels)
        cod = tuple(label for m in gs for label in m.cod_labels)
        witness = {"layers": [[m.map.id for m in layer] for layer in (hs, fs, gs)],
                   "wiring": sorted([list(i), list(o)] for i, o in wiring.items())}
        lower_first = _collapse(product, list(hs), list(fs), wiring)
        upper_first = _collapse(product, list(fs), list(gs), wiring)
        if lower_first is None or upper_first is None:
            assoc.skip()
            continue
        a = product(two_layer(lower_first, list(gs), wiring, dom, cod))
        b = product(two_layer(list(hs), upper_first, wiring, dom, cod))
        if a is None or b is None:
            assoc.skip()
            continue
        assoc.record(a == b, "bracketings disagree", products=[a.id, b.id], **witness)
