import logging

from polylaw.utilities import arrangements, adjacent_transposition, permute
from polylaw.exceptions import CompositionError, CompositeTypeError, UsageError
from polylaw.report import Report

from ._table import SIDES
from ._compose import cut_provenance

logger = logging.getLogger(__name__)

AXIOMS = (
    "exchange-typing",
    "exchange-functoriality",
    "unit",
    "composition-typing",
    "composition-totality",
    "sequential-associativity",
    "parallel-outputs",
    "parallel-inputs",
    "equivariance",
)
""" Tags of the laws checked by :func:`check_polycategory_axioms`, in the order they are run. """

_DESCRIPTIONS = {
    "exchange-typing": "an adjacent transposition permutes the domain or codomain of a map",
    "exchange-functoriality": "transpositions satisfy the Coxeter relations and the two sides commute",
    "unit": "composing with an identity on either side returns the map",
    "composition-typing": "composites have type (Lambda1, Gamma, Lambda2) -> (Delta1, Sigma, Delta2)",
    "composition-totality": "every cut within the bound has a composite",
    "sequential-associativity": "h o (g o f) == (h o g) o f for two cuts in a chain",
    "parallel-outputs": "two outputs of f cut into g and h give the same map in either order, up to exchange",
    "parallel-inputs": "f and h cut into two inputs of g give the same map in either order, up to exchange",
    "equivariance": "exchanging a factor exchanges the composite",
}


def _ports(tag, f):
    return (tuple((tag, q) for q in range(1, len(f.dom) + 1)),
            tuple((tag, p) for p in range(1, len(f.cod) + 1)))


def _fits(P, dom, cod):
    return len(dom) <= P.bound and len(cod) <= P.bound


def _undefined(result, error):
    """ A wrongly typed composite is a violation; a missing one skips the instance. """
    if isinstance(error, CompositeTypeError):
        result.record(False, "composite has the wrong type", entry=list(error.key), result=error.result,
                      expected=[list(error.expected[0]), list(error.expected[1])])
    else:
        result.skip()


def _conjugate(P, f, labels, target):
    """ Exchange ``f`` so that its boundary labels become ``target``. """
    sigma = arrangements(labels[0], target[0])[0]
    tau = arrangements(labels[1], target[1])[0]
    return P.exchange(f, sigma, tau)


def check_polycategory_axioms(P, laws=None):
    """Check the laws of a symmetric polycategory on a finite table.

    Every instance whose composites stay within the bound of ``P`` is
    checked. Instances that need a missing composition entry are counted as
    skipped by the law at hand; the missing entries themselves are reported
    under ``composition-totality``. A stored composite of the wrong type is a
    violation of every law that looks it up, as well as of
    ``composition-typing``.

    Parameters
    ----------
    P : PolyTable
        Structurally valid table.

    laws : iterable of str, optional
        Subset of :data:`AXIOMS` to check. Defaults to all of them.

    Returns
    -------
    Report
    """
    laws = AXIOMS if laws is None else tuple(laws)
    unknown = [law for law in laws if law not in AXIOMS]
    if unknown:
        raise UsageError(f"Unknown axiom tags {unknown}; expected a subset of {AXIOMS}.")
    report = Report("polyaxioms", {"bound": P.bound, "maps": len(P), "laws": list(laws)})
    maps = sorted(P.maps.values())
    producers, consumers = {}, {}
    for f in maps:
        for p, x in enumerate(f.cod, start=1):
            producers.setdefault(x, []).append((f, p))
        for q, x in enumerate(f.dom, start=1):
            consumers.setdefault(x, []).append((f, q))
    checks = {
        "exchange-typing": _exchange_typing,
        "exchange-functoriality": _exchange_functoriality,
        "unit": _unit,
        "composition-typing": _composition_typing,
        "composition-totality": _composition_totality,
        "sequential-associativity": _sequential,
        "parallel-outputs": _parallel_outputs,
        "parallel-inputs": _parallel_inputs,
        "equivariance": _equivariance,
    }
    for law in laws:
        result = report.check(law, _DESCRIPTIONS[law])
        checks[law](P, maps, producers, consumers, result)
        logger.info("%s: %d instances, %d skipped, %d violations",
                    law, result.instances, result.skipped, len(result.violations))
    return report


def _exchange_typing(P, maps, producers, consumers, result):
    for f in maps:
        for side in SIDES:
            values = getattr(f, side)
            for t in range(1, len(values)):
                g = P.exchange_step(f, side, t)
                expected = permute(values, adjacent_transposition(len(values), t))
                other = "cod" if side == "dom" else "dom"
                result.record(getattr(g, side) == expected and getattr(g, other) == getattr(f, other),
                              "exchange changes the type wrongly", map=f.id, side=side, position=t, result=g.id)


def _exchange_functoriality(P, maps, producers, consumers, result):

    def word(f, side, steps):
        for t in steps:
            f = P.exchange_step(f, side, t)
        return f

    for f in maps:
        for side in SIDES:
            n = len(getattr(f, side))
            for t in range(1, n):
                result.record(word(f, side, (t, t)) == f, "transposition is not an involution",
                              map=f.id, side=side, word=[t, t])
                if t + 1 < n:
                    left, right = (t, t + 1, t), (t + 1, t, t + 1)
                    result.record(word(f, side, left) == word(f, side, right), "braid relation fails",
                                  map=f.id, side=side, word=list(left))
                for u in range(t + 2, n):
                    result.record(word(f, side, (t, u)) == word(f, side, (u, t)), "distant transpositions do not commute",
                                  map=f.id, side=side, word=[t, u])
        for t in range(1, len(f.dom)):
            for u in range(1, len(f.cod)):
                a = P.exchange_step(P.exchange_step(f, "dom", t), "cod", u)
                b = P.exchange_step(P.exchange_step(f, "cod", u), "dom", t)
                result.record(a == b, "domain and codomain exchanges do not commute", map=f.id, dom=t, cod=u)


def _unit(P, maps, producers, consumers, result):
    for f in maps:
        for i, x in enumerate(f.cod, start=1):
            try:
                result.record(P.compose(P.identity(x), f, i, 1) == f, "identity after f is not f", map=f.id, output=i)
            except CompositionError as error:
                _undefined(result, error)
        for j, x in enumerate(f.dom, start=1):
            try:
                result.record(P.compose(f, P.identity(x), 1, j) == f, "f after identity is not f", map=f.id, input=j)
            except CompositionError as error:
                _undefined(result, error)


def _composition_typing(P, maps, producers, consumers, result):
    for (gid, fid, i, j), hid in sorted(P.composition.items()):
        h = P[hid]
        dom, cod = P.composite_type(P[gid], P[fid], i, j)
        result.record(h.dom == dom and h.cod == cod, "composite has the wrong type",
                      entry=[gid, fid, i, j], result=hid, expected=[list(dom), list(cod)])


def _composition_totality(P, maps, producers, consumers, result):
    for g, f, i, j in P.cuts():
        result.record((g.id, f.id, i, j) in P.composition, "missing composition entry", entry=[g.id, f.id, i, j])


def _sequential(P, maps, producers, consumers, result):
    for g, f, i, j in P.cuts():
        gf_dom, gf_cod = P.composite_type(g, f, i, j)
        for p, y in enumerate(g.cod, start=1):
            for h, l in consumers.get(y, ()):
                dom = h.dom[:l - 1] + gf_dom + h.dom[l:]
                cod = gf_cod[:i - 1 + p - 1] + h.cod + gf_cod[i - 1 + p:]
                if not (_fits(P, dom, cod) and P.within_bound(h, g, p, l)):
                    continue
                try:
                    first = P.compose(h, P.compose(g, f, i, j), i - 1 + p, l)
                    second = P.compose(P.compose(h, g, p, l), f, i, l - 1 + j)
                except CompositionError as error:
                    _undefined(result, error)
                    continue
                result.record(first == second, "two cuts in a chain do not associate",
                              f=f.id, g=g.id, h=h.id, cuts=[[i, j], [p, l]], results=[first.id, second.id])


def _parallel_outputs(P, maps, producers, consumers, result):
    for f in maps:
        for i1, x1 in enumerate(f.cod, start=1):
            for i2, x2 in enumerate(f.cod, start=1):
                if i1 >= i2:
                    continue
                for g, j1 in consumers.get(x1, ()):
                    for h, j2 in consumers.get(x2, ()):
                        dom = h.dom[:j2 - 1] + g.dom[:j1 - 1] + f.dom + g.dom[j1:] + h.dom[j2:]
                        size_cod = len(f.cod) - 2 + len(g.cod) + len(h.cod)
                        if not (_fits(P, dom, ()) and size_cod <= P.bound
                                and P.within_bound(g, f, i1, j1) and P.within_bound(h, f, i2, j2)):
                            continue
                        try:
                            first, first_labels = _graft_below(P, f, (g, i1, j1, "g"), (h, i2, j2, "h"))
                            second, second_labels = _graft_below(P, f, (h, i2, j2, "h"), (g, i1, j1, "g"))
                            expected = _conjugate(P, first, first_labels, second_labels)
                        except CompositionError as error:
                            _undefined(result, error)
                            continue
                        result.record(second == expected, "independent output cuts do not interchange",
                                      f=f.id, g=g.id, h=h.id, cuts=[[i1, j1], [i2, j2]],
                                      results=[first.id, second.id])


def _graft_below(P, f, first, second):
    """ Compose ``f`` into ``first``, then the result into ``second``, tracking labels. """
    (g, i1, j1, g_tag), (h, i2, j2, h_tag) = first, second
    a = P.compose(g, f, i1, j1)
    a_labels = cut_provenance(_ports(g_tag, g), _ports("f", f), i1, j1)
    pos = a_labels[1].index(("f", i2)) + 1
    return P.compose(h, a, pos, j2), cut_provenance(_ports(h_tag, h), a_labels, pos, j2)


def _parallel_inputs(P, maps, producers, consumers, result):
    for g in maps:
        for j1, x1 in enumerate(g.dom, start=1):
            for j2, x2 in enumerate(g.dom, start=1):
                if j1 >= j2:
                    continue
                for f, i1 in producers.get(x1, ()):
                    for h, i2 in producers.get(x2, ()):
                        size_dom = len(g.dom) - 2 + len(f.dom) + len(h.dom)
                        cod = h.cod[:i2 - 1] + f.cod[:i1 - 1] + g.cod + f.cod[i1:] + h.cod[i2:]
                        if not (size_dom <= P.bound and _fits(P, (), cod)
                                and P.within_bound(g, f, i1, j1) and P.within_bound(g, h, i2, j2)):
                            continue
                        try:
                            first, first_labels = _graft_above(P, g, (f, i1, j1, "f"), (h, i2, j2, "h"))
                            second, second_labels = _graft_above(P, g, (h, i2, j2, "h"), (f, i1, j1, "f"))
                            expected = _conjugate(P, first, first_labels, second_labels)
                        except CompositionError as error:
                            _undefined(result, error)
                            continue
                        result.record(second == expected, "independent input cuts do not interchange",
                                      f=f.id, g=g.id, h=h.id, cuts=[[i1, j1], [i2, j2]],
                                      results=[first.id, second.id])


def _graft_above(P, g, first, second):
    """ Compose ``first`` into ``g``, then ``second`` into the result, tracking labels. """
    (f, i1, j1, f_tag), (h, i2, j2, h_tag) = first, second
    a = P.compose(g, f, i1, j1)
    a_labels = cut_provenance(_ports("g", g), _ports(f_tag, f), i1, j1)
    pos = a_labels[0].index(("g", j2)) + 1
    return P.compose(a, h, i2, pos), cut_provenance(a_labels, _ports(h_tag, h), i2, pos)


def _equivariance(P, maps, producers, consumers, result):
    for g, f, i, j in P.cuts():
        try:
            base = P.compose(g, f, i, j)
        except CompositionError as error:
            _undefined(result, error)
            continue
        base_labels = cut_provenance(_ports("g", g), _ports("f", f), i, j)
        for role, side in (("f", "dom"), ("f", "cod"), ("g", "dom"), ("g", "cod")):
            member = f if role == "f" else g
            n = len(getattr(member, side))
            for t in range(1, n):
                moved = P.exchange_step(member, side, t)
                labels = list(_ports(role, member))
                index = SIDES.index(side)
                labels[index] = permute(labels[index], adjacent_transposition(n, t))
                f2, g2 = (moved, g) if role == "f" else (f, moved)
                f_labels = tuple(labels) if role == "f" else _ports("f", f)
                g_labels = tuple(labels) if role == "g" else _ports("g", g)
                i2 = f_labels[1].index(("f", i)) + 1
                j2 = g_labels[0].index(("g", j)) + 1
                try:
                    composite = P.compose(g2, f2, i2, j2)
                except CompositionError as error:
                    _undefined(result, error)
                    continue
                expected = _conjugate(P, base, base_labels, cut_provenance(g_labels, f_labels, i2, j2))
                result.record(composite == expected, "composition is not equivariant",
                              f=f.id, g=g.id, cut=[i, j], exchanged=role, side=side, position=t,
                              results=[composite.id, expected.id])
