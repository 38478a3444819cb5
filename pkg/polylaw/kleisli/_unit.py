import itertools

from polylaw.utilities import compose_permutations, invert_permutation, all_permutations, permute
from polylaw.polycat import PolyMap, HomTable
from polylaw.exceptions import UsageError

UNIT_ELEMENT = "*"
""" The single element of a nonempty cell of the unit. """


def unit_elements(objects, dom, cod):
    """The cell of the unit at ``(dom; cod)``.

    For polycategories ``cod`` is a list and the cell is a singleton when
    ``dom == cod == (x,)`` for an object ``x``. For multicategories ``cod`` is
    a single object ``y`` and the cell is a singleton when ``dom == (y,)``.

    Returns
    -------
    frozenset
        ``{"*"}`` or empty.
    """
    dom = tuple(dom)
    if isinstance(cod, str):
        return frozenset({UNIT_ELEMENT}) if dom == (cod,) and cod in objects else frozenset()
    cod = tuple(cod)
    if len(dom) == 1 and dom == cod and dom[0] in objects:
        return frozenset({UNIT_ELEMENT})
    return frozenset()


def unit_table(objects, bound):
    """ The unit as a hom table: one element ``unit_<x>: (x) -> (x)`` per object. """
    return HomTable(objects, bound, [PolyMap(f"unit_{x}", (x,), (x,)) for x in objects], {})


def unit_transport(cls, F, I):
    """The element of ``F`` corresponding to a class of a tensor with the unit.

    ``cls`` is a class of the tensor of ``I`` with ``F`` (units below) or of
    ``F`` with ``I`` (units above); the bijection with the cells of ``F``
    removes the units and exchanges the remaining map onto the outer
    boundary.
    """
    x = cls.representative
    if all(f in I for f in x.fs) and len(x.gs) == 1 and x.gs[0] in F:
        f = F[x.gs[0]]
        # units below: f.dom == permute(dom, sigma o tau)
        return F.exchange(f, invert_permutation(compose_permutations(x.sigma, x.tau)), x.upsilon)
    if all(g in I for g in x.gs) and len(x.fs) == 1 and x.fs[0] in F:
        f = F[x.fs[0]]
        return F.exchange(f, invert_permutation(x.sigma), compose_permutations(x.tau, x.upsilon))
    raise UsageError(f"{unit_transport.__qualname__}: {x} is not a composite with units on one side.")


def lifted_hom_elements(F, ds, cs):
    """The cell of the lift of a unary profunctor to lists.

    Elements are pairs ``(sigma, (f_1, ..., f_n))`` with ``f_i`` a map of
    ``F`` from ``ds[sigma(i)]`` to ``cs[i]``; the cell is empty unless the two
    lists have equal length.

    Parameters
    ----------
    F : HomTable
        Only its unary maps are used.

    ds, cs : sequence of str
    """
    ds, cs = tuple(ds), tuple(cs)
    if len(ds) != len(cs):
        return []
    elements = []
    for sigma in all_permutations(len(ds)):
        options = [[f.id for f in F.hom((d,), (c,))] for d, c in zip(permute(ds, sigma), cs)]
        elements.extend((sigma, family) for family in itertools.product(*options))
    return elements
