import logging

from polylaw.polycat import PolyMap, PolyTable, FreePolycategory, instance_key, pad
from polylaw.exceptions import UsageError

logger = logging.getLogger(__name__)


def terminal_polytable(bound, obj="x"):
    """The terminal polycategory on one object, truncated at ``bound``.

    There is exactly one polymap between any two lists of lengths at most
    ``bound``: ``t<n>_<m>`` from ``n`` copies of ``obj`` to ``m`` copies,
    except that the one from a single copy to a single copy is the identity
    ``id_<obj>``. Every exchange fixes every map.

    Parameters
    ----------
    bound : int
        Length bound, at least 1.

    obj : str
        Name of the object.
    """
    if bound < 1:
        raise UsageError(f"{terminal_polytable.__qualname__} needs bound >= 1, got {bound}.")
    ident = f"id_{obj}"

    def name(n, m):
        return ident if (n, m) == (1, 1) else f"t{n}_{m}"

    maps = [PolyMap(name(n, m), (obj,) * n, (obj,) * m) for n in range(bound + 1) for m in range(bound + 1)]
    exchange = {(f.id, side, i): f.id for f in maps for side in ("dom", "cod")
                for i in range(1, len(getattr(f, side)))}
    composition = {}
    for g in maps:
        for f in maps:
            n = len(g.dom) - 1 + len(f.dom)
            m = len(f.cod) - 1 + len(g.cod)
            if n > bound or m > bound:
                continue
            for i in range(1, len(f.cod) + 1):
                for j in range(1, len(g.dom) + 1):
                    composition[(g.id, f.id, i, j)] = name(n, m)
    return PolyTable((obj,), bound, maps, exchange, {obj: ident}, composition)


def free_one_generator(bound):
    """ The free polycategory on ``f: (a) -> (b, c)``, truncated at ``bound``. """
    return FreePolycategory("abc", {"f": ("a", "bc")}).truncate(bound)


def free_two_generators(bound):
    """ The free polycategory on ``f: (a) -> (b, b)`` and ``g: (b) -> (c)``, truncated at ``bound``. """
    return FreePolycategory("abc", {"f": ("a", "bb"), "g": ("b", "c")}).truncate(bound)


def corpus(bound):
    """ The built-in tables, by name. All of them are polycategories. """
    return {
        "terminal": terminal_polytable(bound),
        "free-one": free_one_generator(bound),
        "free-two": free_two_generators(bound),
    }


def _same_type(table, hid):
    """ Other maps with the type of ``hid``. """
    h = table[hid]
    return [f.id for f in table.hom(h.dom, h.cod) if f.id != hid]


def _other_type(table, hid):
    h = table[hid]
    for fid in sorted(table.maps):
        f = table[fid]
        if (f.dom, f.cod) != (h.dom, h.cod):
            return fid
    raise UsageError(f"Table has no map of a type other than that of {hid}.")


def _pick(table, keys, current, well_typed):
    """ The key to mutate and whether its replacement keeps the type. """
    if not keys:
        raise UsageError("Nothing to mutate.")
    typed = [k for k in keys if _same_type(table, current[k])]
    if well_typed is None:
        return (typed[0], True) if typed else (keys[0], False)
    if well_typed and not typed:
        raise UsageError("No entry has a second map of its type.")
    return (typed[0] if well_typed else keys[0]), well_typed


def _replacement(table, hid, well_typed):
    if not well_typed:
        return _other_type(table, hid)
    same = _same_type(table, hid)
    if not same:
        raise UsageError(f"No other map has the type of {hid}.")
    return same[0]


def mutate_composition(P, key=None, well_typed=None):
    """Change one composition entry of a table.

    Parameters
    ----------
    P : PolyTable

    key : tuple, optional
        ``(g, f, i, j)``. Defaults to the first entry in sorted order that
        admits the requested kind of mutation, preferring entries not
        involving an identity.

    well_typed : bool, optional
        If True the new composite is another map of the same type, so the
        mutated table still loads. If False it is a map of another type and
        the table is built without the typing check. By default the
        mutation is well typed whenever some entry has a second map of its
        type; a thin table such as the terminal one only has the other kind.

    Returns
    -------
    tuple
        ``(mutated table, key)``.

    Example
    -------
    .. code-block:: python

        from polylaw.testtable import free_two_generators, mutate_composition

        P = free_two_generators(2)
        broken, key = mutate_composition(P)
        P[broken.composition[key]].cod == P[P.composition[key]].cod  # True
    """
    if key is None:
        identities = set(P.identities.values())
        keys = sorted(P.composition)
        plain = [k for k in keys if k[0] not in identities and k[1] not in identities]
        ordered = plain + [k for k in keys if k not in plain]
        key, well_typed = _pick(P, ordered, P.composition, well_typed)
    elif well_typed is None:
        well_typed = bool(_same_type(P, P.composition[key]))
    hid = _replacement(P, P.composition[key], well_typed)
    logger.info("Mutating composition %s: %s -> %s (%s)", key, P.composition[key], hid,
                "same type" if well_typed else "wrong type")
    return P.replace_composition(key, hid, check_typing=well_typed), key


def mutate_polycomposite(PC, key=None, well_typed=None):
    """Change one entry of polycompositional data.

    Parameters
    ----------
    PC : PolycompositeTable

    key : tuple, optional
        An instance key. Defaults to the first entry, in sorted order, that is
        not the pad of a binary cut and admits the requested mutation.

    well_typed : bool, optional
        As for :func:`mutate_composition`.

    Returns
    -------
    tuple
        ``(mutated data, key)``.
    """
    P = PC.table
    if key is None:
        pads = {instance_key(pad(P, g, f, i, j)) for g, f, i, j in P.cuts()}
        candidates = [k for k in sorted(PC.entries) if k not in pads]
        if not candidates:
            raise UsageError("Polycompositional data has only pad entries.")
        key, well_typed = _pick(P, candidates, PC.entries, well_typed)
    elif well_typed is None:
        well_typed = bool(_same_type(P, PC.entries[key]))
    hid = _replacement(P, PC.entries[key], well_typed)
    logger.info("Mutating polycomposite %s: %s -> %s", key, PC.entries[key], hid)
    return PC.replace(key, hid), key
