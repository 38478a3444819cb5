import logging

from polylaw.utilities import transposition_word
from polylaw.exceptions import (
    CompositionError, BoundExceededError, CompositeTypeError, UsageError, DanglingReferenceError,
    PolyTableInvariantError,
)
from polylaw._messages import _bound_msg

from ._polycategory import Polycategory
from ._polymap import PolyMap

logger = logging.getLogger(__name__)

SIDES = ("dom", "cod")


class HomTable(object):
    """
    Finite sets of polymaps between lists of length at most ``bound``, with
    the exchange action of the symmetric groups on both sides.

    The action is stored only on adjacent transpositions: ``exchange[(id, side, i)]``
    is the id of the map obtained by swapping positions ``i`` and ``i + 1`` of
    ``side`` ("dom" or "cod"). Other permutations are applied by decomposing
    them into adjacent transpositions.

    Parameters
    ----------
    objects : iterable of str
        The object names.

    bound : int
        Maximum length of a domain or codomain.

    maps : iterable of PolyMap
        The polymaps. Ids must be unique.

    exchange : dict
        ``(id, side, i) -> id``. An entry is required for every map and every
        adjacent transposition of its domain and codomain.

    Attributes
    ----------
    homs : dict
        ``(dom, cod) -> tuple of ids``, sorted.
    """

    def __init__(self, objects, bound, maps, exchange):
        self._objects = tuple(objects)
        self.bound = int(bound)
        self.maps = {}
        for f in maps:
            if f.id in self.maps:
                raise PolyTableInvariantError("unique-ids", f.id, "declared twice")
            self.maps[f.id] = f
        self.exchange_table = dict(exchange)
        self.homs = {}
        for f in self.maps.values():
            self.homs.setdefault((f.dom, f.cod), []).append(f.id)
        self.homs = {key: tuple(sorted(ids)) for key, ids in sorted(self.homs.items())}
        self._validate_maps()
        self._validate_exchange()

    @property
    def objects(self):
        return self._objects

    def _validate_maps(self):
        known = set(self._objects)
        for f in self.maps.values():
            for x in f.dom + f.cod:
                if x not in known:
                    raise DanglingReferenceError(x, f"map '{f.id}'")
            if len(f.dom) > self.bound or len(f.cod) > self.bound:
                raise PolyTableInvariantError("bound", f.id, _bound_msg("A side", max(len(f.dom), len(f.cod)), self.bound))

    def _validate_exchange(self):
        for (fid, side, i), gid in self.exchange_table.items():
            entry = f"exchange ({fid}, {side}, {i})"
            if fid not in self.maps:
                raise DanglingReferenceError(fid, entry)
            if gid not in self.maps:
                raise DanglingReferenceError(gid, entry)
            if side not in SIDES:
                raise PolyTableInvariantError("exchange-side", entry, f"side must be one of {SIDES}")
            if not 1 <= i < len(getattr(self.maps[fid], side)):
                raise PolyTableInvariantError("exchange-position", entry, "no such adjacent transposition")
        for f in self.maps.values():
            for side in SIDES:
                for i in range(1, len(getattr(f, side))):
                    if (f.id, side, i) not in self.exchange_table:
                        raise PolyTableInvariantError("exchange-totality", f.id, f"missing {side} transposition {i}")

    def __getitem__(self, fid):
        try:
            return self.maps[fid]
        except KeyError:
            raise DanglingReferenceError(fid, "lookup") from None

    def __contains__(self, fid):
        return fid in self.maps

    def __len__(self):
        return len(self.maps)

    def hom(self, dom, cod):
        """ The polymaps ``dom -> cod``. """
        return [self.maps[fid] for fid in self.homs.get((tuple(dom), tuple(cod)), ())]

    def _resolve(self, f):
        return self[f] if isinstance(f, str) else f

    def exchange_step(self, f, side, i):
        """ The map obtained by the adjacent transposition ``i`` on ``side``. """
        f = self._resolve(f)
        return self.maps[self.exchange_table[(f.id, side, i)]]

    def exchange(self, f, sigma, tau):
        """ Apply ``(sigma, tau)`` through the stored adjacent transpositions. """
        f = self._resolve(f)
        if len(sigma) != len(f.dom) or len(tau) != len(f.cod):
            raise UsageError(f"Permutations of sizes ({len(sigma)}, {len(tau)}) do not fit {f}.")
        for i in transposition_word(sigma):
            f = self.exchange_step(f, "dom", i)
        for i in transposition_word(tau):
            f = self.exchange_step(f, "cod", i)
        return f

    def orbit(self, f):
        """ All maps reachable from ``f`` by exchange, sorted by id. """
        f = self._resolve(f)
        seen = {f.id}
        stack = [f]
        while stack:
            g = stack.pop()
            for side in SIDES:
                for i in range(1, len(getattr(g, side))):
                    h = self.exchange_step(g, side, i)
                    if h.id not in seen:
                        seen.add(h.id)
                        stack.append(h)
        return [self.maps[fid] for fid in sorted(seen)]

    def __repr__(self):
        return f"{self.__class__.__name__}(objects={self._objects}, bound={self.bound}, maps={len(self.maps)})"


class PolyTable(HomTable, Polycategory):
    """
    A finite presentation of a symmetric polycategory, truncated at a length bound.

    Compositions whose result would have a side longer than ``bound`` are
    left undefined. Structural consistency is checked on construction: ids
    resolve, objects are known, every cut joins equal objects, identities
    have the right type and every composite has the type of its cut. The
    laws of a polycategory are checked by :func:`check_polycategory_axioms`.

    Parameters
    ----------
    objects, bound, maps, exchange
        As for :class:`HomTable`.

    identities : dict
        ``object -> id`` of the identity map on that object.

    composition : dict
        ``(g, f, i, j) -> id``: the composite of ``f`` into ``g`` along
        output ``i`` of ``f`` and input ``j`` of ``g``.

    check_typing : bool
        Reject composites whose type differs from the type of their cut.
        Turned off only to build broken tables for the checkers; :meth:`compose`
        still refuses to return such a composite.

    Example
    -------
    .. code-block:: python

        from polylaw.testtable import terminal_polytable

        P = terminal_polytable(bound=2)
        f = P["t1_2"]
        P.compose(P.identity("x"), f, 1, 1) == f  # True
    """

    def __init__(self, objects, bound, maps, exchange, identities, composition, check_typing=True):
        super().__init__(objects, bound, maps, exchange)
        self.identities = dict(identities)
        self.composition = dict(composition)
        self._validate_identities()
        self._validate_composition(check_typing)

    def _validate_identities(self):
        for x in self.objects:
            if x not in self.identities:
                raise PolyTableInvariantError("identity-present", x, "object has no identity")
        for x, fid in self.identities.items():
            if x not in self.objects:
                raise DanglingReferenceError(x, "identities")
            if fid not in self.maps:
                raise DanglingReferenceError(fid, f"identity of {x}")
            f = self.maps[fid]
            if f.dom != (x,) or f.cod != (x,):
                raise PolyTableInvariantError("identity-typing", fid, f"identity of {x} has type {f.dom} -> {f.cod}")

    def _validate_composition(self, check_typing):
        for (gid, fid, i, j), hid in self.composition.items():
            entry = f"composition ({gid}, {fid}, {i}, {j})"
            for ref in (gid, fid, hid):
                if ref not in self.maps:
                    raise DanglingReferenceError(ref, entry)
            g, f = self.maps[gid], self.maps[fid]
            if not (1 <= i <= len(f.cod) and 1 <= j <= len(g.dom)):
                raise PolyTableInvariantError("cut-position", entry, "cut position out of range")
            if f.cod[i - 1] != g.dom[j - 1]:
                raise PolyTableInvariantError("cut-typing", entry,
                                              f"output {i} of {fid} is {f.cod[i - 1]} but input {j} of {gid} is {g.dom[j - 1]}")
            dom, cod = self.composite_type(g, f, i, j)
            h = self.maps[hid]
            if check_typing and (h.dom, h.cod) != (dom, cod):
                raise PolyTableInvariantError("composition-typing", entry,
                                              f"{hid} has type {h.dom} -> {h.cod} but the cut gives {dom} -> {cod}")

    def identity(self, x):
        try:
            return self.maps[self.identities[x]]
        except KeyError:
            raise DanglingReferenceError(x, "identities") from None

    @staticmethod
    def composite_type(g, f, i, j):
        """ The type ``(Lambda1, Gamma, Lambda2) -> (Delta1, Sigma, Delta2)`` of a composite. """
        return (g.dom[:j - 1] + f.dom + g.dom[j:], f.cod[:i - 1] + g.cod + f.cod[i:])

    def within_bound(self, g, f, i, j):
        dom, cod = self.composite_type(g, f, i, j)
        return len(dom) <= self.bound and len(cod) <= self.bound

    def compose(self, g, f, i, j):
        """Look up a composite.

        Raises
        ------
        CompositionError
            If the cut joins different objects or the entry is missing.

        BoundExceededError
            If the composite would have a side longer than ``bound``.

        CompositeTypeError
            If the stored composite does not have the type of the cut.
        """
        g, f = self._resolve(g), self._resolve(f)
        if not (1 <= i <= len(f.cod) and 1 <= j <= len(g.dom)):
            raise CompositionError(f"Cut ({i}, {j}) does not exist for {f.id} into {g.id}.")
        if f.cod[i - 1] != g.dom[j - 1]:
            raise CompositionError(f"Cut ({i}, {j}) joins {f.cod[i - 1]} with {g.dom[j - 1]}.")
        dom, cod = self.composite_type(g, f, i, j)
        if len(dom) > self.bound or len(cod) > self.bound:
            raise BoundExceededError(_bound_msg(f"Composite of {f.id} into {g.id}", max(len(dom), len(cod)), self.bound))
        key = (g.id, f.id, i, j)
        if key not in self.composition:
            raise CompositionError(f"No composition entry for {key}.")
        h = self.maps[self.composition[key]]
        if (h.dom, h.cod) != (dom, cod):
            raise CompositeTypeError(key, h.id, (dom, cod))
        return h

    def cuts(self):
        """ All ``(g, f, i, j)`` with matching cut objects and a composite within the bound, in sorted order. """
        maps = sorted(self.maps.values())
        for g in maps:
            for f in maps:
                for i, x in enumerate(f.cod, start=1):
                    for j, y in enumerate(g.dom, start=1):
                        if x == y and self.within_bound(g, f, i, j):
                            yield g, f, i, j

    def replace_composition(self, key, hid, check_typing=True):
        """ A copy of this table with one composition entry changed; ``check_typing`` as for the constructor. """
        composition = dict(self.composition)
        composition[key] = hid
        logger.debug("Replacing composition %s: %s -> %s", key, self.composition.get(key), hid)
        return PolyTable(self.objects, self.bound, self.maps.values(), self.exchange_table,
                         self.identities, composition, check_typing)
