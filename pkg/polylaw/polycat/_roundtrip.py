import itertools
import logging

from polylaw.config import ROUNDTRIP_MAX_FAMILY
from polylaw.exceptions import CompositionError, UsageError, PolyTableError
from polylaw.report import Report

from ._polymap import FamilyMatching, is_suitable_matching
from ._compose import polycompose
from ._table import PolyTable

logger = logging.getLogger(__name__)


def instance_key(fm):
    """ Hashable key ``(f ids, g ids, pairing)`` of a family matching of table maps. """
    return (tuple(f.id for f in fm.fs), tuple(g.id for g in fm.gs), fm.pairing)


class PolycompositeTable(object):
    """
    Polycompositional data on the maps of a table: for each listed suitable
    family matching, the id of its polycomposite.

    Parameters
    ----------
    table : HomTable
        Supplies the maps, their types and the exchange action.

    entries : dict
        ``instance_key -> id``; see :func:`instance_key`.
    """

    def __init__(self, table, entries):
        self.table = table
        self.entries = dict(entries)

    def __len__(self):
        return len(self.entries)

    def __contains__(self, key):
        return key in self.entries

    def __getitem__(self, key):
        return self.table[self.entries[key]]

    def matching(self, key):
        fs, gs, pairing = key
        return FamilyMatching(tuple(self.table[f] for f in fs), tuple(self.table[g] for g in gs), pairing)

    def replace(self, key, hid):
        """ A copy with one entry changed. """
        entries = dict(self.entries)
        entries[key] = hid
        return PolycompositeTable(self.table, entries)

    def __repr__(self):
        return f"{self.__class__.__name__}(entries={len(self.entries)})"


def pad(P, g, f, i, j):
    """The family matching that realises a binary cut as a polycomposite.

    The lower family is ``f`` at position ``j`` among identities on the
    other inputs of ``g``; the upper family is ``g`` at position ``i`` among
    identities on the other outputs of ``f``. Its normalised polycomposite
    is ``P.compose(g, f, i, j)``.
    """
    fs = tuple(f if t == j else P.identity(x) for t, x in enumerate(g.dom, start=1))
    gs = tuple(g if p == i else P.identity(x) for p, x in enumerate(f.cod, start=1))
    pairing = [((j, i), (i, j))]
    pairing += [((t, 1), (i, t)) for t in range(1, len(g.dom) + 1) if t != j]
    pairing += [((j, p), (p, 1)) for p in range(1, len(f.cod) + 1) if p != i]
    return FamilyMatching(fs, gs, pairing)


def _full_matchings(fs, gs):
    outputs = [(a, p) for a, f in enumerate(fs, start=1) for p in range(1, len(f.cod) + 1)]
    inputs = [(b, q) for b, g in enumerate(gs, start=1) for q in range(1, len(g.dom) + 1)]
    if len(outputs) != len(inputs) or len(outputs) != len(fs) + len(gs) - 1:
        return
    for image in itertools.permutations(inputs):
        pairing = tuple(zip(outputs, image))
        if all(fs[a - 1].cod[p - 1] == gs[b - 1].dom[q - 1] for (a, p), (b, q) in pairing):
            fm = FamilyMatching(fs, gs, pairing)
            if is_suitable_matching(fm):
                yield fm


def roundtrip_instances(P, max_family=ROUNDTRIP_MAX_FAMILY):
    """Family matchings compared by :func:`roundtrip_check`.

    All full suitable matchings of families with at most ``max_family``
    members in total, followed by the :func:`pad` of every cut of ``P``.
    Duplicates are listed once.
    """
    maps = sorted(P.maps.values())
    seen = set()
    instances = []

    def add(fm):
        key = instance_key(fm)
        if key not in seen:
            seen.add(key)
            instances.append(fm)

    for total in range(2, max_family + 1):
        for j in range(1, total):
            k = total - j
            for fs in itertools.product(maps, repeat=j):
                if sum(len(f.cod) for f in fs) != total - 1:
                    continue
                for gs in itertools.product(maps, repeat=k):
                    if sum(len(g.dom) for g in gs) != total - 1:
                        continue
                    for fm in _full_matchings(fs, gs):
                        add(fm)
    for g, f, i, j in P.cuts():
        add(pad(P, g, f, i, j))
    logger.debug("Roundtrip uses %d instances", len(instances))
    return instances


def polycomposites_from_binary(P, instances=None):
    """Polycompositional data derived from binary composition.

    Every instance whose peel stays within the bound and finds all its
    composition entries gets its normalised polycomposite.
    """
    instances = roundtrip_instances(P) if instances is None else instances
    entries = {}
    for fm in instances:
        try:
            entries[instance_key(fm)] = polycompose(P, fm).id
        except CompositionError:
            logger.debug("No polycomposite for %s", instance_key(fm))
    return PolycompositeTable(P, entries)


def binary_from_polycomposites(PC, P=None):
    """Binary composition derived from polycompositional data.

    The composite of a cut is the polycomposite of its :func:`pad`. Cuts whose
    pad has no entry are left undefined.

    Returns
    -------
    PolyTable
        The maps, exchanges and identities of ``PC.table`` (or ``P``) with the
        derived composition.
    """
    P = PC.table if P is None else P
    if not isinstance(P, PolyTable):
        raise UsageError(f"{binary_from_polycomposites.__qualname__} needs a PolyTable, got {type(P).__name__}.")
    composition = {}
    for g, f, i, j in P.cuts():
        key = instance_key(pad(P, g, f, i, j))
        if key in PC.entries:
            composition[(g.id, f.id, i, j)] = PC.entries[key]
    return PolyTable(P.objects, P.bound, P.maps.values(), P.exchange_table, P.identities, composition)


def roundtrip_check(P, PC=None, max_family=ROUNDTRIP_MAX_FAMILY):
    """Check that the binary and polycompositional presentations determine each other.

    Parameters
    ----------
    P : PolyTable
        Binary composition data.

    PC : PolycompositeTable, optional
        Polycompositional data on the maps of ``P``. Defaults to the data
        derived from ``P``.

    Returns
    -------
    Report
        ``binary-roundtrip``: deriving polycomposites from ``P`` and binary
        composition back from them reproduces every composition entry of
        ``P``. ``polycomposite-roundtrip``: deriving binary composition from
        ``PC`` and polycomposites back from it reproduces every entry of
        ``PC``.
    """
    instances = roundtrip_instances(P, max_family)
    report = Report("roundtrip", {"bound": P.bound, "maps": len(P), "instances": len(instances)})
    binary = report.check("binary-roundtrip", "binary -> polycomposites -> binary is the identity")
    poly = report.check("polycomposite-roundtrip", "polycomposites -> binary -> polycomposites is the identity")

    derived = polycomposites_from_binary(P, instances)
    back = binary_from_polycomposites(derived, P)
    for key in sorted(P.composition):
        if key not in back.composition:
            binary.skip()
            continue
        binary.record(back.composition[key] == P.composition[key], "binary composite changed",
                      entry=list(key), original=P.composition[key], derived=back.composition[key])

    PC = derived if PC is None else PC
    try:
        rebuilt = binary_from_polycomposites(PC, P)
    except PolyTableError as e:
        poly.record(False, f"derived binary table is invalid: {e}")
        return report
    again = polycomposites_from_binary(rebuilt, [PC.matching(key) for key in sorted(PC.entries)])
    for key in sorted(PC.entries):
        if key not in again.entries:
            poly.skip()
            continue
        poly.record(again.entries[key] == PC.entries[key], "polycomposite changed",
                    instance=key, original=PC.entries[key], derived=again.entries[key])
    logger.info("Roundtrip over %d instances: %s", len(instances), "passed" if report.passed else "failed")
    return report
