from dataclasses import dataclass

from polylaw.fincard import FinMap, Span, is_suitable_span
from polylaw.exceptions import CompositionError


@dataclass(frozen=True, order=True)
class PolyMap:
    """
    A polymap ``id: dom -> cod`` between lists of objects.

    Parameters
    ----------
    id : str
        Name of the polymap, unique within its table.

    dom, cod : tuple of str
        Input and output lists of object names.
    """
    id: str
    dom: tuple
    cod: tuple

    def __post_init__(self):
        object.__setattr__(self, "dom", tuple(self.dom))
        object.__setattr__(self, "cod", tuple(self.cod))

    def __str__(self):
        return f"{self.id}: ({', '.join(self.dom)}) -> ({', '.join(self.cod)})"


@dataclass(frozen=True)
class FamilyMatching:
    """
    A matching of the outputs of a family ``fs`` with the inputs of a family ``gs``.

    Parameters
    ----------
    fs : tuple
        The lower family; its members feed outputs into the matching.

    gs : tuple
        The upper family; its members receive inputs from the matching.

    pairing : tuple of ((a, p), (b, q))
        Output ``p`` of ``fs[a]`` is matched with input ``q`` of ``gs[b]``.
        Members and ports are 1-based. Each port occurs at most once; ports
        left out are free and become part of the boundary of the composite.
    """
    fs: tuple
    gs: tuple
    pairing: tuple

    def __post_init__(self):
        object.__setattr__(self, "fs", tuple(self.fs))
        object.__setattr__(self, "gs", tuple(self.gs))
        pairing = tuple(sorted(((int(a), int(p)), (int(b), int(q))) for (a, p), (b, q) in self.pairing))
        object.__setattr__(self, "pairing", pairing)
        outs = [x for x, _ in pairing]
        ins = [y for _, y in pairing]
        if len(set(outs)) != len(outs) or len(set(ins)) != len(ins):
            raise ValueError(f"Pairing {pairing} uses a port twice.")
        for (a, p), (b, q) in pairing:
            if not (1 <= a <= len(self.fs) and 1 <= p <= len(self.fs[a - 1].cod)):
                raise ValueError(f"Output {p} of member {a} does not exist.")
            if not (1 <= b <= len(self.gs) and 1 <= q <= len(self.gs[b - 1].dom)):
                raise ValueError(f"Input {q} of member {b} does not exist.")

    @property
    def j(self):
        return len(self.fs)

    @property
    def k(self):
        return len(self.gs)

    def is_full(self):
        """ True if every output of ``fs`` and every input of ``gs`` is matched. """
        outputs = sum(len(f.cod) for f in self.fs)
        inputs = sum(len(g.dom) for g in self.gs)
        return len(self.pairing) == outputs == inputs

    def check_types(self):
        """ Raise :class:`CompositionError` if a matched pair of ports carries different objects. """
        for (a, p), (b, q) in self.pairing:
            x, y = self.fs[a - 1].cod[p - 1], self.gs[b - 1].dom[q - 1]
            if x != y:
                raise CompositionError(f"Output {p} of member {a} has object {x} but input {q} of member {b} has {y}.")


def family_matching_span(fm):
    """The span ``j <- l -> k`` of a family matching.

    ``l`` counts the matched pairs; the legs send a pair to the index of its
    member in ``fs`` and in ``gs``. Its multigraph has the members as
    vertices and one edge per matched pair.

    Raises
    ------
    CompositionError
        If a matched pair of ports carries different objects.
    """
    fm.check_types()
    left = FinMap(tuple(a for (a, _), _ in fm.pairing), fm.j)
    right = FinMap(tuple(b for _, (b, _) in fm.pairing), fm.k)
    return Span(left, right)


def is_suitable_matching(fm):
    """ True if the multigraph of the matching is acyclic, connected and has no multiple edges. """
    return is_suitable_span(family_matching_span(fm))
