from dataclasses import dataclass
from enum import Enum

from polylaw.fincard import FinMap, Span, CommutingSquare, is_suitable_span, is_pushout, induced_spans
from polylaw.symcat import S2Mor, S3Obj, s2_hom
from polylaw.utilities import compose_permutations
from polylaw.exceptions import CompositionError, UsageError
from polylaw._messages import _endpoint_msg


class Side(Enum):
    """ Which whiskering of ``delta_1`` by the comonad structure. """
    RIGHT = "right"
    LEFT = "left"


@dataclass(frozen=True, order=True)
class WhiskeredRight:
    """
    An element of the right whiskering ``(delta S_c)_1(phi; psi)`` for chains ``phi, psi``.

    A morphism ``(f_n, f_m): phi1 -> psi1`` of the lower legs such that the span
    ``r_phi <-phi2- m -psi2 o f_m-> r_psi`` is acyclic and connected.
    """
    phi: S3Obj
    psi: S3Obj
    f_n: tuple
    f_m: tuple

    def __post_init__(self):
        object.__setattr__(self, "f_n", tuple(self.f_n))
        object.__setattr__(self, "f_m", tuple(self.f_m))
        S2Mor(self.phi.phi1, self.psi.phi1, self.f_n, self.f_m)
        if not is_suitable_span(self.span()):
            raise ValueError(f"Upper span of ({self.f_n}, {self.f_m}): {self.phi} -> {self.psi} is not suitable.")

    def span(self):
        psi2 = self.psi.phi2
        return Span(self.phi.phi2.phi, FinMap(tuple(psi2(v) for v in self.f_m), psi2.m))

    def act_left(self, g):
        """ Left action by a ladder ``g: psi -> rho``. """
        if g.src != self.psi:
            raise CompositionError(_endpoint_msg(f"target {self.psi}", f"source {g.src}"))
        return WhiskeredRight(self.phi, g.tgt, compose_permutations(g.f_n, self.f_n),
                              compose_permutations(g.f_m, self.f_m))

    def act_right(self, h):
        """ Right action by a ladder ``h: phi' -> phi``. """
        if h.tgt != self.phi:
            raise CompositionError(_endpoint_msg(f"target {h.tgt}", f"source {self.phi}"))
        return WhiskeredRight(h.src, self.psi, compose_permutations(self.f_n, h.f_n),
                              compose_permutations(self.f_m, h.f_m))


def whiskered_square(phi, psi, f_n, f_r):
    """The commuting square attached to a pair ``(f_n, f_r)`` of the left whiskering::

        n_phi --psi1 o f_n--> m_psi
          |                     |
         phi1                  psi2
          v                     v
        m_phi --f_r o phi2--> r_psi
    """
    psi1, psi2 = psi.phi1, psi.phi2
    s = Span(phi.phi1.phi, FinMap(tuple(psi1(v) for v in f_n), psi1.m))
    bottom_left = FinMap(tuple(f_r[v - 1] for v in phi.phi2.values), psi2.m)
    return CommutingSquare(s, bottom_left, psi2.phi)


@dataclass(frozen=True, order=True)
class WhiskeredLeft:
    """
    An element of the left whiskering ``(S_c delta)_1(phi; psi)`` for chains ``phi, psi``.

    A morphism ``(f_n, f_r)`` between the collapsed chains such that
    :func:`whiskered_square` is a pushout and ``r_psi + n_phi == m_phi + m_psi``;
    equivalently every span induced over a point of ``r_psi`` is acyclic and connected.
    """
    phi: S3Obj
    psi: S3Obj
    f_n: tuple
    f_r: tuple

    def __post_init__(self):
        object.__setattr__(self, "f_n", tuple(self.f_n))
        object.__setattr__(self, "f_r", tuple(self.f_r))
        S2Mor(self.phi.collapse(), self.psi.collapse(), self.f_n, self.f_r)
        if self.psi.r + self.phi.n != self.phi.m + self.psi.m:
            raise ValueError(f"Cardinalities of {self.phi} and {self.psi} violate r_psi + n_phi == m_phi + m_psi.")
        if not is_pushout(self.square()):
            raise ValueError(f"Square of ({self.f_n}, {self.f_r}): {self.phi} -> {self.psi} is not a pushout.")

    def square(self):
        return whiskered_square(self.phi, self.psi, self.f_n, self.f_r)

    def fiberwise_suitable(self):
        return all(is_suitable_span(s) for s in induced_spans(self.square()))

    def act_left(self, g):
        if g.src != self.psi:
            raise CompositionError(_endpoint_msg(f"target {self.psi}", f"source {g.src}"))
        return WhiskeredLeft(self.phi, g.tgt, compose_permutations(g.f_n, self.f_n),
                             compose_permutations(g.f_r, self.f_r))

    def act_right(self, h):
        if h.tgt != self.phi:
            raise CompositionError(_endpoint_msg(f"target {h.tgt}", f"source {self.phi}"))
        return WhiskeredLeft(h.src, self.psi, compose_permutations(self.f_n, h.f_n),
                             compose_permutations(self.f_r, h.f_r))


def _side(side):
    try:
        return Side(side.value if isinstance(side, Side) else str(side).lower())
    except ValueError:
        raise UsageError(f"Unknown whiskering side {side!r}.") from None


def whiskered_elements(side, phi, psi):
    """Enumerate a whiskered profunctor of suitable matchings on chains.

    Parameters
    ----------
    side : Side or str
        ``"right"`` lists pairs ``(f_n, f_m)`` of :class:`WhiskeredRight`,
        ``"left"`` lists pairs ``(f_n, f_r)`` of :class:`WhiskeredLeft`.

    phi, psi : S3Obj
        Source and target chains.

    Returns
    -------
    list
        Elements sorted by their bijections.
    """
    side = _side(side)
    if side is Side.RIGHT:
        if phi.n != psi.n or phi.m != psi.m or phi.r + psi.r != phi.m + 1:
            return []
        result = []
        for f in s2_hom(phi.phi1, psi.phi1):
            upper = Span(phi.phi2.phi, FinMap(tuple(psi.phi2(v) for v in f.f_m), psi.r))
            if is_suitable_span(upper):
                result.append(WhiskeredRight(phi, psi, f.f_n, f.f_m))
        return result

    if phi.n != psi.n or phi.r != psi.r or psi.r + phi.n != phi.m + psi.m:
        return []
    result = []
    for f in s2_hom(phi.collapse(), psi.collapse()):
        if is_pushout(whiskered_square(phi, psi, f.f_n, f.f_m)):
            result.append(WhiskeredLeft(phi, psi, f.f_n, f.f_m))
    return result
