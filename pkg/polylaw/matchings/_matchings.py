from dataclasses import dataclass

from polylaw.fincard import FinMap, Span, is_suitable_span
from polylaw.symcat import S1Mor, S2Obj
from polylaw.utilities import UnionFind, compose_permutations, invert_permutation, is_permutation
from polylaw.exceptions import CompositionError
from polylaw._messages import _endpoint_msg


@dataclass(frozen=True, order=True)
class Matching:
    """
    A suitable matching ``f in delta_1(phi; psi)``.

    A bijection ``f_n: n_phi -> n_psi`` such that the span
    ``m_phi <-phi- n_phi -psi o f_n-> m_psi`` is acyclic and connected. Read as a
    graph, the parts of ``phi`` and of ``psi`` are vertices and every point of
    ``n_phi`` is an edge joining its part in ``phi`` to the part of its image in ``psi``.

    Parameters
    ----------
    phi, psi : S2Obj
        The endpoints.

    f_n : tuple of int
        The bijection on points.
    """
    phi: S2Obj
    psi: S2Obj
    f_n: tuple

    def __post_init__(self):
        object.__setattr__(self, "f_n", tuple(self.f_n))
        if self.phi.n != self.psi.n or len(self.f_n) != self.phi.n or not is_permutation(self.f_n):
            raise ValueError(f"f_n={self.f_n} is not a bijection {int(self.phi.n)} -> {int(self.psi.n)}.")
        if not is_suitable_span(self.span()):
            raise ValueError(f"f_n={self.f_n} is not a suitable matching of {self.phi} with {self.psi}.")

    def span(self):
        """ The span ``m_phi <- n_phi -> m_psi`` whose multigraph must be a tree. """
        return Span(self.phi.phi, FinMap(tuple(self.psi(v) for v in self.f_n), self.psi.m))

    def __str__(self):
        return ",".join(str(v) for v in self.f_n)


def delta1_elements(phi, psi):
    """All suitable matchings of ``phi`` with ``psi``.

    Bijections are built point by point in lexicographic order; a partial
    bijection is abandoned as soon as its edges close a cycle. With
    ``m_phi + m_psi == n + 1`` vertices, ``n`` edges without a cycle form a tree.

    Returns
    -------
    list of Matching
        Sorted by ``f_n``. Empty unless ``n_phi == n_psi`` and
        ``m_phi + m_psi == n_phi + 1``.
    """
    n = phi.n
    if psi.n != n or phi.m + psi.m != n + 1:
        return []
    vertices = [("l", a) for a in range(1, phi.m + 1)] + [("r", b) for b in range(1, psi.m + 1)]
    result = []
    chosen = []
    used = [False] * (n + 1)

    def extend(i, uf):
        if i > n:
            result.append(Matching(phi, psi, tuple(chosen)))
            return
        for j in range(1, n + 1):
            if used[j]:
                continue
            trial = uf.copy()
            if not trial.union(("l", phi(i)), ("r", psi(j))):
                continue
            used[j] = True
            chosen.append(j)
            extend(i + 1, trial)
            chosen.pop()
            used[j] = False

    extend(1, UnionFind(vertices))
    return result


def delta1_act(x, left=None, right=None):
    """Act on a matching by morphisms of ``S^2 1`` on either side.

    Parameters
    ----------
    x : Matching
        An element of ``delta_1(phi; psi)``.

    left : S2Mor, optional
        ``g: psi -> rho``; replaces ``f_n`` by ``g_n o f_n``.

    right : S2Mor, optional
        ``h: phi' -> phi``; replaces ``f_n`` by ``f_n o h_n``.

    Returns
    -------
    Matching
        An element of ``delta_1(phi'; rho)``.

    Raises
    ------
    CompositionError
        If an endpoint of ``left`` or ``right`` does not match ``x``.
    """
    phi, psi, f_n = x.phi, x.psi, x.f_n
    if left is not None:
        if left.src != psi:
            raise CompositionError(_endpoint_msg(f"target {psi}", f"source {left.src}"))
        psi, f_n = left.tgt, compose_permutations(left.f_n, f_n)
    if right is not None:
        if right.tgt != phi:
            raise CompositionError(_endpoint_msg(f"target {right.tgt}", f"source {phi}"))
        phi, f_n = right.src, compose_permutations(f_n, right.f_n)
    return Matching(phi, psi, f_n)


def delta1_project(x):
    """ The bijection ``f_n`` of a matching as a morphism of ``S1``. """
    return S1Mor(x.f_n)


def transpose(x):
    """ The matching of ``psi`` with ``phi`` given by the inverse bijection. """
    return Matching(x.psi, x.phi, invert_permutation(x.f_n))
