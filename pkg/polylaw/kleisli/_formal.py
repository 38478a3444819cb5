from collections import Counter
from dataclasses import dataclass
from typing import NamedTuple

from polylaw.config import MAX_ORBIT_SIZE
from polylaw.utilities import (
    arrangements, compose_permutations, invert_permutation, adjacent_transposition, identity_permutation, permute,
)
from polylaw.polycat import PolyMap, FamilyMatching, is_suitable_matching
from polylaw.exceptions import BoundExceededError
from polylaw._messages import _bound_msg


def _offsets(lengths):
    offsets = [0]
    for n in lengths:
        offsets.append(offsets[-1] + n)
    return offsets


def _block_swap(lengths, a):
    """ The permutation reordering consecutive blocks so that blocks ``a`` and ``a + 1`` (1-based) trade places. """
    offsets = _offsets(lengths)
    order = list(range(len(lengths)))
    order[a - 1], order[a] = order[a], order[a - 1]
    return tuple(p for b in order for p in range(offsets[b] + 1, offsets[b + 1] + 1))


@dataclass(frozen=True, order=True)
class FormalComposite:
    """
    An element of the tensor of two hom tables before the coend quotient.

    The lower family ``fs`` (from the first table) and the upper family
    ``gs`` (from the second) are joined along the middle list: output
    position ``tau(i)`` of the concatenated codomains of ``fs`` feeds input
    position ``i`` of the concatenated domains of ``gs``. The outer
    permutations reorder the boundary: ``permute(dom, sigma)`` is the
    concatenation of the domains of ``fs``, and ``permute(Phi, upsilon) == cod``
    for the concatenation ``Phi`` of the codomains of ``gs``.

    Parameters
    ----------
    sort_key : tuple
        ``(k, l, middle, fs, gs, sigma, tau, upsilon)``; the field order
        makes dataclass ordering the global deterministic order.

    dom, cod : tuple of str
        Outer boundary.
    """
    sort_key: tuple
    dom: tuple
    cod: tuple

    @classmethod
    def make(cls, sigma, fs, middle, tau, gs, upsilon, dom, cod):
        return cls((len(fs), len(gs), tuple(middle), tuple(fs), tuple(gs),
                    tuple(sigma), tuple(tau), tuple(upsilon)), tuple(dom), tuple(cod))

    @property
    def middle(self):
        return self.sort_key[2]

    @property
    def fs(self):
        return self.sort_key[3]

    @property
    def gs(self):
        return self.sort_key[4]

    @property
    def sigma(self):
        return self.sort_key[5]

    @property
    def tau(self):
        return self.sort_key[6]

    @property
    def upsilon(self):
        return self.sort_key[7]

    def pairing(self, F, G):
        """ The matching ``((a, p), (b, q))`` of output ``p`` of ``fs[a]`` with input ``q`` of ``gs[b]``. """
        outputs = [(a, p) for a, f in enumerate(self.fs, start=1) for p in range(1, len(F[f].cod) + 1)]
        inputs = [(b, q) for b, g in enumerate(self.gs, start=1) for q in range(1, len(G[g].dom) + 1)]
        return tuple((outputs[t - 1], inputs[i]) for i, t in enumerate(self.tau))

    def family_matching(self, F, G):
        return FamilyMatching(tuple(F[f] for f in self.fs), tuple(G[g] for g in self.gs), self.pairing(F, G))

    def __str__(self):
        return (f"[{self.sigma}] ({', '.join(self.fs)}) --{self.tau}--> ({', '.join(self.gs)}) [{self.upsilon}]"
                f" : ({', '.join(self.dom)}) -> ({', '.join(self.cod)})")


def formal_moves(F, G):
    """The generating moves of the coend relation on formal composites.

    Returns a function listing, for a formal composite, the composites
    obtained by one adjacent transposition on the domain or codomain of one
    member (with the wiring adjusted so the composite is unchanged) and by
    swapping two adjacent members of either family.
    """

    def moves(x):
        fs, gs = [F[f] for f in x.fs], [G[g] for g in x.gs]
        psi = [len(f.dom) for f in fs]
        lam = [len(f.cod) for f in fs]
        sig = [len(g.dom) for g in gs]
        phi = [len(g.cod) for g in gs]
        n, m, d = sum(psi), sum(lam), sum(phi)
        out = []

        def emit(sigma, new_fs, middle, tau, new_gs, upsilon):
            out.append(FormalComposite.make(sigma, new_fs, middle, tau, new_gs, upsilon, x.dom, x.cod))

        for a, f in enumerate(fs):
            ids = list(x.fs)
            for t in range(1, len(f.dom)):
                ids[a] = F.exchange_step(f, "dom", t).id
                pi = adjacent_transposition(n, _offsets(psi)[a] + t)
                emit(compose_permutations(x.sigma, pi), tuple(ids), x.middle, x.tau, x.gs, x.upsilon)
            for t in range(1, len(f.cod)):
                ids[a] = F.exchange_step(f, "cod", t).id
                pi = adjacent_transposition(m, _offsets(lam)[a] + t)
                emit(x.sigma, tuple(ids), permute(x.middle, pi), compose_permutations(pi, x.tau), x.gs, x.upsilon)
            ids[a] = x.fs[a]
        for b, g in enumerate(gs):
            ids = list(x.gs)
            for t in range(1, len(g.dom)):
                ids[b] = G.exchange_step(g, "dom", t).id
                pi = adjacent_transposition(m, _offsets(sig)[b] + t)
                emit(x.sigma, x.fs, x.middle, compose_permutations(x.tau, pi), tuple(ids), x.upsilon)
            for t in range(1, len(g.cod)):
                ids[b] = G.exchange_step(g, "cod", t).id
                pi = adjacent_transposition(d, _offsets(phi)[b] + t)
                emit(x.sigma, x.fs, x.middle, x.tau, tuple(ids), compose_permutations(pi, x.upsilon))
            ids[b] = x.gs[b]
        for a in range(1, len(fs)):
            ids = list(x.fs)
            ids[a - 1], ids[a] = ids[a], ids[a - 1]
            pi_psi, pi_lam = _block_swap(psi, a), _block_swap(lam, a)
            emit(compose_permutations(x.sigma, pi_psi), tuple(ids), permute(x.middle, pi_lam),
                 compose_permutations(invert_permutation(pi_lam), x.tau), x.gs, x.upsilon)
        for b in range(1, len(gs)):
            ids = list(x.gs)
            ids[b - 1], ids[b] = ids[b], ids[b - 1]
            pi_sig, pi_phi = _block_swap(sig, b), _block_swap(phi, b)
            emit(x.sigma, x.fs, x.middle, compose_permutations(x.tau, pi_sig), tuple(ids),
                 compose_permutations(invert_permutation(pi_phi), x.upsilon))
        return out

    return moves


def _families(maps, target, side, other_limit, max_members):
    """Ordered families whose concatenated ``side`` lists rearrange ``target``.

    The concatenated lists on the other side have length at most
    ``other_limit`` and there are at most ``max_members`` members.
    """
    other = "cod" if side == "dom" else "dom"

    def extend(family, remaining, other_length):
        if not remaining:
            yield tuple(family)
        if len(family) >= max_members:
            return
        for f in maps:
            need = Counter(getattr(f, side))
            if any(remaining[x] < c for x, c in need.items()):
                continue
            length = other_length + len(getattr(f, other))
            if length <= other_limit:
                yield from extend(family + [f], remaining - need, length)

    yield from extend([], Counter(target), 0)


def tensor_composites(F, G, dom, cod, max_middle=None):
    """All formal composites of the tensor of ``F`` and ``G`` from ``dom`` to ``cod``.

    Both families are ordered; the middle list has length at most
    ``max_middle`` (default: the bound of ``F``). A composite is listed when
    its matching is suitable.

    Returns
    -------
    list of FormalComposite, sorted.
    """
    dom, cod = tuple(dom), tuple(cod)
    bound = F.bound if max_middle is None else max_middle
    if len(dom) > F.bound or len(cod) > G.bound:
        raise BoundExceededError(_bound_msg("A boundary list", max(len(dom), len(cod)), min(F.bound, G.bound)))
    f_maps = sorted(F.maps.values())
    g_maps = sorted(G.maps.values())
    result = set()
    for fs in _families(f_maps, dom, "dom", bound, bound + 1):
        middle = tuple(x for f in fs for x in f.cod)
        psi = tuple(x for f in fs for x in f.dom)
        for gs in _families(g_maps, cod, "cod", len(middle), len(middle) + 1 - len(fs)):
            if len(fs) + len(gs) - 1 != len(middle):
                continue
            sig = tuple(x for g in gs for x in g.dom)
            if len(sig) != len(middle):
                continue
            phi = tuple(x for g in gs for x in g.cod)
            for tau in arrangements(middle, sig):
                x = FormalComposite.make(identity_permutation(len(dom)), [f.id for f in fs], middle, tau,
                                         [g.id for g in gs], identity_permutation(len(cod)), dom, cod)
                if not is_suitable_matching(x.family_matching(F, G)):
                    continue
                for sigma in arrangements(dom, psi):
                    for upsilon in arrangements(phi, cod):
                        result.add(FormalComposite.make(sigma, x.fs, middle, tau, x.gs, upsilon, dom, cod))
    return sorted(result)


class Member(NamedTuple):
    """ A map placed in a layered composite, with labels for its ports. """
    map: PolyMap
    dom_labels: tuple
    cod_labels: tuple
    key: tuple


def two_layer(lower, upper, wiring, dom_order, cod_order):
    """Build a formal composite from labelled members.

    Parameters
    ----------
    lower, upper : sequence of Member
        Port labels are hashable and unique across the composite.

    wiring : dict
        ``input label of an upper member -> output label of a lower member``.

    dom_order, cod_order : sequence
        The labels of the outer boundary, in the order wanted.

    Returns
    -------
    FormalComposite
    """
    psi = [label for m in lower for label in m.dom_labels]
    lam = [label for m in lower for label in m.cod_labels]
    sig = [label for m in upper for label in m.dom_labels]
    phi = [label for m in upper for label in m.cod_labels]
    sigma = arrangements(tuple(dom_order), tuple(psi))[0]
    upsilon = arrangements(tuple(phi), tuple(cod_order))[0]
    tau = tuple(lam.index(wiring[label]) + 1 for label in sig)
    objects = {}
    for m in list(lower) + list(upper):
        objects.update(zip(m.dom_labels, m.map.dom))
        objects.update(zip(m.cod_labels, m.map.cod))
    middle = tuple(objects[label] for label in lam)
    return FormalComposite.make(sigma, [m.map.id for m in lower], middle, tau, [m.map.id for m in upper],
                                upsilon, [objects[label] for label in dom_order], [objects[label] for label in cod_order])



def orbit(x, moves, limit=MAX_ORBIT_SIZE):
    """ All formal composites reachable from ``x`` by ``moves``. """
    seen = {x}
    stack = [x]
    while stack:
        y = stack.pop()
        for z in moves(y):
            if z not in seen:
                seen.add(z)
                if len(seen) > limit:
                    raise BoundExceededError(_bound_msg("A coend class", len(seen), limit))
                stack.append(z)
    return seen
