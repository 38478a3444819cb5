import itertools
from dataclasses import dataclass
from typing import NamedTuple

from polylaw.utilities import UnionFind, invert_permutation, is_permutation
from polylaw.exceptions import CompositionError
from polylaw._messages import _endpoint_msg


class Cardinal(int):
    """ A finite cardinal n, standing for the set {1, ..., n}. """

    def __new__(cls, n):
        n = int(n)
        if n < 0:
            raise ValueError(f"A cardinal must be nonnegative, got {n}.")
        return super().__new__(cls, n)

    def elements(self):
        return range(1, self + 1)

    def __repr__(self):
        return f"Cardinal({int(self)})"


@dataclass(frozen=True)
class FinMap:
    """
    A map between finite cardinals, stored as its list of values.

    Parameters
    ----------
    values : sequence of int
        ``values[i-1]`` is the image of ``i``. Entries lie in 1..cod.

    cod : int
        The codomain.

    Attributes
    ----------
    dom : Cardinal
        The domain, ``len(values)``.

    Example
    -------
    .. code-block:: python

        from polylaw.fincard import FinMap

        f = FinMap((1, 1, 2), 2)
        f(3)         # 2
        f.fiber(1)   # (1, 2)
    """
    values: tuple
    cod: Cardinal

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))
        object.__setattr__(self, "cod", Cardinal(self.cod))
        for v in self.values:
            if not 1 <= v <= self.cod:
                raise ValueError(f"Value {v} of {self.values} does not lie in 1..{self.cod}.")

    @property
    def dom(self):
        return Cardinal(len(self.values))

    @classmethod
    def identity(cls, n):
        return cls(tuple(range(1, n + 1)), n)

    @classmethod
    def constant(cls, n, value=1, cod=1):
        return cls((value,) * n, cod)

    @classmethod
    def empty(cls, cod=0):
        return cls((), cod)

    def __call__(self, i):
        if not 1 <= i <= self.dom:
            raise ValueError(f"{i} is not an element of {self.dom}.")
        return self.values[i - 1]

    def __len__(self):
        return len(self.values)

    def __str__(self):
        return ",".join(str(v) for v in self.values) + f"@{int(self.cod)}"

    def compose(self, other):
        """ The composite ``self o other`` (apply ``other`` first). """
        if other.cod != self.dom:
            raise CompositionError(_endpoint_msg(f"codomain {int(other.cod)}", f"domain {int(self.dom)}"))
        return FinMap(tuple(self.values[v - 1] for v in other.values), self.cod)

    def fiber(self, j):
        """ Elements sent to ``j``, in increasing order. """
        return tuple(i for i, v in enumerate(self.values, start=1) if v == j)

    def fibers(self):
        return [self.fiber(j) for j in range(1, self.cod + 1)]

    def fiber_sizes(self):
        sizes = [0] * self.cod
        for v in self.values:
            sizes[v - 1] += 1
        return tuple(sizes)

    def image(self):
        return tuple(sorted(set(self.values)))

    def is_monotone(self):
        return all(a <= b for a, b in zip(self.values, self.values[1:]))

    def is_injective(self):
        return len(set(self.values)) == len(self.values)

    def is_surjective(self):
        return len(set(self.values)) == self.cod

    def is_bijection(self):
        return self.dom == self.cod and is_permutation(self.values)

    def inverse(self):
        if not self.is_bijection():
            raise ValueError(f"{self} is not a bijection.")
        return FinMap(invert_permutation(self.values), self.cod)


@dataclass(frozen=True)
class Span:
    """
    A span ``n <- k -> m`` of finite cardinals.

    The span is read as an undirected bipartite multigraph with vertex set
    ``n + m`` and one edge ``left(a) -- right(a)`` for every ``a`` in the apex ``k``.

    Parameters
    ----------
    left : FinMap
        The leg ``k -> n``.

    right : FinMap
        The leg ``k -> m``.
    """
    left: FinMap
    right: FinMap

    def __post_init__(self):
        if self.left.dom != self.right.dom:
            raise ValueError(f"Span legs have different apexes {int(self.left.dom)} and {int(self.right.dom)}.")

    @property
    def n(self):
        return self.left.cod

    @property
    def m(self):
        return self.right.cod

    @property
    def k(self):
        return self.left.dom

    def edges(self):
        return list(zip(self.left.values, self.right.values))

    def restrict(self, apex_elements):
        """ The span obtained by keeping only the given apex elements (a monomorphism into k). """
        return Span(FinMap(tuple(self.left(a) for a in apex_elements), self.n),
                    FinMap(tuple(self.right(a) for a in apex_elements), self.m))

    def __str__(self):
        return f"{int(self.n)} <-[{self.left}]- {int(self.k)} -[{self.right}]-> {int(self.m)}"


@dataclass(frozen=True)
class CommutingSquare:
    """
    A commuting square completing a span::

        k --right--> m
        |            |
      left      bottom_right
        v            v
        n --bottom_left--> r
    """
    span: Span
    bottom_left: FinMap
    bottom_right: FinMap

    def __post_init__(self):
        if self.bottom_left.dom != self.span.n or self.bottom_right.dom != self.span.m:
            raise CompositionError("Bottom maps must start at the feet of the span.")
        if self.bottom_left.cod != self.bottom_right.cod:
            raise CompositionError(_endpoint_msg(int(self.bottom_left.cod), int(self.bottom_right.cod)))
        if self.bottom_left.compose(self.span.left) != self.bottom_right.compose(self.span.right):
            raise ValueError(f"Square over {self.span} does not commute.")

    @property
    def r(self):
        return self.bottom_left.cod


class Pushout(NamedTuple):
    r: Cardinal
    tau1: FinMap
    tau2: FinMap


def _vertices(s):
    return [("n", i) for i in range(1, s.n + 1)] + [("m", j) for j in range(1, s.m + 1)]


def pushout(s):
    """Pushout of a span in finite cardinals.

    The pushout object counts the connected components of the multigraph of
    the span. Components are numbered in order of their least vertex, taking
    the vertices of ``n`` before those of ``m``.

    Returns
    -------
    Pushout
        ``(r, tau1, tau2)`` with ``tau1 o left == tau2 o right``.
    """
    vertices = _vertices(s)
    uf = UnionFind(vertices)
    for a, b in s.edges():
        uf.union(("n", a), ("m", b))
    label = {}
    for v in vertices:
        label.setdefault(uf.find(v), len(label) + 1)
    r = len(label)
    tau1 = FinMap(tuple(label[uf.find(("n", i))] for i in range(1, s.n + 1)), r)
    tau2 = FinMap(tuple(label[uf.find(("m", j))] for j in range(1, s.m + 1)), r)
    return Pushout(Cardinal(r), tau1, tau2)


def is_connected(s):
    """ True iff the span pushes out to 1. The empty span has no components and is not connected. """
    return pushout(s).r == 1


def is_acyclic(s):
    """ True iff ``n + m == k + r``: the multigraph has no cycle and no multiple edge. """
    return s.n + s.m == s.k + pushout(s).r


def is_suitable_span(s):
    """ True iff the span is connected and acyclic, i.e. its multigraph is a tree. """
    r = pushout(s).r
    return r == 1 and s.n + s.m == s.k + 1


def is_pushout(sq):
    """ True iff the comparison map from the pushout of ``sq.span`` to the corner ``r`` is a bijection. """
    r, tau1, tau2 = pushout(sq.span)
    comparison = [0] * r
    for i, c in enumerate(tau1.values, start=1):
        comparison[c - 1] = sq.bottom_left(i)
    for j, c in enumerate(tau2.values, start=1):
        comparison[c - 1] = sq.bottom_right(j)
    return r == sq.r and is_permutation(comparison)


def induced_spans(sq):
    """Split a commuting square into the spans over each element of its corner.

    The i-th span is the restriction of ``sq.span`` to the fibers over ``i``
    of ``bottom_left``, ``bottom_right`` and their common composite on the
    apex. Elements of every fiber are renumbered in their ambient order.

    Returns
    -------
    list of Span
        One span per element of ``sq.r``.
    """
    s = sq.span
    apex_map = sq.bottom_left.compose(s.left)
    result = []
    for i in range(1, sq.r + 1):
        ns = sq.bottom_left.fiber(i)
        ms = sq.bottom_right.fiber(i)
        ks = apex_map.fiber(i)
        n_index = {x: p for p, x in enumerate(ns, start=1)}
        m_index = {x: p for p, x in enumerate(ms, start=1)}
        left = FinMap(tuple(n_index[s.left(a)] for a in ks), len(ns))
        right = FinMap(tuple(m_index[s.right(a)] for a in ks), len(ms))
        result.append(Span(left, right))
    return result


def enumerate_maps(k, n):
    """ All maps k -> n in lexicographic order of their values. """
    return [FinMap(values, n) for values in itertools.product(range(1, n + 1), repeat=k)]


def enumerate_spans(bound):
    """ All spans with n, k, m <= bound, ordered by (n, k, m) and then lexicographically. """
    for n in range(bound + 1):
        for k in range(bound + 1):
            lefts = enumerate_maps(k, n)
            if not lefts:
                continue
            for m in range(bound + 1):
                for left in lefts:
                    for right in enumerate_maps(k, m):
                        yield Span(left, right)


def enumerate_span_classes(bound):
    """All spans with n, k, m <= bound up to reordering of the apex.

    A span is determined up to a permutation of ``k`` by the multiset of its
    edges, so one representative with its edges in lexicographic order is
    yielded per multiset. Ordered like :func:`enumerate_spans`.
    """
    for n in range(bound + 1):
        for k in range(bound + 1):
            for m in range(bound + 1):
                pairs = list(itertools.product(range(1, n + 1), range(1, m + 1)))
                for edges in itertools.combinations_with_replacement(pairs, k):
                    yield Span(FinMap(tuple(a for a, _ in edges), n), FinMap(tuple(b for _, b in edges), m))


def enumerate_squares(bound, r_bound=None):
    """All commuting squares over spans in the bound with corner r <= r_bound.

    Every commuting square factors uniquely through the pushout, so the
    squares over a span are the composites of its pushout with all maps out
    of the pushout object.
    """
    r_bound = bound if r_bound is None else r_bound
    for s in enumerate_spans(bound):
        p = pushout(s)
        for r in range(r_bound + 1):
            for u in enumerate_maps(p.r, r):
                yield CommutingSquare(s, u.compose(p.tau1), u.compose(p.tau2))
