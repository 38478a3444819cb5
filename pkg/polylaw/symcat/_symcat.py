import itertools
from dataclasses import dataclass
from functools import lru_cache

from polylaw.fincard import Cardinal, FinMap
from polylaw.utilities import (
    identity_permutation, is_permutation, compose_permutations, invert_permutation,
    all_permutations,
)
from polylaw.exceptions import CompositionError
from polylaw._messages import _endpoint_msg


@dataclass(frozen=True, order=True)
class S1Mor:
    """ A bijection ``n -> n``, stored as its tuple of values. """
    perm: tuple

    def __post_init__(self):
        object.__setattr__(self, "perm", tuple(self.perm))
        if not is_permutation(self.perm):
            raise ValueError(f"{self.perm} is not a bijection.")

    @property
    def n(self):
        return Cardinal(len(self.perm))

    m = n

    @classmethod
    def identity(cls, n):
        return cls(identity_permutation(n))

    def __call__(self, i):
        return self.perm[i - 1]

    def compose(self, other):
        if other.n != self.n:
            raise CompositionError(_endpoint_msg(int(other.n), int(self.n)))
        return S1Mor(compose_permutations(self.perm, other.perm))

    def inverse(self):
        return S1Mor(invert_permutation(self.perm))


@dataclass(frozen=True, order=True)
class S2Obj:
    """
    A monotone map ``phi: n -> m``, an object of ``S^2 1``.

    Parameters
    ----------
    values : sequence of int
        The nondecreasing values ``phi(1), ..., phi(n)``.

    m : int
        The codomain. Elements of ``m`` outside the image are empty parts.

    Example
    -------
    .. code-block:: python

        from polylaw.symcat import S2Obj

        phi = S2Obj((1, 1, 3, 4, 4), 4)
        phi.fiber_sizes()  # (2, 0, 1, 2)
        str(phi)           # '1,1,3,4,4@4'
    """
    values: tuple
    m: Cardinal

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))
        object.__setattr__(self, "m", Cardinal(self.m))
        if any(not 1 <= v <= self.m for v in self.values):
            raise ValueError(f"Values {self.values} do not lie in 1..{self.m}.")
        if any(a > b for a, b in zip(self.values, self.values[1:])):
            raise ValueError(f"Values {self.values} are not weakly increasing.")

    @property
    def n(self):
        return Cardinal(len(self.values))

    @property
    def phi(self):
        return FinMap(self.values, self.m)

    @classmethod
    def identity(cls, n):
        return cls(identity_permutation(n), n)

    @classmethod
    def terminal(cls, n):
        return cls((1,) * n, 1)

    def __call__(self, i):
        return self.values[i - 1]

    def __str__(self):
        return ",".join(str(v) for v in self.values) + f"@{int(self.m)}"

    def fiber(self, j):
        return tuple(i for i, v in enumerate(self.values, start=1) if v == j)

    def fiber_sizes(self):
        sizes = [0] * self.m
        for v in self.values:
            sizes[v - 1] += 1
        return tuple(sizes)

    def isomorphism_key(self):
        """ Objects are isomorphic in ``S^2 1`` iff they have equal keys. """
        return (int(self.n), int(self.m), tuple(sorted(self.fiber_sizes())))

    def compose(self, other):
        """ The monotone composite ``self o other``. """
        if other.m != self.n:
            raise CompositionError(_endpoint_msg(int(other.m), int(self.n)))
        return S2Obj(tuple(self.values[v - 1] for v in other.values), self.m)

    def transport(self, f_n, f_m):
        """The object ``f_m o phi o f_n^-1``, the target of ``(f_n, f_m)`` out of this object.

        Raises
        ------
        ValueError
            If the transported map is not monotone.
        """
        inv = invert_permutation(f_n)
        return S2Obj(tuple(f_m[self.values[inv[i] - 1] - 1] for i in range(len(f_n))), self.m)


@dataclass(frozen=True)
class S2Mor:
    """
    A morphism ``(f_n, f_m): phi -> psi`` of ``S^2 1``: bijections with
    ``psi o f_n == f_m o phi``.
    """
    src: S2Obj
    tgt: S2Obj
    f_n: tuple
    f_m: tuple

    def __post_init__(self):
        object.__setattr__(self, "f_n", tuple(self.f_n))
        object.__setattr__(self, "f_m", tuple(self.f_m))
        phi, psi = self.src, self.tgt
        if len(self.f_n) != phi.n or psi.n != phi.n or not is_permutation(self.f_n):
            raise ValueError(f"f_n={self.f_n} is not a bijection {int(phi.n)} -> {int(psi.n)}.")
        if len(self.f_m) != phi.m or psi.m != phi.m or not is_permutation(self.f_m):
            raise ValueError(f"f_m={self.f_m} is not a bijection {int(phi.m)} -> {int(psi.m)}.")
        for i in range(1, phi.n + 1):
            if psi(self.f_n[i - 1]) != self.f_m[phi(i) - 1]:
                raise ValueError(f"Square of ({self.f_n}, {self.f_m}): {phi} -> {psi} does not commute at {i}.")

    @classmethod
    def identity(cls, phi):
        return cls(phi, phi, identity_permutation(phi.n), identity_permutation(phi.m))

    def compose(self, other):
        return s2_compose(self, other)

    def inverse(self):
        return S2Mor(self.tgt, self.src, invert_permutation(self.f_n), invert_permutation(self.f_m))

    def sort_key(self):
        return (self.f_n, self.f_m)


def s1_hom(n, m):
    """ All bijections n -> m, lexicographically; empty unless n == m. """
    if n != m:
        return []
    return [S1Mor(p) for p in all_permutations(n)]


def _fiber_bijections(src_fiber, tgt_fiber):
    return [dict(zip(src_fiber, image)) for image in itertools.permutations(tgt_fiber)]


@lru_cache(maxsize=None)
def _s2_hom(phi, psi):
    if phi.n != psi.n or phi.m != psi.m:
        return ()
    src_sizes, tgt_sizes = phi.fiber_sizes(), psi.fiber_sizes()
    if sorted(src_sizes) != sorted(tgt_sizes):
        return ()
    result = []
    for f_m in all_permutations(phi.m):
        if any(tgt_sizes[f_m[j] - 1] != src_sizes[j] for j in range(phi.m)):
            continue
        choices = [_fiber_bijections(phi.fiber(j), psi.fiber(f_m[j - 1])) for j in range(1, phi.m + 1)]
        for pieces in itertools.product(*choices):
            f_n = {}
            for piece in pieces:
                f_n.update(piece)
            result.append(S2Mor(phi, psi, tuple(f_n[i] for i in range(1, phi.n + 1)), f_m))
    result.sort(key=S2Mor.sort_key)
    return tuple(result)


def s2_hom(phi, psi):
    """All morphisms ``phi -> psi`` of ``S^2 1``.

    A morphism is a pair of bijections ``(f_n, f_m)`` with ``psi o f_n == f_m o phi``;
    ``f_m`` must match fibers of equal size and ``f_n`` is then any choice of
    bijections between matched fibers.

    Returns
    -------
    list of S2Mor
        Sorted lexicographically by ``(f_n, f_m)``. Empty when the sizes or
        the fiber-size multisets differ.
    """
    return list(_s2_hom(phi, psi))


def s2_compose(g, f):
    """ Composite ``g o f`` of morphisms of ``S^2 1``. """
    if f.tgt != g.src:
        raise CompositionError(_endpoint_msg(f"target {f.tgt}", f"source {g.src}"))
    return S2Mor(f.src, g.tgt, compose_permutations(g.f_n, f.f_n), compose_permutations(g.f_m, f.f_m))


@dataclass(frozen=True, order=True)
class S3Obj:
    """ A chain ``n --phi1--> m --phi2--> r`` of monotone maps, an object of ``S^3 1``. """
    phi1: S2Obj
    phi2: S2Obj

    def __post_init__(self):
        if self.phi1.m != self.phi2.n:
            raise CompositionError(_endpoint_msg(int(self.phi1.m), int(self.phi2.n)))

    @property
    def n(self):
        return self.phi1.n

    @property
    def m(self):
        return self.phi1.m

    @property
    def r(self):
        return self.phi2.m

    def lower(self):
        return self.phi1

    def upper(self):
        return self.phi2

    def collapse(self):
        """ The composite ``phi2 o phi1``. """
        return self.phi2.compose(self.phi1)

    def __str__(self):
        return f"{self.phi1}/{self.phi2}"


@dataclass(frozen=True)
class S3Mor:
    """ A ladder ``(f_n, f_m, f_r): phi -> psi`` of bijections with both squares commuting. """
    src: S3Obj
    tgt: S3Obj
    f_n: tuple
    f_m: tuple
    f_r: tuple

    def __post_init__(self):
        S2Mor(self.src.phi1, self.tgt.phi1, self.f_n, self.f_m)
        S2Mor(self.src.phi2, self.tgt.phi2, self.f_m, self.f_r)
        object.__setattr__(self, "f_n", tuple(self.f_n))
        object.__setattr__(self, "f_m", tuple(self.f_m))
        object.__setattr__(self, "f_r", tuple(self.f_r))

    def lower(self):
        return S2Mor(self.src.phi1, self.tgt.phi1, self.f_n, self.f_m)

    def upper(self):
        return S2Mor(self.src.phi2, self.tgt.phi2, self.f_m, self.f_r)

    def collapse(self):
        return S2Mor(self.src.collapse(), self.tgt.collapse(), self.f_n, self.f_r)


@lru_cache(maxsize=None)
def _s3_hom(phi, psi):
    uppers = {}
    for g in s2_hom(phi.phi2, psi.phi2):
        uppers.setdefault(g.f_n, []).append(g.f_m)
    result = []
    for f in s2_hom(phi.phi1, psi.phi1):
        for f_r in uppers.get(f.f_m, ()):
            result.append(S3Mor(phi, psi, f.f_n, f.f_m, f_r))
    result.sort(key=lambda x: (x.f_n, x.f_m, x.f_r))
    return tuple(result)


def s3_hom(phi, psi):
    """ All morphisms ``phi -> psi`` of ``S^3 1``, sorted by ``(f_n, f_m, f_r)``. """
    return list(_s3_hom(phi, psi))


def s3_compose(g, f):
    if f.tgt != g.src:
        raise CompositionError(_endpoint_msg(f"target {f.tgt}", f"source {g.src}"))
    return S3Mor(f.src, g.tgt, compose_permutations(g.f_n, f.f_n),
                 compose_permutations(g.f_m, f.f_m), compose_permutations(g.f_r, f.f_r))


def enumerate_s2(n, m):
    """ All monotone maps n -> m in lexicographic order; there are C(n+m-1, n) of them. """
    return [S2Obj(values, m) for values in itertools.combinations_with_replacement(range(1, m + 1), n)]


def enumerate_s3(n, m, r):
    return [S3Obj(phi1, phi2) for phi1 in enumerate_s2(n, m) for phi2 in enumerate_s2(m, r)]


def enumerate_chains(sizes):
    """All chains of monotone maps through the given sizes.

    ``enumerate_chains((n, m, r))`` lists the pairs ``(phi1, phi2)`` of
    :func:`enumerate_s3`; longer size lists give longer chains.

    Returns
    -------
    list of tuple of S2Obj
    """
    sizes = list(sizes)
    chains = [()]
    for a, b in zip(sizes, sizes[1:]):
        chains = [chain + (phi,) for chain in chains for phi in enumerate_s2(a, b)]
    return chains


def collapse(chain):
    """ The composite of a chain ``(phi1, phi2, ...)``; ``phi1`` is applied first. """
    if isinstance(chain, S3Obj):
        return chain.collapse()
    result = chain[0]
    for phi in chain[1:]:
        result = phi.compose(result)
    return result
