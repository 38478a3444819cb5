""" Permutations of {1, ..., n} stored as tuples of 1-based values.

A permutation ``s`` is the tuple ``(s(1), ..., s(n))``. Composition is
function composition, ``compose_permutations(a, b)(i) = a(b(i))``, and a
permutation acts on a sequence by ``permute(seq, s)[i] = seq[s(i)]``, so that
``permute(permute(seq, a), b) == permute(seq, compose_permutations(a, b))``.
"""

import itertools

from polylaw.exceptions import UsageError


def identity_permutation(n):
    return tuple(range(1, n + 1))


def is_permutation(values):
    """ True if ``values`` lists each of 1..len(values) exactly once. """
    return sorted(values) == list(range(1, len(values) + 1))


def compose_permutations(*perms):
    """ Compose permutations right to left: ``compose_permutations(a, b, c)(i) == a(b(c(i)))``. """
    if not perms:
        raise UsageError(f"{compose_permutations.__qualname__} needs at least one permutation.")
    result = perms[-1]
    for p in reversed(perms[:-1]):
        if len(p) != len(result):
            raise UsageError(f"Cannot compose permutations of {len(p)} and {len(result)} points.")
        result = tuple(p[i - 1] for i in result)
    return result


def invert_permutation(s):
    inverse = [0] * len(s)
    for i, v in enumerate(s, start=1):
        inverse[v - 1] = i
    return tuple(inverse)


def permute(seq, s):
    """ Reorder ``seq`` so that position ``i`` holds the entry at position ``s(i)``. """
    if len(seq) != len(s):
        raise UsageError(f"Cannot permute a sequence of length {len(seq)} by a permutation of {len(s)} points.")
    return tuple(seq[v - 1] for v in s)


def all_permutations(n):
    """ All permutations of n points in lexicographic order. """
    return [tuple(p) for p in itertools.permutations(range(1, n + 1))]


def adjacent_transposition(n, i):
    """ The transposition of i and i+1 on n points. """
    if not 1 <= i < n:
        raise UsageError(f"No adjacent transposition at {i} on {n} points.")
    values = list(range(1, n + 1))
    values[i - 1], values[i] = i + 1, i
    return tuple(values)


def transposition_word(s):
    """Decompose a permutation into adjacent transpositions.

    Returns
    -------
    list of int
        Indices ``[i1, ..., ik]`` such that ``s`` equals the composite
        ``s_{i1} o ... o s_{ik}`` of adjacent transpositions. The identity
        gives the empty word.
    """
    seq = list(s)
    swaps = []
    # Bubble sort; each swap at i multiplies seq on the right by s_i.
    for end in range(len(seq) - 1, 0, -1):
        for i in range(end):
            if seq[i] > seq[i + 1]:
                seq[i], seq[i + 1] = seq[i + 1], seq[i]
                swaps.append(i + 1)
    return list(reversed(swaps))


def arrangements(src, dst):
    """All permutations ``s`` with ``permute(src, s) == dst``, in lexicographic order.

    Empty if ``dst`` is not a rearrangement of ``src``.
    """
    src, dst = tuple(src), tuple(dst)
    if len(src) != len(dst) or sorted(map(repr, src)) != sorted(map(repr, dst)):
        return []
    positions = {}
    for j, x in enumerate(src, start=1):
        positions.setdefault(x, []).append(j)
    result = []
    chosen = []
    used = set()

    def extend(i):
        if i == len(dst):
            result.append(tuple(chosen))
            return
        for j in positions.get(dst[i], ()):
            if j not in used:
                used.add(j)
                chosen.append(j)
                extend(i + 1)
                chosen.pop()
                used.discard(j)

    extend(0)
    return result


def permutation_sum(*perms):
    """ Block sum of permutations acting on consecutive blocks of points. """
    values = []
    offset = 0
    for p in perms:
        values.extend(v + offset for v in p)
        offset += len(p)
    return tuple(values)
