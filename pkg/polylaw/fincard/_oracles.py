""" Independent graph oracles used to cross-check the pushout characterisations. """

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from ._fincard import pushout


def component_count(s):
    """ Number of connected components of the multigraph of a span, by breadth-first search in scipy. """
    size = int(s.n + s.m)
    if size == 0:
        return 0
    rows = np.array([a - 1 for a in s.left.values], dtype=int)
    cols = np.array([s.n + b - 1 for b in s.right.values], dtype=int)
    graph = coo_matrix((np.ones(len(rows)), (rows, cols)), shape=(size, size))
    count, _ = connected_components(graph, directed=False)
    return int(count)


def component_counts(spans):
    """Component counts of many spans from a single scipy call.

    The multigraphs are laid out as the blocks of one block-diagonal graph,
    and each component is charged to the block of its first vertex.

    Returns
    -------
    numpy.ndarray
        One count per span, in order.
    """
    spans = list(spans)
    sizes = np.array([s.n + s.m for s in spans], dtype=int)
    total = int(sizes.sum())
    if total == 0:
        return np.zeros(len(spans), dtype=int)
    offsets = np.concatenate(([0], np.cumsum(sizes)[:-1]))
    rows = np.array([off + a - 1 for s, off in zip(spans, offsets) for a in s.left.values], dtype=int)
    cols = np.array([off + s.n + b - 1 for s, off in zip(spans, offsets) for b in s.right.values], dtype=int)
    graph = coo_matrix((np.ones(len(rows)), (rows, cols)), shape=(total, total))
    _, labels = connected_components(graph, directed=False)
    block = np.repeat(np.arange(len(spans)), sizes)
    _, first = np.unique(labels, return_index=True)
    return np.bincount(block[first], minlength=len(spans))


def has_cycle(s):
    """True if the multigraph of a span has a cycle.

    Parallel edges count as a cycle of length two. Depth-first search that
    remembers the edge it arrived by, so the way back is not mistaken for a
    cycle but a second edge to the parent is.
    """
    adjacency = {}
    for e, (a, b) in enumerate(s.edges()):
        adjacency.setdefault(("n", a), []).append((e, ("m", b)))
        adjacency.setdefault(("m", b), []).append((e, ("n", a)))
    visited = set()
    for root in adjacency:
        if root in visited:
            continue
        visited.add(root)
        stack = [(root, None)]
        while stack:
            vertex, via = stack.pop()
            for e, other in adjacency[vertex]:
                if e == via:
                    continue
                if other in visited:
                    return True
                visited.add(other)
                stack.append((other, e))
    return False


def is_acyclic_by_restriction(s):
    """True if deleting any single edge of the span increases its number of components.

    A span pushing out to r is acyclic exactly when no restriction along a
    proper monomorphism into the apex still pushes out to r; deleting one edge
    is the extreme case.
    """
    r = pushout(s).r
    for a in range(1, s.k + 1):
        rest = [b for b in range(1, s.k + 1) if b != a]
        if pushout(s.restrict(rest)).r == r:
            return False
    return True
