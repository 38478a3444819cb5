class UnionFind:
    """The union-find data structure with union by rank and path compression.

    Each element of the collection belongs to a set identified by its leader.
    Two sets can be fused (:meth:`union`) and the leader of the set holding an
    element can be looked up (:meth:`find`). A union that joins two elements
    already in the same set is reported, which is how cycles are detected when
    the structure is fed the edges of a multigraph.

    Parameters
    ----------
    elements : iterable
        Hashable elements of the collection.

    Attributes
    ----------
    num_sets : int
        The number of disjoint sets currently held.
    """

    def __init__(self, elements=()):
        self._leader = {}
        self._rank = {}
        self._size = {}
        self.num_sets = 0
        for element in elements:
            self.add(element)

    def add(self, element):
        """ Add ``element`` as a singleton set. Adding a known element does nothing. """
        if element not in self._leader:
            self._leader[element] = element
            self._rank[element] = 0
            self._size[element] = 1
            self.num_sets += 1

    def __contains__(self, element):
        return element in self._leader

    def __len__(self):
        return len(self._leader)

    def find(self, element):
        """Find the leader of ``element`` with path compression.

        Parameters
        ----------
        element : object
            A member of the collection.

        Returns
        -------
        object
            The leader of the set that contains ``element``.
        """
        path = [element]
        parent = self._leader[element]
        while parent != self._leader[parent]:
            path.append(parent)
            parent = self._leader[parent]
        for node in path:
            self._leader[node] = parent
        return parent

    def union(self, a, b):
        """Merge the set that contains ``a`` with the set that contains ``b``.

        Returns
        -------
        bool
            True if two different sets were merged, False if ``a`` and ``b``
            were already connected.
        """
        s1, s2 = self.find(a), self.find(b)
        if s1 == s2:
            return False
        r1, r2 = self._rank[s1], self._rank[s2]
        if r2 > r1:
            s1, s2 = s2, s1
        if r1 == r2:
            self._rank[s1] += 1
        self._leader[s2] = s1
        self._size[s1] += self._size[s2]
        self.num_sets -= 1
        return True

    def connected(self, a, b):
        return self.find(a) == self.find(b)

    def size(self, element):
        """ Number of elements in the set that ``element`` belongs to. """
        return self._size[self.find(element)]

    def groups(self, order=None):
        """Return the sets as lists.

        Parameters
        ----------
        order : iterable, optional
            Ordering of the elements. Groups are returned in order of their
            least member under this ordering and members keep this ordering.
            Defaults to insertion order.
        """
        order = list(self._leader) if order is None else list(order)
        groups = {}
        for element in order:
            groups.setdefault(self.find(element), []).append(element)
        return list(groups.values())

    def copy(self):
        """ Return an independent copy, used when backtracking over partial unions. """
        new = UnionFind()
        new._leader = dict(self._leader)
        new._rank = dict(self._rank)
        new._size = dict(self._size)
        new.num_sets = self.num_sets
        return new
