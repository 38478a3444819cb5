import logging

from polylaw.config import FREE_MAX_VERTICES
from polylaw.utilities import permute, adjacent_transposition, identity_permutation
from polylaw.exceptions import CompositionError, UsageError, BoundExceededError
from polylaw._messages import _bound_msg

from ._polycategory import Polycategory
from ._polymap import PolyMap
from ._table import PolyTable

logger = logging.getLogger(__name__)


class FreeTerm(object):
    """
    A polymap of a free symmetric polycategory: a tree of generator instances.

    Instances are numbered from 0. A port is a pair ``(instance, position)``
    with 1-based positions. Every wire joins an output port to an input port;
    the remaining ports form the boundary, listed in the order given by
    ``inputs`` and ``outputs``. The identity on ``x`` has no instances and
    ``through == x``.

    Two terms are equal when they differ only by a renumbering of instances.
    Equality and hashing use :attr:`key`, which numbers instances in the order
    of a depth-first traversal starting at the first boundary port.
    """

    __slots__ = ("gens", "arity", "wires", "inputs", "outputs", "dom", "cod", "through", "_key")

    def __init__(self, gens, arity, wires, inputs, outputs, dom, cod, through=None):
        self.gens = tuple(gens)
        self.arity = tuple(arity)
        self.wires = frozenset(wires)
        self.inputs = tuple(inputs)
        self.outputs = tuple(outputs)
        self.dom = tuple(dom)
        self.cod = tuple(cod)
        self.through = through
        self._key = None

    @property
    def size(self):
        """ Number of generator instances. """
        return len(self.gens)

    def _order_from(self, root, in_wire, out_wire):
        order = []
        seen = set()

        def visit(u):
            seen.add(u)
            order.append(u)
            n_in, n_out = self.arity[u]
            for q in range(1, n_in + 1):
                w = in_wire.get((u, q))
                if w is not None and w[0] not in seen:
                    visit(w[0])
            for p in range(1, n_out + 1):
                w = out_wire.get((u, p))
                if w is not None and w[0] not in seen:
                    visit(w[0])

        visit(root)
        for u in range(self.size):
            if u not in seen:
                visit(u)
        return order

    @property
    def key(self):
        if self._key is None:
            if self.through is not None:
                self._key = (("id", self.through),)
            else:
                in_wire = {b: a for a, b in self.wires}
                out_wire = {a: b for a, b in self.wires}
                boundary = [v for v, _ in self.inputs] + [u for u, _ in self.outputs]
                roots = boundary[:1] or range(self.size)
                keys = []
                for root in roots:
                    order = self._order_from(root, in_wire, out_wire)
                    label = {old: new for new, old in enumerate(order)}
                    keys.append((
                        tuple(self.gens[old] for old in order),
                        tuple(sorted((label[u], p, label[v], q) for (u, p), (v, q) in self.wires)),
                        tuple((label[v], q) for v, q in self.inputs),
                        tuple((label[u], p) for u, p in self.outputs),
                    ))
                self._key = min(keys)
        return self._key

    def __eq__(self, other):
        return isinstance(other, FreeTerm) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def __repr__(self):
        if self.through is not None:
            return f"FreeTerm(id_{self.through})"
        return f"FreeTerm({'.'.join(self.key[0])}: ({', '.join(self.dom)}) -> ({', '.join(self.cod)}))"


class FreePolycategory(Polycategory):
    """
    The free symmetric polycategory on a set of generators.

    Parameters
    ----------
    objects : iterable of str
        Object names.

    generators : dict
        ``name -> (dom, cod)`` with ``dom`` and ``cod`` tuples of object names.

    Example
    -------
    .. code-block:: python

        from polylaw.polycat import FreePolycategory

        F = FreePolycategory("abxy", {"f": ("a", "xy"), "g": ("x", "b")})
        h = F.compose(F.generator("g"), F.generator("f"), 1, 1)
        h.dom, h.cod  # ('a',), ('b', 'y')
    """

    def __init__(self, objects, generators):
        self._objects = tuple(objects)
        self.generators = {name: (tuple(dom), tuple(cod)) for name, (dom, cod) in generators.items()}
        for name, (dom, cod) in self.generators.items():
            for x in dom + cod:
                if x not in self._objects:
                    raise UsageError(f"Generator {name} uses unknown object {x}.")

    @property
    def objects(self):
        return self._objects

    def generator(self, name):
        dom, cod = self.generators[name]
        return FreeTerm((name,), ((len(dom), len(cod)),), (),
                        tuple((0, q) for q in range(1, len(dom) + 1)),
                        tuple((0, p) for p in range(1, len(cod) + 1)), dom, cod)

    def identity(self, x):
        if x not in self._objects:
            raise UsageError(f"Unknown object {x}.")
        return FreeTerm((), (), (), (), (), (x,), (x,), through=x)

    def compose(self, g, f, i, j):
        """ Graft output ``i`` of ``f`` onto input ``j`` of ``g``. """
        if not (1 <= i <= len(f.cod) and 1 <= j <= len(g.dom)):
            raise CompositionError(f"Cut ({i}, {j}) does not exist for {f} into {g}.")
        if f.cod[i - 1] != g.dom[j - 1]:
            raise CompositionError(f"Cut ({i}, {j}) joins {f.cod[i - 1]} with {g.dom[j - 1]}.")
        if f.through is not None:
            return g
        if g.through is not None:
            return f
        offset = f.size

        def shift(port):
            return (port[0] + offset, port[1])

        wires = set(f.wires)
        wires.update((shift(a), shift(b)) for a, b in g.wires)
        wires.add((f.outputs[i - 1], shift(g.inputs[j - 1])))
        inputs = tuple(map(shift, g.inputs[:j - 1])) + f.inputs + tuple(map(shift, g.inputs[j:]))
        outputs = f.outputs[:i - 1] + tuple(map(shift, g.outputs)) + f.outputs[i:]
        dom = g.dom[:j - 1] + f.dom + g.dom[j:]
        cod = f.cod[:i - 1] + g.cod + f.cod[i:]
        return FreeTerm(f.gens + g.gens, f.arity + g.arity, wires, inputs, outputs, dom, cod)

    def exchange(self, f, sigma, tau):
        if len(sigma) != len(f.dom) or len(tau) != len(f.cod):
            raise UsageError(f"Permutations of sizes ({len(sigma)}, {len(tau)}) do not fit {f}.")
        if f.through is not None:
            return f
        return FreeTerm(f.gens, f.arity, f.wires, permute(f.inputs, sigma), permute(f.outputs, tau),
                        permute(f.dom, sigma), permute(f.cod, tau))

    def tabulate(self, bound, max_vertices=FREE_MAX_VERTICES):
        """All terms with sides of length at most ``bound``.

        The generators and identities are closed under exchange and
        composition. Identities are named ``id_<object>``, generator terms keep
        their generator name and other terms are named ``t1, t2, ...`` in order
        of discovery.

        Parameters
        ----------
        bound : int
            Length bound.

        max_vertices : int
            Raise if the closure produces a term with more generator instances.

        Returns
        -------
        dict
            ``name -> FreeTerm``, in order of discovery.
        """
        names = {}
        terms = []
        counter = [0]

        def add(term, name=None):
            if term in names:
                return
            if term.size > max_vertices:
                raise BoundExceededError(_bound_msg("A term", term.size, max_vertices))
            if name is None:
                counter[0] += 1
                name = f"t{counter[0]}"
            names[term] = name
            terms.append(term)

        for x in self._objects:
            add(self.identity(x), f"id_{x}")
        for name, (dom, cod) in sorted(self.generators.items()):
            if len(dom) <= bound and len(cod) <= bound:
                add(self.generator(name), name)
            else:
                logger.warning("Generator %s does not fit the bound %d", name, bound)

        done = 0
        while done < len(terms):
            t = terms[done]
            done += 1
            for side, n in (("dom", len(t.dom)), ("cod", len(t.cod))):
                for i in range(1, n):
                    add(self._swap(t, side, i))
            for other in terms[:done]:
                for g, f in ((t, other), (other, t)):
                    for i, j in _cuts(g, f, bound):
                        add(self.compose(g, f, i, j))
        return {names[t]: t for t in terms}

    def truncate(self, bound, max_vertices=FREE_MAX_VERTICES):
        """ The table of :meth:`tabulate` as a :class:`PolyTable`, with all exchanges and compositions within the bound. """
        terms = self.tabulate(bound, max_vertices)
        names = {t: name for name, t in terms.items()}
        maps = [PolyMap(name, t.dom, t.cod) for name, t in terms.items()]
        exchange = {}
        composition = {}
        for name, t in terms.items():
            for side, n in (("dom", len(t.dom)), ("cod", len(t.cod))):
                for i in range(1, n):
                    exchange[(name, side, i)] = names[self._swap(t, side, i)]
        for gname, g in terms.items():
            for fname, f in terms.items():
                for i, j in _cuts(g, f, bound):
                    composition[(gname, fname, i, j)] = names[self.compose(g, f, i, j)]
        logger.info("Truncated free polycategory at bound %d: %d maps, %d compositions",
                    bound, len(maps), len(composition))
        return PolyTable(self._objects, bound, maps, exchange, {x: f"id_{x}" for x in self._objects}, composition)

    def _swap(self, t, side, i):
        s = adjacent_transposition(len(getattr(t, side)), i)
        if side == "dom":
            return self.exchange(t, s, identity_permutation(len(t.cod)))
        return self.exchange(t, identity_permutation(len(t.dom)), s)


def _cuts(g, f, bound):
    """ Cuts of ``f`` into ``g`` joining equal objects whose composite fits the bound. """
    for i, x in enumerate(f.cod, start=1):
        for j, y in enumerate(g.dom, start=1):
            if x == y and len(g.dom) - 1 + len(f.dom) <= bound and len(f.cod) - 1 + len(g.cod) <= bound:
                yield i, j
