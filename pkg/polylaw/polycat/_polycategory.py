from abc import ABC, abstractmethod


class Polycategory(ABC):
    """ Abstract base class for symmetric polycategories.

    A polycategory has polymaps ``f: Gamma -> Delta`` between lists of objects,
    identities ``id_x: (x) -> (x)``, a right action of the symmetric groups on
    both lists (:meth:`exchange`), and a binary composition along one object
    (:meth:`compose`).

    Subclasses implement the four abstract methods. Maps returned by a
    subclass expose ``dom`` and ``cod`` as tuples of object names.
    """

    @property
    @abstractmethod
    def objects(self):
        """ The object names, as a tuple. """
        pass

    @abstractmethod
    def identity(self, x):
        """ The identity polymap on object ``x``. """
        pass

    @abstractmethod
    def compose(self, g, f, i, j):
        """Compose ``f`` into ``g`` along output ``i`` of ``f`` and input ``j`` of ``g``.

        For ``f: Gamma -> Delta1, x, Delta2`` with ``x`` at position ``i`` and
        ``g: Lambda1, x, Lambda2 -> Sigma`` with ``x`` at position ``j``, the
        composite is ``Lambda1, Gamma, Lambda2 -> Delta1, Sigma, Delta2``.
        """
        pass

    @abstractmethod
    def exchange(self, f, sigma, tau):
        """The polymap ``f . (sigma, tau)`` with domain ``permute(f.dom, sigma)`` and codomain ``permute(f.cod, tau)``.

        This is a right action: exchanging by ``(s1, t1)`` and then by
        ``(s2, t2)`` equals exchanging by ``(s1 o s2, t1 o t2)``.
        """
        pass

    def __repr__(self):
        return f"{self.__class__.__name__}(objects={self.objects})"
