import logging
from functools import lru_cache
from dataclasses import dataclass
from typing import Callable, NamedTuple, Optional

from polylaw.symcat import S2Obj, s1_hom, s2_hom, enumerate_s2, enumerate_chains, collapse
from polylaw.matchings import delta1_elements, delta1_act
from polylaw.utilities import compose_permutations
from polylaw.kleisli import coend_quotient
from polylaw.report import Report, CheckResult, Violation, jsonable

from ._pdd import _objects, _chains, _class_value, _triple_key

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LocalMonoWitness:
    """ Two distinct elements of one hom cell with the same projection to ``S1``. """
    first: object
    second: object
    projection: tuple

    def to_dict(self):
        return {"first": jsonable(self.first), "second": jsonable(self.second), "projection": list(self.projection)}


class PdaCell(NamedTuple):
    """One hom cell of a composite profunctor.

    ``project`` sends an element to its bijection in ``S1``. When ``reduced``
    is given, ``value`` must send the elements bijectively onto it.
    """
    witness: dict
    elements: list
    project: Callable
    reduced: Optional[list] = None
    value: Optional[Callable] = None


@dataclass(frozen=True)
class PdaPath:
    """
    A composite path of an axiom whose projection to ``S1`` must be a local
    monomorphism.

    Parameters
    ----------
    tag : str
        ``"PDA1"`` to ``"PDA10"``.

    description : str
        The composite profunctor.

    cells : callable
        ``bound -> iterable of PdaCell``.
    """
    tag: str
    description: str
    cells: Callable


def _matching_key(x):
    return x.f_n


def pda1_cells(bound):
    """ ``K(m; n) = S1(m, 1) x S1(1, n)``: a point when ``m == n == 1`` and empty otherwise. """
    for m in range(bound + 1):
        for n in range(bound + 1):
            elements = [(a.perm, b.perm) for a in s1_hom(m, 1) for b in s1_hom(1, n)]
            yield PdaCell({"m": m, "n": n}, elements, lambda e: compose_permutations(e[1], e[0]),
                          ["*"] if m == n == 1 else [], lambda e: "*")


def delta1_cells(bound):
    """ Every cell of ``delta_1`` within the bound, projected by ``f_n``. """
    objects = _objects(bound)
    for phi in objects:
        for psi in objects:
            if phi.n == psi.n and phi.m + psi.m == phi.n + 1:
                yield PdaCell({"phi": str(phi), "psi": str(psi)}, delta1_elements(phi, psi), _matching_key)


def _isomorphic(x, candidates):
    return [y for y in candidates if s2_hom(x, y)]


@lru_cache(maxsize=None)
def lower_coend(a, c):
    """Classes of ``int^omega delta_1(a; omega) x S^2 1(omega, c)``.

    Generators are triples ``(omega, t: omega -> c, x)`` and a morphism
    ``u: omega -> omega'`` relates ``(omega, t, x)`` to ``(omega', t u^-1, u x)``.
    """
    candidates = _isomorphic(c, enumerate_s2(c.n, c.m)) if a.m + c.m == a.n + 1 else []
    generators = [(w, t, x) for w in candidates for t in s2_hom(w, c) for x in delta1_elements(a, w)]

    def moves(e):
        w, t, x = e
        for w2 in candidates:
            for u in s2_hom(w, w2):
                yield (w2, t.compose(u.inverse()), delta1_act(x, left=u))

    return coend_quotient(generators, moves, key=_triple_key)


@lru_cache(maxsize=None)
def upper_coend(c, a):
    """Classes of ``int^omega S^2 1(c, omega) x delta_1(omega; a)``.

    Generators are triples ``(omega, t: c -> omega, x)`` and ``u: omega -> omega'``
    relates ``(omega, t, x)`` to ``(omega', u t, x u^-1)``.
    """
    candidates = _isomorphic(c, enumerate_s2(c.n, c.m)) if a.m + c.m == a.n + 1 else []
    generators = [(w, t, x) for w in candidates for t in s2_hom(c, w) for x in delta1_elements(w, a)]

    def moves(e):
        w, t, x = e
        for w2 in candidates:
            for u in s2_hom(w, w2):
                yield (w2, u.compose(t), delta1_act(x, right=u.inverse()))

    return coend_quotient(generators, moves, key=_triple_key)


def _lower_value(e):
    return delta1_act(e[2], left=e[1])


def _upper_value(e):
    return delta1_act(e[2], right=e[1])


def _class_projection(value):
    def project(cls):
        x = _class_value(cls, value)
        return None if x is None else x.f_n
    return project


def _coend_cell(witness, a, c, upper):
    if upper:
        classes, value, reduced = upper_coend(c, a), _upper_value, delta1_elements(c, a)
    else:
        classes, value, reduced = lower_coend(a, c), _lower_value, delta1_elements(a, c)
    return PdaCell(witness, classes, _class_projection(value), reduced, lambda cls: _class_value(cls, value))


def _collapsed_chains(bound, length):
    sizes = [()]
    for _ in range(length):
        sizes = [s + (k,) for s in sizes for k in range(bound + 1)]
    collapsed = {}
    for s in sizes:
        for chain in enumerate_chains(s):
            collapsed.setdefault(collapse(chain), chain)
    return [collapsed[c] for c in sorted(collapsed)]


def pda6_cells(bound, upper=False):
    """ ``delta_1(phi; c psi)`` for chains ``psi`` of three maps, through a literal coend. """
    objects = _objects(bound)
    for chain in _collapsed_chains(bound, 4):
        c = collapse(chain)
        for phi in objects:
            if phi.n == c.n:
                witness = {"phi": str(phi), "chain": [str(x) for x in chain]}
                yield _coend_cell(witness, phi, c, upper)


def pda7_cells(bound):
    """ ``delta_1(c psi; phi)``, the mirror of :func:`pda6_cells`. """
    return pda6_cells(bound, upper=True)


def pda8_cells(bound, upper=False):
    """ ``delta_1(m -id-> m; c phi)`` for chains ``phi`` of two maps. """
    for phi in _chains(bound):
        a = S2Obj.identity(phi.n)
        yield _coend_cell({"m": int(phi.n), "phi": str(phi)}, a, phi.collapse(), upper)


def pda9_cells(bound):
    return pda8_cells(bound, upper=True)


def pda10_cells(bound):
    """ ``delta_1(c psi; c phi)`` for chains ``psi, phi`` of two maps; only the collapses matter. """
    collapsed = sorted({phi.collapse() for phi in _chains(bound)})
    for a in collapsed:
        for c in collapsed:
            if a.n == c.n:
                yield _coend_cell({"psi": str(a), "phi": str(c)}, a, c, False)


PDA_PATHS = (
    PdaPath("PDA1", "S1(m, 1) x S1(1, n)", pda1_cells),
    PdaPath("PDA2", "delta_1", delta1_cells),
    PdaPath("PDA3", "delta_1", delta1_cells),
    PdaPath("PDA4", "delta_1", delta1_cells),
    PdaPath("PDA5", "delta_1", delta1_cells),
    PdaPath("PDA6", "int^omega delta_1(phi; omega) x S^2 1(omega, c psi)", pda6_cells),
    PdaPath("PDA7", "int^omega S^2 1(c psi, omega) x delta_1(omega; phi)", pda7_cells),
    PdaPath("PDA8", "delta_1(m -id-> m; c phi)", pda8_cells),
    PdaPath("PDA9", "delta_1(c phi; m -id-> m)", pda9_cells),
    PdaPath("PDA10", "delta_1(c psi; c phi)", pda10_cells),
)
""" The composite paths of the ten axioms, in order. """


def _shown(e):
    return getattr(e, "representative", e)


def _check_cell(result, cell):
    seen = {}
    for e in cell.elements:
        p = cell.project(e)
        if p is None:
            result.record(False, "projection is not defined on a class", **cell.witness)
            return
        if p in seen:
            result.record(False, "projection is not injective",
                          collision=LocalMonoWitness(_shown(seen[p]), _shown(e), p), **cell.witness)
            return
        seen[p] = e
    if cell.reduced is not None:
        images = [cell.value(e) for e in cell.elements]
        ok = None not in images and sorted(images, key=repr) == sorted(cell.reduced, key=repr)
        result.record(ok, "elements do not correspond to the reduced value",
                      size=len(images), expected=len(cell.reduced), **cell.witness)
    else:
        result.record(True, **cell.witness)


def check_pda_local_monos(bound):
    """Verify that every composite path of the ten axioms projects injectively to ``S1``.

    Each path is enumerated cell by cell within the bound. PDA1 must be a point
    exactly at ``m == n == 1``. PDA2 to PDA5 share the cells of ``delta_1`` and
    are computed once. PDA6 to PDA10 are built as literal coends whose classes
    must correspond one to one with the matchings of the collapsed cell.

    A clean report means the pasting equalities of the axioms hold at the
    checked sizes, since parallel cells into a local monomorphism agree once
    their composites do.
    """
    report = Report("pda", {"bound": bound})
    computed = {}
    for path in PDA_PATHS:
        result = report.check(path.tag, f"projection of {path.description} to S1 is a local monomorphism")
        if path.cells not in computed:
            computed[path.cells] = CheckResult(path.tag)
            for cell in path.cells(bound):
                _check_cell(computed[path.cells], cell)
        done = computed[path.cells]
        result.instances += done.instances
        result.skipped += done.skipped
        result.violations.extend(Violation(path.tag, v.message, v.witness) for v in done.violations)
        logger.info("%s: %d cells", path.tag, done.instances)
    return report
