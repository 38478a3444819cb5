import logging
from dataclasses import dataclass

from polylaw.config import PDD3_SAMPLE_BOUND
from polylaw.symcat import (S1Mor, S2Mor, S3Mor, S2Obj, s1_hom, s2_hom, s3_hom, enumerate_s2, enumerate_s3,
                            monad_component, Component)
from polylaw.matchings import (Matching, WhiskeredRight, WhiskeredLeft, delta1_elements, delta1_act,
                               delta1_project, transpose, whiskered_elements)
from polylaw.utilities import compose_permutations, identity_permutation, invert_permutation, parallel_map
from polylaw.kleisli import coend_quotient
from polylaw.report import Report

logger = logging.getLogger(__name__)


def _objects(bound):
    return [phi for n in range(bound + 1) for m in range(bound + 1) for phi in enumerate_s2(n, m)]


def _chains(bound):
    return [phi for n in range(bound + 1) for m in range(bound + 1) for r in range(bound + 1)
            for phi in enumerate_s3(n, m, r)]


def _invert_ladder(a):
    return S3Mor(a.tgt, a.src, invert_permutation(a.f_n), invert_permutation(a.f_m), invert_permutation(a.f_r))


def _isomorphic(objects, x):
    return [y for y in objects if s2_hom(x, y)]


def check_pdd2(bound):
    """Verify the unit and counit cells of the distributive law at 1.

    For every monotone map ``phi`` and cardinal ``n`` within the bound:

    * ``|delta_1(phi; n -id-> n)|`` is ``|S1(n_phi, n)|`` when ``m_phi == 1``
      and ``n == n_phi``, and zero otherwise; every such matching projects to
      a distinct bijection, so the projection is the inclusion into ``S1``.
    * dually ``|delta_1(n -!-> 1; phi)|`` is ``n!`` when ``phi`` is the
      identity on ``n`` and zero otherwise.
    * the transpose carries the first cell onto ``delta_1(n -id-> n; phi)``.
    * the coend ``int^psi S^2 1(psi, n -id-> n) x delta_1(phi; psi)``, built
      literally and quotiented by moving morphisms across, has one class per
      matching of ``delta_1(phi; n -id-> n)``.
    """
    report = Report("pdd2", {"bound": bound})
    eta = report.check("pdd2-eta-count", "|delta_1(phi; id_n)| == |S1(n_phi, n)| iff m_phi == 1 and n == n_phi")
    eta_proj = report.check("pdd2-eta-projection", "the projection of delta_1(phi; id_n) is the inclusion into S1")
    eps = report.check("pdd2-epsilon-count", "|delta_1(n -> 1; phi)| == n! iff phi is the identity on n")
    eps_proj = report.check("pdd2-epsilon-projection", "the projection of delta_1(n -> 1; phi) is the inclusion into S1")
    dual = report.check("pdd2-transpose", "transpose is a bijection delta_1(phi; id_n) -> delta_1(id_n; phi)")
    coend = report.check("pdd2-coend", "the literal coend over psi has one class per matching of delta_1(phi; id_n)")

    objects = _objects(bound)
    for phi in objects:
        for n in range(bound + 1):
            witness = {"phi": str(phi), "n": n}
            unit = monad_component(Component.SEta1, n)
            counit = monad_component(Component.EtaS1, n)
            bijections = sorted(x.perm for x in s1_hom(phi.n, n))

            elements = delta1_elements(phi, unit)
            expected = len(bijections) if phi.m == 1 and n == phi.n else 0
            eta.record(len(elements) == expected, "unit cell has the wrong size",
                       size=len(elements), expected=expected, **witness)
            if elements:
                eta_proj.record(sorted(delta1_project(x).perm for x in elements) == bijections,
                                "projection is not the inclusion", **witness)
            dual.record(sorted(transpose(x) for x in elements) == delta1_elements(unit, phi),
                        "transpose mismatch", **witness)

            elements = delta1_elements(counit, phi)
            expected = len(bijections) if phi == S2Obj.identity(n) else 0
            eps.record(len(elements) == expected, "counit cell has the wrong size",
                       size=len(elements), expected=expected, **witness)
            if elements:
                eps_proj.record(sorted(delta1_project(x).perm for x in elements) == bijections,
                                "projection is not the inclusion", **witness)

            classes = _unit_coend(phi, unit, objects)
            images = [_class_value(c, lambda e: delta1_act(e[2], left=e[1])) for c in classes]
            coend.record(None not in images and sorted(images) == delta1_elements(phi, unit),
                         "coend classes do not match the unit cell",
                         classes=len(classes), **witness)
    logger.info("Checked the unit and counit cells over %d objects", len(objects))
    return report


def _unit_coend(phi, unit, objects):
    """ Classes of triples ``(psi, t: psi -> unit, x in delta_1(phi; psi))``. """
    candidates = [psi for psi in _isomorphic(objects, unit) if psi.n == phi.n]
    generators = [(psi, t, x) for psi in candidates for t in s2_hom(psi, unit) for x in delta1_elements(phi, psi)]

    def moves(e):
        psi, t, x = e
        for psi2 in candidates:
            for a in s2_hom(psi, psi2):
                yield (psi2, t.compose(a.inverse()), delta1_act(x, left=a))

    return coend_quotient(generators, moves, key=_triple_key)


def _triple_key(e):
    return (e[0], e[1].sort_key(), e[2])


def _class_value(cls, value):
    """ The common value of ``value`` on the members of a class, or None if it is not constant. """
    values = {value(e) for e in cls.members}
    return values.pop() if len(values) == 1 else None


@dataclass(frozen=True)
class KElement:
    """
    A generator of the comultiplication coend
    ``K(phi; rho) = int^{psi, xi} (delta S_c)_1(phi; psi) x (S_c delta)_1(psi; xi) x S^2 1(xi1, rho)``.

    With ``dual`` set, the generator of the reversed coend
    ``int^{xi, psi} S^2 1(rho, xi1) x (S_c delta)_1(xi; psi) x (delta S_c)_1(psi; phi)``
    and ``h: rho -> xi1``.

    Parameters
    ----------
    f : WhiskeredRight
        Between ``phi`` and ``psi``.

    g : WhiskeredLeft
        Between ``psi`` and ``xi``.

    h : S2Mor
        Between the lower leg of ``xi`` and ``rho``.
    """
    f: WhiskeredRight
    g: WhiskeredLeft
    h: S2Mor
    dual: bool = False

    def __post_init__(self):
        f, g, h = self.f, self.g, self.h
        if not self.dual:
            ok = f.psi == g.phi and h.src == g.psi.lower()
        else:
            ok = g.psi == f.phi and h.tgt == g.phi.lower()
        if not ok:
            raise ValueError(f"Components of {self} are not composable.")
        phi, psi, xi = self.phi, self.psi, self.xi
        if psi.r != phi.m + 1 - phi.r or xi.m != psi.r + phi.n - phi.m or xi.r != psi.r:
            raise ValueError(f"Sizes of {phi}, {psi}, {xi} violate the comultiplication constraints.")

    @property
    def phi(self):
        return self.f.psi if self.dual else self.f.phi

    @property
    def psi(self):
        return self.f.phi if self.dual else self.f.psi

    @property
    def xi(self):
        return self.g.phi if self.dual else self.g.psi

    @property
    def rho(self):
        return self.h.src if self.dual else self.h.tgt

    def sort_key(self):
        return (self.psi, self.xi, self.f, self.g, self.h.sort_key())

    def __str__(self):
        return f"[{self.psi} | {self.xi} | {self.f.f_n} {self.g.f_n} {self.h.f_n}]"


def pdd3_forward(x):
    """The matching ``h_n g_n f_n`` of a comultiplication generator.

    Returns
    -------
    Matching
        In ``delta_1(n_phi -phi2 phi1-> r_phi; rho)``, or for a dual generator
        ``f_n g_n h_n`` in ``delta_1(rho; n_phi -phi2 phi1-> r_phi)``.

    Raises
    ------
    ValueError
        If the composite bijection does not give a suitable matching.
    """
    if x.dual:
        return Matching(x.rho, x.phi.collapse(), compose_permutations(x.f.f_n, x.g.f_n, x.h.f_n))
    return Matching(x.phi.collapse(), x.rho, compose_permutations(x.h.f_n, x.g.f_n, x.f.f_n))


def _forward_or_none(x):
    try:
        return pdd3_forward(x)
    except ValueError:
        return None


def _middle_sizes(phi):
    r_psi = phi.m + 1 - phi.r
    return r_psi, r_psi + phi.n - phi.m


def pdd3_elements(phi, rho, dual=False):
    """ All generators of the comultiplication coend at ``(phi; rho)``, or of its dual at ``(rho; phi)``. """
    r_psi, m_xi = _middle_sizes(phi)
    if r_psi < 0 or m_xi < 0 or rho.n != phi.n or rho.m != m_xi:
        return []
    result = []
    for psi in enumerate_s3(phi.n, phi.m, r_psi):
        fs = whiskered_elements("right", psi, phi) if dual else whiskered_elements("right", phi, psi)
        if not fs:
            continue
        for xi in enumerate_s3(phi.n, m_xi, r_psi):
            hs = s2_hom(rho, xi.lower()) if dual else s2_hom(xi.lower(), rho)
            if not hs:
                continue
            gs = whiskered_elements("left", xi, psi) if dual else whiskered_elements("left", psi, xi)
            result.extend(KElement(f, g, h, dual) for f in fs for g in gs for h in hs)
    return result


def pdd3_moves(x):
    """Generators related to ``x`` by one coend move.

    A ladder ``a: psi -> psi'`` moves ``(f, g)`` to ``(a f, g a^-1)``; a ladder
    ``b: xi -> xi'`` moves ``(g, h)`` to ``(b g, h b1^-1)``. The dual moves are
    the mirror images.
    """
    phi, psi, xi = x.phi, x.psi, x.xi
    r_psi, m_xi = _middle_sizes(phi)
    for psi2 in enumerate_s3(phi.n, phi.m, r_psi):
        for a in s3_hom(psi, psi2):
            a_inv = _invert_ladder(a)
            if x.dual:
                yield KElement(x.f.act_right(a_inv), x.g.act_left(a), x.h, True)
            else:
                yield KElement(x.f.act_left(a), x.g.act_right(a_inv), x.h)
    for xi2 in enumerate_s3(phi.n, m_xi, r_psi):
        for b in s3_hom(xi, xi2):
            b_inv = _invert_ladder(b)
            if x.dual:
                yield KElement(x.f, x.g.act_right(b_inv), b.lower().compose(x.h), True)
            else:
                yield KElement(x.f, x.g.act_left(b), x.h.compose(b_inv.lower()))


def is_hat_shaped(x):
    """ True if the outer maps of a generator are identities: ``f_n``, ``h_n`` and ``h_m``. """
    n = identity_permutation(x.phi.n)
    return x.f.f_n == n and x.h.f_n == n and x.h.f_m == identity_permutation(x.h.src.m)


def pdd3_classes(phi, rho, dual=False):
    """ The comultiplication coend at ``(phi; rho)`` as a list of classes. """
    return coend_quotient(pdd3_elements(phi, rho, dual), pdd3_moves, key=KElement.sort_key)


def _pdd3_instances(bound):
    chains = _chains(bound)
    objects = _objects(bound)
    instances = []
    for phi in chains:
        _, m_xi = _middle_sizes(phi)
        for rho in objects:
            if rho.n == phi.n and rho.m == m_xi:
                instances.append((phi, rho))
    return instances


def _check_pdd3_instance(phi, rho, dual):
    name = "pdd3-dual" if dual else "pdd3"
    report = Report(name)
    euler = report.check(f"{name}-euler", "m_rho + r_phi == n_phi + 1 whenever the coend is nonempty")
    invariant = report.check(f"{name}-forward-invariant", "the forward matching is constant on coend classes")
    bijection = report.check(f"{name}-bijection", "classes correspond one to one with the target matchings")
    project = report.check(f"{name}-projection", "the projection of a class is the composite of its bijections")
    witness = {"phi": str(phi), "rho": str(rho)}
    classes = pdd3_classes(phi, rho, dual)
    if classes:
        euler.record(rho.m + phi.r == phi.n + 1, "nonempty coend violates the Euler count", **witness)
    images = []
    for cls in classes:
        value = _class_value(cls, _forward_or_none)
        invariant.record(value is not None, "forward matching is unsuitable or changes within a class",
                         representative=str(cls.representative), **witness)
        images.append(value)
        x = cls.representative
        expected = compose_permutations(x.f.f_n, x.g.f_n, x.h.f_n) if dual else \
            compose_permutations(x.h.f_n, x.g.f_n, x.f.f_n)
        if value is not None:
            project.record(delta1_project(value) == S1Mor(expected), "projection differs", **witness)
    target = delta1_elements(rho, phi.collapse()) if dual else delta1_elements(phi.collapse(), rho)
    bijection.record(sorted(v for v in images if v is not None) == target and None not in images,
                     "classes do not match the target cell", classes=len(classes), matchings=len(target), **witness)
    hats = sum(any(is_hat_shaped(x) for x in cls.members) for cls in classes)
    return report, len(classes), hats


def _check_pdd3(bound, dual, progress):
    name = "pdd3-dual" if dual else "pdd3"
    bound = min(bound, PDD3_SAMPLE_BOUND)
    instances = _pdd3_instances(bound)
    report = Report(name, {"bound": bound, "instances": len(instances)})
    results = parallel_map(lambda item: _check_pdd3_instance(item[0], item[1], dual), instances, progress=progress)
    total = hats = 0
    missing = []
    for (phi, rho), (partial, count, hat_count) in zip(instances, results):
        report.merge(partial)
        total += count
        hats += hat_count
        if hat_count < count and len(missing) < 3:
            missing.append(f"phi={phi} rho={rho}")
    report.note(f"hat-shape: {hats} of {total} classes have a representative with identity outer maps")
    if missing:
        report.note("classes without a hat-shaped representative occur at " + "; ".join(missing))
    logger.info("Checked %s over %d instances: %s", name, len(instances), "passed" if report.passed else "failed")
    return report


def check_pdd3(bound, progress=False):
    """Verify the comultiplication cell of the distributive law at 1.

    For all chains ``phi`` and monotone maps ``rho`` with every size at most
    ``bound`` (capped by :data:`polylaw.config.PDD3_SAMPLE_BOUND`), the
    generators of ``K(phi; rho)`` are quotiented by the coend moves and
    :func:`pdd3_forward` must induce a bijection from the classes onto
    ``delta_1(n_phi -phi2 phi1-> r_phi; rho)`` that is compatible with the
    projections to ``S1``.

    Classes lacking a representative with identity outer maps are not
    failures; their number is recorded as a note.
    """
    return _check_pdd3(bound, False, progress)


def check_pdd3_dual(bound, progress=False):
    """ The multiplication cell: :func:`check_pdd3` on the reversed coend with target ``delta_1(rho; phi2 phi1)``. """
    return _check_pdd3(bound, True, progress)
