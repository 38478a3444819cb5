import itertools
import logging

from polylaw.config import ACTION_BOUND
from polylaw.fincard import FinMap, Span, is_suitable_span, induced_spans
from polylaw.symcat import S2Obj, enumerate_s2, enumerate_s3, s2_hom, s2_compose
from polylaw.utilities import all_permutations, compose_permutations
from polylaw.report import Report

from ._matchings import delta1_elements, delta1_act, delta1_project, transpose
from ._whiskered import whiskered_elements, whiskered_square

logger = logging.getLogger(__name__)


def _objects(bound):
    return [phi for n in range(bound + 1) for m in range(bound + 1) for phi in enumerate_s2(n, m)]


def _iso_classes(objects):
    classes = {}
    for phi in objects:
        classes.setdefault(phi.isomorphism_key(), []).append(phi)
    return classes


def _brute_force(phi, psi):
    if phi.n != psi.n:
        return []
    result = []
    for f_n in all_permutations(phi.n):
        s = Span(phi.phi, FinMap(tuple(psi(v) for v in f_n), psi.m))
        if is_suitable_span(s):
            result.append(f_n)
    return result


def check_delta1(bound, action_bound=None):
    """Verify the profunctor of suitable matchings.

    Over all pairs of monotone maps with n, m <= bound: the enumeration agrees
    with a brute-force search over every bijection, and nonempty cells satisfy
    ``n_phi == n_psi`` and ``m_phi + m_psi == n + 1``. Over pairs with
    n, m <= ``action_bound``: both actions are unital, functorial and commute,
    stay inside the profunctor, and the projection to ``S1`` is equivariant.
    The transpose is checked to be a bijection onto the opposite cell.
    Also records the reference count ``|delta_1((1,1@1); (1,2@2))| == 2``.
    """
    action_bound = min(bound, ACTION_BOUND) if action_bound is None else action_bound
    report = Report("delta1", {"bound": bound, "action_bound": action_bound})
    brute = report.check("delta1-enumeration", "backtracking enumeration equals brute force over bijections")
    euler = report.check("delta1-euler", "nonempty cells have n_phi == n_psi and m_phi + m_psi == n + 1")
    anchor = report.check("delta1-anchor", "|delta_1((1,1@1); (1,2@2))| == 2")
    transposed = report.check("delta1-transpose", "transpose is a bijection onto the opposite cell")

    objects = _objects(bound)
    for phi in objects:
        for psi in objects:
            if phi.n != psi.n:
                continue
            elements = delta1_elements(phi, psi)
            witness = {"phi": str(phi), "psi": str(psi)}
            brute.record([x.f_n for x in elements] == _brute_force(phi, psi), "enumeration differs", **witness)
            if elements:
                euler.record(phi.m + psi.m == phi.n + 1, "nonempty cell violates the Euler count", **witness)
                back = sorted(transpose(x) for x in elements)
                transposed.record(back == delta1_elements(psi, phi), "transpose mismatch", **witness)

    count = len(delta1_elements(S2Obj((1, 1), 1), S2Obj((1, 2), 2)))
    anchor.record(count == 2, "reference cell has the wrong size", count=count)

    _check_actions(report, action_bound)
    _check_whiskered(report, action_bound)
    logger.info("Checked delta_1 over %d objects", len(objects))
    return report


def _check_actions(report, bound):
    unit = report.check("action-unit", "identities act trivially on both sides")
    left = report.check("action-left-functorial", "(g o g').x == g.(g'.x)")
    right = report.check("action-right-functorial", "x.(h o h') == (x.h).h'")
    commute = report.check("actions-commute", "(g.x).h == g.(x.h)")
    project = report.check("project-equivariant", "project(g.x.h) == g_n o project(x) o h_n")

    objects = _objects(bound)
    classes = _iso_classes(objects)
    for phi in objects:
        for psi in objects:
            for x in delta1_elements(phi, psi):
                wx = {"phi": str(phi), "psi": str(psi), "f_n": x.f_n}
                unit.record(delta1_act(x, left=s2_hom(psi, psi)[0]) == x
                            and delta1_act(x, right=s2_hom(phi, phi)[0]) == x, "identity acts nontrivially", **wx)
                for rho in classes[psi.isomorphism_key()]:
                    for g1 in s2_hom(psi, rho):
                        gx = delta1_act(x, left=g1)
                        for g2 in s2_hom(rho, psi):
                            left.record(delta1_act(x, left=s2_compose(g2, g1)) == delta1_act(gx, left=g2),
                                        "left action not functorial", g1=g1.f_n, g2=g2.f_n, **wx)
                for phi2 in classes[phi.isomorphism_key()]:
                    for h1 in s2_hom(phi2, phi):
                        xh = delta1_act(x, right=h1)
                        for h2 in s2_hom(phi, phi2):
                            right.record(delta1_act(x, right=s2_compose(h1, h2)) == delta1_act(xh, right=h2),
                                         "right action not functorial", h1=h1.f_n, h2=h2.f_n, **wx)
                for g, h in itertools.product(s2_hom(psi, psi), s2_hom(phi, phi)):
                    both = delta1_act(x, left=g, right=h)
                    commute.record(both == delta1_act(delta1_act(x, left=g), right=h)
                                   == delta1_act(delta1_act(x, right=h), left=g),
                                   "actions do not commute", g=g.f_n, h=h.f_n, **wx)
                    expected = compose_permutations(g.f_n, x.f_n, h.f_n)
                    project.record(delta1_project(both).perm == expected, "projection not equivariant",
                                   g=g.f_n, h=h.f_n, **wx)


def _check_whiskered(report, bound):
    fiberwise = report.check("whiskered-left-fiberwise",
                             "pushout with r_psi + n == m_phi + m_psi iff all induced spans are suitable")
    chains = [phi for n in range(bound + 1) for m in range(bound + 1) for r in range(bound + 1)
              for phi in enumerate_s3(n, m, r)]
    for phi in chains:
        for psi in chains:
            if phi.n != psi.n or phi.r != psi.r:
                continue
            listed = {(w.f_n, w.f_r) for w in whiskered_elements("left", phi, psi)}
            for f in s2_hom(phi.collapse(), psi.collapse()):
                pieces = induced_spans(whiskered_square(phi, psi, f.f_n, f.f_m))
                by_fibers = all(is_suitable_span(s) for s in pieces)
                fiberwise.record(by_fibers == ((f.f_n, f.f_m) in listed), "characterisations disagree",
                                 phi=str(phi), psi=str(psi), f_n=f.f_n, f_r=f.f_m)
