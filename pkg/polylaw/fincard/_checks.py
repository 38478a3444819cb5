import logging

from polylaw.config import SQUARE_BOUND
from polylaw.report import Report

from ._fincard import (
    pushout, is_connected, is_acyclic, is_suitable_span, is_pushout,
    induced_spans, enumerate_span_classes, enumerate_squares,
)
from ._oracles import component_counts, has_cycle, is_acyclic_by_restriction

logger = logging.getLogger(__name__)


def _is_canonically_labelled(p):
    seen = []
    for c in p.tau1.values + p.tau2.values:
        if c not in seen:
            seen.append(c)
    return seen == list(range(1, p.r + 1))


def check_spans(bound, square_bound=None):
    """Verify the span laws exhaustively over all spans with n, k, m <= bound.

    Every law is invariant under reordering the apex, so one span is checked
    per multiset of edges (see :func:`enumerate_span_classes`). Checks that
    the pushout is a cocone with canonical labels whose size is the
    component count of an independent breadth-first search; that
    ``is_acyclic`` agrees with a depth-first cycle oracle and with the
    restriction criterion; that any two of acyclic, connected and
    ``n + m == k + 1`` imply the third; and, over commuting squares with all
    sizes at most ``square_bound``, that the induced spans are connected
    (resp. suitable) exactly when the square is a pushout (resp. a pushout
    with ``n + m == k + r``).

    Parameters
    ----------
    bound : int
        Bound on n, k and m.

    square_bound : int, optional
        Bound for the square laws. Defaults to ``min(bound, SQUARE_BOUND)``.

    Returns
    -------
    Report
    """
    square_bound = min(bound, SQUARE_BOUND) if square_bound is None else square_bound
    spans = list(enumerate_span_classes(bound))
    report = Report("spans", {"bound": bound, "square_bound": square_bound, "spans": len(spans)})
    cocone = report.check("pushout-cocone", "tau1 o left == tau2 o right with least-vertex labels")
    components = report.check("pushout-components", "pushout size equals the breadth-first component count")
    acyclic = report.check("acyclic-oracle", "n + m == k + r iff the multigraph has no cycle or multiple edge")
    restriction = report.check("acyclic-restriction", "acyclic iff no proper restriction of the apex still pushes out")
    euler = report.check("euler-two-of-three", "any two of acyclic, connected, n + m == k + 1 imply the third")
    suitable = report.check("suitable", "suitable iff pushout to 1 and n + m == k + 1")

    for s, count in zip(spans, component_counts(spans)):
        p = pushout(s)
        witness = str(s)
        cocone.record(p.tau1.compose(s.left) == p.tau2.compose(s.right) and _is_canonically_labelled(p),
                      "pushout is not a canonical cocone", span=witness)
        components.record(p.r == count, "component count differs", span=witness, r=int(p.r))
        a = is_acyclic(s)
        acyclic.record(a == (not has_cycle(s)), "acyclicity differs from the cycle oracle", span=witness)
        restriction.record(a == is_acyclic_by_restriction(s), "restriction criterion differs", span=witness)
        c = is_connected(s)
        e = s.n + s.m == s.k + 1
        euler.record(sum((a, c, e)) != 2, "two conditions hold without the third",
                     span=witness, acyclic=a, connected=c, euler=e)
        suitable.record(is_suitable_span(s) == (p.r == 1 and e), "suitability mismatch", span=witness)
    logger.info("Checked %d spans at bound %d", len(spans), bound)

    connected_sq = report.check("induced-connected", "all induced spans connected iff the square is a pushout")
    suitable_sq = report.check("induced-suitable",
                               "all induced spans suitable iff the square is a pushout and n + m == k + r")
    squares = 0
    for sq in enumerate_squares(square_bound):
        squares += 1
        pieces = induced_spans(sq)
        po = is_pushout(sq)
        s = sq.span
        witness = {"span": str(s), "bottom_left": str(sq.bottom_left), "bottom_right": str(sq.bottom_right)}
        connected_sq.record(all(is_connected(x) for x in pieces) == po, "induced spans disagree with pushout", **witness)
        suitable_sq.record(all(is_suitable_span(x) for x in pieces) == (po and s.n + s.m == s.k + sq.r),
                           "induced spans disagree with pushout and Euler count", **witness)
    logger.info("Checked %d commuting squares at bound %d", squares, square_bound)
    return report
