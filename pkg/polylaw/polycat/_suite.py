import logging

import numpy as np

from polylaw.config import DEFAULT_SEED, POLYCOMPOSE_SAMPLES, POLYCOMPOSE_MAX_GENERATORS
from polylaw.report import Report

from ._polymap import FamilyMatching, is_suitable_matching
from ._compose import peel, peel_orders, normalize, respects_interleaving, members_in_order, edge_count_ok
from ._free import FreePolycategory

logger = logging.getLogger(__name__)

MAX_PORTS = 3
""" Maximum number of inputs or outputs of a generator in a random matching. """


def random_matching(rng, max_generators=POLYCOMPOSE_MAX_GENERATORS, objects="ab"):
    """A random suitable matching of fresh generators of a free polycategory.

    A random tree with between 2 and ``max_generators`` vertices is grown by
    attaching each new vertex to an earlier one on the opposite side, so that
    every edge joins the lower family to the upper family. Each vertex becomes
    a generator with its tree edges at random ports and up to
    :data:`MAX_PORTS` ports on each side.

    Returns
    -------
    tuple
        ``(F, fm)``: the free polycategory and the family matching of its
        generator terms.
    """
    v = int(rng.integers(2, max_generators + 1))
    side = [0]
    edges = []
    for u in range(1, v):
        candidates = [w for w in range(u) if sum(w in e for e in edges) < MAX_PORTS]
        w = candidates[int(rng.integers(len(candidates)))]
        side.append(1 - side[w])
        edges.append((w, u) if side[w] == 0 else (u, w))

    # ports are assigned per vertex: matched ones at random positions, the rest free
    n_in, n_out, in_port, out_port = [], [], {}, {}
    for u in range(v):
        down = [e for e in edges if e[1] == u]
        up = [e for e in edges if e[0] == u]
        n_in.append(len(down) + int(rng.integers(0, MAX_PORTS - len(down) + 1)))
        n_out.append(len(up) + int(rng.integers(0, MAX_PORTS - len(up) + 1)))
        for e, q in zip(down, rng.permutation(n_in[u])[:len(down)]):
            in_port[e] = int(q) + 1
        for e, p in zip(up, rng.permutation(n_out[u])[:len(up)]):
            out_port[e] = int(p) + 1

    dom = [[objects[int(rng.integers(len(objects)))] for _ in range(n_in[u])] for u in range(v)]
    cod = [[objects[int(rng.integers(len(objects)))] for _ in range(n_out[u])] for u in range(v)]
    for e in edges:
        cod[e[0]][out_port[e] - 1] = dom[e[1]][in_port[e] - 1]

    generators = {f"u{u}": (tuple(dom[u]), tuple(cod[u])) for u in range(v)}
    F = FreePolycategory(objects, generators)
    lower = [u for u in range(v) if side[u] == 0]
    upper = [u for u in range(v) if side[u] == 1]
    pairing = [((lower.index(a) + 1, out_port[(a, b)]), (upper.index(b) + 1, in_port[(a, b)])) for a, b in edges]
    fm = FamilyMatching(tuple(F.generator(f"u{u}") for u in lower), tuple(F.generator(f"u{u}") for u in upper), pairing)
    return F, fm


def check_polycompose(seed=DEFAULT_SEED, samples=POLYCOMPOSE_SAMPLES, max_generators=POLYCOMPOSE_MAX_GENERATORS):
    """Polycompose random suitable matchings in free polycategories.

    For every sample, each admissible peel order is carried out. The
    normalised composites must all be equal, the raw boundaries must be
    interleavings of the free ports of the members, the normalised
    boundaries must list each family member by member, the matching must have
    one edge fewer than it has members, and the composite must contain every
    generator once and every matched pair as a wire.
    """
    rng = np.random.default_rng(seed)
    report = Report("polycompose", {"seed": seed, "samples": samples, "max_generators": max_generators})
    independent = report.check("peel-order-independence", "all peel orders give the same normalised composite")
    interleaving = report.check("interleaving", "boundaries are interleavings of the free ports of the members")
    member_order = report.check("member-order", "normalised boundaries list each family member by member")
    edges = report.check("edge-count", "a suitable matching of j and k members has j + k - 1 pairs")
    shape = report.check("composite-shape", "the composite has one instance per member and one wire per pair")
    for sample in range(samples):
        F, fm = random_matching(rng, max_generators)
        witness = {"sample": sample, "generators": F.generators, "pairing": fm.pairing}
        edges.record(is_suitable_matching(fm) and edge_count_ok(fm), "edge count differs", **witness)
        results = []
        for order in peel_orders(fm):
            composite, dom_labels, cod_labels = peel(F, fm, order)
            interleaving.record(respects_interleaving(fm, dom_labels, cod_labels), "boundary is not an interleaving",
                                order=order, **witness)
            h, dom_target, cod_target = normalize(F, composite, dom_labels, cod_labels)
            member_order.record(members_in_order(fm, dom_target, cod_target), "members are out of order",
                                order=order, **witness)
            results.append(h)
        independent.record(all(r == results[0] for r in results), "peel orders disagree",
                           orders=len(results), **witness)
        h = results[0]
        shape.record(h.size == fm.j + fm.k and len(h.wires) == len(fm.pairing), "composite has the wrong shape",
                     size=h.size, wires=len(h.wires), **witness)
        logger.debug("Sample %d: %d members, %d peel orders", sample, fm.j + fm.k, len(results))
    logger.info("Polycomposed %d random matchings", samples)
    return report
