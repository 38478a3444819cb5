import logging
from dataclasses import dataclass, field

from polylaw.config import DEFAULT_BOUNDS, DEFAULT_SEED, POLYCOMPOSE_SAMPLES
from polylaw.fincard import check_spans
from polylaw.matchings import check_delta1
from polylaw.polycat import check_polycategory_axioms, roundtrip_check, check_polycompose
from polylaw.testtable import corpus
from polylaw.kleisli import check_monad, multiplication_from_polytable
from polylaw.coherence import check_pdd2, check_pdd3, check_pdd3_dual, check_pda_local_monos
from polylaw.utilities import parallel_map
from polylaw.exceptions import UsageError
from polylaw.report import Report

logger = logging.getLogger(__name__)

SUITES = ("spans", "delta1", "pdd2", "pdd3", "pda", "polyaxioms", "monad", "roundtrip", "polycompose")
""" The verification suites, in the order ``all`` runs them. """

FORMATS = ("text", "json")

EXIT_OK, EXIT_VIOLATION, EXIT_INPUT = 0, 1, 2
""" Exit codes: clean report, law violation found, malformed input. """


@dataclass(frozen=True)
class SuiteConfig:
    """
    What to verify and how to print it.

    Parameters
    ----------
    suite : str
        One of :data:`SUITES` or ``"all"``.

    bound : int, optional
        Size bound. Defaults to the suite's entry in :data:`polylaw.config.DEFAULT_BOUNDS`.

    seed : int
        Seed of the sampled checks.

    format : str
        ``"text"`` or ``"json"``.

    tables : dict, optional
        ``name -> PolyTable`` checked by the table suites instead of the
        built-in corpus.

    progress : bool
        Show progress bars where a suite supports them.
    """
    suite: str
    bound: int = None
    seed: int = DEFAULT_SEED
    format: str = "text"
    tables: dict = field(default=None, compare=False)
    progress: bool = False

    def __post_init__(self):
        if self.suite != "all" and self.suite not in SUITES:
            raise UsageError(f"Unknown suite {self.suite!r}; expected one of {SUITES + ('all',)}.")
        if self.bound is not None and self.bound < 1:
            raise UsageError(f"The bound must be at least 1, got {self.bound}.")
        if self.format not in FORMATS:
            raise UsageError(f"Unknown format {self.format!r}; expected one of {FORMATS}.")

    def bound_for(self, suite):
        return DEFAULT_BOUNDS[suite] if self.bound is None else self.bound

    def tables_for(self, suite):
        return corpus(self.bound_for(suite)) if self.tables is None else self.tables


def _per_table(name, cfg, check):
    report = Report(name, {"bound": cfg.bound_for(name)})
    for table_name, P in sorted(cfg.tables_for(name).items()):
        partial = check(P)
        for v in partial.violations:
            v.witness["table"] = table_name
        report.merge(partial)
        report.parameters.setdefault("tables", []).append(table_name)
    return report


def _monad(P):
    return check_monad(P, P.identities, multiplication_from_polytable(P))


def _run_one(name, cfg):
    bound = cfg.bound_for(name)
    logger.info("Running suite %s with bound %d", name, bound)
    if name == "spans":
        return check_spans(bound)
    if name == "delta1":
        return check_delta1(bound)
    if name == "pdd2":
        return check_pdd2(bound)
    if name == "pdd3":
        report = check_pdd3(bound, progress=cfg.progress)
        return report.merge(check_pdd3_dual(bound, progress=cfg.progress))
    if name == "pda":
        return check_pda_local_monos(bound)
    if name == "polyaxioms":
        return _per_table(name, cfg, check_polycategory_axioms)
    if name == "monad":
        return _per_table(name, cfg, _monad)
    if name == "roundtrip":
        return _per_table(name, cfg, roundtrip_check)
    return check_polycompose(cfg.seed, POLYCOMPOSE_SAMPLES, max(bound, 2))


def run_suite(cfg):
    """Run a verification suite.

    Returns
    -------
    tuple
        ``(exit_code, report)``: :data:`EXIT_OK` when every check passed and
        :data:`EXIT_VIOLATION` otherwise. Suites of ``all`` run on separate
        workers and are merged in the order of :data:`SUITES`, with each
        check tag prefixed by its suite, as in ``"polyaxioms/unit"``.
    """
    if cfg.suite == "all":
        parts = parallel_map(lambda name: _run_one(name, cfg), SUITES, progress=cfg.progress)
        report = Report("all", {"seed": cfg.seed, "bounds": {s: cfg.bound_for(s) for s in SUITES}})
        for name, part in zip(SUITES, parts):
            report.merge(part, prefix=name)
    else:
        report = _run_one(cfg.suite, cfg)
    return (EXIT_OK if report.passed else EXIT_VIOLATION), report


def render(report, fmt):
    return report.to_json() if fmt == "json" else report.to_text()
