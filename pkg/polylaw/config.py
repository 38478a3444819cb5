""" This module controls global modifiable configuration settings. """

import os
import warnings


DEFAULT_SEED = 0
""" Default seed for random number generators used by sampled checks. """

DEFAULT_BOUNDS = {
    "spans": 4,
    "delta1": 4,
    "pdd2": 4,
    "pdd3": 3,
    "pda": 3,
    "polyaxioms": 4,
    "monad": 4,
    "roundtrip": 4,
    "polycompose": 5,
}
""" Default bound per verification suite when no bound is given on the command line. """

THREADS_ENV = "POLYLAW_THREADS"
""" Name of the environment variable capping the number of suite workers. """

SQUARE_BOUND = 2
""" Maximum cardinal used when enumerating commuting squares in the span suite. """

ACTION_BOUND = 3
""" Maximum cardinal used when checking functoriality of the two-sided actions on matchings. """

PDD3_SAMPLE_BOUND = 3
""" Maximum cardinal at which coend classes of the comultiplication cell are still enumerated exhaustively. """

POLYCOMPOSE_SAMPLES = 200
""" Number of random suitable matchings drawn by the polycomposition suite. """

POLYCOMPOSE_MAX_GENERATORS = 5
""" Maximum number of generator instances in a random suitable matching. """

FREE_MAX_VERTICES = 6
""" Maximum number of generator instances in a term when truncating a free polycategory. """

MONAD_MAX_VERTICES = 3
""" Maximum number of members in a three-layer composite used by the monad associativity check. """

ROUNDTRIP_MAX_FAMILY = 3
""" Maximum total family size of the polycomposites compared by the roundtrip check. """

MAX_ORBIT_SIZE = 200000
""" Maximum size of a single coend class before the quotient engine gives up. """


def worker_count():
    """ Number of workers available to the verification suites.

    The CPU count, capped by the value of the environment variable named by
    :data:`THREADS_ENV` when that is set to a positive integer.
    """
    workers = os.cpu_count() or 1
    value = os.environ.get(THREADS_ENV)
    if value is None:
        return workers
    try:
        cap = int(value)
    except ValueError:
        warnings.warn(f"Ignoring {THREADS_ENV}={value!r}: not an integer.")
        return workers
    if cap < 1:
        warnings.warn(f"Ignoring {THREADS_ENV}={value!r}: must be at least 1.")
        return workers
    return min(workers, cap)
