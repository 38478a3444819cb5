from . import config
from . import exceptions
from . import utilities
from . import report
from . import fincard
from . import symcat
from . import matchings
from . import polycat
from . import testtable
from . import kleisli
from . import coherence

__version__ = "0.3.0"
