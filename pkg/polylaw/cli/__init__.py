""" Command-line surface: text encodings, table files and the verification suites. """
from ._encoding import (
    parse_finmap,
    parse_s2,
    parse_s3,
    parse_bijection,
    parse_ids,
    parse_pairing,
    format_values,
    format_pairing,
)

from ._tablefile import (
    FIELDS,
    PolyTableFile,
    table_from_dict,
    table_to_dict,
    serialize_polytable,
    parse_polytable_text,
    parse_polytable,
    load_polytable,
)

from ._suites import SUITES, EXIT_OK, EXIT_VIOLATION, EXIT_INPUT, SuiteConfig, run_suite, render

from ._main import build_parser, main
