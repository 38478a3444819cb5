import json
import logging
from dataclasses import dataclass

from polylaw.polycat import PolyMap, PolyTable
from polylaw.exceptions import PolyTableError, PolyTableParseError

logger = logging.getLogger(__name__)

FIELDS = ("objects", "bound", "homs", "exchange", "identities", "composition")
""" Top-level fields of a table file, in the order they are written. """


def _require(data, key, kind, where):
    if key not in data:
        raise PolyTableParseError(f"Missing field '{key}' in {where}.")
    value = data[key]
    if not isinstance(value, kind) or isinstance(value, bool) and kind is not bool:
        raise PolyTableParseError(f"Field '{key}' in {where} must be of type {getattr(kind, '__name__', kind)}.")
    return value


def _strings(values, where):
    if not all(isinstance(v, str) for v in values):
        raise PolyTableParseError(f"Expected a list of names in {where}.")
    return tuple(values)


def table_from_dict(data):
    """Build a table from the decoded contents of a table file.

    Raises
    ------
    PolyTableParseError
        If a field is missing or has the wrong type.

    DanglingReferenceError, PolyTableInvariantError
        If the table refers to undeclared ids or violates a structural law.
    """
    if not isinstance(data, dict):
        raise PolyTableParseError("A table file must contain a JSON object.")
    unknown = sorted(set(data) - set(FIELDS))
    if unknown:
        raise PolyTableParseError(f"Unknown fields {unknown}; expected {list(FIELDS)}.")
    objects = _strings(_require(data, "objects", list, "the table"), "objects")
    bound = _require(data, "bound", int, "the table")
    maps = []
    for k, entry in enumerate(_require(data, "homs", list, "the table"), start=1):
        where = f"homs entry {k}"
        if not isinstance(entry, dict):
            raise PolyTableParseError(f"{where} must be an object.")
        maps.append(PolyMap(_require(entry, "id", str, where),
                            _strings(_require(entry, "dom", list, where), where),
                            _strings(_require(entry, "cod", list, where), where)))
    exchange = {}
    for k, entry in enumerate(_require(data, "exchange", list, "the table"), start=1):
        where = f"exchange entry {k}"
        if not isinstance(entry, dict):
            raise PolyTableParseError(f"{where} must be an object.")
        key = (_require(entry, "map", str, where), _require(entry, "side", str, where),
               _require(entry, "position", int, where))
        exchange[key] = _require(entry, "result", str, where)
    identities = _require(data, "identities", dict, "the table")
    composition = {}
    for k, entry in enumerate(_require(data, "composition", list, "the table"), start=1):
        where = f"composition entry {k}"
        if not isinstance(entry, dict):
            raise PolyTableParseError(f"{where} must be an object.")
        cut = _require(entry, "cut", list, where)
        if len(cut) != 2 or not all(isinstance(c, int) for c in cut):
            raise PolyTableParseError(f"Field 'cut' in {where} must be a pair of integers.")
        key = (_require(entry, "g", str, where), _require(entry, "f", str, where), cut[0], cut[1])
        composition[key] = _require(entry, "result", str, where)
    return PolyTable(objects, bound, maps, exchange, identities, composition)


def table_to_dict(table):
    """ The contents of a table file, with every list in sorted order. """
    return {
        "objects": list(table.objects),
        "bound": table.bound,
        "homs": [{"id": f.id, "dom": list(f.dom), "cod": list(f.cod)} for f in sorted(table.maps.values())],
        "exchange": [{"map": fid, "side": side, "position": i, "result": gid}
                     for (fid, side, i), gid in sorted(table.exchange_table.items())],
        "identities": dict(sorted(table.identities.items())),
        "composition": [{"g": g, "f": f, "cut": [i, j], "result": h}
                        for (g, f, i, j), h in sorted(table.composition.items())],
    }


def serialize_polytable(table):
    """ Deterministic JSON text of a table; :func:`parse_polytable_text` reads it back. """
    return json.dumps(table_to_dict(table), indent=2) + "\n"


def parse_polytable_text(text):
    """Read a table from JSON text.

    Raises
    ------
    PolyTableParseError
        With the line and column of the first syntax error.
    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise PolyTableParseError(e.msg, e.lineno, e.colno) from None
    return table_from_dict(data)


def locate(text, name):
    """ ``(line, column)`` of the first occurrence of the quoted ``name`` in ``text``, or None. """
    needle = json.dumps(name)
    for line, content in enumerate(text.splitlines(), start=1):
        column = content.find(needle)
        if column >= 0:
            return line, column + 1
    return None


@dataclass(frozen=True)
class PolyTableFile:
    """
    A table loaded from a file together with its source.

    Parameters
    ----------
    path : str
        Where the table was read from.

    table : PolyTable
        The validated table.

    text : str
        The file contents.
    """
    path: str
    table: PolyTable
    text: str

    def locate(self, name):
        return locate(self.text, name)


def load_polytable(path):
    """ Read and validate a table file, keeping its source. """
    with open(path, encoding="utf-8") as handle:
        text = handle.read()
    try:
        table = parse_polytable_text(text)
    except PolyTableError as e:
        if getattr(e, "line", None) is None:
            name = getattr(e, "ref", None) or getattr(e, "entry", None)
            where = locate(text, name) if name else None
            e.line, e.column = where if where else (None, None)
        raise
    logger.debug("Loaded %r from %s", table, path)
    return PolyTableFile(str(path), table, text)


def parse_polytable(path):
    """Read and validate a table file.

    Raises
    ------
    PolyTableParseError
        If the file is not well-formed; carries the line and column when the
        JSON itself is malformed.

    DanglingReferenceError
        If an entry names an undeclared map or object.

    PolyTableInvariantError
        If an entry violates a structural law, such as a cut between
        different objects.
    """
    return load_polytable(path).table
