""" Text encodings of maps, bijections and chains used on the command line and in reports. """

from polylaw.fincard import FinMap
from polylaw.symcat import S2Obj, S3Obj
from polylaw.utilities import is_permutation
from polylaw.exceptions import EncodingError


def _values(text, what):
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(v) for v in text.split(","))
    except ValueError:
        raise EncodingError(f"Cannot read {what} from {text!r}: expected comma separated integers.") from None


def _split_cod(text, what):
    values, sep, cod = text.partition("@")
    if not sep:
        raise EncodingError(f"Cannot read {what} from {text!r}: expected 'v1,...,vn@m'.")
    try:
        return _values(values, what), int(cod)
    except ValueError:
        raise EncodingError(f"Cannot read the codomain of {what} from {text!r}.") from None


def parse_finmap(text):
    """ Read a map of finite cardinals written ``"v1,...,vn@m"``. """
    values, cod = _split_cod(text, "a map")
    try:
        return FinMap(values, cod)
    except ValueError as e:
        raise EncodingError(str(e)) from None


def parse_s2(text):
    """ Read a monotone map written ``"v1,...,vn@m"``, e.g. ``"1,1,2@2"``; ``"@1"`` is ``0 -> 1``. """
    values, cod = _split_cod(text, "a monotone map")
    try:
        return S2Obj(values, cod)
    except ValueError as e:
        raise EncodingError(str(e)) from None


def parse_s3(text):
    """ Read a chain of two monotone maps written ``"lower/upper"``, e.g. ``"1,1@1/1@1"``. """
    lower, sep, upper = text.partition("/")
    if not sep:
        raise EncodingError(f"Cannot read a chain from {text!r}: expected 'lower/upper'.")
    try:
        return S3Obj(parse_s2(lower), parse_s2(upper))
    except ValueError as e:
        raise EncodingError(str(e)) from None


def parse_bijection(text):
    """ Read a bijection written as its values ``"2,1,3"``. """
    values = _values(text, "a bijection")
    if not is_permutation(values):
        raise EncodingError(f"{text!r} is not a bijection of 1..{len(values)}.")
    return values


def parse_ids(text):
    """ Read a comma separated list of polymap ids. """
    ids = tuple(s.strip() for s in text.split(",") if s.strip())
    if not ids:
        raise EncodingError("Expected at least one polymap id.")
    return ids


def parse_pairing(text):
    """Read a matching of outputs with inputs.

    Pairs are separated by commas and written ``a.p>b.q``: output ``p`` of the
    ``a``-th lower member feeds input ``q`` of the ``b``-th upper member.
    """
    pairing = []
    for item in (s.strip() for s in text.split(",")):
        if not item:
            continue
        out, sep, into = item.partition(">")
        try:
            a, p = (int(v) for v in out.split("."))
            b, q = (int(v) for v in into.split("."))
        except ValueError:
            raise EncodingError(f"Cannot read a pair from {item!r}: expected 'a.p>b.q'.") from None
        if not sep:
            raise EncodingError(f"Cannot read a pair from {item!r}: expected 'a.p>b.q'.")
        pairing.append(((a, p), (b, q)))
    return tuple(pairing)


def format_values(values):
    return ",".join(str(v) for v in values)


def format_pairing(pairing):
    return ",".join(f"{a}.{p}>{b}.{q}" for (a, p), (b, q) in pairing)
