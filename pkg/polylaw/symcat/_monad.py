from enum import Enum

from polylaw.fincard import Cardinal
from polylaw.exceptions import UsageError

from ._symcat import S2Obj, S3Obj


class Component(Enum):
    """ Components at 1 of the unit and multiplication of the free symmetric monoidal monad. """
    SEta1 = "SEta1"
    EtaS1 = "EtaS1"
    Mu1 = "Mu1"
    MuS1 = "MuS1"
    SMu1 = "SMu1"


def _is_cardinal(x):
    return isinstance(x, int) and not isinstance(x, bool) and x >= 0


def monad_component(tag, x):
    """Evaluate a monad structure map at 1 on an object.

    Parameters
    ----------
    tag : Component or str
        ``SEta1`` and ``EtaS1`` take a cardinal ``n`` and return ``n -id-> n``
        and ``n -!-> 1``. ``Mu1`` takes an :class:`S2Obj` ``phi`` and returns
        ``n_phi``. ``MuS1`` and ``SMu1`` take an :class:`S3Obj` and return its
        lower leg ``phi1`` and its composite ``phi2 o phi1``.

    x : int, S2Obj or S3Obj
        The object.

    Raises
    ------
    UsageError
        If ``x`` is not of the kind the component expects.
    """
    try:
        tag = Component(tag.value if isinstance(tag, Component) else tag)
    except ValueError:
        raise UsageError(f"Unknown monad component {tag!r}.") from None

    if tag in (Component.SEta1, Component.EtaS1):
        if not _is_cardinal(x):
            raise UsageError(f"{tag.value} expects a cardinal, got {type(x).__name__}.")
        return S2Obj.identity(x) if tag is Component.SEta1 else S2Obj.terminal(x)
    if tag is Component.Mu1:
        if not isinstance(x, S2Obj):
            raise UsageError(f"{tag.value} expects an S2Obj, got {type(x).__name__}.")
        return Cardinal(x.n)
    if not isinstance(x, S3Obj):
        raise UsageError(f"{tag.value} expects an S3Obj, got {type(x).__name__}.")
    return x.lower() if tag is Component.MuS1 else x.collapse()
