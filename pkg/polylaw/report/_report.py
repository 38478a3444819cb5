import json
from dataclasses import dataclass, field


def jsonable(value):
    """ Convert a witness value into plain JSON types (tuples become lists, unknown objects their ``str``). """
    if value is None or isinstance(value, (bool, int, float, str)):
        return value
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    if isinstance(value, (set, frozenset)):
        return sorted((jsonable(v) for v in value), key=repr)
    if hasattr(value, "to_dict"):
        return jsonable(value.to_dict())
    return str(value)


@dataclass(frozen=True)
class Violation:
    """ A law that failed on one instance, with the data needed to reproduce it. """
    tag: str
    message: str
    witness: dict = field(default_factory=dict)

    def to_dict(self):
        return {"tag": self.tag, "message": self.message, "witness": jsonable(self.witness)}


@dataclass
class CheckResult:
    """Outcome of one tagged law over all the instances it was evaluated on.

    Parameters
    ----------
    tag : str
        Short identifier of the law, e.g. ``"unit"`` or ``"PDA6"``.

    description : str
        One line describing what is checked.
    """
    tag: str
    description: str = ""
    instances: int = 0
    skipped: int = 0
    violations: list = field(default_factory=list)

    @property
    def passed(self):
        return not self.violations

    def record(self, ok, message="", **witness):
        """ Count one instance; store a violation if ``ok`` is false. Returns ``ok``. """
        self.instances += 1
        if not ok:
            self.violations.append(Violation(self.tag, message, witness))
        return bool(ok)

    def skip(self, count=1):
        self.skipped += count

    def merge(self, other):
        if other.tag != self.tag:
            raise ValueError(f"Cannot merge check '{other.tag}' into '{self.tag}'.")
        self.instances += other.instances
        self.skipped += other.skipped
        self.violations.extend(other.violations)
        if not self.description:
            self.description = other.description
        return self

    def to_dict(self):
        return {
            "tag": self.tag,
            "description": self.description,
            "passed": self.passed,
            "instances": self.instances,
            "skipped": self.skipped,
            "violations": [v.to_dict() for v in self.violations],
        }


class Report(object):
    """
    Collection of law checks produced by a verification suite.

    Checks are kept in the order they were first requested, so two runs of the
    same suite with the same parameters produce identical reports.

    Parameters
    ----------
    name : str
        Name of the suite.

    parameters : dict, optional
        Parameters of the run (bound, seed, ...), copied into the output.

    Attributes
    ----------
    notes : list of str
        Free-form observations that are not pass/fail results.

    transports : list of dict
        Reindexing bijections used by a check, recorded for audit.

    Methods
    ----------
    :meth:`check`: Get or create the result for a tag.
    :meth:`merge`: Combine with another report.
    :meth:`to_dict`: Machine-readable form.
    :meth:`to_text`: Human-readable summary.
    """

    def __init__(self, name, parameters=None):
        self.name = name
        self.parameters = dict(parameters or {})
        self.checks = {}
        self.notes = []
        self.transports = []

    def check(self, tag, description=""):
        if tag not in self.checks:
            self.checks[tag] = CheckResult(tag, description)
        elif description and not self.checks[tag].description:
            self.checks[tag].description = description
        return self.checks[tag]

    def note(self, message):
        self.notes.append(message)

    def transport(self, **data):
        self.transports.append(jsonable(data))

    @property
    def passed(self):
        return all(c.passed for c in self.checks.values())

    @property
    def violations(self):
        return [v for c in self.checks.values() for v in c.violations]

    @property
    def instances(self):
        return sum(c.instances for c in self.checks.values())

    def merge(self, other, prefix=None):
        """Fold the checks, notes and transports of ``other`` into this report and return it.

        Checks with the same tag are combined. With ``prefix``, the tags of
        ``other`` become ``"<prefix>/<tag>"`` and its notes are prefixed too,
        so reports of different suites stay apart.
        """
        for tag, result in other.checks.items():
            violations = list(result.violations)
            if prefix is not None:
                tag = f"{prefix}/{tag}"
                violations = [Violation(tag, v.message, v.witness) for v in violations]
            self.check(tag, result.description).merge(
                CheckResult(tag, result.description, result.instances, result.skipped, violations))
        self.notes.extend(other.notes if prefix is None else [f"{prefix}: {note}" for note in other.notes])
        self.transports.extend(other.transports)
        return self

    def __repr__(self):
        status = "passed" if self.passed else f"{len(self.violations)} violation(s)"
        return f"Report({self.name!r}: {len(self.checks)} checks, {self.instances} instances, {status})"

    def to_dict(self):
        return {
            "suite": self.name,
            "parameters": jsonable(self.parameters),
            "passed": self.passed,
            "checks": [c.to_dict() for c in self.checks.values()],
            "notes": list(self.notes),
            "transports": list(self.transports),
        }

    def to_json(self):
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)

    def to_text(self, max_witnesses=3):
        params = ", ".join(f"{k}={v}" for k, v in sorted(self.parameters.items()))
        lines = [f"suite {self.name} ({params})"]
        for c in self.checks.values():
            status = "ok  " if c.passed else "FAIL"
            line = f"  [{status}] {c.tag}: {c.instances} instances"
            if c.skipped:
                line += f", {c.skipped} skipped"
            if c.description:
                line += f" - {c.description}"
            lines.append(line)
            for v in c.violations[:max_witnesses]:
                lines.append(f"      {v.message} {json.dumps(jsonable(v.witness), sort_keys=True)}")
            if len(c.violations) > max_witnesses:
                lines.append(f"      ... {len(c.violations) - max_witnesses} more")
        for note in self.notes:
            lines.append(f"  note: {note}")
        lines.append("PASSED" if self.passed else f"FAILED with {len(self.violations)} violation(s)")
        return "\n".join(lines)
