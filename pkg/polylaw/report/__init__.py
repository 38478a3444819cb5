from ._report import Report, CheckResult, Violation, jsonable
