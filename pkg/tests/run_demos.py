# Executes the demo and tutorial scripts. Not collected by pytest; run it
# directly, or point pytest at it with `pytest tests/run_demos.py`.
from pathlib import Path

import pytest

DEMOS = Path(__file__).parent.parent / "demos"


def demo_scripts():
    """ Demos first, then the gallery tutorials, each in file name order. """
    return sorted(DEMOS.glob("demo*.py")) + sorted((DEMOS / "tutorials").glob("*.py"))


@pytest.mark.parametrize("script", demo_scripts(), ids=lambda p: p.stem)
def test_demo(script):
    code = compile(script.read_text(encoding="utf-8"), str(script), "exec")
    exec(code, {"__name__": "__main__", "__file__": str(script)})


if __name__ == "__main__":
    failed = []
    for script in demo_scripts():
        print(f"Running demo: {script.name}")
        try:
            test_demo(script)
        except Exception as error:
            failed.append(script.name)
            print(f"  failed: {error!r}")
    raise SystemExit(1 if failed else 0)
