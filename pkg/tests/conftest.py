import pytest
from pathlib import Path
from shutil import copy

from polylaw.cli import serialize_polytable


@pytest.fixture
def copy_reference(tmp_path):
    HERE = Path(__file__).parent

    def _copy_reference(fname):
        src = HERE / fname
        dest = tmp_path / src.name
        copy(src, dest)

        return dest.resolve()

    return _copy_reference


@pytest.fixture
def table_file(tmp_path):
    """ Write a table, or raw text, to a JSON file and return its path. """

    def _table_file(table, name="table.json"):
        dest = tmp_path / name
        dest.write_text(table if isinstance(table, str) else serialize_polytable(table), encoding="utf-8")
        return str(dest)

    return _table_file
