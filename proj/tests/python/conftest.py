import json
import os
import pathlib
import subprocess

import pytest


@pytest.fixture(scope="session")
def exe():
    path = os.environ.get("MIXEDPOLY_EXE")
    if not path or not pathlib.Path(path).exists():
        pytest.skip("command-line tool not built")
    return path


@pytest.fixture(scope="session")
def schema():
    root = pathlib.Path(os.environ.get("MIXEDPOLY_SCHEMAS", pathlib.Path(__file__).parents[2] / "schemas"))

    def load(name):
        return json.loads((root / f"{name}.schema.json").read_text())

    return load


@pytest.fixture(scope="session")
def run(exe):
    def call(*args):
        return subprocess.run([exe, *args], capture_output=True, text=True, check=False)

    return call
