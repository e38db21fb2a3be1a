from pathlib import Path

import pytest

from stirling_trees import __version__

ROOT = Path(__file__).resolve().parent.parent


def test_version():
    assert __version__ == "0.1.0-dev"


def test_pyproject_parses():
    tomllib = pytest.importorskip("tomllib")
    with open(ROOT / "pyproject.toml", "rb") as f:
        config = tomllib.load(f)
    assert config["tool"]["black"]["exclude"] == r"examples|\.nox"
    assert config["build-system"]["build-backend"] == (
        "setuptools.build_meta"
    )
