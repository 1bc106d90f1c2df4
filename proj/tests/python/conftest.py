import os
import pathlib

import pytest


@pytest.fixture
def fixtures():
    return pathlib.Path(os.environ.get("SINGCAT_FIXTURES", pathlib.Path(__file__).parents[2] / "fixtures"))


@pytest.fixture
def cli():
    path = os.environ.get("SINGCAT_CLI")
    if not path:
        pytest.skip("SINGCAT_CLI not set")
    return path
