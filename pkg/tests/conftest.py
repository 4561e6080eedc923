import json

import pytest

from gates.params import default_and, default_not, default_or


@pytest.fixture
def not_params():
    return default_not()


@pytest.fixture
def or_params():
    return default_or()


@pytest.fixture
def and_params():
    return default_and()


@pytest.fixture
def write_config(tmp_path):
    """Write a scenario dict as JSON and return its path."""
    def write(data, name="scenario.json"):
        path = tmp_path / name
        path.write_text(json.dumps(data))
        return path
    return write
