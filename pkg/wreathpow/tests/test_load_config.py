import pytest

from wreathpow import constants
from wreathpow.utils import load_config


def test_defaults():
    config = load_config()

    assert config["main"]["log_level"] == "INFO"
    assert config["oracle"].getint("guard") == constants.ORACLE_GUARD
    assert config["oracle"].getint("conjugacy_guard") == constants.CONJUGACY_GUARD
    assert config["series"].getint("default_cap") == constants.DEFAULT_SERIES_CAP


def test_missing_file(tmp_path):
    path = tmp_path / "nope.ini"

    assert load_config(path)["oracle"].getint("workers") == 1
    with pytest.raises(FileNotFoundError):
        load_config(path, required=True)


def test_file_overrides_defaults(tmp_path):
    path = tmp_path / "config.ini"
    path.write_text("[oracle]\nworkers = 4\n\n[series]\ndefault_cap = 25\n")

    config = load_config(path, required=True)

    assert config["oracle"].getint("workers") == 4
    assert config["oracle"].getint("chunk_size") == 64
    assert config["series"].getint("default_cap") == 25
