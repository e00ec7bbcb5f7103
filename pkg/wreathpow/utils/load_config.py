import configparser
import logging
import os

from wreathpow import constants

log = logging.getLogger(__name__)

DEFAULTS = {
    "main": {"log_level": "INFO"},
    "oracle": {
        "guard": str(constants.ORACLE_GUARD),
        "conjugacy_guard": str(constants.CONJUGACY_GUARD),
        "workers": "1",
        "chunk_size": "64",
    },
    "series": {"default_cap": str(constants.DEFAULT_SERIES_CAP)},
    "groups": {"associativity_check_limit": str(constants.ASSOCIATIVITY_CHECK_LIMIT)},
}


def load_config(path=None, required=False):
    """Read the INI config at `path` on top of the built-in defaults.

    A missing file is only an error when `required` is set (the user named the file explicitly)."""
    config = configparser.ConfigParser()
    config.read_dict(DEFAULTS)

    if path is None:
        return config

    res = config.read(os.path.realpath(path))

    if not res:
        if required:
            raise FileNotFoundError(f"{path} missing. Check out configs/example.ini.")
        log.debug("%s not found, using the built-in defaults", path)

    return config
